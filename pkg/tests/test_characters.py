from fractions import Fraction

import pytest

from galois_span.characters import (
    ClassFunction,
    artin_coefficients,
    character_table,
    induced_trivial_character,
    inner_product,
    is_exceptional,
    is_irreducibly_represented,
    one_dim_characters,
    verify_eq3,
)
from galois_span.cyclotomic import CyclotomicInt
from galois_span.errors import (
    GeneratorDependentError,
    MismatchedGroupError,
    NotAbelianError,
    NotRationalValuedError,
)
from galois_span.groups import (
    cyclic_group,
    cyclic_subgroups,
    dicyclic_group,
    direct_product,
    generated_subgroup,
    parse_group_spec,
    symmetric_group,
)
from galois_span.posets import TOP_KEY, cyclic_poset, mobius

SMALL_GROUPS = ["C1", "C2", "C5", "C6", "C2xC2", "C2xC6", "S3", "D4", "Q8", "A4", "Dic3", "C3xC3"]


def test_s3_degrees_and_values():
    table = character_table(symmetric_group(3))
    assert [c.degree for c in table.characters] == [1, 1, 2]
    two = table.characters[2]
    # value 0 at transpositions, -1 at 3-cycles
    assert two.value_cyclo(1) == 0
    assert two.value_cyclo(2) == -1


def test_abelian_tables_all_degree_one():
    for spec in ("C6", "C2xC6", "C3xC3", "C2xC2xC2"):
        g = parse_group_spec(spec)
        table = character_table(g)
        assert len(table.characters) == g.order
        assert all(c.degree == 1 for c in table.characters)


def test_q8_degrees():
    table = character_table(dicyclic_group(2))
    assert sorted(c.degree for c in table.characters) == [1, 1, 1, 1, 2]
    assert sum(c.degree**2 for c in table.characters) == 8


def test_tables_are_reproducible_and_seedable():
    g = symmetric_group(3)
    t1 = character_table(g, seed=0)
    t2 = character_table(g, seed=0)
    assert t1 is t2  # cached
    g2 = symmetric_group(3)
    t3 = character_table(g2, seed=5)
    assert [c.values for c in t1.characters] == [c.values for c in t3.characters]


def test_row_and_column_orthogonality():
    for spec in SMALL_GROUPS:
        g = parse_group_spec(spec)
        table = character_table(g)
        chars = table.characters
        for i, chi in enumerate(chars):
            for j, psi in enumerate(chars):
                assert inner_product(chi, psi) == (1 if i == j else 0)
        # column orthogonality: sum_i chi_i(g) chi_i(h^-1) = |C_G(g)| delta
        r = table.class_count
        for a in range(r):
            for b in range(r):
                total = CyclotomicInt.zero(table.e)
                for chi in chars:
                    total = total + chi.value_cyclo(a) * chi.value_at_inverse(b)
                expected = g.order // table.class_sizes[a] if a == b else 0
                assert total == expected


def test_kernels_are_normal_and_conjugation_invariant():
    for spec in ("S3", "D4", "Q8", "A4", "C2xC6"):
        g = parse_group_spec(spec)
        table = character_table(g)
        for chi in table.characters:
            k = table.kernel_of(chi)
            assert k.is_normal()


def test_kernel_examples():
    g = direct_product(cyclic_group(2), cyclic_group(6))
    table = character_table(g)
    kernels = {table.kernel_of(c).elements for c in table.characters}
    assert len(kernels) == 8
    assert tuple(range(12)) in kernels  # trivial character -> G
    orders = sorted(len(k) for k in kernels)
    assert orders == [2, 2, 2, 4, 6, 6, 6, 12]
    cn = cyclic_group(5)
    t5 = character_table(cn)
    assert any(t5.kernel_of(c).is_trivial() for c in t5.characters)


def test_flags():
    assert is_irreducibly_represented(cyclic_group(4))
    assert not is_irreducibly_represented(parse_group_spec("C2xC2"))
    assert is_irreducibly_represented(symmetric_group(3))
    assert not is_exceptional(symmetric_group(3))
    assert is_exceptional(dicyclic_group(2))
    assert is_exceptional(parse_group_spec("C2xC6"))
    assert not is_exceptional(parse_group_spec("C2xC2"))


def test_induced_trivial_character_values():
    s3 = symmetric_group(3)
    table = character_table(s3)
    whole = generated_subgroup(s3, range(6))
    assert induced_trivial_character(table, whole).values == (1, 1, 1)
    triv = generated_subgroup(s3, [])
    assert induced_trivial_character(table, triv).values == (6, 0, 0)
    c2 = [h for h in cyclic_subgroups(s3) if h.order == 2][0]
    assert induced_trivial_character(table, c2).values == (3, 1, 0)


def test_induction_decompositions():
    s3 = symmetric_group(3)
    table = character_table(s3)
    c2 = [h for h in cyclic_subgroups(s3) if h.order == 2][0]
    ind = induced_trivial_character(table, c2)
    decomposition = [inner_product(ind, chi) for chi in table.characters]
    assert decomposition == [1, 0, 1]
    # regular character decomposes with multiplicities = degrees
    triv = generated_subgroup(s3, [])
    reg = induced_trivial_character(table, triv)
    assert [inner_product(reg, chi) for chi in table.characters] == [
        chi.degree for chi in table.characters
    ]


def test_frobenius_reciprocity():
    for spec in ("S3", "D4", "Q8", "A4"):
        g = parse_group_spec(spec)
        table = character_table(g)
        for h in cyclic_subgroups(g):
            ind = induced_trivial_character(table, h)
            for chi in table.characters:
                lhs = inner_product(ind, chi)
                total = CyclotomicInt.zero(table.e)
                for x in h.elements:
                    total = total + chi.value_at_inverse(table.class_of[x])
                assert lhs == Fraction(total.as_int(), h.order)


def test_inner_product_group_mismatch():
    t1 = character_table(symmetric_group(3))
    t2 = character_table(cyclic_group(6))
    with pytest.raises(MismatchedGroupError):
        inner_product(t1.characters[0], t2.characters[0])


def test_artin_coefficients_trivial_character():
    from galois_span.posets import cyclic_poset, mobius

    for spec in ("S3", "Q8", "C6", "A4", "D4"):
        g = parse_group_spec(spec)
        table = character_table(g)
        triv = ClassFunction(group=g, values=tuple(Fraction(1) for _ in range(table.class_count)))
        coeffs = artin_coefficients(table, triv)
        mu = mobius(cyclic_poset(g))
        for c in cyclic_subgroups(g):
            assert coeffs[c.elements] == Fraction(-mu.mu(c.elements, TOP_KEY), c.index())


def test_artin_coefficients_cyclic_trivial():
    g = cyclic_group(6)
    table = character_table(g)
    triv = ClassFunction(group=g, values=tuple(Fraction(1) for _ in range(table.class_count)))
    coeffs = artin_coefficients(table, triv)
    whole = tuple(range(6))
    assert coeffs[whole] == 1
    assert all(v == 0 for k, v in coeffs.items() if k != whole)


def test_artin_rejects_irrational_and_generator_dependent():
    g = cyclic_group(5)
    table = character_table(g)
    nontrivial = table.characters[1]
    with pytest.raises(NotRationalValuedError):
        artin_coefficients(table, nontrivial)
    # rational values that depend on the generator within a cyclic subgroup
    c5 = cyclic_group(5)
    t5 = character_table(c5)
    lopsided = ClassFunction(
        group=c5, values=tuple(Fraction(k) for k in range(t5.class_count))
    )
    with pytest.raises(GeneratorDependentError):
        artin_coefficients(t5, lopsided)


def test_verify_eq3_small_groups():
    for spec in SMALL_GROUPS:
        report = verify_eq3(parse_group_spec(spec))
        assert report.passed, (spec, report.notes)


def test_one_dim_characters():
    c2 = cyclic_group(2)
    chars = one_dim_characters(c2)
    assert chars == [(0, 0), (0, 1)]
    c4 = cyclic_group(4)
    chars4 = one_dim_characters(c4)
    assert (0, 1, 2, 3) in chars4
    g = parse_group_spec("C2xC6")
    table = character_table(g)
    maps = one_dim_characters(g)
    assert len(maps) == 12
    # kernels from the exponent maps match the table kernels
    for exps, chi in zip(maps, table.characters):
        kernel = tuple(x for x in range(g.order) if exps[x] == 0)
        assert kernel == table.kernel_of(chi).elements
    with pytest.raises(NotAbelianError):
        one_dim_characters(symmetric_group(3))


def test_character_table_json_dump():
    table = character_table(symmetric_group(3))
    data = table.to_json_dict()
    assert data["order"] == 6
    assert [c["size"] for c in data["classes"]] == [1, 3, 2]
    assert [c["degree"] for c in data["characters"]] == [1, 1, 2]
    import json

    json.dumps(data)


def test_charpoly_mod_against_polynomial_determinant():
    import random as _random

    from galois_span.characters import _charpoly_mod
    from galois_span.linalg import det_ring
    from galois_span.polynomials import IntPoly

    rng = _random.Random(17)
    p = 97
    for _ in range(25):
        n = rng.randrange(1, 6)
        a = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        got = _charpoly_mod(a, p)
        # oracle: det(xI - A) over Z[x], reduced mod p
        mat = [
            [
                (IntPoly((0, 1)) if i == j else IntPoly()) - IntPoly((a[i][j],))
                for j in range(n)
            ]
            for i in range(n)
        ]
        expected = det_ring(mat, IntPoly((1,)))
        want = [c % p for c in expected.coeffs] + [0] * (n + 1 - len(expected.coeffs))
        assert [c % p for c in got] == want


def test_sqrt_mod_roundtrip():
    import random as _random

    from galois_span.characters import _sqrt_mod

    rng = _random.Random(23)
    for p in (13, 73, 97, 193):
        for _ in range(20):
            x = rng.randrange(1, p)
            r = _sqrt_mod(x * x % p, p)
            assert r * r % p == x * x % p
    with pytest.raises(ArithmeticError):
        _sqrt_mod(5, 13)  # 5 is not a QR mod 13
