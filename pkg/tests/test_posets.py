import random
from fractions import Fraction

import pytest

from galois_span.characters import character_table
from galois_span.groups import (
    cyclic_group,
    dicyclic_group,
    direct_product,
    parse_group_spec,
    symmetric_group,
)
from galois_span.posets import (
    BOTTOM_KEY,
    TOP_KEY,
    Poset,
    adjoin_bottom,
    adjoin_top,
    classical_mobius,
    cyclic_poset,
    divisor_poset,
    hasse_dot,
    kernel_poset,
    mobius,
    mobius_inversion_check,
)
from helpers import random_poset


def test_poset_validation():
    with pytest.raises(ValueError):
        Poset([0, 1], ["0", "1"], [[True, True], [True, True]])  # not antisymmetric
    with pytest.raises(ValueError):
        Poset([0, 1], ["0", "1"], [[False, False], [False, True]])  # not reflexive
    with pytest.raises(ValueError):
        Poset(
            [0, 1, 2],
            list("012"),
            [
                [True, True, False],
                [False, True, True],
                [False, False, True],
            ],
        )  # not transitive


def test_chain_mobius():
    chain = Poset.from_leq([0, 1, 2], list("012"), lambda a, b: a <= b)
    mu = mobius(chain)
    assert mu.mu(0, 0) == 1
    assert mu.mu(0, 1) == -1
    assert mu.mu(0, 2) == 0
    assert mu.mu(1, 0) == 0  # incomparable direction


def test_classical_mobius():
    assert classical_mobius(1) == 1
    assert classical_mobius(6) == 1
    assert classical_mobius(12) == 0
    assert classical_mobius(30) == -1
    values = [classical_mobius(n) for n in range(1, 13)]
    assert values == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_divisor_poset_matches_classical():
    for n in (6, 12, 30, 36):
        p = divisor_poset(n)
        mu = mobius(p)
        assert mu.mu(1, n) == classical_mobius(n)
        for d in [k for k in range(1, n + 1) if n % k == 0]:
            assert mu.mu(d, n) == classical_mobius(n // d)


def test_adjoin_bottom_top():
    p = Poset.from_leq([], [], lambda a, b: True)
    single = adjoin_bottom(p)
    assert len(single) == 1
    both = adjoin_top(adjoin_bottom(Poset.from_leq([1], ["1"], lambda a, b: True)))
    assert len(both) == 3
    mu = mobius(both)
    assert mu.mu(BOTTOM_KEY, TOP_KEY) == 0  # chain of length 2


def test_adjoin_rejects_duplicate():
    p = Poset.from_leq(["x"], ["x"], lambda a, b: True)
    with pytest.raises(ValueError):
        adjoin_bottom(p, "x")


def test_kernel_poset_elementary_abelian():
    for m in (2, 3):
        g = parse_group_spec("x".join(["C2"] * m))
        poset = kernel_poset(g, character_table(g))
        mu = mobius(poset)
        whole = tuple(range(g.order))
        assert mu.mu(BOTTOM_KEY, whole) == 2**m - 2
        index_two = [k for k in poset.keys if k not in (BOTTOM_KEY, whole)]
        assert len(index_two) == 2**m - 1
        for k in index_two:
            assert mu.mu(BOTTOM_KEY, k) == -1


def test_kernel_poset_cyclic_group_degenerates():
    g = cyclic_group(6)
    poset = kernel_poset(g, character_table(g))
    mu = mobius(poset)
    assert (g.identity,) in poset.keys
    for key in poset.keys:
        if key in (BOTTOM_KEY, (g.identity,)):
            continue
        assert mu.mu(BOTTOM_KEY, key) == 0


def test_kernel_poset_trivial_group():
    g = cyclic_group(1)
    poset = kernel_poset(g, character_table(g))
    assert len(poset) == 2  # bottom and G


def test_cyclic_poset_elementary_abelian_and_q8():
    for m in (2, 3):
        g = parse_group_spec("x".join(["C2"] * m))
        poset = cyclic_poset(g)
        mu = mobius(poset)
        assert mu.mu((g.identity,), TOP_KEY) == 2**m - 2
        for key in poset.keys:
            if key in ((g.identity,), TOP_KEY):
                continue
            assert mu.mu(key, TOP_KEY) == -1
    q8 = dicyclic_group(2)
    mu = mobius(cyclic_poset(q8))
    assert mu.mu((q8.identity,), TOP_KEY) == 0


def test_cyclic_poset_matches_classical_mobius():
    # interior values of the cyclic-subgroup poset of Z/n follow mu([B:C])
    for n in range(2, 61):
        g = cyclic_group(n)
        poset = cyclic_poset(g)
        mu = mobius(poset)
        subs = [k for k in poset.keys if k != TOP_KEY]
        for c in subs:
            for b in subs:
                if set(c) <= set(b):
                    assert mu.mu(c, b) == classical_mobius(len(b) // len(c))


def test_unit_partition_identity():
    # -sum_C mu(C, top)/[G:C] = 1 for every supported group
    for spec in ("C1", "C6", "C2xC2", "S3", "Q8", "A4", "D4", "C2xC6", "Dic3"):
        g = parse_group_spec(spec)
        poset = cyclic_poset(g)
        mu = mobius(poset)
        total = Fraction(0)
        for key in poset.keys:
            if key == TOP_KEY:
                continue
            total -= Fraction(mu.mu(key, TOP_KEY) * len(key), g.order)
        assert total == 1, spec


def test_mobius_inversion_randomized():
    rng = random.Random(13)
    for _ in range(40):
        p = random_poset(rng, max_elements=6)
        f = {k: Fraction(rng.randrange(-5, 6)) for k in p.keys}
        n = len(p)
        g_up = {
            p.keys[x]: sum(
                (f[p.keys[y]] for y in range(n) if p.leq_idx(x, y)), start=Fraction(0)
            )
            for x in range(n)
        }
        assert mobius_inversion_check(p, f, g_up)


def test_mobius_inversion_constant_on_antichain():
    p = Poset.from_leq([0, 1, 2], list("012"), lambda a, b: a == b)
    f = {k: Fraction(1) for k in p.keys}
    assert mobius_inversion_check(p, f, dict(f))


def test_hasse_dot_shapes():
    chain = Poset.from_leq([0, 1, 2], list("012"), lambda a, b: a <= b)
    dot = hasse_dot(chain)
    assert dot.count("->") == 2
    s3 = symmetric_group(3)
    dot = hasse_dot(cyclic_poset(s3))
    # {1} covered by the 4 nontrivial cyclic subgroups, each covered by top
    assert dot.count("->") == 8
    klein = direct_product(cyclic_group(2), cyclic_group(2))
    from galois_span.groups import all_subgroups
    from galois_span.posets import subgroup_poset

    diamond = subgroup_poset(all_subgroups(klein))
    dot = hasse_dot(diamond)
    assert dot.count("->") == 6  # bottom to 3 atoms, 3 atoms to top
