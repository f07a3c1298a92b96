"""Bundled flag fixture for groups of order at most 24.

Keys are canonical GroupSpec names; values are
(irreducibly_represented, exceptional).  Only rows whose groups are
constructible by the GroupSpec grammar are shipped; rows for groups that
need ad-hoc permutation presentations (SD16, F5, C7:C3, ...) are absent and
lookups report them as unsupported rather than silently skipped.

The published list is stated in terms of the complementary columns
("not irreducibly represented" / "not exceptional"); this fixture stores
the positive flags.  One degenerate row is corrected: the published list
marks the trivial group exceptional, but mu({1}, top) = -1 != 0 in its
one-element cyclic-subgroup poset, so the computed flag is False.  The
lookup records that known difference in `PAPER_DISAGREEMENTS` instead of
reconciling it.
"""

TABLE1_FLAGS: dict[str, tuple[bool, bool]] = {
    # cyclic groups: faithful irreducible exists, formula degenerates
    **{f"C{n}": (True, True) for n in range(2, 25)},
    "C1": (True, False),
    # abelian non-cyclic
    "C2xC2": (False, False),
    "C2xC2xC2": (False, False),
    "C2xC4": (False, False),
    "C2xC6": (False, True),
    "C3xC3": (False, False),
    "C2xC8": (False, False),
    "C2xC2xC4": (False, False),
    "C2xC2xC2xC2": (False, False),
    "C4xC4": (False, False),
    "C3xC6": (False, True),
    "C2xC10": (False, True),
    "C2xC12": (False, True),
    "C2xC2xC6": (False, True),
    # dihedral (order 2n)
    "D4": (True, False),
    "D5": (True, False),
    "D6": (True, False),
    "D7": (True, False),
    "D8": (True, False),
    "D9": (True, False),
    "D10": (True, False),
    "D11": (True, False),
    "D12": (True, False),
    # dicyclic / generalized quaternion
    "Q8": (True, True),
    "Q16": (True, True),
    "Dic3": (True, True),
    "Dic5": (True, True),
    "Dic6": (True, True),
    # symmetric / alternating and mixed products
    "S3": (True, False),
    "S4": (True, False),
    "A4": (True, False),
    "C2xA4": (True, False),
    "C3xS3": (True, False),
    "C2xD4": (False, False),
    "C2xQ8": (False, False),
    "C4xS3": (True, False),
    "C3xD4": (True, True),
    "C3xQ8": (True, True),
    "C2xC2xS3": (False, False),
    "C2xDic3": (False, True),
}

PAPER_DISAGREEMENTS: dict[str, str] = {
    "C1": (
        "published list marks the trivial group exceptional; the defining "
        "condition mu({1}, top) = 0 fails (mu = -1), so the computed flag is False"
    ),
}
