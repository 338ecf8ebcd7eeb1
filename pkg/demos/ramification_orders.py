"""Ramification orders and quotient comparisons.

Two facts are demonstrated on small cases:

  * the order m_i attached to position i equals the order of the class
    of beta_i in the fixed-point torus -- the cover ramifies with index
    m_i along the divisor where letter i degenerates;
  * dividing the torus by the classes of the masked beta_i gives the
    same abelian group whether the masked letters are kept in the word
    or dropped from it, for every mask.
"""

from itertools import chain, combinations

from dlcover import (
    make_split,
    make_twisted,
    preset,
    quotient_iso_check,
    ramification_report,
    torus_group,
)

CASES = [
    ("GL2 split q0=3", preset("GL2"), lambda d: make_split(d, 3), (1,)),
    ("GL3 split q0=2", preset("GL3"), lambda d: make_split(d, 2), (1, 2)),
    ("Sp4 split q0=2", preset("Sp4"), lambda d: make_split(d, 2), (1, 2)),
    (
        "SL3 flip q0=2",
        preset("SL3"),
        lambda d: make_twisted(d, 2, (2, 1)),
        (1, 2, 1),
    ),
]


def masks(word):
    positions = range(1, len(word) + 1)
    return chain.from_iterable(
        combinations(positions, k) for k in range(len(word) + 1)
    )


for label, datum, mk, word in CASES:
    twist = mk(datum)
    torus = torus_group(datum, twist, word)
    print(f"{label}, w={word}: torus order {torus.order}")
    for entry in ramification_report(datum, twist, word):
        print(
            f"  position {entry.position}: beta={entry.beta} "
            f"m={entry.m} = order of its torus class "
            f"({entry.stabilizer_order})"
        )
    for mask in masks(word):
        res = quotient_iso_check(datum, twist, word, mask)
        tag = "ok" if res.equal else "MISMATCH"
        print(
            f"  mask {set(mask) or '{}'}: quotient factors "
            f"{list(res.factors_word) or [1]} both ways -> {tag}"
        )
    print()
