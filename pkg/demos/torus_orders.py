"""Fixed-point tori across presets.

For a word w in the simple reflections and a Frobenius matrix F on the
cocharacter lattice Y, the fixed points of the twisted action form the
finite abelian group Y/(wF-1)Y.  This script tabulates its invariant
factors for every preset over a few field sizes, so you can see the
classical orders (q+1, q^2-1, q^3-1, ...) come out of pure integer
linear algebra.
"""

from dlcover import make_split, make_twisted, preset, torus_group

CASES = [
    ("SL2", (1,)),
    ("GL2", (1,)),
    ("SL3", (1, 2)),
    ("GL3", (1, 2)),
    ("Sp4", (1, 2)),
    ("G2", (1, 2)),
]


def show(name, word, twist, label):
    datum = preset(name)
    group = torus_group(datum, twist, word)
    factors = " x ".join(f"Z/{d}" for d in group.invariant_factors) or "1"
    print(f"  {label:<14} w={word}: {factors}  (order {group.order})")


print("split twists, Coxeter-type words")
for name, word in CASES:
    datum = preset(name)
    for q0 in (2, 3, 5):
        show(name, word, make_split(datum, q0), f"{name}, q0={q0}")
    print()

print("twisted SL3 (diagram flip): the torus of the corresponding")
print("quasi-split form; note how the orders differ from the split case")
sl3 = preset("SL3")
for q0 in (2, 3, 5):
    show("SL3", (1, 2), make_twisted(sl3, q0, (2, 1)), f"SL3 flip, q0={q0}")

print()
print("longer words multiply the eigenvalues around: SL2 with w = s^r")
sl2 = preset("SL2")
for r in (1, 2, 3, 4):
    show("SL2", (1,) * r, make_split(sl2, 2), f"SL2, q0=2, r={r}")
