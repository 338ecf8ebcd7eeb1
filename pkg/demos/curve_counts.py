"""Exhaustive rank-one checks at desk scale.

The lower-left matrix entry phi(g) = c of g = [[a, b], [c, d]] in
SL2(F_q) controls the whole rank-one picture:

  * phi scales predictably under the diagonal torus,
  * phi is invariant under twisted conjugation and under left/right
    multiplication by the unipotent upper-triangular subgroup,
  * phi = 0 cuts out the upper-triangular subgroup, phi = 1 the big
    cell U s U.

The geometric shadow is the plane curve x y^q - x^q y = c (c the least
nonzero constant with c^q = -c; c = 1 in characteristic 2).  Over the
quadratic extension it has exactly q^3 - q points -- the order of
SL2(F_q) -- and the (q+1)-st roots of unity act freely on them with
q^2 - q orbits.  Over the prime field itself it has no points at all.

All of this is verified below by brute force, element by element.
"""

from dlcover import GF, check_phi, drinfeld_points, phi, sl2_elements

print("phi on small subgroups of SL2(F_5):")
f5 = GF(5)
s = (0, f5.neg(1), 1, 0)
print(f"  phi(identity) = {phi((1, 0, 0, 1))}")
print(f"  phi(s) = {phi(s)} for the standard Weyl representative")
print(f"  phi([[1,0],[c,1]]) = c for all c: "
      f"{[phi((1, 0, c, 1)) for c in f5.elements]}")

print()
print("exhaustive property checks, q = 2 .. 9:")
for q in (2, 3, 4, 5, 7, 8, 9):
    rep = check_phi(q)
    n = len(sl2_elements(GF(q)))
    state = "all pass" if rep.ok else "FAILURE"
    print(f"  q={q}: group order {rep.group_order} = q^3-q = {q**3 - q}, "
          f"{state} over {n} elements")

print()
print("curve counts:")
for q in (2, 3, 4):
    over_big = drinfeld_points(q, 2)
    over_small = drinfeld_points(q, 1)
    print(f"  q={q}: {over_big.count} points over F_{q**2} "
          f"(= q^3-q = {q**3 - q}), free action of the {over_big.mu_order} "
          f"roots of unity, {over_big.orbits} orbits; "
          f"{over_small.count} points over F_{q}")
