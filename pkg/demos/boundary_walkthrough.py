"""A complete walk through the GL3 Coxeter word.

Everything the package computes, narrated on one small example:
the word w = (1, 2) for GL3 with the split twist of size q0.

  * the certificate (d, q) with (wF)^d = q * Id,
  * the fixed-point torus Y/(wF-1)Y,
  * per position i: the reflected coroot beta_i and the unique pair
    (lambda_i, m_i) with lambda_i - wF(lambda_i) = m_i * beta_i,
  * the recursive exponent matrices Gamma_1, ..., Gamma_{r+1} and the
    closing identity F * Gamma_1 = Gamma_{r+1},
  * the group H_I of obstruction tuples for each subset I of positions,
    whose nontriviality flags the possibly-singular boundary strata.

Run with an integer argument to change q0 (default 2).
"""

import sys

from dlcover import (
    discover_dq,
    full_report,
    gamma_matrices,
    h_group,
    lambda_m_all,
    make_split,
    preset,
    strata_report,
    torus_group,
    wf_matrix,
)

q0 = int(sys.argv[1]) if len(sys.argv) > 1 else 2
datum = preset("GL3")
twist = make_split(datum, q0)
word = (1, 2)

wf = wf_matrix(datum, twist, word)
print(f"GL3, split q0={q0}, word w={word}")
print("wF on the cocharacter lattice Z^3:")
for row in wf.entries:
    print("   ", list(row))

cert = discover_dq(wf, twist.p)
print(f"certificate: (wF)^{cert.d} = {cert.q} * Id, so q = {cert.q}")

torus = torus_group(datum, twist, word)
print(f"fixed-point torus: invariant factors {list(torus.invariant_factors)}"
      f" (order {torus.order}, expected q0^3 - 1 = {q0**3 - 1})")

print()
print("per-position data (m_i divides q - 1 and is prime to p):")
lms = lambda_m_all(datum, twist, word)
for lm in lms:
    print(f"  i={lm.position}: beta={lm.beta}  lambda={lm.lam}  m={lm.m}")
expected = 1 + q0 + q0 * q0
print(f"both m_i equal 1 + q0 + q0^2 = {expected}:",
      all(lm.m == expected for lm in lms))

print()
print("exponent matrices (columns are cocharacters, one per position):")
for j, g in enumerate(gamma_matrices(datum, twist, word), start=1):
    print(f"  Gamma_{j}:")
    for row in g.entries:
        print("     ", list(row))

print()
print("subsets of positions and their obstruction groups:")
for s in strata_report(datum, twist, word):
    h = h_group(datum, twist, word, s.mask)
    factors = list(h.invariant_factors) or "trivial"
    print(f"  I={set(s.mask) or '{}'}: stabilizer order "
          f"{s.stabilizer.order}, H_I {factors} -> {s.flag}")
print(f"the deepest stratum carries H of order {expected} "
      "(cyclic): the one possibly-singular point")

print()
print("machine-readable version of everything above:")
rep = full_report(datum, twist, word)
print({k: rep[k] for k in ("certificate", "torus", "checks")})
