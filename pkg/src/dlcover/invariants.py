"""Invariants of the torus cover attached to a word.

Given a root datum, a Frobenius twist F, and a word w = s_1 ... s_r, this
module computes:

* the finite fixed-point group T(w) = Y / (wF - 1)Y,
* for each position i the primitive cocharacter lambda_i and the positive
  integer m_i solving lambda_i - wF(lambda_i) = m_i * beta_i, where beta_i
  is the coroot of letter i pushed through the prefix of the word,
* the exponent matrices Gamma_1, ..., Gamma_{r+1} of the recursive system
  of cocharacters built from the lambda_i,
* for each subset I of positions, the finite group H_I cut out by that
  system on the I-coordinates, the stabilizer subgroup of the boundary
  stratum dropping the positions in I, and the comparison of the two
  quotient descriptions of that stratum's covering group.

Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .frobenius import FrobeniusTwist, discover_dq, norm_matrix, wf_matrix
from .lattice import (
    FiniteAbelianGroup,
    IntMatrix,
    SingularMatrix,
    Vector,
    cokernel,
    kernel_mod,
    primitive_part,
    solve_rational,
    subgroup_image,
)
from .rootdata import (
    RootDatum,
    check_mask,
    check_word,
    reflection_on_Y,
    subword_lattice_generators,
)


class NoIntegralSolution(Exception):
    """The rational solution for lambda does not scale to a primitive
    integer vector with positive integer m."""


class TooManyStrata(Exception):
    pass


@dataclass(frozen=True)
class LambdaM:
    position: int
    beta: Vector
    lam: Vector
    m: int


@dataclass(frozen=True)
class QuotientIsoResult:
    mask: tuple[int, ...]
    factors_word: tuple[int, ...]
    factors_subword: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.factors_word == self.factors_subword


@dataclass(frozen=True)
class RamificationEntry:
    position: int
    beta: Vector
    m: int
    stabilizer_order: int


@dataclass(frozen=True)
class StratumInfo:
    mask: tuple[int, ...]
    stabilizer: FiniteAbelianGroup
    h: FiniteAbelianGroup
    flag: str  # "guaranteed-smooth" | "smooth-by-H" | "possibly-singular"


def torus_group(
    datum: RootDatum, twist: FrobeniusTwist, word, mask=()
) -> FiniteAbelianGroup:
    """Y modulo (xF - 1)Y for the (sub)word x; finite by construction."""
    wf = wf_matrix(datum, twist, word, mask)
    rel = wf - IntMatrix.identity(datum.rank)
    if rel.det() == 0:
        raise SingularMatrix("xF - 1 is singular; fixed points are not finite")
    return cokernel(rel)


def lambda_m_all(
    datum: RootDatum, twist: FrobeniusTwist, word
) -> tuple[LambdaM, ...]:
    """Solve the defining equations at every position of the word."""
    w = check_word(datum, word)
    wf = wf_matrix(datum, twist, w)
    ident = IntMatrix.identity(datum.rank)
    rel = ident - wf
    if rel.det() == 0:
        raise SingularMatrix("wF - 1 is singular")
    cert = discover_dq(wf, twist.p)
    out = []
    prefix = ident
    for i, letter in enumerate(w, start=1):
        beta = prefix.apply(datum.simple_coroots[letter - 1])
        v = solve_rational(rel, beta)
        u, num, den = primitive_part(v)
        if num != 1:
            raise NoIntegralSolution(
                f"position {i}: lambda = ({num}/{den}) * {u} is not integral"
            )
        lam, m = u, den
        # defining equation, re-checked exactly
        if tuple(a - b for a, b in zip(lam, wf.apply(lam))) != tuple(
            m * x for x in beta
        ):
            raise AssertionError("defining equation violated after scaling")
        # both are forced by the norm identity; failure means a bug
        if (cert.q - 1) % m or gcd(m, twist.p) != 1:
            raise AssertionError("m must divide q - 1 and be prime to p")
        out.append(LambdaM(i, beta, lam, m))
        prefix = prefix @ reflection_on_Y(datum, letter)
    return tuple(out)


def lambda_m(
    datum: RootDatum, twist: FrobeniusTwist, word, i: int
) -> LambdaM:
    w = check_word(datum, word)
    if not 1 <= i <= len(w):
        raise ValueError(f"position {i} out of range")
    return lambda_m_all(datum, twist, w)[i - 1]


def norm_identity_check(datum: RootDatum, twist: FrobeniusTwist, word) -> bool:
    """m_i * N(beta_i) == (1 - q) * lambda_i for every position, where N sums
    the first d powers of wF."""
    w = check_word(datum, word)
    wf = wf_matrix(datum, twist, w)
    cert = discover_dq(wf, twist.p)
    nm = norm_matrix(wf, cert.d)
    for lm in lambda_m_all(datum, twist, w):
        lhs = nm.apply(tuple(lm.m * x for x in lm.beta))
        rhs = tuple((1 - cert.q) * x for x in lm.lam)
        if lhs != rhs:
            return False
    return True


def gamma_matrices(
    datum: RootDatum, twist: FrobeniusTwist, word
) -> tuple[IntMatrix, ...]:
    """Exponent matrices Gamma_1 .. Gamma_{r+1} (columns indexed by word
    positions): Gamma_1 has columns lambda_i, and each step reflects and
    adds m_i times the coroot of letter i into column i."""
    w = check_word(datum, word)
    lms = lambda_m_all(datum, twist, w)
    return _gamma_from(datum, w, lms)


def _gamma_from(
    datum: RootDatum, w: tuple[int, ...], lms: Sequence[LambdaM]
) -> tuple[IntMatrix, ...]:
    r = len(w)
    n = datum.rank
    g = IntMatrix.from_columns([lm.lam for lm in lms])
    out = [g]
    for i, letter in enumerate(w, start=1):
        coroot = datum.simple_coroots[letter - 1]
        bump = IntMatrix.from_rows(
            [
                [lms[i - 1].m * coroot[k] if j == i - 1 else 0 for j in range(r)]
                for k in range(n)
            ]
        )
        g = reflection_on_Y(datum, letter) @ g + bump
        out.append(g)
    return tuple(out)


def f_gamma_check(datum: RootDatum, twist: FrobeniusTwist, word) -> bool:
    """The twist carries the first exponent matrix to the last one."""
    gs = gamma_matrices(datum, twist, word)
    return twist.matrix @ gs[0] == gs[-1]


def h_group(
    datum: RootDatum, twist: FrobeniusTwist, word, mask
) -> FiniteAbelianGroup:
    """The finite group cut out by the full cocharacter system on the
    coordinates in `mask` (all other coordinates pinned to 1)."""
    w = check_word(datum, word)
    dropped = sorted(check_mask(w, mask))
    lms = lambda_m_all(datum, twist, w)
    return _h_group_from(datum, w, lms, dropped)


def _h_group_from(
    datum: RootDatum,
    w: tuple[int, ...],
    lms: Sequence[LambdaM],
    dropped: list[int],
) -> FiniteAbelianGroup:
    if not dropped:
        return FiniteAbelianGroup()
    mods = tuple(lms[i - 1].m for i in dropped)
    big = lcm(*mods)
    if big == 1:
        return FiniteAbelianGroup(generators=(), moduli=mods)
    cols = [
        tuple((big // lms[i - 1].m) * x for x in lms[i - 1].lam) for i in dropped
    ]
    grp = kernel_mod(IntMatrix.from_columns(cols), mods)
    # every generator must kill the whole recursive system, not just Gamma_1
    gammas = _gamma_from(datum, w, lms)
    for gen in grp.generators or ():
        t = [0] * len(w)
        for pos, e in zip(dropped, gen):
            t[pos - 1] = (big // lms[pos - 1].m) * e
        for g in gammas:
            if any(x % big for x in g.apply(t)):
                raise AssertionError("H generator fails the recursive system")
    return grp


def stabilizer(
    datum: RootDatum, twist: FrobeniusTwist, word, mask
) -> FiniteAbelianGroup:
    """Subgroup of the fixed-point group generated by the classes of the
    beta_i at the masked positions."""
    w = check_word(datum, word)
    gens = subword_lattice_generators(datum, w, mask)
    return subgroup_image(torus_group(datum, twist, w), gens)


def quotient_iso_check(
    datum: RootDatum, twist: FrobeniusTwist, word, mask
) -> QuotientIsoResult:
    """Compare Y/((wF-1)Y + B) with Y/((xF-1)Y + B), B spanned by the
    masked beta_i and x the complementary subword."""
    w = check_word(datum, word)
    dropped = check_mask(w, mask)
    gens = subword_lattice_generators(datum, w, dropped)
    ident = IntMatrix.identity(datum.rank)
    out = []
    for m in ((), dropped):
        rel = wf_matrix(datum, twist, w, m) - ident
        if rel.det() == 0:
            raise SingularMatrix("xF - 1 is singular")
        out.append(cokernel(rel.with_columns(gens)).invariant_factors)
    return QuotientIsoResult(tuple(sorted(dropped)), out[0], out[1])


def ramification_report(
    datum: RootDatum, twist: FrobeniusTwist, word
) -> tuple[RamificationEntry, ...]:
    """Per position: beta_i, m_i, and the order of the class of beta_i in
    the fixed-point group.  The two numbers agree; both are reported."""
    w = check_word(datum, word)
    torus = torus_group(datum, twist, w)
    out = []
    for lm in lambda_m_all(datum, twist, w):
        k = torus.order_of(lm.beta)
        if k != lm.m:
            raise AssertionError("class order of beta differs from m")
        out.append(RamificationEntry(lm.position, lm.beta, lm.m, k))
    return tuple(out)


def _flag(mask_size: int, h: FiniteAbelianGroup) -> str:
    if mask_size <= 1:
        return "guaranteed-smooth"
    return "possibly-singular" if h.order > 1 else "smooth-by-H"


def strata_report(
    datum: RootDatum, twist: FrobeniusTwist, word, guard: int = 20
) -> tuple[StratumInfo, ...]:
    """One entry per subset of positions, in binary counting order (bit i
    set means position i + 1 is dropped)."""
    w = check_word(datum, word)
    r = len(w)
    if r > guard:
        raise TooManyStrata(f"word length {r} exceeds the strata guard {guard}")
    torus = torus_group(datum, twist, w)
    lms = lambda_m_all(datum, twist, w)
    out = []
    for bits in range(2**r):
        dropped = [i + 1 for i in range(r) if bits >> i & 1]
        gens = [lms[i - 1].beta for i in dropped]
        stab = subgroup_image(torus, gens)
        h = _h_group_from(datum, w, lms, dropped)
        out.append(
            StratumInfo(tuple(dropped), stab, h, _flag(len(dropped), h))
        )
    return tuple(out)


# -- aggregate report -------------------------------------------------


def full_report(
    datum: RootDatum,
    twist: FrobeniusTwist,
    word,
    with_strata: bool = True,
    guard: int = 20,
) -> dict:
    """JSON-ready summary of every invariant for one word."""
    from .frobenius import twist_to_json

    w = check_word(datum, word)
    wf = wf_matrix(datum, twist, w)
    cert = discover_dq(wf, twist.p)
    torus = torus_group(datum, twist, w)
    lms = lambda_m_all(datum, twist, w)
    report = {
        "word": list(w),
        "twist": twist_to_json(twist),
        "certificate": {"d": cert.d, "q": cert.q},
        "torus": {
            "factors": list(torus.invariant_factors),
            "order": torus.order,
        },
        "per_i": [
            {
                "i": lm.position,
                "beta": list(lm.beta),
                "lambda": list(lm.lam),
                "m": lm.m,
            }
            for lm in lms
        ],
        "strata": None,
        "checks": {
            "f_gamma": f_gamma_check(datum, twist, w),
            "nw": norm_identity_check(datum, twist, w),
            "quotient_iso": None,
        },
    }
    if with_strata:
        strata = strata_report(datum, twist, w, guard=guard)
        report["strata"] = [
            {
                "I": list(s.mask),
                "stab_factors": list(s.stabilizer.invariant_factors),
                "h_factors": list(s.h.invariant_factors),
                "flag": s.flag,
            }
            for s in strata
        ]
        report["checks"]["quotient_iso"] = all(
            quotient_iso_check(datum, twist, w, s.mask).equal for s in strata
        )
    return report
