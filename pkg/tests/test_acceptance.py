"""Acceptance gate.

One test per numbered deliverable.  Each test covers the full battery it
names, enforces the stated wall-clock budget, and prints a single
``criterion N ... pass`` line (visible with ``pytest -v -s`` or ``-rP``).
"""

import time
from itertools import product
from math import gcd, prod

import pytest

from oracles import EnumeratedQuotient, histogram_of_factors

from dlcover.frobenius import (
    NotPrimePower,
    discover_dq,
    make_split,
    make_twisted,
    norm_matrix,
    wf_matrix,
)
from dlcover.invariants import (
    f_gamma_check,
    h_group,
    lambda_m_all,
    quotient_iso_check,
    strata_report,
    torus_group,
)
from dlcover.lattice import IntMatrix
from dlcover.rootdata import (
    ImprimitiveCoroot,
    RootDatum,
    preset,
    subword_lattice_generators,
    validate,
)
from dlcover.sl2 import check_phi, drinfeld_points

BATTERY_Q0 = (2, 3, 4, 5)
BATTERY_PRESETS = ("SL2", "SL3", "GL2", "GL3", "Sp4")


def battery_cases():
    """Split twists over five presets plus the twisted SL3 flip."""
    out = []
    for name in BATTERY_PRESETS:
        datum = preset(name)
        for q0 in BATTERY_Q0:
            out.append((f"{name} split q0={q0}", datum, make_split(datum, q0)))
    sl3 = preset("SL3")
    for q0 in BATTERY_Q0:
        out.append((f"SL3 flip q0={q0}", sl3, make_twisted(sl3, q0, (2, 1))))
    return out


def all_words(datum, max_len=4):
    letters = range(1, datum.nletters + 1)
    for r in range(1, max_len + 1):
        yield from product(letters, repeat=r)


def finish(n, label, t0, budget=None):
    dt = time.perf_counter() - t0
    if budget is not None:
        assert dt < budget, f"criterion {n} took {dt:.2f} s (budget {budget} s)"
    print(f"criterion {n} ({label}): pass in {dt:.2f} s")


def test_criterion_1_gl3_boundary_group():
    t0 = time.perf_counter()
    datum = preset("GL3")
    for q0 in (2, 3, 5):
        twist = make_split(datum, q0)
        h = h_group(datum, twist, (1, 2), (1, 2))
        assert h.invariant_factors == (1 + q0 + q0 * q0,)
    finish(1, "GL3 full-mask group cyclic of order 1+q0+q0^2", t0, budget=1.0)


def test_criterion_2_lambda_m_battery():
    t0 = time.perf_counter()
    for q in (2, 3, 4, 5, 7):
        sl2 = preset("SL2")
        twist = make_split(sl2, q)
        (lm,) = lambda_m_all(sl2, twist, (1,))
        assert lm.m == q + 1
        assert torus_group(sl2, twist, (1,)).invariant_factors == (q + 1,)

        gl2 = preset("GL2")
        twist = make_split(gl2, q)
        (lm,) = lambda_m_all(gl2, twist, (1,))
        assert lm.m == q + 1
        assert torus_group(gl2, twist, (1,)).order == q * q - 1

        gl3 = preset("GL3")
        twist = make_split(gl3, q)
        lms = lambda_m_all(gl3, twist, (1, 2))
        assert [lm.m for lm in lms] == [1 + q + q * q] * 2
        assert torus_group(gl3, twist, (1, 2)).invariant_factors == (
            q**3 - 1,
        )
    finish(2, "lambda/m values on SL2, GL2, GL3", t0, budget=1.0)


def test_criterion_3_defining_identities():
    t0 = time.perf_counter()
    cases = 0
    for label, datum, twist in battery_cases():
        for w in all_words(datum):
            wf = wf_matrix(datum, twist, w)
            cert = discover_dq(wf, twist.p)
            nmat = norm_matrix(wf, cert.d)
            for lm in lambda_m_all(datum, twist, w):
                left = tuple(
                    a - b for a, b in zip(lm.lam, wf.apply(lm.lam))
                )
                assert left == tuple(lm.m * b for b in lm.beta), label
                assert (cert.q - 1) % lm.m == 0, label
                assert gcd(lm.m, twist.p) == 1, label
                scaled = tuple(lm.m * b for b in lm.beta)
                assert nmat.apply(scaled) == tuple(
                    (1 - cert.q) * x for x in lm.lam
                ), label
            assert f_gamma_check(datum, twist, w), label
            cases += 1
    assert cases == 512
    finish(3, "defining identities over the 512-case battery", t0, budget=30.0)


def _enumerated_histogram(datum, twist, w, wf_mask, gen_mask):
    """Both sides of the comparison share the generators from gen_mask;
    only the (sub)word behind the twisted action differs."""
    gens = subword_lattice_generators(datum, w, gen_mask)
    rel = wf_matrix(datum, twist, w, wf_mask) - IntMatrix.identity(datum.rank)
    return EnumeratedQuotient(
        list(rel.columns()) + list(gens)
    ).order_histogram()


def test_criterion_4_structural_properties():
    t0 = time.perf_counter()
    hist_cache = {}
    enumerated = 0
    for label, datum, twist in battery_cases():
        for w in all_words(datum):
            lms = lambda_m_all(datum, twist, w)
            for s in strata_report(datum, twist, w):
                if len(s.mask) <= 1:
                    assert s.h.order == 1, label
                if len(s.mask) == 1:
                    assert s.stabilizer.order == lms[s.mask[0] - 1].m, label
                res = quotient_iso_check(datum, twist, w, s.mask)
                assert res.equal, (label, w, s.mask)
                if (
                    prod(res.factors_word) <= 100
                    and prod(res.factors_subword) <= 100
                ):
                    for side, factors in (
                        ((), res.factors_word),
                        (s.mask, res.factors_subword),
                    ):
                        key = tuple(sorted(factors))
                        if key not in hist_cache:
                            hist_cache[key] = histogram_of_factors(factors)
                        got = _enumerated_histogram(
                            datum, twist, w, side, s.mask
                        )
                        assert got == hist_cache[key], (label, w, s.mask)
                    enumerated += 1
    assert enumerated > 0
    finish(
        4,
        f"stabilizers, H-groups, quotient iso ({enumerated} enumerated)",
        t0,
        budget=60.0,
    )


def test_criterion_5_sl2_oracle():
    t0 = time.perf_counter()
    for q in (2, 3, 4, 5, 7, 8, 9):
        rep = check_phi(q)
        assert rep.ok, q
        assert rep.group_order == q**3 - q, q
    for q in (2, 3, 4):
        dr = drinfeld_points(q, 2)
        assert dr.count == q**3 - q, q
        assert dr.free and dr.mu_order == q + 1, q
        assert dr.orbits == q * q - q, q
        assert drinfeld_points(q, 1).count == 0, q
    finish(5, "exhaustive SL2 checks and curve counts", t0, budget=30.0)


def test_criterion_6_negative_paths():
    t0 = time.perf_counter()
    with pytest.raises(ImprimitiveCoroot):
        validate(RootDatum("pgl2-like", ((1,),), ((2,),)))
    with pytest.raises(NotPrimePower):
        make_split(preset("GL3"), 6)
    with pytest.raises(NotPrimePower):
        make_split(preset("SL2"), 1)
    for label, datum, twist in battery_cases():
        ident = IntMatrix.identity(datum.rank)
        for w in all_words(datum):
            wf = wf_matrix(datum, twist, w)
            assert (wf - ident).det() != 0, (label, w)
    finish(6, "rejections and nonsingular wF-1 across the battery", t0)
