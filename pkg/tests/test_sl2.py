import pytest

from dlcover.sl2 import (
    GF,
    DrinfeldReport,
    FieldUnsupported,
    check_phi,
    drinfeld_points,
    mat_mul,
    phi,
    sl2_elements,
)


def test_field_support():
    for q in (2, 3, 4, 5, 7, 8, 9, 16):
        GF(q)
    with pytest.raises(FieldUnsupported):
        GF(6)
    with pytest.raises(FieldUnsupported):
        GF(121)
    with pytest.raises(FieldUnsupported):
        GF(37)


def test_multiplicative_group_is_cyclic():
    for q in (4, 8, 9, 16):
        f = GF(q)
        assert any(
            len({f.pow(g, e) for e in range(1, q)}) == q - 1 for g in f.units
        )


def test_frobenius_is_additive():
    # (a + b)^p == a^p + b^p distinguishes a true field table from junk
    for q in (9, 16):
        f = GF(q)
        for a in f.elements:
            for b in f.elements:
                assert f.pow(f.add(a, b), f.p) == f.add(f.pow(a, f.p), f.pow(b, f.p))


def test_sl2_group_orders():
    for q in (2, 3, 4, 5):
        assert len(sl2_elements(GF(q))) == q**3 - q


def test_phi_values():
    f = GF(5)
    assert phi((1, 0, 0, 1)) == 0
    assert phi((0, f.neg(1), 1, 0)) == 1
    assert phi((1, 0, 3, 1)) == 3


def test_matrix_multiplication_closes():
    f = GF(3)
    group = set(sl2_elements(f))
    for g in list(group)[:8]:
        for h in list(group)[:8]:
            assert mat_mul(f, g, h) in group


def test_check_phi_small():
    for q in (2, 3, 5):
        rep = check_phi(q)
        assert rep.group_order == q**3 - q
        assert rep.ok, rep


def test_check_phi_prime_power():
    rep = check_phi(4)
    assert rep.group_order == 60
    assert rep.ok


def test_drinfeld_counts():
    assert drinfeld_points(2, 2) == DrinfeldReport(2, 2, 6, 3, True, 2)
    assert drinfeld_points(3, 2) == DrinfeldReport(3, 2, 24, 4, True, 6)
    assert drinfeld_points(4, 2) == DrinfeldReport(4, 2, 60, 5, True, 12)


def test_drinfeld_no_rational_points():
    for q in (2, 3, 4, 5):
        assert drinfeld_points(q, 1).count == 0


def test_drinfeld_unsupported():
    with pytest.raises(FieldUnsupported):
        drinfeld_points(11, 2)
    with pytest.raises(FieldUnsupported):
        drinfeld_points(6, 1)
