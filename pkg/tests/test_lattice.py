from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dlcover.lattice import (
    IntMatrix,
    SingularMatrix,
    ZeroVector,
    cokernel,
    inverse_unimodular,
    kernel_mod,
    primitive_part,
    snf,
    solve_rational,
    subgroup_image,
)

from oracles import histogram_of_factors, laplace_det, minor_gcd_factors


def mat(rows):
    return IntMatrix.from_rows(rows)


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        )
    )
)


# -- Smith form -------------------------------------------------------


def check_snf_contract(a):
    res = snf(a)
    assert res.U @ a @ res.V == res.S
    assert abs(res.U.det()) == 1
    assert abs(res.V.det()) == 1
    d = res.diagonal
    assert all(x >= 0 for x in d)
    nonzero = [x for x in d if x]
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0
    # off-diagonal entries vanish
    for i in range(res.S.nrows):
        for j in range(res.S.ncols):
            if i != j:
                assert res.S[i, j] == 0
    return res


def test_snf_diag_2_3():
    res = check_snf_contract(mat([[2, 0], [0, 3]]))
    assert res.diagonal == (1, 6)


def test_snf_identity():
    res = check_snf_contract(IntMatrix.identity(3))
    assert res.S == IntMatrix.identity(3)


def test_snf_symmetric_example():
    res = check_snf_contract(mat([[1, -2], [-2, 1]]))
    assert res.diagonal == (1, 3)


def test_snf_zero():
    res = check_snf_contract(IntMatrix.zeros(2, 2))
    assert res.diagonal == (0, 0)


def test_snf_rectangular():
    assert check_snf_contract(mat([[2, 4, 6]])).diagonal == (2,)
    assert check_snf_contract(mat([[2], [4]])).diagonal == (2,)


def test_snf_deterministic():
    a = mat([[6, 4, 2], [4, 2, 8], [2, 8, 4]])
    r1, r2 = snf(a), snf(a)
    assert (r1.U, r1.S, r1.V) == (r2.U, r2.S, r2.V)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_random(rows):
    a = mat(rows)
    res = check_snf_contract(a)
    # gcd-of-minors characterization, computed independently
    assert list(res.diagonal) == minor_gcd_factors(rows)


# -- determinants -----------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
)
def test_det_matches_laplace(rows):
    assert mat(rows).det() == laplace_det(rows)


def test_det_rejects_rectangular():
    with pytest.raises(ValueError):
        mat([[1, 2, 3], [4, 5, 6]]).det()


# -- rational solving -------------------------------------------------


def test_solve_rational_example():
    # Id minus twice a cyclic shift, the size-3 case
    a = mat([[1, 0, -2], [-2, 1, 0], [0, -2, 1]])
    x = solve_rational(a, (1, -1, 0))
    assert x == (Fraction(3, 7), Fraction(-1, 7), Fraction(-2, 7))
    assert a.apply_fractions(x) == (1, -1, 0)


def test_solve_rational_singular():
    with pytest.raises(SingularMatrix):
        solve_rational(mat([[1, 2], [2, 4]]), (1, 0))


@settings(max_examples=100, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.lists(
                st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            ),
            st.lists(st.integers(-9, 9), min_size=n, max_size=n),
        )
    )
)
def test_solve_rational_roundtrip(case):
    rows, rhs = case
    a = mat(rows)
    if a.det() == 0:
        with pytest.raises(SingularMatrix):
            solve_rational(a, rhs)
        return
    x = solve_rational(a, rhs)
    assert a.apply_fractions(x) == tuple(rhs)


def test_inverse_unimodular():
    u = mat([[1, 2], [2, 5]])
    assert (u @ inverse_unimodular(u)).is_identity()
    with pytest.raises(ValueError):
        inverse_unimodular(mat([[2, 0], [0, 1]]))


# -- primitive part ---------------------------------------------------


def test_primitive_part_fractions():
    u, num, den = primitive_part((Fraction(3, 7), Fraction(-1, 7), Fraction(-2, 7)))
    assert (u, num, den) == ((3, -1, -2), 1, 7)


def test_primitive_part_integers():
    assert primitive_part((2, 4, 6)) == ((1, 2, 3), 2, 1)


def test_primitive_part_negative():
    assert primitive_part((Fraction(-1, 2),)) == ((-1,), 1, 2)


def test_primitive_part_zero():
    with pytest.raises(ZeroVector):
        primitive_part((0, 0))


def test_primitive_part_rejects_floats():
    with pytest.raises(TypeError):
        primitive_part((0.5, 1.0))


@settings(max_examples=100, deadline=None)
@given(
    st.lists(
        st.fractions(
            min_value=-20, max_value=20, max_denominator=12
        ),
        min_size=1,
        max_size=4,
    )
)
def test_primitive_part_reconstructs(vec):
    if all(x == 0 for x in vec):
        return
    u, num, den = primitive_part(vec)
    from math import gcd

    assert gcd(*(abs(x) for x in u)) == 1
    assert num > 0 and den > 0 and gcd(num, den) == 1
    assert [Fraction(num, den) * x for x in u] == list(vec)


# -- cokernels --------------------------------------------------------


def test_cokernel_diag():
    g = cokernel(mat([[2, 0], [0, 3]]))
    assert g.invariant_factors == (6,)
    assert g.free_rank == 0
    assert g.order == 6


def test_cokernel_zero_matrix():
    g = cokernel(IntMatrix.zeros(2, 2))
    assert g.invariant_factors == ()
    assert g.free_rank == 2


def test_cokernel_rank_one_example():
    # 1x1 relation matrix (-5), e.g. -(q+1) at q=4
    g = cokernel(mat([[-5]]))
    assert g.invariant_factors == (5,)


def test_cokernel_classes():
    g = cokernel(mat([[2, 0], [0, 3]]))
    assert g.is_identity((2, 0))
    assert g.is_identity((0, 3))
    assert g.is_identity((4, -3))
    assert g.order_of((1, 0)) == 2
    assert g.order_of((0, 1)) == 3
    assert g.order_of((1, 1)) == 6
    assert g.class_of((0, 0)) == (0,)


def test_cokernel_generators_span():
    g = cokernel(mat([[4, 0, 1], [0, 6, 1], [0, 0, 2]]))
    assert g.generators is not None
    for gen, d in zip(g.generators, g.invariant_factors):
        assert g.order_of(gen) == d
    whole = subgroup_image(g, g.generators)
    assert whole.invariant_factors == g.invariant_factors


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_cokernel_lattice_maps_to_identity(rows):
    a = mat(rows)
    g = cokernel(a)
    for j in range(a.ncols):
        assert g.is_identity(a.col(j))
    if g.free_rank == 0 and a.nrows == a.ncols:
        assert g.order == abs(a.det())


# -- subgroups --------------------------------------------------------


def test_subgroup_image_empty():
    g = cokernel(mat([[2, 0], [0, 3]]))
    assert subgroup_image(g, []).is_trivial


def test_subgroup_image_whole_and_parts():
    g = cokernel(mat([[2, 0], [0, 3]]))
    assert subgroup_image(g, [(1, 0), (0, 1)]).invariant_factors == (6,)
    assert subgroup_image(g, [(1, 0)]).invariant_factors == (2,)
    assert subgroup_image(g, [(0, 1)]).invariant_factors == (3,)
    assert subgroup_image(g, [(1, 1)]).invariant_factors == (6,)


def test_subgroup_image_cyclic_ambient():
    g = cokernel(mat([[-5]]))
    assert subgroup_image(g, [(1,)]).invariant_factors == (5,)
    assert subgroup_image(g, [(5,)]).is_trivial


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2), min_size=2, max_size=2),
    st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2), min_size=0, max_size=3),
)
def test_subgroup_image_lagrange(rows, gens):
    a = mat(rows)
    if a.det() == 0:
        return
    g = cokernel(a)
    sub = subgroup_image(g, gens)
    assert g.order % sub.order == 0


# -- kernels modulo moduli --------------------------------------------


def test_kernel_mod_zero_matrix_is_whole_product():
    g = kernel_mod(IntMatrix.zeros(1, 2), (2, 3))
    assert g.invariant_factors == (6,)
    g = kernel_mod(IntMatrix.zeros(1, 2), (2, 4))
    assert g.invariant_factors == (2, 4)


def test_kernel_mod_primitive_column_is_trivial():
    g = kernel_mod(IntMatrix.from_columns([(3, -1, -2)]), (7,))
    assert g.is_trivial


def test_kernel_mod_two_column_example():
    # columns lambda_1, lambda_2 with a single shared modulus 7: the
    # solutions are e_2 = 4 e_1, a cyclic group of order 7
    a = IntMatrix.from_columns([(3, -1, -2), (1, 2, -3)])
    g = kernel_mod(a, (7, 7))
    assert g.invariant_factors == (7,)
    (gen,) = g.generators
    assert gen[1] % 7 == (4 * gen[0]) % 7
    assert any(gen)
    # the generator really solves the congruence
    assert all(x % 7 == 0 for x in a.apply(gen))


def test_kernel_mod_unit_moduli():
    g = kernel_mod(IntMatrix.zeros(2, 2), (1, 1))
    assert g.is_trivial


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.lists(st.integers(-5, 5), min_size=2, max_size=2), min_size=1, max_size=3),
    st.lists(st.integers(1, 6), min_size=2, max_size=2),
)
def test_kernel_mod_generators_solve(rows, mods):
    from math import lcm

    a = mat(rows)
    big = lcm(*mods)
    # force classwise well-definedness: scale column j by big // mods[j]
    scaled = IntMatrix.from_columns(
        [tuple(x * (big // mods[j]) for x in a.col(j)) for j in range(a.ncols)]
    )
    g = kernel_mod(scaled, mods)
    for gen in g.generators or ():
        assert all(x % big == 0 for x in scaled.apply(gen))
    # order histogram sanity on small cases
    if g.invariant_factors and g.order <= 64:
        hist = histogram_of_factors(g.invariant_factors)
        assert sum(hist.values()) == g.order
