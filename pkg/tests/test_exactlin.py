import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kronlift import kernels
from kronlift.errors import NoSolution, NotASublattice, SingularMatrix
from kronlift.exactlin import (
    INFINITE,
    coeff_expand,
    det_K,
    full_lattice,
    hnf,
    integer_kernel,
    integral_preimage_lattice,
    inverse_K,
    kernel_K,
    lattice_coordinates,
    lattice_equal,
    lattice_from_generators,
    lattice_index,
    lattice_member,
    mat_mul,
    mat_vec,
    rank_K,
    saturate,
    snf,
    solve_K,
)

from helpers import SQRT2
from oracles import box, frac_det, int_matmul, is_row_hnf, lattice_mask, preimage_mask

int_matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


def test_rank_and_kernel_over_K():
    a = SQRT2.gen()
    one, zero = SQRT2.one(), SQRT2.zero()
    I3 = [[one if i == j else zero for j in range(3)] for i in range(3)]
    assert rank_K(I3) == 3
    ker = kernel_K([[one, a]], 2, zero)
    assert len(ker) == 1
    v = ker[0]
    assert (one * v[0] + a * v[1]).is_zero()
    # proportional to (-sqrt2, 1)
    assert v[0] * 1 == -a * v[1]


def test_inverse_of_chart_matrix():
    a = SQRT2.gen()
    one, zero = SQRT2.one(), SQRT2.zero()
    for k0 in (-3, 0, 2):
        for k1 in (-1, 4):
            psi = [[one, zero], [SQRT2(k1), a + k0]]
            inv = inverse_K(psi)
            assert inv[1][0] == SQRT2(-k1) / (a + k0)
            assert inv[1][1] == (a + k0).inverse()
            assert mat_mul(inv, psi) == [[one, zero], [zero, one]]


def test_inverse_singular():
    with pytest.raises(SingularMatrix):
        inverse_K([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])


def test_solve_without_solution():
    with pytest.raises(NoSolution):
        solve_K([[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]], [Fraction(0), Fraction(1)])


def test_coeff_expand_examples():
    a = SQRT2.gen()
    assert coeff_expand([[1 + a]]) == [[[1]], [[1]]]
    assert coeff_expand([[a, 2 * a]]) == [[[0, 0]], [[1, 2]]]
    assert coeff_expand([[SQRT2(3), SQRT2(Fraction(1, 2))]]) == [[[3, Fraction(1, 2)]], [[0, 0]]]


def test_hnf_examples():
    H, U = hnf([[2, 4], [1, 1]])
    assert H == [[1, 1], [0, 2]]
    assert int_matmul(U, [[2, 4], [1, 1]]) == H
    H, U = hnf([[1, 0], [0, 1]])
    assert H == [[1, 0], [0, 1]] and U == [[1, 0], [0, 1]]
    H, _ = hnf([[0, 0]])
    assert H == [[0, 0]]


def test_snf_examples():
    assert snf([[2, 0], [0, 3]])[0] == [[1, 0], [0, 6]]
    assert snf([[1, 0], [0, 1]])[0] == [[1, 0], [0, 1]]
    assert snf([[2, 0], [0, 0]])[0] == [[2, 0], [0, 0]]


def test_integral_preimage_examples():
    assert integral_preimage_lattice([[Fraction(1, 2)]], 1).basis == ((2,),)
    assert lattice_equal(integral_preimage_lattice([[1, 0], [0, 1]], 2), full_lattice(2))
    L = integral_preimage_lattice([[Fraction(1, 2), Fraction(1, 3)]], 2)
    assert L.basis == ((2, 0), (0, 3))  # brute force: m1/2 + m2/3 in Z iff 2 | m1 and 3 | m2
    for v in L.basis:
        assert (Fraction(v[0], 2) + Fraction(v[1], 3)).denominator == 1
    pts = box(2, 12)
    assert (lattice_mask(L.rows(), pts) == preimage_mask([[Fraction(1, 2), Fraction(1, 3)]], pts)).all()


def test_lattice_examples():
    assert saturate(lattice_from_generators([[2, 0]], 2)).basis == ((1, 0),)
    assert saturate(lattice_from_generators([[2, 4]], 2)).basis == ((1, 2),)
    assert lattice_index(lattice_from_generators([[2, 0], [0, 2]], 2), full_lattice(2)) == 4
    assert lattice_index(lattice_from_generators([[2, 0]], 2), full_lattice(2)) == INFINITE
    with pytest.raises(NotASublattice):
        lattice_coordinates(lattice_from_generators([[2, 0]], 2), [1, 0])
    L = lattice_from_generators([[3, 1], [0, 5]], 2)
    assert lattice_member(L, [6, 7]) and not lattice_member(L, [1, 0])
    assert not lattice_member(L, [Fraction(1, 2), 0])


def test_integer_kernel():
    L = integer_kernel([[1, 2]], 2)
    assert L.rank == 1 and lattice_member(L, [2, -1])
    assert integer_kernel([], 3).rank == 3
    assert integer_kernel([[1, 0], [0, 1]], 2).rank == 0


@given(int_matrices)
def test_hnf_properties(M):
    ncols = len(M[0])
    H, U = hnf(M, ncols)
    assert int_matmul(U, M) == H
    assert abs(frac_det(U)) == 1
    assert is_row_hnf(H)
    assert hnf(H, ncols)[0] == H
    if len(M) == ncols:
        assert abs(frac_det(M)) == abs(frac_det(H))


@given(int_matrices)
def test_snf_properties(M):
    m, n = len(M), len(M[0])
    D, U, V = snf(M, n)
    assert int_matmul(int_matmul(U, M), V) == D
    assert abs(frac_det(U)) == 1 and abs(frac_det(V)) == 1
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else b % a == 0
    if m == n:
        prod = 1
        for x in diag:
            prod *= x
        assert abs(frac_det(M)) == prod


small_fractions = st.builds(Fraction, st.integers(-8, 8), st.integers(1, 5))


@given(st.lists(st.lists(small_fractions, min_size=3, max_size=3), min_size=1, max_size=3))
def test_rank_nullity(M):
    assert rank_K(M, 3) + len(kernel_K(M, 3, Fraction(0))) == 3
    for v in kernel_K(M, 3, Fraction(0)):
        assert not any(mat_vec(M, v))


def test_inverse_roundtrip_random():
    rng = random.Random(3)
    a = SQRT2.gen()
    for _ in range(30):
        M = [[SQRT2.element([rng.randint(-3, 3), rng.randint(-3, 3)]) for _ in range(3)] for _ in range(3)]
        if det_K(M).is_zero():
            continue
        I = mat_mul(inverse_K(M), M)
        assert all(I[i][j] == (SQRT2.one() if i == j else SQRT2.zero()) for i in range(3) for j in range(3))
    assert a  # field generator is irrational


@pytest.mark.parametrize("seed", range(40))
def test_integral_preimage_vs_brute_force(seed):
    rng = random.Random(seed)
    B = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(2)] for _ in range(2)]
    L = integral_preimage_lattice(B, 2)
    assert L.rank == 2
    pts = box(2, 20)
    assert (lattice_mask(L.rows(), pts) == preimage_mask(B, pts)).all()


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")
