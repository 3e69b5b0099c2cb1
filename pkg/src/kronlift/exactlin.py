"""Exact linear algebra over Q and K, and integer lattice algorithms.

Matrices are plain lists of rows.  The field routines (``rank_K``,
``kernel_K``, ...) work for any entries closed under ``+ - * /`` with an
exact zero test, so the same code serves ``Fraction`` and
:class:`~kronlift.numfield.FieldElement` matrices.

Lattices are always stored by their row Hermite normal form, which makes
equality a plain comparison of bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import NoSolution, NotASublattice, SingularMatrix
from .numfield import FieldElement

INFINITE = math.inf


# --- field linear algebra ---------------------------------------------------

def _is_zero(x) -> bool:
    return not x


def _rref(rows, ncols):
    """Reduced row echelon form; returns (R, pivot columns)."""
    R = [list(r) for r in rows]
    pivots = []
    piv = 0
    m = len(R)
    for j in range(ncols):
        if piv == m:
            break
        sel = None
        for i in range(piv, m):
            if not _is_zero(R[i][j]):
                sel = i
                break
        if sel is None:
            continue
        R[piv], R[sel] = R[sel], R[piv]
        p = R[piv][j]
        if p != 1:
            inv = 1 / p
            R[piv] = [x * inv if not _is_zero(x) else x for x in R[piv]]
        prow = R[piv]
        for i in range(m):
            if i != piv:
                f = R[i][j]
                if not _is_zero(f):
                    R[i] = [a - f * b if not _is_zero(b) else a for a, b in zip(R[i], prow)]
        pivots.append(j)
        piv += 1
    return R, pivots


def _ncols(M, ncols):
    if ncols is not None:
        return ncols
    if not M:
        raise ValueError("cannot infer the column count of an empty matrix")
    return len(M[0])


def rank_K(M, ncols=None) -> int:
    if not M:
        return 0
    _, pivots = _rref(M, _ncols(M, ncols))
    return len(pivots)


def _zero_like(M, zero):
    if zero is not None:
        return zero
    for row in M:
        for x in row:
            if isinstance(x, FieldElement):
                return x.field.zero()
    return Fraction(0)


def kernel_K(M, ncols=None, zero=None):
    """Basis (as rows) of ``{v : M v = 0}``."""
    n = _ncols(M, ncols)
    zero = _zero_like(M, zero)
    one = zero + 1
    if not M:
        return [[one if i == j else zero for j in range(n)] for i in range(n)]
    R, pivots = _rref(M, n)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for r, pc in enumerate(pivots):
            if not _is_zero(R[r][f]):
                v[pc] = -R[r][f]
        basis.append(v)
    return basis


def solve_K(M, b, ncols=None, zero=None):
    """One solution ``x`` of ``M x = b``; raises NoSolution if inconsistent."""
    n = _ncols(M, ncols)
    zero = _zero_like(M, zero)
    if not M:
        return [zero] * n
    aug = [list(r) + [bi] for r, bi in zip(M, b)]
    R, pivots = _rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        raise NoSolution("inconsistent linear system")
    x = [zero] * n
    for r, pc in enumerate(pivots):
        x[pc] = R[r][n]
    return x


def inverse_K(M):
    n = len(M)
    if any(len(r) != n for r in M):
        raise SingularMatrix("inverse of a non-square matrix")
    zero = _zero_like(M, None)
    one = zero + 1
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(M)]
    R, pivots = _rref(aug, 2 * n)
    if [p for p in pivots if p < n] != list(range(n)):
        raise SingularMatrix("matrix is rank deficient")
    return [r[n:] for r in R]


def det_K(M):
    n = len(M)
    zero = _zero_like(M, None)
    A = [list(r) for r in M]
    det = zero + 1
    for j in range(n):
        sel = next((i for i in range(j, n) if not _is_zero(A[i][j])), None)
        if sel is None:
            return zero
        if sel != j:
            A[j], A[sel] = A[sel], A[j]
            det = -det
        p = A[j][j]
        det = det * p
        inv = 1 / p
        for i in range(j + 1, n):
            f = A[i][j]
            if not _is_zero(f):
                f = f * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[j])]
    return det


def mat_mul(A, B):
    Bt = transpose(B)
    return [mat_vec(Bt, row) for row in A]


def mat_vec(A, v):
    out = []
    for row in A:
        acc = None
        for a, x in zip(row, v):
            if _is_zero(a) or _is_zero(x):
                continue
            t = a * x
            acc = t if acc is None else acc + t
        out.append(acc if acc is not None else (row[0] * 0 if row else 0))
    return out


def transpose(M, ncols=None):
    n = _ncols(M, ncols) if M else (ncols or 0)
    return [[M[i][j] for i in range(len(M))] for j in range(n)]


def coeff_expand(M):
    """Split a K-matrix into its power-basis coefficient matrices over Q.

    Component ``t`` holds the ``alpha^t`` coefficients, so for a rational
    vector ``v``: ``M v = 0`` over K iff every component kills ``v``.
    """
    if not M:
        return []
    D = None
    for row in M:
        for x in row:
            D = x.field.degree
            break
        if D is not None:
            break
    if D is None:
        return []
    return [[[x.coeffs[t] for x in row] for row in M] for t in range(D)]


# --- integer matrices -------------------------------------------------------

def hnf(M, ncols=None):
    """Row Hermite normal form: returns ``(H, U)`` with ``U M = H``."""
    if not M:
        return [], []
    return kernels.hnf_with_transform([list(map(int, r)) for r in M], _ncols(M, ncols))


def snf(M, ncols=None):
    """Smith normal form: returns ``(D, U, V)`` with ``U M V = D``."""
    m = len(M)
    n = _ncols(M, ncols) if m else (ncols or 0)
    A = [list(map(int, r)) for r in M]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(dst, src, q):
        # row dst -= q * row src
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def col_op(dst, src, q):
        for r in A:
            r[dst] -= q * r[src]
        for r in V:
            r[dst] -= q * r[src]

    def swap_rows(a, b):
        A[a], A[b] = A[b], A[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for r in A:
            r[a], r[b] = r[b], r[a]
        for r in V:
            r[a], r[b] = r[b], r[a]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    row_op(i, t, A[i][t] // p)
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    col_op(j, t, A[t][j] // p)
                    if A[t][j]:
                        clean = False
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            # fold the offending row in so the next pass lowers the pivot
            row_op(t, bad[0], -1)
        if t < m and t < n and A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return A, U, V


# --- lattices ---------------------------------------------------------------

@dataclass(frozen=True)
class Lattice:
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return lattice_member(self, v)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.basis]


def lattice_from_generators(gens, dim) -> Lattice:
    gens = [list(map(int, g)) for g in gens if any(g)]
    if not gens:
        return Lattice(dim, ())
    H, _ = hnf(gens, dim)
    return Lattice(dim, tuple(tuple(r) for r in H if any(r)))


def full_lattice(dim) -> Lattice:
    return Lattice(dim, tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))


def _clear_row(row):
    den = 1
    for x in row:
        den = math.lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row]


def integer_kernel(Q, d) -> Lattice:
    """Lattice ``{z in Z^d : Q z = 0}`` for a rational (or integer) matrix."""
    rows = [_clear_row(r) for r in Q if any(r)]
    if not rows:
        return full_lattice(d)
    m = len(rows)
    aug = [[rows[i][j] for i in range(m)] + [int(j == k) for k in range(d)] for j in range(d)]
    H, _ = hnf(aug, m + d)
    gens = [r[m:] for r in H if not any(r[:m])]
    return lattice_from_generators(gens, d)


def integer_kernel_K(M, d) -> Lattice:
    """Integer vectors killed by a K-matrix (via the coefficient expansion)."""
    stacked = [row for comp in coeff_expand(M) for row in comp]
    return integer_kernel(stacked, d)


def integer_points_of_span(M, d, zero=None) -> Lattice:
    """``Z^d`` intersected with the K-row space of ``M``."""
    if not M:
        return Lattice(d, ())
    perp = kernel_K(M, d, zero)
    if not perp:
        return full_lattice(d)
    if not isinstance(perp[0][0], FieldElement):
        return integer_kernel(perp, d)
    return integer_kernel_K(perp, d)


def integral_preimage_lattice(B, d) -> Lattice:
    """``{m in Z^d : B m in Z^k}``; always of full rank ``d``."""
    B = [[Fraction(x) for x in row] for row in B]
    L = 1
    for row in B:
        for x in row:
            L = math.lcm(L, x.denominator)
    k = len(B)
    if L == 1 or k == 0:
        return full_lattice(d)
    A = [[int(x * L) for x in row] for row in B]
    # A m + L y = 0 with y integral, projected to the m-coordinates
    system = [A[i] + [L * int(i == j) for j in range(k)] for i in range(k)]
    K = integer_kernel(system, d + k)
    return lattice_from_generators([r[:d] for r in K.basis] + [[L * int(i == j) for j in range(d)]
                                                               for i in range(d)], d)


def lattice_member(L: Lattice, v) -> bool:
    v = [Fraction(x) for x in v]
    if any(x.denominator != 1 for x in v):
        return False
    v = [int(x) for x in v]
    for row in L.basis:
        p = next(j for j, x in enumerate(row) if x)
        if any(v[:p]):
            return False
        if v[p] % row[p]:
            return False
        q = v[p] // row[p]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def lattice_equal(L1: Lattice, L2: Lattice) -> bool:
    return L1.ambient_dim == L2.ambient_dim and L1.basis == L2.basis


def saturate(L: Lattice) -> Lattice:
    """``(Q-span of L) intersected with Z^d``."""
    if not L.basis:
        return L
    return integer_kernel(integer_kernel(L.rows(), L.ambient_dim).rows(), L.ambient_dim)


def lattice_coordinates(L: Lattice, v):
    """Integer coordinates of a member ``v`` with respect to ``L.basis``."""
    v = list(map(int, v))
    coords = []
    for row in L.basis:
        p = next(j for j, x in enumerate(row) if x)
        if any(v[:p]) or v[p] % row[p]:
            raise NotASublattice(f"{v} is not in the lattice")
        q = v[p] // row[p]
        coords.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    if any(v):
        raise NotASublattice("vector is not in the lattice")
    return coords


def lattice_index(sub: Lattice, sup: Lattice):
    """``[sup : sub]``; ``INFINITE`` when the ranks differ."""
    if sub.ambient_dim != sup.ambient_dim:
        raise NotASublattice("ambient dimensions differ")
    coords = [lattice_coordinates(sup, b) for b in sub.basis]
    if sub.rank != sup.rank:
        return INFINITE
    if sub.rank == 0:
        return 1
    D, _, _ = snf(coords, sup.rank)
    return math.prod(D[i][i] for i in range(sub.rank)) or INFINITE


def integer_det(M) -> int:
    if not M:
        return 1
    return int(det_K([[Fraction(x) for x in r] for r in M]))
