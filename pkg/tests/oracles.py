"""Independent reference computations used to freeze expected values.

Nothing here calls into the HNF/SNF or kernel code under test: determinants
are plain fraction elimination and lattice questions are answered by
enumerating boxes of integer vectors with numpy.
"""

import itertools
import math
from fractions import Fraction

import numpy as np


def frac_det(M):
    A = [[Fraction(x) for x in r] for r in M]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return det


def int_matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def is_row_hnf(H):
    """Upper echelon, positive pivots, entries above pivots in [0, pivot),
    zero rows last."""
    last = -1
    seen_zero = False
    for i, row in enumerate(H):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        p = nz[0]
        if p <= last or row[p] <= 0:
            return False
        for k in range(i):
            if not 0 <= H[k][p] < row[p]:
                return False
        last = p
    return True


def box(d, height):
    """All integer vectors of sup-norm at most ``height`` as an array."""
    axis = np.arange(-height, height + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * d), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def preimage_mask(B, pts):
    """Rows ``z`` of ``pts`` with ``B z`` integral."""
    den = 1
    for row in B:
        for x in row:
            den = math.lcm(den, Fraction(x).denominator)
    A = np.array([[int(Fraction(x) * den) for x in row] for row in B], dtype=np.int64)
    if A.size == 0:
        return np.ones(len(pts), dtype=bool)
    return np.all((pts @ A.T) % den == 0, axis=1)


def lattice_mask(basis, pts):
    """Rows of ``pts`` lying in the full-rank lattice spanned by ``basis``."""
    d = len(basis)
    det = int(frac_det(basis))
    # z in L  <=>  z adj(B) == 0 mod det, with z = c B
    adj = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(basis) if k != i]
            adj[j][i] = (-1) ** (i + j) * int(frac_det(minor)) if d > 1 else 1
    adj = np.array(adj, dtype=np.int64)
    return np.all((pts @ adj) % det == 0, axis=1)


def irrational_rows(xs, d):
    rows = []
    for x in xs:
        for t in range(1, x.coords[0].field.degree if x.coords else 1):
            rows.append([x.coords[i].coeffs[t] for i in range(d)])
    return rows


def brute_character(xs, d, height):
    """Some integer ``m != 0`` of height at most ``height`` with every
    ``<m, x_j>`` rational, or None.  Pairings are tested coefficientwise."""
    rows = irrational_rows(xs, d)
    pts = box(d, height)
    pts = pts[np.any(pts != 0, axis=1)]
    if not rows:
        return tuple(int(v) for v in pts[0])
    den = 1
    for r in rows:
        for x in r:
            den = math.lcm(den, Fraction(x).denominator)
    A = np.array([[int(Fraction(x) * den) for x in r] for r in rows], dtype=np.int64)
    ok = np.all(pts @ A.T == 0, axis=1)
    hits = pts[ok]
    if not len(hits):
        return None
    return tuple(int(v) for v in hits[0])


def pairing_is_rational(m, x):
    acc = None
    for a, c in zip(m, x.coords):
        term = c * a
        acc = term if acc is None else acc + term
    return acc is None or acc.is_rational()


def subsets(n, k):
    return itertools.combinations(range(n), k)
