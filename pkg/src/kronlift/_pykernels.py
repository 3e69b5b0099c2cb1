"""Pure-Python integer kernels.

Reference twin of ``_ckernels.pyx``: the same algorithms on arbitrary
precision ints.  Selected by :mod:`kronlift.kernels` when the compiled
module is missing or when an int64 computation overflows.
"""

import itertools


def hnf_with_transform(rows, ncols):
    """Row Hermite normal form ``H`` and unimodular ``U`` with ``U @ M == H``.

    ``H`` is upper echelon with positive pivots, entries above each pivot
    reduced into ``[0, pivot)``, and zero rows at the bottom.
    """
    m = len(rows)
    H = [list(map(int, r)) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    piv = 0
    for j in range(ncols):
        if piv == m:
            break
        while True:
            best = -1
            for i in range(piv, m):
                v = H[i][j]
                if v and (best < 0 or abs(v) < abs(H[best][j])):
                    best = i
            if best < 0:
                break
            if best != piv:
                H[piv], H[best] = H[best], H[piv]
                U[piv], U[best] = U[best], U[piv]
            p = H[piv][j]
            done = True
            prow, urow = H[piv], U[piv]
            for i in range(piv + 1, m):
                v = H[i][j]
                if v:
                    q = v // p
                    hi, ui = H[i], U[i]
                    for k in range(j, ncols):
                        hi[k] -= q * prow[k]
                    for k in range(m):
                        ui[k] -= q * urow[k]
                    if hi[j]:
                        done = False
            if done:
                break
        if piv < m and H[piv][j]:
            if H[piv][j] < 0:
                H[piv] = [-v for v in H[piv]]
                U[piv] = [-v for v in U[piv]]
            p = H[piv][j]
            prow, urow = H[piv], U[piv]
            for i in range(piv):
                q = H[i][j] // p
                if q:
                    hi, ui = H[i], U[i]
                    for k in range(j, ncols):
                        hi[k] -= q * prow[k]
                    for k in range(m):
                        ui[k] -= q * urow[k]
            piv += 1
    return H, U


def kernel_vector(rows, ncols):
    """A nonzero integer vector killed by the matrix, or None if injective."""
    m = len(rows)
    # HNF of [M^T | I]: rows whose M^T part vanishes carry kernel vectors
    aug = [[rows[i][j] for i in range(m)] + [int(j == k) for k in range(ncols)]
           for j in range(ncols)]
    H, _ = hnf_with_transform(aug, m + ncols)
    for r in H:
        if not any(r[:m]):
            return r[m:]
    return None


def torus_lift_sweep(nrows, ncols, bound):
    """Enumerate all ``nrows x ncols`` integer matrices with entries in
    ``[-bound, bound]``; for each find a kernel vector and verify it.

    Returns ``(checked, failures)`` where a failure is a matrix with no
    verified nonzero kernel vector.
    """
    rng = range(-bound, bound + 1)
    checked = failures = 0
    for flat in itertools.product(rng, repeat=nrows * ncols):
        rows = [flat[i * ncols:(i + 1) * ncols] for i in range(nrows)]
        v = kernel_vector(rows, ncols)
        checked += 1
        if v is None or not any(v):
            failures += 1
            continue
        for r in rows:
            if sum(a * b for a, b in zip(r, v)):
                failures += 1
                break
    return checked, failures
