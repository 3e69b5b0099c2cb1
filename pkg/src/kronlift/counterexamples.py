"""Explicit families of generating tuples that admit no generating lift.

``lowerbound_instance(n, m)``: the quotient ``R^(n+1) x T^m -> R^n x T^(m+1)``
that folds the last vector coordinate onto a circle, with a generating
tuple of length ``2n + m + 1`` downstairs.  Coordinates of the source are
ordered ``(R^n, R_last, T^m)`` and of the target ``(R^n, T^m, T_last)``.

``torus_nonlift_instance(n)``: ``Delta = <sqrt2 e_i>`` is dense in ``T^n``
but no ``n - 1`` of its elements generate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import InternalVerificationFailed, InputError
from .exactlin import kernel_K
from .gentest import generates, generates_torus, witness_is_valid
from .group import GroupElement, GroupShape, QuotientChart, apply_chart
from .lifting import LiftProblem
from .numfield import make_field

SQRT2 = make_field([-2, 0, 1], (1, 2))


def _root2():
    return SQRT2.gen()


@dataclass(frozen=True)
class LowerBoundInstance:
    n: int
    m: int
    source_shape: GroupShape
    target_shape: GroupShape
    quotient: QuotientChart
    h_tuple: tuple


def _source_index(n, m, i):
    """Source position of target coordinate ``i``."""
    if i < n:
        return i
    if i < n + m:
        return i + 1
    return n


def lowerbound_instance(n: int, m: int) -> LowerBoundInstance:
    if n < 0 or m < 0:
        raise InputError("n and m must be nonnegative")
    K = SQRT2
    zero, one, r2 = K.zero(), K.one(), _root2()
    src, tgt = GroupShape(n + 1, m), GroupShape(n, m + 1)
    D = n + m + 1
    perm = tuple(
        tuple(one if j == _source_index(n, m, i) else zero for j in range(D)) for i in range(D)
    )
    chart = QuotientChart(src, tgt, perm)

    def vec(pos, val):
        v = [zero] * D
        v[pos] = val
        return v

    hs = [GroupElement(tgt, vec(i, one)) for i in range(n)]
    hs += [GroupElement(tgt, vec(i, r2)) for i in range(n + m)]
    hs.append(GroupElement(tgt, vec(D - 1, r2)))
    inst = LowerBoundInstance(n, m, src, tgt, chart, tuple(hs))
    if len(hs) != 2 * (n + 1) + m - 1:
        raise InternalVerificationFailed("tuple has the wrong length")
    if not generates(hs, tgt):
        raise InternalVerificationFailed("h_tuple does not generate the target")
    return inst


def lift_tuple(inst: LowerBoundInstance, k, l) -> list[GroupElement]:
    """The lift with integer freedoms ``k = (k_0..k_n)``, ``l = (l_1..l_{n+m})``
    placed in the last vector coordinate of the source."""
    n, m = inst.n, inst.m
    if len(k) != n + 1 or len(l) != n + m:
        raise InputError("need n+1 values of k and n+m values of l")
    K = SQRT2
    zero, one, r2 = K.zero(), K.one(), _root2()
    D = n + m + 1
    out = []

    def vec(entries):
        v = [zero] * D
        for pos, val in entries:
            v[pos] = v[pos] + val
        return GroupElement(inst.source_shape, v)

    for i in range(n):
        out.append(vec([(i, one), (n, K.rational(k[i + 1]))]))
    for i in range(n + m):
        pos = i if i < n else i + 1
        out.append(vec([(pos, r2), (n, K.rational(l[i]))]))
    out.append(vec([(n, r2 + k[0])]))
    return out


def canonical_lift(inst: LowerBoundInstance) -> list[GroupElement]:
    return lift_tuple(inst, [0] * (inst.n + 1), [0] * (inst.n + inst.m))


def lift_parameters(inst: LowerBoundInstance, bound: int):
    n, m = inst.n, inst.m
    rng = range(-bound, bound + 1)
    for flat in itertools.product(rng, repeat=2 * n + m + 1):
        yield list(flat[: n + 1]), list(flat[n + 1:])


def verify_no_lift_bounded(inst: LowerBoundInstance, bound: int) -> bool:
    """True iff no lift with parameters in ``[-bound, bound]`` generates."""
    if bound < 1:
        raise InputError("bound must be at least 1")
    for k, l in lift_parameters(inst, bound):
        lifted = lift_tuple(inst, k, l)
        if any(apply_chart(inst.quotient, g) != h for g, h in zip(lifted, inst.h_tuple)):
            raise InternalVerificationFailed("parametrized tuple is not a lift")
        if generates(lifted, inst.source_shape):
            return False
    return True


def extended_lift_problem(inst: LowerBoundInstance, extra: GroupElement | None = None) -> LiftProblem:
    """Canonical lifts plus one extra element, with ``Delta`` the kernel of
    the quotient; this has ``2 dim G - dim T`` elements so it lifts."""
    src = inst.source_shape
    K = SQRT2
    if extra is None:
        extra = GroupElement(src, [K.zero()] * src.dim)
    kernel_gen = GroupElement(src, [K.one() if i == inst.n else K.zero() for i in range(src.dim)])
    return LiftProblem(src, canonical_lift(inst) + [extra], [kernel_gen])


def kro_system(n: int, m: int, k_params, l_params):
    """Rows of the homogeneous system in ``(lam_1..lam_{n+m+1}, r_1..r_{n+m})``
    whose solutions are the characters with rational pairings."""
    if len(k_params) != n + 1 or len(l_params) != n + m:
        raise InputError("need n+1 values of k and n+m values of l")
    N = n + m
    width = 2 * N + 1
    k0 = Fraction(k_params[0])
    ks = [Fraction(k_params[i + 1]) if i < n else Fraction(0) for i in range(N)]
    rows = []
    for i in range(N):
        a = [Fraction(0)] * width
        a[i] = Fraction(2)
        a[N + 1 + i] = k0
        a[N] = Fraction(l_params[i])
        b = [Fraction(0)] * width
        b[i] = k0
        b[N] = -ks[i]
        b[N + 1 + i] = Fraction(1)
        rows += [a, b]
    return rows, width


def kro_solution(n: int, m: int, k_params, l_params):
    """A solution with some ``lam`` nonzero, as ``(lam, r)``, or None."""
    rows, width = kro_system(n, m, k_params, l_params)
    N = n + m
    for v in kernel_K(rows, width, Fraction(0)):
        if any(v[: N + 1]):
            return list(v[: N + 1]), list(v[N + 1:])
    return None


def kro_system_rank_check(n: int, m: int, k_params, l_params) -> bool:
    return kro_solution(n, m, k_params, l_params) is not None


def paper_chart_images(n: int, m: int, k_params, l_params) -> list[GroupElement]:
    """Images of the ``y`` lifts in ``T^(n+m+1)`` under the chart whose
    columns are the ``e`` lifts, the torus units and the ``x`` lift."""
    K = SQRT2
    r2 = _root2()
    N = n + m
    shape = GroupShape(0, N + 1)
    k0 = k_params[0]
    denom = (r2 + k0).inverse()
    out = []
    for i in range(N):
        ki = k_params[i + 1] if i < n else 0
        v = [K.zero()] * (N + 1)
        v[i] = r2
        v[N] = (K.rational(l_params[i]) - r2 * ki) * denom
        out.append(GroupElement(shape, v))
    return out


def kro_witness_consistent(n: int, m: int, k_params, l_params) -> bool:
    """The system's solution is a failure certificate for the chart images."""
    sol = kro_solution(n, m, k_params, l_params)
    if sol is None:
        return False
    lam, _ = sol
    ys = paper_chart_images(n, m, k_params, l_params)
    shape = GroupShape(0, n + m + 1)
    witness = tuple(SQRT2.rational(x) for x in lam)
    return (not generates_torus(ys, n + m + 1)) and witness_is_valid(witness, ys, shape)


# --- torus family -----------------------------------------------------------

def torus_nonlift_instance(n: int):
    """``(delta_gens, gs)``: ``sqrt2 e_i`` and ``n - 1`` zeros in ``T^n``."""
    if n < 1:
        raise InputError("n must be positive")
    K = SQRT2
    shape = GroupShape(0, n)
    r2 = _root2()
    delta = [GroupElement(shape, [r2 if i == j else K.zero() for i in range(n)]) for j in range(n)]
    gs = [GroupElement(shape, [K.zero()] * n) for _ in range(n - 1)]
    return delta, gs


def torus_lift(n: int, coeffs) -> list[GroupElement]:
    """``g_i + sum_j coeffs[i][j] * sqrt2 e_j`` for the zero ``g``'s."""
    r2 = _root2()
    shape = GroupShape(0, n)
    return [GroupElement(shape, [r2 * c for c in row]) for row in coeffs]


@dataclass(frozen=True)
class TorusSweep:
    checked: int
    failures: int
    exact_checked: int
    exact_generating: int


def torus_nonlift_sweep(n: int, bound: int, exact_limit: int | None = 2000) -> TorusSweep:
    """Check every coefficient matrix with entries in ``[-bound, bound]``.

    The integer kernel computation runs over all matrices; a lifted tuple
    generates iff that matrix has no nonzero integer kernel vector, so
    ``failures`` counts matrices with no verified character witness.  The
    first ``exact_limit`` matrices (all if None) are also run through the
    exact generation test.
    """
    checked, failures = kernels.torus_lift_sweep(n - 1, n, bound)
    shape = GroupShape(0, n)
    exact = gen = 0
    rng = range(-bound, bound + 1)
    for flat in itertools.product(rng, repeat=(n - 1) * n):
        if exact_limit is not None and exact >= exact_limit:
            break
        coeffs = [flat[i * n:(i + 1) * n] for i in range(n - 1)]
        lifted = torus_lift(n, coeffs)
        v = generates_torus(lifted, n, SQRT2)
        exact += 1
        if v.generates or not witness_is_valid(v.witness, lifted, shape):
            gen += 1
    return TorusSweep(checked, failures, exact, gen)
