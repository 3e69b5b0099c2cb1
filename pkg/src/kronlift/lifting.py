"""Lifting generators through quotients ``G -> G / closure(Delta)``.

Given ``g_1, ..., g_n`` whose images together with ``Delta`` are dense,
find ``delta_i`` in ``Delta`` (as explicit integer combinations of the
given generators of ``Delta``) such that the ``g_i + delta_i`` generate
``G``.  The pipeline:

1. pick ``l`` of the ``g``'s projecting to a lattice basis of the quotient
   and ``dim H`` others generating what is left of it;
2. perturb ``n_free`` of the ``g``'s by ``N * eps`` (``eps`` drawn from
   ``Delta``) until their projections to ``R^n`` are a basis;
3. divide by the resulting lattice and fix the remaining torus part.

Every answer is verified exactly before it is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    GreedyExtensionFailed,
    InternalVerificationFailed,
    NotDense,
    PreconditionViolated,
    RankTooSmall,
    SelectionFailed,
)
from .exactlin import det_K, rank_K
from .gentest import closure, generates, generates_torus
from .group import (
    GroupElement,
    GroupShape,
    apply_chart,
    chart_from_lattice,
    check_same_shape,
    complement_subtorus,
    connected_component,
    descriptor_components,
    descriptor_dim,
    descriptor_equal,
    identity,
    normalize,
    p1,
    quotient_chart,
)
from .numfield import QQ


@dataclass(frozen=True)
class LiftProblem:
    shape: GroupShape
    gs: tuple
    delta_gens: tuple

    def __post_init__(self):
        object.__setattr__(self, "gs", tuple(self.gs))
        object.__setattr__(self, "delta_gens", tuple(self.delta_gens))
        check_same_shape(self.gs + self.delta_gens, self.shape)

    @property
    def field(self):
        return check_same_shape(self.gs + self.delta_gens, self.shape) or QQ


@dataclass(frozen=True)
class LiftWitness:
    """``lifted[i] = gs[i] + sum_j delta_coeffs[i][j] * delta_gens[j]``."""

    delta_coeffs: tuple
    lifted: tuple

    def to_json(self, lifted_generates: bool | None = None) -> dict:
        out = {"delta_coeffs": [list(r) for r in self.delta_coeffs]}
        if lifted_generates is not None:
            out["lifted_generates"] = lifted_generates
        return out


def combine(delta_gens, coeffs, shape: GroupShape, field) -> GroupElement:
    """The element ``sum_j coeffs[j] * delta_gens[j]``."""
    out = identity(shape, field)
    for c, y in zip(coeffs, delta_gens):
        if c:
            out = out + c * y
    return out


def apply_coeffs(gs, delta_gens, coeffs, shape: GroupShape, field) -> tuple:
    return tuple(g + combine(delta_gens, row, shape, field) for g, row in zip(gs, coeffs))


def _unit(k, j):
    return tuple(int(i == j) for i in range(k))


def _zero(k):
    return (0,) * k


def _quotient_data(delta_gens, shape, field):
    """Normalized closure of ``Delta`` and its quotient chart."""
    C = normalize(closure(delta_gens, shape, field))
    return C, quotient_chart(C, normalized=True)


# --- lattice part -----------------------------------------------------------

def lift_basis(xs, delta_gens, shape: GroupShape, field=None) -> LiftWitness:
    """Perturb ``n_free`` elements by ``Delta`` until they span a lattice.

    The first ``l`` elements (``l`` the vector rank of ``G / closure(Delta)``)
    must already project to a lattice basis there; they are left alone.
    The others are moved by ``N * eps_j`` with ``eps_j`` chosen greedily
    among the generators of ``Delta`` and ``N`` doubled until the
    projections to ``R^n`` are independent.
    """
    xs, delta_gens = list(xs), list(delta_gens)
    field = check_same_shape(xs + delta_gens, shape) or field or QQ
    n, r = shape.n_free, len(delta_gens)
    if len(xs) != n:
        raise PreconditionViolated(f"lift_basis needs exactly {n} elements, got {len(xs)}")
    C, chart = _quotient_data(delta_gens, shape, field)
    ell = chart.target.n_free
    W = [list(row) for row in C.vanishing]
    if ell and rank_K([[sum((w[i] * x.coords[i] for i in range(shape.dim)), field.zero())
                        for w in W] for x in xs[:ell]], ell) != ell:
        raise PreconditionViolated("leading elements do not project to a lattice basis of the quotient")

    basis = [p1(x) for x in xs[:ell]]
    if rank_K(basis, n) != len(basis):
        raise PreconditionViolated("leading elements are not independent in R^n")
    eps = []
    for t, y in enumerate(delta_gens):
        if len(basis) == n:
            break
        cand = basis + [p1(y)]
        if rank_K(cand, n) == len(cand):
            basis, eps = cand, eps + [t]
    if len(basis) != n:
        raise GreedyExtensionFailed("generators of Delta do not complete a basis of R^n")

    N = 1
    while True:
        rows = [p1(x) for x in xs[:ell]]
        for j, t in enumerate(eps):
            x, y = p1(xs[ell + j]), p1(delta_gens[t])
            rows.append([a + N * b for a, b in zip(x, y)])
        if not n or not det_K(rows).is_zero():
            break
        N *= 2
    coeffs = [_zero(r)] * ell + [tuple(N * v for v in _unit(r, t)) for t in eps]
    lifted = apply_coeffs(xs, delta_gens, coeffs, shape, field)
    if rank_K([p1(x) for x in lifted], n) != n:
        raise InternalVerificationFailed("lifted elements do not span a lattice")
    return LiftWitness(tuple(coeffs), lifted)


# --- torus part -------------------------------------------------------------

def _generators_of_identity_component(ys, shape, field, target):
    """Indices of an irredundant sublist of ``ys`` whose closure is ``target``."""
    kept = list(range(len(ys)))

    def ok(idx):
        return descriptor_equal(closure([ys[i] for i in idx], shape, field), target)

    if not ok(kept):
        raise SelectionFailed("scaled generators of Delta miss the identity component")
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1:]
        if ok(trial):
            kept = trial
        else:
            i += 1
    return kept


def correct_torus(xs, delta_gens, d: int, field=None) -> LiftWitness:
    """Move ``d`` elements of ``T^d`` by ``Delta`` until they generate.

    Requires ``closure(xs) + closure(Delta) = T^d``.  Keeps ``dim A``
    elements whose multiples generate the identity component of
    ``A = closure(xs)`` and shifts the rest by elements of ``Delta`` whose
    images generate a complement of it.
    """
    shape = GroupShape(0, d)
    xs, delta_gens = list(xs), list(delta_gens)
    field = check_same_shape(xs + delta_gens, shape) or field or QQ
    r = len(delta_gens)
    if len(xs) != d:
        raise PreconditionViolated(f"correct_torus needs exactly {d} elements, got {len(xs)}")
    if not generates_torus(xs + delta_gens, d, field):
        raise NotDense("xs and Delta do not generate the torus together")

    A = closure(xs, shape, field)
    k = descriptor_components(A)
    mA = descriptor_dim(A)
    A0 = connected_component(A)
    I = None
    for cand in itertools.combinations(range(d), mA):
        if descriptor_equal(closure([k * xs[i] for i in cand], shape, field), A0):
            I = cand
            break
    if I is None:
        raise SelectionFailed("no subset of multiples generates the identity component")
    rest = [i for i in range(d) if i not in I]

    Dbar = closure(delta_gens, shape, field)
    ld = descriptor_components(Dbar)
    D0 = connected_component(Dbar)
    scaled = [ld * y for y in delta_gens]
    chosen = _generators_of_identity_component(scaled, shape, field, D0)
    ys = [scaled[t] for t in chosen]
    y_coeffs = [tuple(ld * v for v in _unit(r, t)) for t in chosen]
    while len(ys) < d:
        ys.append(identity(shape, field))
        y_coeffs.append(_zero(r))

    # q : T^d -> B, the last d - dim A coordinates of the splitting chart
    split = complement_subtorus(A0)
    Bshape = GroupShape(0, d - mA)

    def q(x):
        return GroupElement(Bshape, apply_chart(split, x).coords[mA:])

    qs = [q(k * y) for y in ys]
    J = None
    for cand in itertools.combinations(range(len(ys)), d - mA):
        if generates_torus([qs[j] for j in cand], d - mA, field):
            J = cand
            break
    if J is None:
        raise SelectionFailed("no subset of Delta projects onto the complement")

    coeffs = [_zero(r)] * d
    for i, j in zip(rest, J):
        coeffs[i] = y_coeffs[j]
    lifted = apply_coeffs(xs, delta_gens, coeffs, shape, field)
    if not generates_torus(lifted, d, field):
        raise SelectionFailed("corrected elements do not generate the torus")
    return LiftWitness(tuple(coeffs), lifted)


# --- full pipeline ----------------------------------------------------------

def lift_bound(shape: GroupShape) -> int:
    return 2 * shape.n_free + shape.m_torus


def _order(hs, Hshape):
    """Index sets ``(I, J)``: ``I`` projects to a lattice basis of ``H``,
    ``J`` (disjoint, of size ``dim H``) generates what remains."""
    ell = Hshape.n_free
    idx = range(len(hs))
    for I in itertools.combinations(idx, ell):
        if rank_K([p1(hs[i]) for i in I], ell) != ell:
            continue
        others = [i for i in idx if i not in I]
        for J in itertools.combinations(others, Hshape.dim):
            if generates([hs[i] for i in I + J], Hshape):
                return I, J
    raise SelectionFailed("no admissible ordering of the generators")


def lift_generators(p: LiftProblem) -> LiftWitness:
    shape = p.shape
    field = p.field
    gs, delta_gens = list(p.gs), list(p.delta_gens)
    n, r = len(gs), len(delta_gens)
    bound = lift_bound(shape)
    if n < bound:
        raise RankTooSmall(given=n, bound=bound)
    if not generates(gs + delta_gens, shape):
        raise NotDense("the g's together with Delta are not dense")
    if shape.dim == 0:
        return LiftWitness(tuple(_zero(r) for _ in gs), tuple(gs))

    C, chart = _quotient_data(delta_gens, shape, field)
    Hshape = chart.target
    hs = [apply_chart(chart, g) for g in gs]
    I, J = _order(hs, Hshape)
    middle = [i for i in range(n) if i not in I and i not in J]
    order = list(I) + middle + list(J)
    if len(set(order)) != n:
        raise InternalVerificationFailed("ordering is not a permutation")

    k, d = shape.n_free, shape.dim
    ordered = [gs[i] for i in order]
    coeffs = [_zero(r)] * n
    front = lift_basis(ordered[:k], delta_gens, shape, field)
    coeffs[:k] = front.delta_coeffs

    tail = range(n - d, n)
    to_torus = chart_from_lattice(list(front.lifted), shape) if k else None

    def push(x):
        if to_torus is None:
            return x
        return apply_chart(to_torus, x)

    back = correct_torus([push(ordered[i]) for i in tail], [push(y) for y in delta_gens], d, field)
    for pos, i in enumerate(tail):
        coeffs[i] = back.delta_coeffs[pos]

    result = [None] * n
    for pos, i in enumerate(order):
        result[i] = coeffs[pos]
    lifted = apply_coeffs(gs, delta_gens, result, shape, field)
    if not generates(list(lifted), shape):
        raise InternalVerificationFailed("lifted generators do not generate the group")
    return LiftWitness(tuple(result), lifted)


def verify_witness(p: LiftProblem, w: LiftWitness) -> bool:
    """Exact check of coefficient fidelity and generation."""
    if len(w.delta_coeffs) != len(p.gs) or len(w.lifted) != len(p.gs):
        return False
    if any(len(row) != len(p.delta_gens) for row in w.delta_coeffs):
        return False
    expect = apply_coeffs(p.gs, p.delta_gens, w.delta_coeffs, p.shape, p.field)
    return tuple(expect) == tuple(w.lifted) and generates(list(w.lifted), p.shape).generates


def quotient_images_agree(p: LiftProblem, w: LiftWitness) -> bool:
    """Whether every ``lifted[i]`` and ``gs[i]`` have the same image in
    ``G / closure(Delta)``."""
    C, chart = _quotient_data(p.delta_gens, p.shape, p.field)
    return all(apply_chart(chart, a) == apply_chart(chart, b) for a, b in zip(p.gs, w.lifted))
