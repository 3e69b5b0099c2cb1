"""Decision procedures: topological generation, closures and redundancy.

Generation of a torus is Kronecker's criterion: ``x_1, ..., x_k`` generate
``T^d`` iff no nonzero integer character ``m`` has all pairings
``<m, x_j>`` rational.  Since the coordinates live in ``K``, this is the
triviality of an integer kernel of the irrational coefficient components.

Mixed groups ``R^n x T^m`` reduce to the torus case by quotienting out a
lattice spanned by ``n`` of the elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .errors import FieldTooSmall, NotGenerating, ShapeMismatch
from .exactlin import integer_kernel, kernel_K, mat_vec, rank_K, transpose
from .group import (
    ClosedSubgroupDescriptor,
    GroupElement,
    GroupShape,
    apply_chart,
    chart_from_lattice,
    check_same_shape,
    deck_generators,
    dual_descriptor,
    p1,
)
from .numfield import QQ, FieldElement, NumberField


@dataclass(frozen=True)
class GenerationVerdict:
    """Outcome of a generation test.

    On failure ``witness`` is a nonzero covector ``c`` on the cover with
    every pairing ``<c, x_j>`` (and ``<c, deck generator>``) rational; for a
    pure torus it is an integer character.  On success in a mixed group
    ``subset`` lists the indices ``E`` whose span was quotiented out.
    """

    generates: bool
    witness: tuple | None = None
    subset: tuple | None = None
    reason: str | None = None

    def __bool__(self):
        return self.generates


def _field(xs, shape, field=None) -> NumberField:
    f = check_same_shape(xs, shape)
    return f or field or QQ


def _irrational_rows(xs, d):
    rows = []
    for x in xs:
        D = x.coords[0].field.degree if x.coords else 1
        for t in range(1, D):
            row = [x.coords[i].coeffs[t] for i in range(d)]
            if any(row):
                rows.append(row)
    return rows


def torus_character(xs, d):
    """Integer character ``m != 0`` with every ``<m, x_j>`` rational, or None."""
    L = integer_kernel(_irrational_rows(xs, d), d)
    if L.rank == 0:
        return None
    return L.basis[0]


def generates_torus(xs, d: int, field: NumberField | None = None) -> GenerationVerdict:
    shape = GroupShape(0, d)
    xs = list(xs)
    field = _field(xs, shape, field)
    if d == 0:
        return GenerationVerdict(True)
    m = torus_character(xs, d)
    if m is None:
        return GenerationVerdict(True)
    return GenerationVerdict(
        False,
        witness=tuple(field.rational(v) for v in m),
        reason="nonzero integer character with rational pairings",
    )


def _first_basis_subset(xs, n):
    projections = [p1(x) for x in xs]
    for E in itertools.combinations(range(len(xs)), n):
        if rank_K([projections[i] for i in E], n) == n:
            return E
    return None


def generates(xs, shape: GroupShape) -> GenerationVerdict:
    """Decide whether ``xs`` topologically generates ``R^n x T^m``.

    Picks the first ``n`` elements (lexicographically) projecting to a
    basis of ``R^n`` and tests the rest in the torus ``G / <E>``.  The
    choice of ``E`` does not affect the verdict: if ``xs`` generates then
    ``xs \\ E`` generates ``G / <E>`` for every such ``E``.
    """
    xs = list(xs)
    field = _field(xs, shape)
    n = shape.n_free
    if n == 0:
        return generates_torus(xs, shape.m_torus)
    E = _first_basis_subset(xs, n)
    if E is None:
        # a covector on R^n orthogonal to every projection
        proj = [p1(x) for x in xs]
        perp = kernel_K(proj, n, field.zero()) if proj else None
        c = perp[0] if perp else [field.one()] + [field.zero()] * (n - 1)
        c = list(c) + [field.zero()] * shape.m_torus
        return GenerationVerdict(
            False,
            witness=tuple(c),
            reason=f"no {n} elements project to a basis of R^{n}",
        )
    chart = chart_from_lattice([xs[i] for i in E], shape)
    rest = [apply_chart(chart, x) for i, x in enumerate(xs) if i not in E]
    verdict = generates_torus(rest, shape.dim, field)
    if verdict.generates:
        return GenerationVerdict(True, subset=tuple(E))
    # pull the torus character back through the chart
    m = list(verdict.witness)
    c = mat_vec(transpose(chart.rows(), shape.dim), m)
    return GenerationVerdict(False, witness=tuple(c), subset=tuple(E), reason=verdict.reason)


def witness_is_valid(witness, xs, shape: GroupShape) -> bool:
    """Exact check of a failure certificate."""
    if witness is None or not any(witness):
        return False
    field = _field(xs, shape, witness[0].field)
    vectors = [x.lift() for x in xs] + deck_generators(shape, field)
    for v in vectors:
        pairing = sum((a * b for a, b in zip(witness, v)), field.zero())
        if not pairing.is_rational():
            return False
    return True


def closure(xs, shape: GroupShape, field: NumberField | None = None) -> ClosedSubgroupDescriptor:
    """Descriptor of the closure of the subgroup generated by ``xs``."""
    xs = list(xs)
    field = _field(xs, shape, field)
    gens = [x.lift() for x in xs] + deck_generators(shape, field)
    return dual_descriptor(shape, field, gens)


def is_dense_with(xs, delta_gens, shape: GroupShape) -> bool:
    """Whether ``<xs> + Delta`` is dense (G is abelian, so this is
    generation by the union)."""
    return generates(list(xs) + list(delta_gens), shape).generates


def extract_irredundant(xs, shape: GroupShape) -> list:
    """A generating sublist from which no element can be dropped."""
    xs = list(xs)
    if not generates(xs, shape):
        raise NotGenerating("input does not generate the group")
    kept = list(xs)
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1:]
        if generates(trial, shape):
            kept = trial
        else:
            i += 1
    return kept


def is_irredundant(xs, shape: GroupShape) -> bool:
    xs = list(xs)
    if not generates(xs, shape):
        return False
    return all(not generates(xs[:i] + xs[i + 1:], shape) for i in range(len(xs)))


def redundancy_rank(shape: GroupShape) -> int:
    return 2 * shape.n_free + shape.m_torus


def irredundant_witness(shape: GroupShape, field: NumberField) -> list[GroupElement]:
    """An irredundant generating set of size ``2n + m``.

    ``{alpha_t e_i, e_i}`` for every vector factor and ``{alpha_t e_j}`` for
    every circle factor, with ``alpha_t`` running through the powers of the
    primitive element.  The result is verified before it is returned.
    """
    D = field.degree
    if shape.dim and D < 2:
        raise FieldTooSmall("the field has no irrational elements")
    zero, one = field.zero(), field.one()
    out = []
    for factor in range(shape.dim):
        power = 1 + factor % (D - 1) if D > 1 else 0
        alpha = field.element([0] * power + [1])
        unit = [zero] * shape.dim
        unit[factor] = alpha
        out.append(GroupElement(shape, unit))
        if factor < shape.n_free:
            unit = [zero] * shape.dim
            unit[factor] = one
            out.append(GroupElement(shape, unit))
    if not is_irredundant(out, shape):
        raise FieldTooSmall("default construction failed verification")
    return out


# --- floating point cross-check ---------------------------------------------

@dataclass(frozen=True)
class DensityReport:
    """Advisory sampling statistics; never used for decisions.

    ``coverage`` is the minimum, over all nonzero integer characters of
    height at most ``char_height`` (up to sign), of the fraction of the
    ``grid`` bins of the circle hit by the character values of the sampled
    points.  On the circle the only character is the identity, so this is
    plain grid coverage.
    """

    coverage: float
    worst_character: tuple
    samples: int
    grid: int
    per_character: dict = dc_field(default_factory=dict, repr=False)


def _split_float(x: FieldElement):
    """``(p, q, r)`` with ``x = p/q + r`` and ``r`` the float irrational part."""
    c0 = x.coeffs[0]
    irr = FieldElement(x.field, (Fraction(0),) + x.coeffs[1:])
    return c0.numerator, c0.denominator, float(irr) if irr else 0.0


def _characters(d, height):
    seen = []
    for m in itertools.product(range(-height, height + 1), repeat=d):
        if not any(m):
            continue
        first = next(v for v in m if v)
        if first > 0:
            seen.append(m)
    return seen


def density_oracle(xs, shape: GroupShape, samples: int = 10_000, grid: int = 100, seed: int = 0,
                   char_height: int | None = None, word_bound: int = 10**6,
                   box: Fraction | int | None = None) -> DensityReport:
    """Sample random words in ``xs`` and measure equidistribution.

    Only compact directions are sampled; vector coordinates are folded
    modulo ``box`` when it is given and rejected otherwise.
    """
    xs = list(xs)
    d = shape.dim
    if shape.n_free and box is None:
        raise ShapeMismatch("density_oracle needs a box size for non-compact groups")
    if char_height is None:
        char_height = {0: 0, 1: 1, 2: 3, 3: 2}.get(d, 1)
    rng = np.random.default_rng(seed)
    k = len(xs)
    coeffs = rng.integers(-word_bound, word_bound + 1, size=(samples, k), dtype=np.int64)
    points = np.zeros((samples, d))
    for j, x in enumerate(xs):
        for i, c in enumerate(x.coords):
            p, q, r = _split_float(c)
            if i < shape.n_free:
                scale = Fraction(1) / Fraction(box)
                p, q = (Fraction(p, q) * scale).numerator, (Fraction(p, q) * scale).denominator
                r = r * float(scale)
            # exact rational part: (c * p mod q) / q
            rat = ((coeffs[:, j] % q) * (p % q)) % q / q
            points[:, i] += rat + np.mod(coeffs[:, j] * r, 1.0)
    points = np.mod(points, 1.0)
    per = {}
    worst, worst_m = 1.0, ()
    for m in _characters(d, char_height):
        vals = np.mod(points @ np.array(m, dtype=float), 1.0)
        bins = np.minimum((vals * grid).astype(np.int64), grid - 1)
        cov = np.unique(bins).size / grid
        per[m] = cov
        if cov < worst:
            worst, worst_m = cov, m
    if d == 0:
        worst = 1.0
    return DensityReport(worst, worst_m, samples, grid, per)
