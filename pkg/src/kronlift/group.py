"""The ambient groups ``G = R^n x T^m`` with coordinates in a number field.

Everything is computed on the universal cover ``R^D`` (``D = n + m``),
whose deck lattice ``Gamma0`` is spanned by the torus unit vectors.  A
closed subgroup ``A`` is described dually by covectors on the cover::

    A~ = {x : <w, x> = 0 for every vanishing row w,
              <lam, x> in Z for every integral row lam}

and every descriptor contains ``Gamma0`` so that it descends to ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import (
    FieldMismatch,
    InputError,
    NotABasis,
    NotConnected,
    NotRationallyDefined,
    ShapeMismatch,
)
from .exactlin import (
    INFINITE,
    Lattice,
    integer_points_of_span,
    inverse_K,
    kernel_K,
    lattice_from_generators,
    lattice_index,
    mat_vec,
    rank_K,
    snf,
    solve_K,
)
from .numfield import FieldElement, NumberField


@dataclass(frozen=True)
class GroupShape:
    n_free: int
    m_torus: int

    def __post_init__(self):
        if self.n_free < 0 or self.m_torus < 0:
            raise InputError("group dimensions must be nonnegative")

    @property
    def dim(self) -> int:
        return self.n_free + self.m_torus

    @property
    def compact(self) -> bool:
        return self.n_free == 0

    def torus_indices(self) -> range:
        return range(self.n_free, self.dim)

    def __str__(self):
        parts = []
        if self.n_free:
            parts.append(f"R^{self.n_free}")
        if self.m_torus:
            parts.append(f"T^{self.m_torus}")
        return " x ".join(parts) or "1"


def _reduce_mod1(x: FieldElement) -> FieldElement:
    c0 = x.coeffs[0]
    fl = c0.numerator // c0.denominator
    if fl == 0:
        return x
    return FieldElement(x.field, (c0 - fl,) + x.coeffs[1:])


class GroupElement:
    """A point of ``R^n x T^m``; torus coordinates are kept canonically
    reduced (rational part in ``[0, 1)``), which is also the lift used on
    the cover."""

    __slots__ = ("shape", "coords", "_hash")

    def __init__(self, shape: GroupShape, coords):
        coords = tuple(coords)
        if len(coords) != shape.dim:
            raise ShapeMismatch(f"{len(coords)} coordinates for a {shape.dim}-dimensional group")
        n = shape.n_free
        self.shape = shape
        self.coords = coords[:n] + tuple(_reduce_mod1(x) for x in coords[n:])
        self._hash = None

    @property
    def field(self) -> NumberField:
        return self.coords[0].field if self.coords else None

    def lift(self) -> list[FieldElement]:
        return list(self.coords)

    def _check(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.shape != self.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return GroupElement(self.shape, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return GroupElement(self.shape, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return GroupElement(self.shape, [-a for a in self.coords])

    def __rmul__(self, k):
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        return GroupElement(self.shape, [a * k for a in self.coords])

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.shape == other.shape and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.coords))
        return self._hash

    def is_identity(self) -> bool:
        return not any(self.coords)

    def to_json(self) -> dict:
        return {"coords": [x.to_json() for x in self.coords]}

    def __repr__(self):
        return f"GroupElement({self.shape}, ({', '.join(map(str, self.coords))}))"


def make_element(shape: GroupShape, field: NumberField, coords) -> GroupElement:
    """Build an element from anything ``field(...)`` accepts, coordinate-wise."""
    return GroupElement(shape, [field(c) for c in coords])


def identity(shape: GroupShape, field: NumberField) -> GroupElement:
    return GroupElement(shape, [field.zero()] * shape.dim)


def reduce(e: GroupElement) -> GroupElement:
    return GroupElement(e.shape, e.coords)


def add(x: GroupElement, y: GroupElement) -> GroupElement:
    return x + y


def neg(x: GroupElement) -> GroupElement:
    return -x


def int_scale(k: int, e: GroupElement) -> GroupElement:
    return k * e


def p1(e: GroupElement) -> list[FieldElement]:
    """Projection onto the vector factor ``R^n``."""
    return list(e.coords[: e.shape.n_free])


def deck_generators(shape: GroupShape, field: NumberField) -> list[list[FieldElement]]:
    zero, one = field.zero(), field.one()
    return [[one if i == j else zero for i in range(shape.dim)] for j in shape.torus_indices()]


def check_same_shape(xs, shape: GroupShape):
    field = None
    for x in xs:
        if x.shape != shape:
            raise ShapeMismatch(f"element of {x.shape} in a problem over {shape}")
        if x.coords:
            if field is None:
                field = x.field
            elif x.field != field:
                raise FieldMismatch("elements come from different number fields")
    return field


# --- quotient charts --------------------------------------------------------

@dataclass(frozen=True)
class QuotientChart:
    """A K-linear map of covers inducing ``source -> target``.

    ``psi_inverse`` has ``target.dim`` rows and ``source.dim`` columns and
    sends the quotiented lattice (including the source deck lattice) into
    the target deck lattice.  It is square and invertible for the charts of
    ``chart_from_lattice`` and ``complement_subtorus``; quotients by
    positive-dimensional subgroups give rectangular projections.
    """

    source: GroupShape
    target: GroupShape
    psi_inverse: tuple

    def rows(self):
        return [list(r) for r in self.psi_inverse]


def apply_chart(c: QuotientChart, e: GroupElement) -> GroupElement:
    if e.shape != c.source:
        raise ShapeMismatch(f"chart expects {c.source}, got {e.shape}")
    if c.target.dim == 0:
        return GroupElement(c.target, ())
    return GroupElement(c.target, mat_vec(c.psi_inverse, e.lift()))


def identity_chart(shape: GroupShape, field: NumberField) -> QuotientChart:
    zero, one = field.zero(), field.one()
    M = tuple(tuple(one if i == j else zero for j in range(shape.dim)) for i in range(shape.dim))
    return QuotientChart(shape, shape, M)


def chart_from_lattice(E, shape: GroupShape) -> QuotientChart:
    """Chart ``G / <E> -> T^D`` for ``E`` projecting to a basis of ``R^n``.

    The columns of ``Psi`` are the lifts of ``E`` followed by the torus unit
    vectors; ``Psi^-1`` maps ``<E> + Gamma0`` onto ``Z^D``.
    """
    E = list(E)
    n = shape.n_free
    if len(E) != n:
        raise NotABasis(f"{len(E)} elements cannot form a basis of R^{n}")
    field = check_same_shape(E, shape)
    target = GroupShape(0, shape.dim)
    if n == 0:
        if shape.dim == 0:
            return QuotientChart(shape, target, ())
        # torus already: no field needed beyond the unit matrix
        return QuotientChart(shape, target, identity_chart(shape, _field_of(E, field)).psi_inverse)
    if rank_K([p1(e) for e in E], n) != n:
        raise NotABasis("projections to R^n are linearly dependent")
    cols = [e.lift() for e in E] + deck_generators(shape, field)
    psi = [[cols[j][i] for j in range(shape.dim)] for i in range(shape.dim)]
    inv = inverse_K(psi)
    return QuotientChart(shape, target, tuple(tuple(r) for r in inv))


def _field_of(E, field):
    if field is None:
        raise InputError("cannot determine the number field from an empty element list")
    return field


# --- closed subgroup descriptors --------------------------------------------

@dataclass(frozen=True)
class ClosedSubgroupDescriptor:
    shape: GroupShape
    field: NumberField
    vanishing: tuple = ()
    integral: tuple = ()
    _cache: dict = dc_field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vanishing", tuple(tuple(r) for r in self.vanishing))
        object.__setattr__(self, "integral", tuple(tuple(r) for r in self.integral))
        D = self.shape.dim
        for r in self.vanishing + self.integral:
            if len(r) != D:
                raise ShapeMismatch("descriptor row has the wrong length")
        for g in deck_generators(self.shape, self.field):
            if any(mat_vec(self.vanishing, g)) or not all(
                _is_integer(v) for v in mat_vec(self.integral, g)
            ):
                raise InputError("descriptor does not contain the deck lattice")

    @property
    def dim(self) -> int:
        return descriptor_dim(self)

    @property
    def component_count(self):
        return descriptor_components(self)


def _is_integer(x) -> bool:
    if isinstance(x, FieldElement):
        return x.is_rational() and x.coeffs[0].denominator == 1
    return Fraction(x).denominator == 1


def full_group(shape: GroupShape, field: NumberField) -> ClosedSubgroupDescriptor:
    return ClosedSubgroupDescriptor(shape, field)


def _all_rows(d: ClosedSubgroupDescriptor):
    return [list(r) for r in d.vanishing + d.integral]


def descriptor_dim(d: ClosedSubgroupDescriptor) -> int:
    if "dim" not in d._cache:
        rows = _all_rows(d)
        d._cache["dim"] = d.shape.dim - rank_K(rows, d.shape.dim)
    return d._cache["dim"]


def _primal(d: ClosedSubgroupDescriptor):
    """``(S, F, M)``: the preimage of ``d`` on the cover is ``span(S) + Z F``
    and ``M`` is the image lattice of ``<lam, .>`` on it."""
    if "primal" in d._cache:
        return d._cache["primal"]
    D = d.shape.dim
    zero = d.field.zero()
    S = kernel_K(_all_rows(d), D, zero)
    kerW = kernel_K([list(r) for r in d.vanishing], D, zero)
    lam = [list(r) for r in d.integral]
    r = len(lam)
    if r == 0:
        res = (S, [], Lattice(0, ()))
    else:
        # image of ker W under the integral covectors, as a K-span in K^r
        images = [mat_vec(lam, v) for v in kerW]
        M = integer_points_of_span(images, r, zero) if images else Lattice(r, ())
        F = []
        if M.basis:
            A = [[images[j][i] for j in range(len(kerW))] for i in range(r)]
            for z in M.basis:
                t = solve_K(A, [d.field.rational(zi) for zi in z], len(kerW), zero)
                f = [sum((t[j] * kerW[j][k] for j in range(len(kerW))), zero) for k in range(D)]
                F.append(f)
        res = (S, F, M)
    d._cache["primal"] = res
    return res


def identity_component_span(d: ClosedSubgroupDescriptor) -> list:
    """K-basis of the subspace of the cover whose image is the identity
    component."""
    return [list(v) for v in _primal(d)[0]]


def descriptor_components(d: ClosedSubgroupDescriptor):
    """``[A : A0]``; ``INFINITE`` when ``A / A0`` has a free part."""
    if "components" not in d._cache:
        _, _, M = _primal(d)
        if not d.integral:
            d._cache["components"] = 1
        else:
            lam = [list(r) for r in d.integral]
            gens = []
            for g in deck_generators(d.shape, d.field):
                gens.append([int(v.coeffs[0]) for v in mat_vec(lam, g)])
            sub = lattice_from_generators(gens, len(lam))
            d._cache["components"] = lattice_index(sub, M)
    return d._cache["components"]


def cover_contains(d: ClosedSubgroupDescriptor, x) -> bool:
    if d.vanishing and any(mat_vec(d.vanishing, x)):
        return False
    return all(_is_integer(v) for v in mat_vec(d.integral, x)) if d.integral else True


def descriptor_contains(d: ClosedSubgroupDescriptor, e: GroupElement) -> bool:
    if e.shape != d.shape:
        raise ShapeMismatch(f"{e.shape} vs {d.shape}")
    return cover_contains(d, e.lift())


def descriptor_subset(d1: ClosedSubgroupDescriptor, d2: ClosedSubgroupDescriptor) -> bool:
    """Whether ``d1`` is contained in ``d2``."""
    if d1.shape != d2.shape:
        raise ShapeMismatch(f"{d1.shape} vs {d2.shape}")
    S, F, _ = _primal(d1)
    rows2 = _all_rows(d2)
    for s in S:
        if rows2 and any(mat_vec(rows2, s)):
            return False
    return all(cover_contains(d2, f) for f in F)


def descriptor_equal(d1: ClosedSubgroupDescriptor, d2: ClosedSubgroupDescriptor) -> bool:
    return descriptor_subset(d1, d2) and descriptor_subset(d2, d1)


def is_full_group(d: ClosedSubgroupDescriptor) -> bool:
    return descriptor_dim(d) == d.shape.dim


def dual_descriptor(shape: GroupShape, field: NumberField, gens, subspace=()) -> ClosedSubgroupDescriptor:
    """Descriptor of the closure of ``span_R(subspace) + Z gens`` on the cover.

    The annihilator ``{c : <c, s> = 0, <c, g> in Z}`` is computed exactly:
    its real part is a kernel, its discrete part comes from the integer
    points of the K-rational column space of the pairing matrix.  The
    double annihilator is the closure.
    """
    D = shape.dim
    zero = field.zero()
    one = field.one()
    gens = [list(g) for g in gens]
    subspace = [list(s) for s in subspace]
    if subspace:
        B = kernel_K(subspace, D, zero)
    else:
        B = [[one if i == j else zero for j in range(D)] for i in range(D)]
    p = len(B)
    if p == 0:
        return ClosedSubgroupDescriptor(shape, field)

    def covector(t):
        return [sum((t[i] * B[i][k] for i in range(p) if t[i]), zero) for k in range(D)]

    if not gens:
        return ClosedSubgroupDescriptor(shape, field, vanishing=B)
    Z = [mat_vec(B, g) for g in gens]  # Z[j][i] = <b_i, g_j>
    N = len(gens)
    vanishing = [covector(t) for t in kernel_K(Z, p, zero)]
    Zt = [[Z[j][i] for j in range(N)] for i in range(p)]
    M = integer_points_of_span(Zt, N, zero)
    integral = []
    for z in M.basis:
        t = solve_K(Z, [field.rational(v) for v in z], p, zero)
        integral.append(covector(t))
    return ClosedSubgroupDescriptor(shape, field, vanishing=vanishing, integral=integral)


def normalize(d: ClosedSubgroupDescriptor) -> ClosedSubgroupDescriptor:
    """Re-derive the descriptor from its primal generators.

    The result has independent rows and its covectors generate the full
    annihilator, which ``quotient_chart`` relies on.
    """
    S, F, _ = _primal(d)
    gens = F + deck_generators(d.shape, d.field)
    return dual_descriptor(d.shape, d.field, gens, subspace=S)


def connected_component(d: ClosedSubgroupDescriptor) -> ClosedSubgroupDescriptor:
    S, _, _ = _primal(d)
    return dual_descriptor(d.shape, d.field, deck_generators(d.shape, d.field), subspace=S)


def quotient_chart(d: ClosedSubgroupDescriptor, normalized: bool = False) -> QuotientChart:
    """Chart ``G / A -> R^l x T^r`` given by ``x -> (W x, Lam x mod 1)``."""
    if not normalized:
        d = normalize(d)
    target = GroupShape(len(d.vanishing), len(d.integral))
    return QuotientChart(d.shape, target, d.vanishing + d.integral)


def complement_subtorus(d: ClosedSubgroupDescriptor) -> QuotientChart:
    """Split a torus as ``A x B`` for a connected closed subgroup ``A``.

    Returns a unimodular chart ``T^D -> T^D`` whose first ``dim A`` target
    coordinates parametrize ``A`` and whose remaining ones parametrize a
    complementary subtorus ``B`` (the projection ``q : G -> B``).
    """
    shape = d.shape
    if shape.n_free:
        raise ShapeMismatch("complement_subtorus needs a pure torus")
    if descriptor_components(d) != 1:
        raise NotConnected("subgroup is not connected")
    D = shape.dim
    s = descriptor_dim(d)
    rows = _all_rows(d)
    zero = d.field.zero()
    # integer points of the subspace {x : rows x = 0}
    if rows:
        L = integer_points_of_span(kernel_K(rows, D, zero), D, zero) if s else Lattice(D, ())
    else:
        L = lattice_from_generators([[int(i == j) for j in range(D)] for i in range(D)], D)
    if L.rank != s:
        raise NotRationallyDefined("identity component is not spanned by integer vectors")
    basis = L.rows()
    if s:
        _, Usnf, V = snf(basis, D)
        # V^-1 is unimodular with first s rows spanning L; swap those rows for L's basis
        Vinv = inverse_K([[Fraction(x) for x in r] for r in V])
        completed = basis + [[int(x) for x in r] for r in Vinv[s:]]
    else:
        completed = [[int(i == j) for j in range(D)] for i in range(D)]
    psi = [[d.field.rational(completed[j][i]) for j in range(D)] for i in range(D)]
    inv = inverse_K(psi)
    return QuotientChart(shape, shape, tuple(tuple(r) for r in inv))


def is_unimodular_chart(c: QuotientChart) -> bool:
    rows = c.rows()
    if len(rows) != c.source.dim or any(len(r) != c.source.dim for r in rows):
        return False
    if not all(x.is_rational() and x.coeffs[0].denominator == 1 for r in rows for x in r):
        return False
    from .exactlin import integer_det

    return abs(integer_det([[int(x.coeffs[0]) for x in r] for r in rows])) == 1


__all__ = [
    "INFINITE",
    "GroupShape",
    "GroupElement",
    "QuotientChart",
    "ClosedSubgroupDescriptor",
    "make_element",
    "identity",
    "reduce",
    "add",
    "neg",
    "int_scale",
    "p1",
    "deck_generators",
    "apply_chart",
    "identity_chart",
    "chart_from_lattice",
    "full_group",
    "descriptor_dim",
    "descriptor_components",
    "identity_component_span",
    "descriptor_contains",
    "descriptor_subset",
    "descriptor_equal",
    "is_full_group",
    "connected_component",
    "dual_descriptor",
    "normalize",
    "quotient_chart",
    "complement_subtorus",
    "is_unimodular_chart",
]
