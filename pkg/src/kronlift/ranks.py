"""Closed-form generating-rank calculators.

``d`` is the minimal number of topological generators, the redundancy rank
is the largest size of an irredundant generating set and the Gaschütz rank
is the least ``m`` such that generating ``k``-tuples of every quotient lift
for all ``k >= m``.  For general Lie groups ``d`` is an input; only the
abelian case is computed here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyModule, InvalidStructure
from .gentest import redundancy_rank
from .group import GroupShape

SCHUR_DIMS = (1, 2, 4)


@dataclass(frozen=True)
class IsotypicDescriptor:
    """One isotypic component ``sigma^multiplicity`` of a real module.

    ``schur_dim`` is the real dimension of the commutant of ``sigma``
    (1, 2 or 4) and ``sigma_dim_over_k`` the dimension of ``sigma`` over it.
    """

    multiplicity: int
    schur_dim: int
    sigma_dim_over_k: int

    def __post_init__(self):
        if self.schur_dim not in SCHUR_DIMS:
            raise InvalidStructure(f"schur_dim must be one of {SCHUR_DIMS}")
        if self.multiplicity < 1 or self.sigma_dim_over_k < 1:
            raise InvalidStructure("multiplicity and dimension must be positive")


@dataclass(frozen=True)
class LieStructure:
    d_G: int
    dim_ab: int
    dim_T: int
    ab_noncompact: bool
    G_compact: bool

    def __post_init__(self):
        validate(self)


def validate(ls: LieStructure) -> None:
    if min(ls.d_G, ls.dim_ab, ls.dim_T) < 0:
        raise InvalidStructure("counts must be nonnegative")
    if ls.dim_T > ls.dim_ab:
        raise InvalidStructure("the torus of the abelianization cannot exceed it")
    if ls.ab_noncompact != (ls.dim_T < ls.dim_ab):
        raise InvalidStructure("ab_noncompact must mean dim_T < dim_ab")
    if ls.G_compact and ls.ab_noncompact:
        raise InvalidStructure("a compact group has a compact abelianization")


def redundancy_rank_abelian(shape: GroupShape) -> int:
    return redundancy_rank(shape)


def gaschutz_rank_abelian(shape: GroupShape) -> int:
    if shape.compact:
        return 1
    return 2 * shape.dim - shape.m_torus


def d_abelian(shape: GroupShape) -> int:
    if shape.dim == 0:
        return 0
    if shape.compact:
        return 1
    return shape.n_free + 1


def abelian_structure(shape: GroupShape) -> LieStructure:
    return LieStructure(
        d_G=d_abelian(shape),
        dim_ab=shape.dim,
        dim_T=shape.m_torus,
        ab_noncompact=not shape.compact,
        G_compact=shape.compact,
    )


def d_module_isotypic(iso: IsotypicDescriptor) -> int:
    return -(-iso.multiplicity // iso.sigma_dim_over_k)


def d_module(isos) -> int:
    isos = list(isos)
    if not isos:
        raise EmptyModule("a module needs at least one isotypic component")
    return max(d_module_isotypic(i) for i in isos)


def d_abels_noskov(d_L: int, isos) -> int:
    return max(d_L, d_module(isos) + 1)


def d_reductive(d_S: int, d_A: int) -> int:
    return max(d_S, d_A)


@dataclass(frozen=True)
class GaschutzBound:
    lower: int
    upper: int

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    def to_json(self) -> dict:
        if self.exact is not None:
            return {"exact": self.exact}
        return {"lower": self.lower, "upper": self.upper}


def gaschutz_bound(ls: LieStructure) -> GaschutzBound:
    validate(ls)
    excess = 2 * ls.dim_ab - ls.dim_T
    if ls.G_compact:
        return GaschutzBound(ls.d_G, ls.d_G)
    if ls.ab_noncompact:
        v = max(ls.d_G, excess)
        return GaschutzBound(v, v)
    if ls.d_G >= excess:
        return GaschutzBound(ls.d_G, ls.d_G)
    return GaschutzBound(ls.d_G, excess)
