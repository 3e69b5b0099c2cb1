import pytest
from hypothesis import given, strategies as st

from kronlift.errors import EmptyModule, InvalidStructure
from kronlift.group import GroupShape
from kronlift.ranks import (
    IsotypicDescriptor,
    LieStructure,
    abelian_structure,
    d_abelian,
    d_abels_noskov,
    d_module,
    d_module_isotypic,
    d_reductive,
    gaschutz_bound,
    gaschutz_rank_abelian,
    redundancy_rank_abelian,
)

shapes = st.builds(GroupShape, st.integers(0, 6), st.integers(0, 6))


@pytest.mark.parametrize("shape, expected", [((2, 0), 4), ((0, 3), 3), ((0, 0), 0)])
def test_redundancy_rank_abelian(shape, expected):
    assert redundancy_rank_abelian(GroupShape(*shape)) == expected


@pytest.mark.parametrize("shape, expected", [((1, 0), 2), ((2, 0), 4), ((0, 7), 1)])
def test_gaschutz_rank_abelian(shape, expected):
    assert gaschutz_rank_abelian(GroupShape(*shape)) == expected


@pytest.mark.parametrize("shape, expected", [((2, 0), 3), ((0, 4), 1), ((0, 0), 0)])
def test_d_abelian(shape, expected):
    assert d_abelian(GroupShape(*shape)) == expected


@pytest.mark.parametrize("mult, dim, expected", [(5, 2, 3), (1, 1, 1), (1, 3, 1), (4, 4, 1)])
def test_d_module_isotypic(mult, dim, expected):
    assert d_module_isotypic(IsotypicDescriptor(mult, 1, dim)) == expected


def test_d_module():
    assert d_module([IsotypicDescriptor(5, 1, 2), IsotypicDescriptor(2, 2, 1)]) == 3
    single = IsotypicDescriptor(7, 4, 3)
    assert d_module([single]) == d_module_isotypic(single)
    assert d_module([IsotypicDescriptor(1, 1, 1), IsotypicDescriptor(1, 2, 5)]) == 1
    with pytest.raises(EmptyModule):
        d_module([])


def test_d_abels_noskov():
    three = [IsotypicDescriptor(5, 1, 2)]
    one = [IsotypicDescriptor(1, 1, 1)]
    assert d_abels_noskov(2, three) == 4
    assert d_abels_noskov(5, one) == 5
    assert d_abels_noskov(2, one) == 2


@pytest.mark.parametrize("args, expected", [((2, 3), 3), ((2, 1), 2), ((0, 0), 0)])
def test_d_reductive(args, expected):
    assert d_reductive(*args) == expected


def test_gaschutz_bound_cases():
    plane = LieStructure(d_G=3, dim_ab=2, dim_T=0, ab_noncompact=True, G_compact=False)
    assert gaschutz_bound(plane).to_json() == {"exact": 4}
    perfect = LieStructure(d_G=2, dim_ab=0, dim_T=0, ab_noncompact=False, G_compact=False)
    assert gaschutz_bound(perfect).to_json() == {"exact": 2}
    residual = LieStructure(d_G=2, dim_ab=3, dim_T=3, ab_noncompact=False, G_compact=False)
    assert gaschutz_bound(residual).to_json() == {"lower": 2, "upper": 3}
    compact = LieStructure(d_G=2, dim_ab=3, dim_T=3, ab_noncompact=False, G_compact=True)
    assert gaschutz_bound(compact).to_json() == {"exact": 2}


def test_invalid_structures():
    with pytest.raises(InvalidStructure):
        LieStructure(d_G=1, dim_ab=1, dim_T=2, ab_noncompact=False, G_compact=False)
    with pytest.raises(InvalidStructure):
        LieStructure(d_G=1, dim_ab=2, dim_T=1, ab_noncompact=False, G_compact=False)
    with pytest.raises(InvalidStructure):
        LieStructure(d_G=1, dim_ab=2, dim_T=1, ab_noncompact=True, G_compact=True)
    with pytest.raises(InvalidStructure):
        IsotypicDescriptor(1, 3, 1)
    with pytest.raises(InvalidStructure):
        IsotypicDescriptor(0, 1, 1)


@given(shapes)
def test_abelian_identities(shape):
    g, d = gaschutz_rank_abelian(shape), d_abelian(shape)
    assert g >= d
    if shape.dim:
        assert (g == d) == (shape.compact or (shape.n_free, shape.m_torus) == (1, 0))
    if not shape.compact:
        assert g == redundancy_rank_abelian(shape)
    if shape.dim:
        assert gaschutz_bound(abelian_structure(shape)).exact == g


@given(st.lists(st.tuples(st.integers(1, 20), st.sampled_from([1, 2, 4]), st.integers(1, 6)), min_size=1, max_size=4),
       st.integers(0, 3))
def test_module_monotone(comps, bump):
    isos = [IsotypicDescriptor(*c) for c in comps]
    bigger = [IsotypicDescriptor(isos[0].multiplicity + bump, isos[0].schur_dim, isos[0].sigma_dim_over_k)] + isos[1:]
    assert d_module(bigger) >= d_module(isos)
    assert d_abels_noskov(0, isos) >= 2
