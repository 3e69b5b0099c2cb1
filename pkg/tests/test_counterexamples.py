import pytest

from kronlift.counterexamples import (
    SQRT2,
    canonical_lift,
    extended_lift_problem,
    kro_solution,
    kro_system,
    kro_system_rank_check,
    kro_witness_consistent,
    lift_tuple,
    lowerbound_instance,
    paper_chart_images,
    torus_lift,
    torus_nonlift_instance,
    torus_nonlift_sweep,
    verify_no_lift_bounded,
)
from kronlift.exactlin import inverse_K, mat_vec
from kronlift.gentest import generates, generates_torus, redundancy_rank
from kronlift.group import GroupElement, GroupShape, apply_chart
from kronlift.lifting import lift_generators, verify_witness

a = SQRT2.gen()


@pytest.mark.parametrize("n, m", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)])
def test_instance_invariants(n, m):
    inst = lowerbound_instance(n, m)
    assert len(inst.h_tuple) == 2 * n + m + 1 == redundancy_rank(inst.source_shape) - 1
    assert generates(list(inst.h_tuple), inst.target_shape)
    for g, h in zip(canonical_lift(inst), inst.h_tuple):
        assert apply_chart(inst.quotient, g) == h


def test_smallest_instance():
    inst = lowerbound_instance(0, 0)
    assert inst.source_shape == GroupShape(1, 0) and inst.target_shape == GroupShape(0, 1)
    assert inst.h_tuple == (GroupElement(GroupShape(0, 1), [a]),)


def test_no_lift_small_bounds():
    assert verify_no_lift_bounded(lowerbound_instance(0, 0), 10)
    assert verify_no_lift_bounded(lowerbound_instance(1, 0), 3)
    assert verify_no_lift_bounded(lowerbound_instance(0, 1), 3)


def test_one_more_generator_lifts():
    inst = lowerbound_instance(1, 0)
    p = extended_lift_problem(inst)
    w = lift_generators(p)
    assert verify_witness(p, w)


def test_lifts_are_lifts():
    inst = lowerbound_instance(1, 1)
    lifted = lift_tuple(inst, [2, -1], [3, 0])
    for g, h in zip(lifted, inst.h_tuple):
        assert apply_chart(inst.quotient, g) == h


def test_kro_system_shape():
    rows, width = kro_system(1, 1, [0, 0], [0, 0])
    assert len(rows) == 4 and width == 5
    rows, width = kro_system(0, 0, [0], [])
    assert rows == [] and width == 1
    assert kro_system_rank_check(0, 0, [0], [])


@pytest.mark.parametrize("params", [
    (1, 0, [0, 0], [0]),
    (1, 0, [3, -2], [5]),
    (0, 1, [1], [-4]),
    (1, 1, [2, -1], [3, 1]),
    (2, 1, [-1, 2, 0], [1, -1, 2]),
])
def test_kro_system_always_has_lambda(params):
    n, m, k, l = params
    lam, r = kro_solution(n, m, k, l)
    assert any(lam)
    assert kro_witness_consistent(n, m, k, l)


def test_chart_images_match_inverse():
    # Psi has columns e-lifts, torus units and the x lift; Psi^-1 y-lifts are the chart images
    n, m, k, l = 1, 1, [2, -3], [4, 1]
    one, zero = SQRT2.one(), SQRT2.zero()
    psi = [
        [one, zero, zero],
        [zero, one, zero],
        [SQRT2(k[1]), zero, a + k[0]],
    ]
    inv = inverse_K(psi)
    ys = [[a, zero, SQRT2(l[0])], [zero, a, SQRT2(l[1])]]
    images = paper_chart_images(n, m, k, l)
    for y, img in zip(ys, images):
        assert GroupElement(GroupShape(0, 3), mat_vec(inv, y)) == img
    assert not generates_torus(images, 3)


def test_torus_instance():
    delta, gs = torus_nonlift_instance(2)
    assert len(delta) == 2 and len(gs) == 1
    assert generates(gs + delta, GroupShape(0, 2))
    delta, gs = torus_nonlift_instance(1)
    assert gs == [] and not generates_torus(gs, 1, SQRT2)


def test_torus_sweep_small():
    s = torus_nonlift_sweep(2, 5)
    assert s.checked == 121 and s.failures == 0
    assert s.exact_checked == 121 and s.exact_generating == 0


def test_torus_lift_has_witness():
    lifted = torus_lift(3, [(1, 2, 3), (0, -1, 4)])
    v = generates_torus(lifted, 3)
    assert not v
