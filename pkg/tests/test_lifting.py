import random

import pytest

from kronlift.errors import NotDense, PreconditionViolated, RankTooSmall
from kronlift.gentest import generates, generates_torus
from kronlift.group import GroupShape
from kronlift.lifting import (
    LiftProblem,
    apply_coeffs,
    correct_torus,
    lift_basis,
    lift_bound,
    lift_generators,
    quotient_images_agree,
    verify_witness,
)
from kronlift.exactlin import rank_K
from kronlift.group import p1

from helpers import CBRT2, SQRT2, el, random_element

T1, T2, R1, R2 = GroupShape(0, 1), GroupShape(0, 2), GroupShape(1, 0), GroupShape(2, 0)
a = SQRT2.gen()


def test_lift_basis_examples():
    w = lift_basis([el(R1, SQRT2, a)], [el(R1, SQRT2, 1)], R1)
    assert w.delta_coeffs == ((1,),)
    assert w.lifted == (el(R1, SQRT2, a + 1),)
    xs = [el(R2, SQRT2, 1, 0), el(R2, SQRT2, 0, 1)]
    assert lift_basis(xs, [], R2).delta_coeffs == ((), ())
    w = lift_basis([el(R2, SQRT2, 1, 0), el(R2, SQRT2, a, 0)], [el(R2, SQRT2, 0, 1)], R2)
    assert w.delta_coeffs == ((0,), (1,))
    assert rank_K([p1(x) for x in w.lifted], 2) == 2


def test_lift_basis_doubles_until_independent():
    # eps = (1, 0) and x_2 = (-1, 0): N = 1 cancels, N = 2 does not
    xs = [el(R2, SQRT2, 0, 1), el(R2, SQRT2, -1, 0)]
    w = lift_basis(xs, [el(R2, SQRT2, 1, 0)], R2)
    assert w.delta_coeffs[1] == (2,)


def test_lift_basis_precondition():
    with pytest.raises(PreconditionViolated):
        lift_basis([], [], R1)


def test_correct_torus_examples():
    w = correct_torus([el(T1, SQRT2, 0)], [el(T1, SQRT2, a)], 1)
    assert w.delta_coeffs == ((1,),) and generates_torus(list(w.lifted), 1)
    xs = [el(T2, SQRT2, a, 0), el(T2, SQRT2, 0, a)]
    assert correct_torus(xs, [el(T2, SQRT2, 0, a)], 2).delta_coeffs == ((0,), (0,))
    xs = [el(T2, SQRT2, a, a), el(T2, SQRT2, 0, 0)]
    w = correct_torus(xs, [el(T2, SQRT2, 0, a)], 2)
    assert w.delta_coeffs == ((0,), (1,))
    assert generates_torus(list(w.lifted), 2)


def test_correct_torus_needs_density():
    with pytest.raises(NotDense):
        correct_torus([el(T1, SQRT2, 0)], [], 1)


def test_lift_generators_examples():
    p = LiftProblem(R1, [el(R1, SQRT2, a), el(R1, SQRT2, 0)], [el(R1, SQRT2, 1)])
    w = lift_generators(p)
    assert w.delta_coeffs == ((0,), (1,))
    assert w.to_json(True) == {"delta_coeffs": [[0], [1]], "lifted_generates": True}
    p = LiftProblem(T1, [el(T1, SQRT2, 0)], [el(T1, SQRT2, a)])
    assert lift_generators(p).delta_coeffs == ((1,),)
    gs = [el(R1, SQRT2, 1), el(R1, SQRT2, a)]
    assert lift_generators(LiftProblem(R1, gs, [])).delta_coeffs == ((), ())


def test_lift_generators_plane():
    gs = [el(R2, SQRT2, 0, 0), el(R2, SQRT2, a, 0), el(R2, SQRT2, 1, 0), el(R2, SQRT2, 0, a)]
    p = LiftProblem(R2, gs, [el(R2, SQRT2, 0, 1)])
    w = lift_generators(p)
    assert verify_witness(p, w) and quotient_images_agree(p, w)


def test_rank_too_small():
    p = LiftProblem(R1, [el(R1, SQRT2, a)], [el(R1, SQRT2, 1)])
    with pytest.raises(RankTooSmall) as info:
        lift_generators(p)
    assert info.value.bound == 2 and info.value.given == 1
    # and no single lift sqrt2 + k generates R
    assert not any(generates([el(R1, SQRT2, a + k)], R1) for k in range(-10, 11))


def test_not_dense():
    with pytest.raises(NotDense):
        lift_generators(LiftProblem(R1, [el(R1, SQRT2, 1), el(R1, SQRT2, 2)], [el(R1, SQRT2, 3)]))


def test_lift_bound():
    assert [lift_bound(s) for s in (R1, T1, R2, GroupShape(1, 1))] == [2, 1, 4, 3]


@pytest.mark.parametrize("shape", [T1, R1, T2, GroupShape(1, 1), R2])
@pytest.mark.parametrize("seed", range(6))
def test_random_problems(shape, seed):
    rng = random.Random(seed * 31 + shape.dim)
    field = rng.choice([SQRT2, CBRT2])
    done = 0
    while done < 3:
        gs = [random_element(rng, shape, field, sparsity=0.6) for _ in range(lift_bound(shape))]
        ds = [random_element(rng, shape, field, sparsity=0.6) for _ in range(rng.randint(0, 3))]
        p = LiftProblem(shape, gs, ds)
        if not generates(gs + ds, shape):
            continue
        w = lift_generators(p)
        assert verify_witness(p, w)
        assert quotient_images_agree(p, w)
        assert tuple(apply_coeffs(gs, ds, w.delta_coeffs, shape, field)) == w.lifted
        done += 1
