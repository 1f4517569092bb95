import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import reference
from rgraph.bracket import (
    DELTA,
    contract,
    kauffman_bracket,
    state_loop_count,
    state_sum,
    sweep_order,
)
from rgraph.diagram import Diagram, MoveSpec, apply_move, braid_closure, mirror, random_diagram
from rgraph.polyring import LaurentPoly

A = LaurentPoly.monomial(1)

# closures of b^k, reduced by hand with <b> = A^-1 + A U, U^2 = delta U, U b = -A^3 U
BRAID_CLOSURE_BRACKETS = {
    0: DELTA * DELTA,
    1: LaurentPoly({-1: 1, -5: 1}),
    2: LaurentPoly({6: 1, 2: 1, -2: 1, -6: 1}),
    3: LaurentPoly({9: -1, 1: 1, -3: 1, -7: 1}),
}


def test_normalisation():
    assert kauffman_bracket(Diagram((), 0)) == 1
    assert kauffman_bracket(Diagram((), 1)) == DELTA
    assert kauffman_bracket(Diagram((), 3)) == DELTA**3


@pytest.mark.parametrize("k", sorted(BRAID_CLOSURE_BRACKETS))
def test_braid_closure_brackets(k):
    expected = BRAID_CLOSURE_BRACKETS[k]
    assert kauffman_bracket(braid_closure(k)) == expected
    assert kauffman_bracket(braid_closure(-k)) == expected.invert_variable()


def test_reference_brackets_agree_between_methods():
    for name in ("hopf", "trefoil", "unknot", "empty"):
        d = reference(name)
        assert kauffman_bracket(d, "states") == kauffman_bracket(d, "contract")


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_contraction_matches_state_sum(seed):
    d = random_diagram(seed, 7, 0)
    assert contract(d) == state_sum(d)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_sweep_order_does_not_change_the_result(seed):
    d = random_diagram(seed, 6, 0)
    order = sweep_order(d)
    assert sorted(order) == list(range(len(d.nodes)))
    shuffled = order[:]
    random.Random(seed).shuffle(shuffled)
    assert contract(d, order=shuffled) == contract(d)


@given(st.integers(0, 2**32 - 1), st.integers(0, 3))
@settings(max_examples=50, deadline=None)
def test_curl_multiplies_by_minus_a_cubed(seed, r):
    d = random_diagram(seed, 5, 0)
    lab = d.labels[0] if d.labels else 0
    curled = apply_move(d, MoveSpec("R1_add", (lab, r)))
    before = kauffman_bracket(d)
    assert kauffman_bracket(curled) in (-(A**3) * before, -(A**-3) * before)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_mirror_inverts_the_variable(seed):
    d = random_diagram(seed, 6, 0)
    assert kauffman_bracket(mirror(d)) == kauffman_bracket(d).invert_variable()


def test_state_loop_count():
    hopf = reference("hopf")
    counts = sorted(state_loop_count(hopf, s) for s in ("AA", "AB", "BA", "BB"))
    assert counts == [1, 1, 2, 2]
    with pytest.raises(ValueError):
        state_loop_count(hopf, "A")


def test_vertices_are_rejected():
    with pytest.raises(ValueError):
        kauffman_bracket(reference("bouquet"))
    with pytest.raises(ValueError):
        kauffman_bracket(reference("hopf"), "magic")
