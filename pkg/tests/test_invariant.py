import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import reference, table
from rgraph.diagram import (
    MoveSpec,
    applicable_moves,
    apply_move,
    disjoint_union,
    mirror,
    random_diagram,
    random_walk,
)
from rgraph.invariant import (
    CROSS_NEG,
    CROSS_POS,
    SMOOTH_I,
    SMOOTH_II,
    IntegrityError,
    VertexResolution,
    _to_lambda,
    evaluate,
    expand_vertices,
    r_graph,
    r_link,
    resolve,
    specialize,
)
from rgraph.polyring import INFINITY, LambdaRational, LaurentPoly, rational_reduce

L = LaurentPoly.monomial(1)
seeds = st.integers(0, 2**32 - 1)


def test_bouquet_by_hand():
    # V 1 1 2 2: smoothing I closes two loops, smoothing II one, and both
    # crossings are one-crossing unknot diagrams
    bouquet = reference("bouquet")
    expected = {
        SMOOTH_I: (L + 2) ** 2,
        SMOOTH_II: L + 2,
        CROSS_POS: L + 2,
        CROSS_NEG: L + 2,
    }
    for tag, r in expected.items():
        assert r_link(resolve(bouquet, VertexResolution((tag,)))) == r, tag
    total = L * (L + 2) ** 2 + L * (L + 2) + 2 * (L + 2)
    assert total == (L + 1) * (L + 2) ** 2
    assert sum((L**p * r_link(link) for p, link in expand_vertices(bouquet)), LaurentPoly()) == total
    assert r_graph(bouquet, "expand") == r_graph(bouquet) == LambdaRational(L + 2)


def test_resolution_count_and_powers():
    g = table("G")
    res = expand_vertices(g)
    assert len(res) == 4**4
    assert sorted({p for p, _ in res}) == [0, 1, 2, 3, 4]
    assert all(link.n_vertices == 0 for _, link in res)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_fused_matches_literal_expansion(seed):
    d = random_diagram(seed, 4, 2)
    assert r_graph(d, "fused") == r_graph(d, "expand")


@given(seeds, seeds)
@settings(max_examples=30, deadline=None)
def test_multiplicative_under_disjoint_union(s1, s2):
    d1, d2 = random_diagram(s1, 4, 1), random_diagram(s2, 4, 1)
    assert r_graph(disjoint_union(d1, d2)) == r_graph(d1) * r_graph(d2)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_mirror_insensitive(seed):
    d = random_diagram(seed, 6, 2)
    assert r_graph(mirror(d)) == r_graph(d)


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_invariant_along_random_walks(seed):
    rng = random.Random(seed)
    d = random_diagram(seed, 5, 2)
    target = r_graph(d)
    for m, d in random_walk(d, rng, 12, max_nodes=11):
        assert r_graph(d) == target, m


@pytest.mark.parametrize("name", ["A_prime", "B_prime", "D", "G"])
def test_vertex_moves(name):
    d = table(name)
    target = r_graph(d)
    moves = applicable_moves(d, ["VertexRotate", "LegSwap", "CapAdd"])
    assert moves
    for m in moves:
        assert r_graph(apply_move(d, m)) == target, m


def test_cap_remove():
    capped = apply_move(table("B"), MoveSpec("CapAdd", (1, 2)))
    assert capped.n_vertices == 3
    (m,) = [m for m in applicable_moves(capped, ["CapRemove"]) if m.location == (len(capped.nodes) - 1,)]
    assert r_graph(apply_move(capped, m)) == r_graph(capped) == LambdaRational(L + 2)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_value_at_two_ignores_crossing_signs(seed):
    d = random_diagram(seed, 5, 2)
    rng = random.Random(seed)
    flipped = list(d.nodes)
    for i in d.crossing_indices():
        if rng.random() < 0.5:
            flipped[i] = flipped[i].rotated(1)
    other = type(d)(tuple(flipped), d.free_loops)
    assert r_graph(other).evaluate(2) == r_graph(d).evaluate(2)


def test_links_have_polynomial_values():
    for name in ("hopf", "trefoil", "unknot", "empty"):
        r = r_graph(reference(name))
        assert r.is_polynomial() and r.num == r_link(reference(name))


def test_normalisation_anchors():
    assert r_graph(reference("empty")) == LambdaRational(LaurentPoly.const(1))
    assert r_graph(reference("unknot")) == LambdaRational(L + 2)


def test_specialize():
    rep = specialize(rational_reduce(L + 2, 1, 0))
    assert rep.values() == (Fraction(4, 3), Fraction(3, 2), INFINITY)
    assert evaluate(reference("hopf")).values() == (16, 3, 1)


def test_integrity_checks_fire():
    with pytest.raises(IntegrityError):
        _to_lambda(LaurentPoly({4: 1}))
    with pytest.raises(IntegrityError):
        _to_lambda(LaurentPoly({2: 1, -2: 1}))
    assert _to_lambda(LaurentPoly({4: 1, 0: 2, -4: 1})) == L + 2


def test_bad_arguments():
    with pytest.raises(ValueError):
        r_link(reference("bouquet"))
    with pytest.raises(ValueError):
        r_graph(reference("bouquet"), "guess")
    with pytest.raises(ValueError):
        resolve(reference("bouquet"), VertexResolution(("SmoothIII",)))
    with pytest.raises(ValueError):
        resolve(reference("bouquet"), VertexResolution(()))
