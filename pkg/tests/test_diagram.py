import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import reference, table
from rgraph.diagram import (
    MOVE_KINDS,
    DegreeError,
    Diagram,
    DiagramError,
    MoveError,
    MoveSpec,
    Node,
    applicable_moves,
    apply_move,
    braid_closure,
    components,
    disjoint_union,
    faces,
    graph_edges,
    insert_twist,
    is_planar,
    mirror,
    parse_diagram,
    random_diagram,
    random_walk,
    relabel,
    remove_edges,
    render,
    validate,
)

seeds = st.integers(0, 2**32 - 1)


@given(seeds)
@settings(max_examples=80, deadline=None)
def test_parse_render_round_trip(seed):
    d = random_diagram(seed, 6, 2)
    assert parse_diagram(render(d)) == d


def test_parse_skips_comments_and_sums_circles():
    d = parse_diagram("# hopf\nX 4 1 3 2\n\nX 2 3 1 4\nO 1\nO 2\n")
    assert d.n_crossings == 2 and d.free_loops == 3
    assert parse_diagram("") == Diagram((), 0)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("X 1 2 3", "line 1"),
        ("X 1 1 2 2\nQ 3", "line 2: unknown item"),
        ("V 1 1 2 x", "integers"),
        ("X 1 1 2 2\nX 2 3 3 4", "occurs 3 times"),
        ("V 1 2 2 3", "label 1 occurs 1 times"),
        ("O -1", "negative"),
        ("X 0 0 1 1", "positive"),
    ],
)
def test_parse_errors_name_the_line(text, fragment):
    with pytest.raises(DiagramError, match=fragment):
        parse_diagram(text)


def test_validate_reports_violations():
    assert validate(reference("trefoil")) == []
    bad = Diagram((Node("X", (1, 1, 2, 3)),))
    problems = validate(bad)
    assert any("label 2" in p for p in problems) and any("label 3" in p for p in problems)
    assert validate(Diagram((Node("Y", (1, 1, 2, 2)),))) == ["node 0: unknown kind 'Y'"]


def _half_turn_normal(d):
    # X a b c d and X c d a b describe the same crossing
    return [n if n.kind == "V" else min(n, n.rotated(2)) for n in d.nodes]


def test_mirror_is_an_involution_that_fixes_vertices():
    d = table("B_double_prime")
    assert _half_turn_normal(mirror(mirror(d))) == _half_turn_normal(d)
    assert mirror(d) != d
    for a, b in zip(d.nodes, mirror(d).nodes):
        assert (a == b) == (a.kind == "V")


def test_planarity():
    for name in ("A", "A_prime", "B_prime", "C_prime", "D_prime", "E", "F", "G"):
        assert is_planar(table(name)), name
    # a two-crossing code whose slot order cannot be drawn in the plane
    assert not is_planar(parse_diagram("X 1 2 3 4\nX 4 1 2 3"))


def test_faces_of_the_trefoil():
    sizes = sorted(len(f) for f in faces(reference("trefoil")))
    assert sizes == [2, 2, 2, 3, 3]


def test_components_and_disjoint_union():
    u = disjoint_union(reference("trefoil"), reference("hopf"))
    assert sorted(set(components(u))) == [0, 1]
    assert u.n_crossings == 5 and not validate(u) and is_planar(u)


def test_relabel_is_canonical_on_first_appearance():
    d = parse_diagram("X 7 9 8 7\nO 1\nX 9 8 5 5")
    assert render(relabel(d)) == "X 1 2 3 1\nX 2 3 4 4\nO 1\n"


def test_graph_edges_of_the_handcuff():
    edges = graph_edges(table("B_prime"))
    assert len(edges) == 4
    assert sum(len(e) for e in edges) == len(table("B_prime").labels)


def test_remove_edges():
    bouquet = reference("bouquet")
    e1, e2 = graph_edges(bouquet)
    one = remove_edges(bouquet, [min(e1)])
    assert one.n_vertices == 0 and not validate(one)
    assert remove_edges(bouquet, [min(e1), min(e2)]) == Diagram((), 0)
    theta = table("A")
    with pytest.raises(DegreeError):
        remove_edges(theta, [min(graph_edges(theta)[0])])
    with pytest.raises(DiagramError):
        remove_edges(theta, [99])


def test_braid_closures():
    assert braid_closure(0) == Diagram((), 2)
    assert braid_closure(1).n_crossings == 1
    for k in (-3, -2, 2, 3):
        d = braid_closure(k)
        assert d.n_crossings == abs(k) and not validate(d) and is_planar(d)
    assert len(set(components(braid_closure(2)))) == 1  # one connected map


def test_insert_twist_keeps_planarity():
    d = reference("trefoil")
    face = next(f for f in faces(d) if len(f) == 3)
    for k in (-2, -1, 1, 2):
        t = insert_twist(d, face[0], face[1], k)
        assert not validate(t) and is_planar(t) and t.n_crossings == 3 + abs(k)


@given(seeds, st.integers(0, 8), st.integers(0, 3))
@settings(max_examples=60, deadline=None)
def test_random_diagrams_are_valid_planar_and_bounded(seed, nx, nv):
    d = random_diagram(seed, nx, nv)
    assert validate(d) == []
    assert is_planar(d)
    assert d.n_crossings <= nx and d.n_vertices <= nv


def test_random_diagram_is_deterministic():
    assert random_diagram(5, 6, 2) == random_diagram(5, 6, 2)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_moves_keep_codes_valid_and_planar(seed):
    rng = random.Random(seed)
    d = random_diagram(seed, 5, 2)
    for _, d in random_walk(d, rng, 15, max_nodes=12):
        assert validate(d) == []
        assert is_planar(d)


def test_every_move_kind_occurs():
    seen = set()
    for seed in range(40):
        rng = random.Random(seed)
        for m, _ in random_walk(random_diagram(seed, 5, 2), rng, 25, max_nodes=12):
            seen.add(m.move)
    assert seen == set(MOVE_KINDS)


def test_inverse_moves_undo_growing_moves():
    d = table("B")
    for m in applicable_moves(d, ["R1_add", "CapAdd", "LegSwap"])[:30]:
        grown = apply_move(d, m)
        inverse = {"R1_add": "R1_remove", "CapAdd": "CapRemove", "LegSwap": "LegUnswap"}[m.move]
        shrunk = [apply_move(grown, back) for back in applicable_moves(grown, [inverse])]
        assert any(len(s.nodes) == len(d.nodes) for s in shrunk), m


def test_inapplicable_moves_raise():
    d = reference("trefoil")
    with pytest.raises(MoveError):
        apply_move(d, MoveSpec("VertexRotate", (0,)))
    with pytest.raises(MoveError):
        apply_move(d, MoveSpec("R1_remove", (0,)))
    with pytest.raises(MoveError):
        apply_move(d, MoveSpec("Teleport", ()))
