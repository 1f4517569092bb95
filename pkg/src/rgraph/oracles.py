"""Independent cross-checks for the invariant pipeline.

Nothing here is used by the evaluators themselves. Each function computes
something the main code also computes, only by a different and more
literal route, so that agreement is meaningful.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .bracket import DELTA, kauffman_bracket
from .diagram import (
    CROSSING,
    VERTEX,
    DegreeError,
    Diagram,
    Side,
    _random_side_pair,
    graph_edges,
    insert_twist,
    random_diagram,
    remove_edges,
)
from .invariant import r_graph, r_link
from .polyring import LambdaRational, LaurentPoly, chebyshev_to_lambda
from .unionfind import UnionFind

__all__ = [
    "three_colorings",
    "component_count",
    "knot_orientation",
    "writhe",
    "WritheCheck",
    "writhe_check_knot",
    "skein_fillings",
    "skein_relation_check",
    "random_skein_context",
    "constituent_links",
    "UnlinkedReport",
    "screen_unlinked",
    "unlinked_heuristic",
    "LINKED",
    "UNLINKED_CONSISTENT",
]

LINKED = "linked"
UNLINKED_CONSISTENT = "unlinked_consistent"

_L = LaurentPoly.monomial(1)
# brute force stops being sensible well before this many arcs
_MAX_ARCS = 13


def _require_no_vertices(d: Diagram, what: str) -> None:
    if d.n_vertices:
        raise ValueError(f"{what} needs a link diagram without vertices")


# -- Fox 3-colourings ------------------------------------------------------


def _arcs(d: Diagram) -> tuple[dict[int, int], int]:
    """Map each label to an arc index; an arc continues only over the top."""
    uf = UnionFind(d.label_ends)
    for n in d.nodes:
        uf.union(n.ends[1], n.ends[3])
    index: dict[int, int] = {}
    for lab in d.label_ends:
        index.setdefault(uf.find(lab), len(index))
    return {lab: index[uf.find(lab)] for lab in d.label_ends}, len(index)


def three_colorings(d: Diagram) -> int:
    """Count Fox 3-colourings by trying every assignment of colours to arcs."""
    _require_no_vertices(d, "three_colorings")
    arc_of, n_arcs = _arcs(d)
    if n_arcs > _MAX_ARCS:
        raise ValueError(f"{n_arcs} arcs is too many for brute force")
    count = 1
    if n_arcs:
        colours = np.array(list(product(range(3), repeat=n_arcs)), dtype=np.int8)
        ok = np.ones(len(colours), dtype=bool)
        for n in d.nodes:
            under_a, over, under_b = (arc_of[n.ends[s]] for s in (0, 1, 2))
            ok &= (colours[:, under_a] + colours[:, under_b] + colours[:, over]) % 3 == 0
        count = int(ok.sum())
    return count * 3**d.free_loops


def component_count(d: Diagram) -> int:
    """Connected pieces: link components, or graph components with vertices."""
    uf = UnionFind(d.label_ends)
    for n in d.nodes:
        if n.kind == CROSSING:
            uf.union(n.ends[0], n.ends[2])
            uf.union(n.ends[1], n.ends[3])
        else:
            for e in n.ends[1:]:
                uf.union(n.ends[0], e)
    return uf.n_sets + d.free_loops


# -- writhe and the Jones normalisation ------------------------------------


def knot_orientation(d: Diagram, reverse: bool = False) -> dict[int, tuple[int, int]]:
    """Entry slots of every crossing when walking the single strand.

    Returns ``{node: (under_entry_slot, over_entry_slot)}``.
    """
    _require_no_vertices(d, "knot_orientation")
    if component_count(d) != 1 or not d.nodes:
        raise ValueError("orientation by traversal needs a knot diagram with crossings")
    entries: dict[int, dict[str, int]] = {}
    start = (0, 2) if reverse else (0, 0)
    node, slot = start
    while True:
        role = "under" if slot % 2 == 0 else "over"
        entries.setdefault(node, {})[role] = slot
        node, slot = d.other_end((node, (slot + 2) % 4))
        if (node, slot) == start:
            break
    return {i: (e["under"], e["over"]) for i, e in entries.items()}


def writhe(d: Diagram, reverse: bool = False) -> int:
    """Signed crossing count under the traversal orientation.

    A crossing is positive when the over strand enters at the slot just
    clockwise of the under strand's entry.
    """
    total = 0
    for under_in, over_in in knot_orientation(d, reverse).values():
        total += 1 if over_in == (under_in + 3) % 4 else -1
    return total


@dataclass(frozen=True)
class WritheCheck:
    ok: bool
    writhe: int
    jones: LaurentPoly  # in t, normalised so the unknot gives 1
    detail: str = ""


def writhe_check_knot(d: Diagram, reverse: bool = False) -> WritheCheck:
    """Rebuild R of a knot from its Jones polynomial and compare.

    Computes ``f = (-A^3)^-w <d>``, checks that the writhe factor cancels
    in ``f(A) f(A^-1)``, that ``f / delta`` is a polynomial in ``t = A^-4``
    with value 1 at ``t = 1``, and that ``(L+2) V(t) V(t^-1)`` equals
    :func:`r_link`.
    """
    _require_no_vertices(d, "writhe_check_knot")
    if component_count(d) != 1:
        raise ValueError("writhe_check_knot needs a one-component diagram")
    bracket = kauffman_bracket(d)
    w = writhe(d, reverse) if d.nodes else 0
    factor = LaurentPoly.monomial(-3 * w, (-1) ** (w % 2))
    f = factor * bracket
    problems = []
    if f * f.invert_variable() != bracket * bracket.invert_variable():
        problems.append("writhe factor does not cancel")
    try:
        v_in_a = f.divide_exact(DELTA)
    except ValueError:
        return WritheCheck(False, w, LaurentPoly(), "bracket not divisible by delta")
    if any(e % 4 for e, _ in v_in_a.items()):
        return WritheCheck(False, w, LaurentPoly(), "normalised bracket is not a polynomial in t")
    jones = v_in_a.invert_variable().compress(4)
    if jones.evaluate(1) != 1:
        problems.append(f"V(1) = {jones.evaluate(1)}")
    rebuilt = (_L + 2) * chebyshev_to_lambda(jones * jones.invert_variable())
    if rebuilt != r_link(d):
        problems.append("(L+2) V(t) V(1/t) differs from r_link")
    return WritheCheck(not problems, w, jones, "; ".join(problems))


# -- skein relations on a two-strand slot ----------------------------------


def skein_fillings(context: Diagram, e: Side, f: Side) -> dict[int, Diagram]:
    """The slot between ``e`` and ``f`` filled with ``b^k`` for k in 2, 1, 0, -1."""
    return {k: insert_twist(context, e, f, k) for k in (2, 1, 0, -1)}


def skein_relation_check(kind: str, context: Diagram, e: Side, f: Side) -> bool:
    """Check one of the braid-generator relations in the slot ``(e, f)``.

    ``"quadratic_bracket"``: ``<b^2> = A^2 <1> - (A^3 - A^-1) <b>``.
    ``"cubic_R"``: ``R(b^2) = (1-L) R(b) + (L-1) R(1) + R(b^-1)``.
    """
    fill = skein_fillings(context, e, f)
    if kind == "quadratic_bracket":
        _require_no_vertices(context, "quadratic_bracket")
        b = {k: kauffman_bracket(fill[k]) for k in (2, 1, 0)}
        a2 = LaurentPoly.monomial(2)
        coeff = LaurentPoly({3: 1, -1: -1})
        return b[2] == a2 * b[0] - coeff * b[1]
    if kind == "cubic_R":
        r = {k: r_graph(fill[k]) for k in fill}
        one_minus = LambdaRational(1 - _L)
        rhs = one_minus * r[1] - one_minus * r[0] + r[-1]
        return r[2] == rhs
    raise ValueError(f"unknown relation {kind!r}")


def random_skein_context(
    seed: int, max_crossings: int = 5, max_vertices: int = 0
) -> tuple[Diagram, Side, Side]:
    """A seeded random diagram together with two sides of a common face."""
    rng = random.Random(seed)
    d = random_diagram(rng.randrange(2**32), max_crossings, max_vertices)
    pair = _random_side_pair(d, rng)
    if pair is None:
        d = Diagram(d.nodes, d.free_loops + 2)
        pair = _random_side_pair(d, rng)
    return d, pair[0], pair[1]


# -- constituent links -----------------------------------------------------


def constituent_links(d: Diagram) -> list[Diagram]:
    """Every link obtained by deleting whole graph edges.

    A deletion is admissible when each vertex keeps 0 or 2 of its ends;
    the empty deletion only counts when there are no vertices.
    """
    edges = graph_edges(d)
    out = []
    for k in range(len(edges) + 1):
        for subset in combinations(edges, k):
            try:
                link = remove_edges(d, [min(e) for e in subset])
            except DegreeError:
                continue
            if not any(n.kind == VERTEX for n in link.nodes):
                out.append(link)
    return out


@dataclass(frozen=True)
class UnlinkedReport:
    verdict: str
    links: tuple[tuple[Diagram, LaurentPoly, int], ...]  # (link, r_link, components)


def screen_unlinked(d: Diagram) -> UnlinkedReport:
    """Compare every constituent link with the unlink of the same size."""
    rows = []
    verdict = UNLINKED_CONSISTENT
    for link in constituent_links(d):
        r = r_link(link)
        n = component_count(link)
        rows.append((link, r, n))
        if r != (_L + 2) ** n:
            verdict = LINKED
    return UnlinkedReport(verdict, tuple(rows))


def unlinked_heuristic(d: Diagram) -> str:
    """``"linked"`` if some constituent link is detectably nontrivial.

    ``"unlinked_consistent"`` is only a necessary condition: R cannot
    certify an unlink.
    """
    return screen_unlinked(d).verdict
