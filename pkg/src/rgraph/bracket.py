"""Kauffman bracket of link diagrams.

Convention: the A-smoothing of ``X a b c d`` joins slots (0,1),(2,3) and
the B-smoothing joins (0,3),(1,2); every loop, free circles included,
contributes ``delta = -A^2 - A^-2``. Hence the empty diagram has bracket
1 and the unknot has bracket ``delta``.

Two evaluators are provided. :func:`state_sum` enumerates all ``2^n``
states and counts loops with a disjoint-set forest; it is the reference.
:func:`contract` sweeps the nodes one at a time, keeping for each way of
pairing up the currently open edge ends the accumulated polynomial. It
is exact and much faster, and is the default.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .diagram import VERTEX, Diagram
from .polyring import LaurentPoly
from .unionfind import UnionFind

__all__ = [
    "DELTA",
    "A_PAIRS",
    "B_PAIRS",
    "kauffman_bracket",
    "state_loop_count",
    "state_sum",
    "contract",
    "sweep_order",
]

A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((0, 3), (1, 2))
DELTA = LaurentPoly({2: -1, -2: -1})

# dict form of delta^k, shared by the contraction loop
_DELTA_POWERS: list[dict[int, int]] = [{0: 1}]


def _delta_power(k: int) -> dict[int, int]:
    while len(_DELTA_POWERS) <= k:
        prev = _DELTA_POWERS[-1]
        nxt: dict[int, int] = {}
        for e, c in prev.items():
            nxt[e + 2] = nxt.get(e + 2, 0) - c
            nxt[e - 2] = nxt.get(e - 2, 0) - c
        _DELTA_POWERS.append({e: c for e, c in nxt.items() if c})
    return _DELTA_POWERS[k]


def _require_link(d: Diagram) -> None:
    if any(n.kind == VERTEX for n in d.nodes):
        raise ValueError("bracket is only defined for link diagrams (no vertices)")


def state_loop_count(d: Diagram, state: Sequence[str]) -> int:
    """Number of loops when crossing ``k`` gets smoothing ``state[k]`` ('A'/'B').

    ``state`` is indexed by crossing order in ``d.nodes``.
    """
    _require_link(d)
    if len(state) != len(d.nodes):
        raise ValueError("state length must equal the number of crossings")
    uf = UnionFind(d.label_ends)
    for node, s in zip(d.nodes, state):
        pairs = A_PAIRS if s == "A" else B_PAIRS
        for p, q in pairs:
            uf.union(node.ends[p], node.ends[q])
    return uf.n_sets + d.free_loops


def state_sum(d: Diagram) -> LaurentPoly:
    """Bracket by explicit enumeration of every smoothing state."""
    _require_link(d)
    n = len(d.nodes)
    acc: dict[int, dict[int, int]] = {}
    for state in product("AB", repeat=n):
        loops = state_loop_count(d, state)
        a = state.count("A")
        by_loops = acc.setdefault(a - (n - a), {})
        by_loops[loops] = by_loops.get(loops, 0) + 1
    total = LaurentPoly()
    for exp, by_loops in acc.items():
        for loops, count in by_loops.items():
            total = total + LaurentPoly(_delta_power(loops)).shift(exp) * count
    return total


def sweep_order(d: Diagram) -> list[int]:
    """Greedy node order that keeps the set of open edge ends small."""
    n = len(d.nodes)
    if n == 0:
        return []
    adj: dict[int, set[int]] = {i: set() for i in range(n)}
    for ends in d.label_ends.values():
        a, b = ends[0][0], ends[1][0]
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    # change in frontier size if node i were added next
    delta = {}
    for i, node in enumerate(d.nodes):
        delta[i] = sum(1 for e in node.ends if node.ends.count(e) == 1)
    remaining = set(range(n))
    order = []
    frontier_nodes: set[int] = set()
    while remaining:
        pool = frontier_nodes & remaining or remaining
        best = min(pool, key=lambda i: (delta[i], i))
        remaining.discard(best)
        order.append(best)
        frontier_nodes |= adj[best]
        for e in set(d.nodes[best].ends):
            for j, _ in d.label_ends[e]:
                if j in remaining:
                    # an open end of e now closes when j is added
                    delta[j] -= 2
    return order


def contract(
    d: Diagram,
    terms: Sequence[Sequence[tuple]] | None = None,
    order: Sequence[int] | None = None,
) -> LaurentPoly:
    """Bracket-type state sum by sweeping nodes.

    ``terms[i]`` lists the local states of node ``i`` as
    ``(slot_pairs, exponent_of_A)`` tuples. By default crossings get the
    two Kauffman smoothings; other node kinds must be given explicitly.
    """
    if terms is None:
        _require_link(d)
        terms = [((A_PAIRS, 1), (B_PAIRS, -1))] * len(d.nodes)
    # state key: sorted tuple of (a, b) pairs of open labels joined by a path
    states: dict[tuple, dict[int, int]] = {(): {0: 1}}
    for i in sweep_order(d) if order is None else order:
        ends = d.nodes[i].ends
        new_states: dict[tuple, dict[int, int]] = {}
        for key, poly in states.items():
            for pairs, shift in terms[i]:
                partner = {}
                for a, b in key:
                    partner[a] = b
                    partner[b] = a
                loops = 0
                for s1, s2 in pairs:
                    x, y = ends[s1], ends[s2]
                    if x == y and x not in partner:
                        loops += 1
                        continue
                    if x in partner and partner[x] == y:
                        del partner[x], partner[y]
                        loops += 1
                        continue
                    ex = partner.pop(x) if x in partner else x
                    ey = partner.pop(y) if y in partner else y
                    partner[ex] = ey
                    partner[ey] = ex
                new_key = tuple(sorted((a, b) for a, b in partner.items() if a < b))
                target = new_states.setdefault(new_key, {})
                if loops:
                    for e1, c1 in poly.items():
                        for e2, c2 in _delta_power(loops).items():
                            e = e1 + e2 + shift
                            target[e] = target.get(e, 0) + c1 * c2
                else:
                    for e1, c1 in poly.items():
                        e = e1 + shift
                        target[e] = target.get(e, 0) + c1
        states = {k: {e: c for e, c in p.items() if c} for k, p in new_states.items()}
    if set(states) - {()}:
        raise AssertionError("sweep left open edge ends")
    result = LaurentPoly(states.get((), {}))
    if d.free_loops:
        result = result * LaurentPoly(_delta_power(d.free_loops))
    return result


def kauffman_bracket(d: Diagram, method: str = "contract") -> LaurentPoly:
    """Bracket polynomial in A; ``method`` is ``"contract"`` or ``"states"``."""
    if method == "states":
        return state_sum(d)
    if method == "contract":
        return contract(d)
    raise ValueError(f"unknown method {method!r}")
