"""Planar diagrams of links and 4-valent embedded graphs.

A diagram is a list of 4-slot nodes plus a count of crossing-free circles.
Every edge label occurs in exactly two slots. Slots are numbered
counterclockwise; at a crossing the strand through slots 0 and 2 passes
under the strand through slots 1 and 3.

Text format, one item per line::

    # comment
    X a b c d     crossing
    V a b c d     rigid 4-valent vertex
    O k           k extra circles

The move functions in this module (Reidemeister moves and their graph
extensions) only produce planar codes when given planar codes; planarity
itself is never required by the evaluators.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .unionfind import UnionFind

__all__ = [
    "CROSSING",
    "VERTEX",
    "Node",
    "Diagram",
    "Side",
    "MoveSpec",
    "MOVE_KINDS",
    "DiagramError",
    "MoveError",
    "DegreeError",
    "parse_diagram",
    "render",
    "validate",
    "mirror",
    "disjoint_union",
    "relabel",
    "faces",
    "is_planar",
    "components",
    "graph_edges",
    "apply_move",
    "applicable_moves",
    "random_move",
    "random_walk",
    "remove_edges",
    "random_diagram",
    "insert_twist",
    "braid_closure",
]

CROSSING = "X"
VERTEX = "V"


class DiagramError(ValueError):
    """Malformed or inconsistent diagram input."""


class MoveError(ValueError):
    """A move was requested where it does not apply."""


class DegreeError(ValueError):
    """Edge removal left a vertex of odd degree."""


class Node(NamedTuple):
    kind: str
    ends: tuple[int, int, int, int]

    def rotated(self, k: int = 1) -> "Node":
        k %= 4
        return Node(self.kind, self.ends[k:] + self.ends[:k])


End = tuple[int, int]  # (node index, slot)


class Side(NamedTuple):
    """One traversal of an edge along a face boundary.

    ``x`` is the end the traversal leaves from and ``y`` the end it arrives
    at. A crossing-free circle is a side with ``x = y = None``.
    """

    label: int
    x: End | None
    y: End | None


@dataclass(frozen=True)
class Diagram:
    nodes: tuple[Node, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "nodes", tuple(Node(n.kind, tuple(n.ends)) for n in self.nodes)
        )

    @cached_property
    def label_ends(self) -> dict[int, list[End]]:
        where: dict[int, list[End]] = defaultdict(list)
        for i, node in enumerate(self.nodes):
            for s, lab in enumerate(node.ends):
                where[lab].append((i, s))
        return dict(where)

    @property
    def labels(self) -> list[int]:
        return sorted(self.label_ends)

    @property
    def max_label(self) -> int:
        return max(self.label_ends, default=0)

    @property
    def n_crossings(self) -> int:
        return sum(1 for n in self.nodes if n.kind == CROSSING)

    @property
    def n_vertices(self) -> int:
        return sum(1 for n in self.nodes if n.kind == VERTEX)

    def crossing_indices(self) -> list[int]:
        return [i for i, n in enumerate(self.nodes) if n.kind == CROSSING]

    def vertex_indices(self) -> list[int]:
        return [i for i, n in enumerate(self.nodes) if n.kind == VERTEX]

    def is_link(self) -> bool:
        return self.n_vertices == 0

    def other_end(self, end: End) -> End:
        i, s = end
        a, b = self.label_ends[self.nodes[i].ends[s]]
        return b if a == end else a

    def __str__(self) -> str:
        return render(self)


# -- text format ------------------------------------------------------------


def parse_diagram(text: str) -> Diagram:
    """Parse the line format; raises :class:`DiagramError` with a line number."""
    nodes: list[Node] = []
    free = 0
    seen: dict[int, list[int]] = defaultdict(list)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "O":
            if len(parts) != 2:
                raise DiagramError(f"line {lineno}: expected 'O k'")
            try:
                k = int(parts[1])
            except ValueError:
                raise DiagramError(f"line {lineno}: bad circle count {parts[1]!r}") from None
            if k < 0:
                raise DiagramError(f"line {lineno}: negative circle count")
            free += k
        elif tag in (CROSSING, VERTEX):
            if len(parts) != 5:
                raise DiagramError(f"line {lineno}: expected four labels after {tag!r}")
            try:
                ends = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise DiagramError(f"line {lineno}: labels must be integers") from None
            if any(e <= 0 for e in ends):
                raise DiagramError(f"line {lineno}: labels must be positive")
            for e in ends:
                seen[e].append(lineno)
            nodes.append(Node(tag, ends))
        else:
            raise DiagramError(f"line {lineno}: unknown item {tag!r}")
    for lab, lines in sorted(seen.items()):
        if len(lines) != 2:
            raise DiagramError(
                f"line {lines[-1]}: label {lab} occurs {len(lines)} times (expected 2)"
            )
    return Diagram(tuple(nodes), free)


def render(d: Diagram) -> str:
    lines = [f"{n.kind} {' '.join(map(str, n.ends))}" for n in d.nodes]
    if d.free_loops or not d.nodes:
        lines.append(f"O {d.free_loops}")
    return "\n".join(lines) + "\n"


def validate(d: Diagram) -> list[str]:
    """Return a list of violations; an empty list means the diagram is valid."""
    errors = []
    if d.free_loops < 0:
        errors.append(f"negative free loop count {d.free_loops}")
    for i, node in enumerate(d.nodes):
        if node.kind not in (CROSSING, VERTEX):
            errors.append(f"node {i}: unknown kind {node.kind!r}")
        if len(node.ends) != 4:
            errors.append(f"node {i}: has {len(node.ends)} slots")
        for lab in node.ends:
            if not isinstance(lab, int) or lab <= 0:
                errors.append(f"node {i}: bad label {lab!r}")
    counts = Counter(lab for node in d.nodes for lab in node.ends)
    for lab, c in sorted(counts.items(), key=lambda kv: str(kv[0])):
        if c != 2:
            errors.append(f"label {lab} occurs {c} times (expected 2)")
    return errors


# -- simple transforms ------------------------------------------------------


def mirror(d: Diagram) -> Diagram:
    """Flip every crossing; vertices are untouched."""
    return Diagram(
        tuple(n.rotated(1) if n.kind == CROSSING else n for n in d.nodes), d.free_loops
    )


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    off = d1.max_label
    shifted = tuple(Node(n.kind, tuple(e + off for e in n.ends)) for n in d2.nodes)
    return Diagram(d1.nodes + shifted, d1.free_loops + d2.free_loops)


def relabel(d: Diagram) -> Diagram:
    """Renumber labels 1, 2, ... in order of first appearance."""
    mapping: dict[int, int] = {}
    nodes = []
    for n in d.nodes:
        ends = []
        for e in n.ends:
            if e not in mapping:
                mapping[e] = len(mapping) + 1
            ends.append(mapping[e])
        nodes.append(Node(n.kind, tuple(ends)))
    return Diagram(tuple(nodes), d.free_loops)


# -- combinatorial map ------------------------------------------------------


def faces(d: Diagram) -> list[list[Side]]:
    """Faces of the diagram's 4-valent map, each as a cyclic list of sides.

    A face is traversed with its interior on the left: arriving at slot
    ``t`` the walk leaves through slot ``t - 1``. Crossing-free circles
    are not included.
    """
    seen = set()
    result = []
    for i in range(len(d.nodes)):
        for s in range(4):
            if (i, s) in seen:
                continue
            face = []
            dart = (i, s)
            while dart not in seen:
                seen.add(dart)
                arrive = d.other_end(dart)
                face.append(Side(d.nodes[dart[0]].ends[dart[1]], dart, arrive))
                dart = (arrive[0], (arrive[1] - 1) % 4)
            result.append(face)
    return result


def components(d: Diagram) -> list[int]:
    """Connected-component id for each node (nodes sharing an edge are joined)."""
    uf = UnionFind()
    for i in range(len(d.nodes)):
        uf.find(i)
    for ends in d.label_ends.values():
        uf.union(ends[0][0], ends[1][0])
    roots: dict[int, int] = {}
    return [roots.setdefault(uf.find(i), len(roots)) for i in range(len(d.nodes))]


def is_planar(d: Diagram) -> bool:
    """Euler-characteristic test: every connected piece must be a sphere."""
    comp = components(d)
    n_nodes = Counter(comp)
    n_faces = Counter(comp[face[0].x[0]] for face in faces(d))
    # each component with n nodes has 2n edges
    return all(n_faces[c] - n_nodes[c] == 2 for c in n_nodes)


def graph_edges(d: Diagram) -> list[frozenset[int]]:
    """Label sets of the graph edges: strands from vertex to vertex.

    Strands run straight through crossings (slot s to s + 2). Closed
    strands that never meet a vertex are not graph edges.
    """
    done = set()
    out = []
    for i in d.vertex_indices():
        for s in range(4):
            if (i, s) in done:
                continue
            labels = set()
            end = (i, s)
            done.add(end)
            while True:
                lab = d.nodes[end[0]].ends[end[1]]
                labels.add(lab)
                far = d.other_end(end)
                if d.nodes[far[0]].kind == VERTEX:
                    done.add(far)
                    break
                end = (far[0], (far[1] + 2) % 4)
            out.append(frozenset(labels))
    return out


# -- mutable editing helper -------------------------------------------------


class _Builder:
    def __init__(self, d: Diagram):
        self.nodes: list[list | None] = [[n.kind, list(n.ends)] for n in d.nodes]
        self.free_loops = d.free_loops
        self.next_label = d.max_label + 1

    def fresh(self) -> int:
        lab = self.next_label
        self.next_label += 1
        return lab

    def set_end(self, end: End, label: int) -> None:
        self.nodes[end[0]][1][end[1]] = label

    def add(self, kind: str, ends: Sequence[int]) -> int:
        self.nodes.append([kind, list(ends)])
        return len(self.nodes) - 1

    def cut(self, side: Side) -> tuple[int, int]:
        """Open a side; returns labels for its x-half and y-half."""
        if side.x is None:
            if self.free_loops <= 0:
                raise MoveError("no free loop to cut")
            self.free_loops -= 1
            lab = self.fresh()
            return lab, lab
        new = self.fresh()
        self.set_end(side.y, new)
        return side.label, new

    def splice(self, removed: Iterable[int], joins: Sequence[tuple[int, int]]) -> None:
        """Delete nodes and reconnect their loose ends through ``joins``.

        Each join ``(x, y)`` connects an end of edge ``x`` and an end of edge
        ``y`` that sat on deleted nodes. Chains of edges with no surviving
        end are collapsed; closed chains become free loops.
        """
        for i in removed:
            self.nodes[i] = None
        occ: Counter = Counter()
        for n in self.nodes:
            if n is not None:
                occ.update(n[1])
        inc: dict[int, list[int]] = defaultdict(list)
        for j, (x, y) in enumerate(joins):
            inc[x].append(j)
            inc[y].append(j)
        for lab, js in inc.items():
            if occ[lab] + len(js) != 2:
                raise MoveError(f"inconsistent join for label {lab}")
        used = [False] * len(joins)
        rename: dict[int, int] = {}
        for start in sorted(inc):
            if occ[start] != 1 or used[inc[start][0]]:
                continue
            cur, j = start, inc[start][0]
            while True:
                used[j] = True
                a, b = joins[j]
                nxt = b if a == cur else a
                if occ[nxt] == 1:
                    if nxt != start:
                        rename[nxt] = start
                    break
                js = inc[nxt]
                j = js[1] if js[0] == j else js[0]
                cur = nxt
        for j0 in range(len(joins)):
            if used[j0]:
                continue
            self.free_loops += 1
            cur, j = joins[j0][0], j0
            while not used[j]:
                used[j] = True
                a, b = joins[j]
                nxt = b if a == cur else a
                js = inc[nxt]
                j = js[1] if js[0] == j else js[0]
                cur = nxt
        if rename:
            for n in self.nodes:
                if n is not None:
                    n[1] = [rename.get(e, e) for e in n[1]]

    def build(self) -> Diagram:
        return Diagram(
            tuple(Node(k, tuple(e)) for k, e in (n for n in self.nodes if n is not None)),
            self.free_loops,
        )


# -- moves ------------------------------------------------------------------

MOVE_KINDS = (
    "R1_add",
    "R1_remove",
    "R2_add",
    "R2_remove",
    "R3",
    "VertexRotate",
    "LegSwap",
    "LegUnswap",
    "CapAdd",
    "CapRemove",
    "Mirror",
)

_INVERSE_KINDS = {
    "R1_add": "R1_remove",
    "R2_add": "R2_remove",
    "LegSwap": "LegUnswap",
    "CapAdd": "CapRemove",
}


@dataclass(frozen=True)
class MoveSpec:
    """A move and where to apply it.

    Location conventions (all integers):

    * ``R1_add`` / ``CapAdd``: ``(label, r)``; label 0 means a free loop,
      ``r`` in 0..3 picks the rotation of the inserted node.
    * ``R1_remove`` / ``CapRemove`` / ``VertexRotate``: ``(node,)``.
    * ``R2_add``: ``(n1, s1, n2, s2)``, the leaving darts of the two sides;
      the first side becomes the over strand.
    * ``R2_remove``: ``(n1, n2)``.
    * ``R3``: ``(node, slot)``, a leaving dart on a triangular face.
    * ``LegSwap``: ``(vertex, slot, variant)``; ``LegUnswap``: ``(vertex, slot)``.
    * ``Mirror``: ``()``.
    """

    move: str
    location: tuple[int, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return f"{self.move}{self.location}"


def _side_from_dart(d: Diagram, dart: End) -> Side:
    i, s = dart
    if not (0 <= i < len(d.nodes) and 0 <= s < 4):
        raise MoveError(f"dart {dart} out of range")
    return Side(d.nodes[i].ends[s], dart, d.other_end(dart))


def _side_for_label(d: Diagram, label: int) -> Side:
    if label == 0:
        if d.free_loops <= 0:
            raise MoveError("no free loop")
        return Side(0, None, None)
    if label not in d.label_ends:
        raise MoveError(f"no edge labelled {label}")
    a, b = d.label_ends[label]
    return Side(label, a, b)


def _insert_on_edge(d: Diagram, kind: str, label: int, r: int) -> Diagram:
    b = _Builder(d)
    x, y = b.cut(_side_for_label(d, label))
    loop = b.fresh()
    base = [x, loop, loop, y]
    r %= 4
    b.add(kind, base[r:] + base[:r])
    return b.build()


def _find_cap(node: Node) -> int | None:
    for s in range(4):
        if node.ends[s] == node.ends[(s + 1) % 4]:
            return s
    return None


def _remove_capped(d: Diagram, i: int, kind: str) -> Diagram:
    if not (0 <= i < len(d.nodes)) or d.nodes[i].kind != kind:
        raise MoveError(f"node {i} is not a {kind}")
    s = _find_cap(d.nodes[i])
    if s is None:
        raise MoveError(f"node {i} has no adjacent-slot loop")
    ends = d.nodes[i].ends
    b = _Builder(d)
    b.splice([i], [(ends[(s + 2) % 4], ends[(s + 3) % 4])])
    return b.build()


def _same_face_or_split(d: Diagram, s1: Side, s2: Side) -> bool:
    comp = components(d)
    if comp[s1.x[0]] != comp[s2.x[0]]:
        return True
    for face in faces(d):
        darts = {side.x for side in face}
        if s1.x in darts and s2.x in darts:
            return True
    return False


def _r2_add(d: Diagram, loc) -> Diagram:
    n1, s1, n2, s2 = loc
    e = _side_from_dart(d, (n1, s1))
    f = _side_from_dart(d, (n2, s2))
    if e.label == f.label:
        raise MoveError("R2 needs two distinct edges")
    if not _same_face_or_split(d, e, f):
        raise MoveError("sides do not share a face")
    b = _Builder(d)
    ex, ey = b.cut(e)
    fx, fy = b.cut(f)
    e2, f2 = b.fresh(), b.fresh()
    b.add(CROSSING, (fx, e2, f2, ey))
    b.add(CROSSING, (f2, e2, fy, ex))
    return b.build()


def _bigon(d: Diagram, i: int, j: int) -> list[Side] | None:
    for face in faces(d):
        if len(face) == 2 and {face[0].x[0], face[1].x[0]} == {i, j}:
            return face
    return None


def _r2_remove(d: Diagram, loc) -> Diagram:
    i, j = loc
    if i == j or not all(0 <= k < len(d.nodes) for k in (i, j)):
        raise MoveError("R2_remove needs two distinct nodes")
    if d.nodes[i].kind != CROSSING or d.nodes[j].kind != CROSSING:
        raise MoveError("R2_remove needs two crossings")
    face = _bigon(d, i, j)
    if face is None:
        raise MoveError(f"nodes {i}, {j} do not bound a bigon")
    # slot parity at both ends of each side: odd = over, even = under
    over, under = [], []
    for side in face:
        px, py = side.x[1] % 2, side.y[1] % 2
        if px != py:
            raise MoveError("bigon is not a clasp")
        (over if px else under).append(side)
    if len(over) != 1 or len(under) != 1:
        raise MoveError("bigon is not a clasp")
    b = _Builder(d)
    joins = []
    for side in (over[0], under[0]):
        ends = []
        for node, slot in (side.x, side.y):
            ends.append(d.nodes[node].ends[(slot + 2) % 4])
        joins.append(tuple(ends))
    b.splice([i, j], joins)
    return b.build()


def _triangle(d: Diagram, dart: End) -> list[Side]:
    for face in faces(d):
        if any(side.x == dart for side in face):
            break
    else:
        raise MoveError(f"dart {dart} not found")
    if len(face) != 3:
        raise MoveError("face is not a triangle")
    # rotate so that the given dart leads
    while face[0].x != dart:
        face = face[1:] + face[:1]
    nodes = [side.x[0] for side in face]
    if len(set(nodes)) != 3 or any(d.nodes[k].kind != CROSSING for k in nodes):
        raise MoveError("triangle must have three distinct crossings")
    return face


def _r3(d: Diagram, loc) -> Diagram:
    face = _triangle(d, tuple(loc))
    # C_k = face[k].x node; a_k = arrival slot at C_k (from side k-1)
    cs = [side.x[0] for side in face]
    arr = [face[k - 1].y[1] for k in range(3)]
    ends = [d.nodes[c].ends for c in cs]
    p = [ends[k][(arr[k] + 1) % 4] for k in range(3)]
    q = [ends[k][(arr[k] + 2) % 4] for k in range(3)]
    t = [face[k].label for k in range(3)]
    # strand k runs along side k from C_k to C_{k+1}
    if not any((arr[k] - 1) % 2 == 1 and arr[(k + 1) % 3] % 2 == 1 for k in range(3)):
        raise MoveError("no strand passes over both others")
    b = _Builder(d)
    for k in range(3):
        a = arr[k]
        new = [0] * 4
        new[(a - 1) % 4] = q[(k + 1) % 3]
        new[a] = p[(k - 1) % 3]
        new[(a + 1) % 4] = t[k]
        new[(a + 2) % 4] = t[(k - 1) % 3]
        b.nodes[cs[k]][1] = new
    return b.build()


def _vertex_rotate(d: Diagram, loc) -> Diagram:
    i = loc[0]
    k = loc[1] if len(loc) > 1 else 1
    if not (0 <= i < len(d.nodes)) or d.nodes[i].kind != VERTEX:
        raise MoveError(f"node {i} is not a vertex")
    nodes = list(d.nodes)
    nodes[i] = nodes[i].rotated(k)
    return Diagram(tuple(nodes), d.free_loops)


def _leg_swap(d: Diagram, loc) -> Diagram:
    i, s, variant = loc
    if not (0 <= i < len(d.nodes)) or d.nodes[i].kind != VERTEX:
        raise MoveError(f"node {i} is not a vertex")
    s %= 4
    b = _Builder(d)
    ends = b.nodes[i][1]
    x, y = ends[s], ends[(s + 1) % 4]
    x2, y2 = b.fresh(), b.fresh()
    ends[s], ends[(s + 1) % 4] = x2, y2
    c = [y2, x2, x, y]
    if variant % 2:
        c = c[1:] + c[:1]
    b.add(CROSSING, c)
    return b.build()


def _leg_unswap(d: Diagram, loc) -> Diagram:
    i, s = loc
    if not (0 <= i < len(d.nodes)) or d.nodes[i].kind != VERTEX:
        raise MoveError(f"node {i} is not a vertex")
    s %= 4
    ve = d.nodes[i].ends
    x2, y2 = ve[s], ve[(s + 1) % 4]
    if x2 == y2:
        raise MoveError("legs form a cap")
    (ex,) = [e for e in d.label_ends[x2] if e != (i, s)]
    (ey,) = [e for e in d.label_ends[y2] if e != (i, (s + 1) % 4)]
    c = ex[0]
    if c != ey[0] or d.nodes[c].kind != CROSSING:
        raise MoveError("legs do not meet the same crossing")
    j = ey[1]
    if ex[1] != (j + 1) % 4:
        raise MoveError("legs are not twisted around a bigon")
    cends = d.nodes[c].ends
    b = _Builder(d)
    b.nodes[i][1][s] = cends[(j + 2) % 4]
    b.nodes[i][1][(s + 1) % 4] = cends[(j + 3) % 4]
    b.nodes[c] = None
    return b.build()


def apply_move(d: Diagram, m: MoveSpec) -> Diagram:
    """Apply ``m`` to ``d``; raises :class:`MoveError` if it does not apply."""
    kind, loc = m.move, tuple(m.location)
    try:
        if kind == "R1_add":
            return _insert_on_edge(d, CROSSING, loc[0], loc[1] if len(loc) > 1 else 0)
        if kind == "CapAdd":
            return _insert_on_edge(d, VERTEX, loc[0], loc[1] if len(loc) > 1 else 0)
        if kind == "R1_remove":
            return _remove_capped(d, loc[0], CROSSING)
        if kind == "CapRemove":
            return _remove_capped(d, loc[0], VERTEX)
        if kind == "R2_add":
            return _r2_add(d, loc)
        if kind == "R2_remove":
            return _r2_remove(d, loc)
        if kind == "R3":
            return _r3(d, loc)
        if kind == "VertexRotate":
            return _vertex_rotate(d, loc)
        if kind == "LegSwap":
            return _leg_swap(d, loc)
        if kind == "LegUnswap":
            return _leg_unswap(d, loc)
        if kind == "Mirror":
            return mirror(d)
    except (IndexError, TypeError, ValueError) as exc:
        if isinstance(exc, MoveError):
            raise
        raise MoveError(f"bad location {loc} for {kind}: {exc}") from None
    raise MoveError(f"unknown move {kind!r}")


def applicable_moves(d: Diagram, kinds: Iterable[str] | None = None) -> list[MoveSpec]:
    """Every applicable move of the requested kinds (all kinds by default)."""
    kinds = set(MOVE_KINDS if kinds is None else kinds)
    out: list[MoveSpec] = []
    labels = d.labels + ([0] if d.free_loops else [])
    for kind in ("R1_add", "CapAdd"):
        if kind in kinds:
            out += [MoveSpec(kind, (lab, r)) for lab in labels for r in range(4)]
    for kind, nk in (("R1_remove", CROSSING), ("CapRemove", VERTEX)):
        if kind in kinds:
            out += [
                MoveSpec(kind, (i,))
                for i, n in enumerate(d.nodes)
                if n.kind == nk and _find_cap(n) is not None
            ]
    need_faces = kinds & {"R2_add", "R2_remove", "R3"}
    fs = faces(d) if need_faces else []
    if "R2_add" in kinds:
        comp = components(d)
        pairs = set()
        for face in fs:
            for a in face:
                for b2 in face:
                    if a.label != b2.label:
                        pairs.add((a.x, b2.x))
        darts = [(i, s) for i in range(len(d.nodes)) for s in range(4)]
        for a in darts:
            for b2 in darts:
                if comp[a[0]] != comp[b2[0]]:
                    pairs.add((a, b2))
        out += [MoveSpec("R2_add", (*a, *b2)) for a, b2 in sorted(pairs)]
    if "R2_remove" in kinds:
        for face in fs:
            if len(face) == 2:
                i, j = face[0].x[0], face[1].x[0]
                if i != j:
                    try:
                        _r2_remove(d, (i, j))
                    except MoveError:
                        continue
                    out.append(MoveSpec("R2_remove", (i, j)))
    if "R3" in kinds:
        for face in fs:
            if len(face) == 3:
                dart = face[0].x
                try:
                    _r3(d, dart)
                except MoveError:
                    continue
                out.append(MoveSpec("R3", dart))
    for i in d.vertex_indices():
        if "VertexRotate" in kinds:
            out.append(MoveSpec("VertexRotate", (i,)))
        for s in range(4):
            if "LegSwap" in kinds:
                out += [MoveSpec("LegSwap", (i, s, v)) for v in (0, 1)]
            if "LegUnswap" in kinds:
                try:
                    _leg_unswap(d, (i, s))
                except MoveError:
                    continue
                out.append(MoveSpec("LegUnswap", (i, s)))
    if "Mirror" in kinds:
        out.append(MoveSpec("Mirror", ()))
    return out


_GROWING = {"R1_add", "R2_add", "CapAdd", "LegSwap"}


def random_move(
    d: Diagram,
    rng: random.Random,
    kinds: Iterable[str] | None = None,
    max_nodes: int | None = None,
) -> MoveSpec | None:
    """Pick a kind uniformly among those applicable, then a location.

    When ``max_nodes`` is reached, moves that add nodes are excluded.
    """
    pool = list(MOVE_KINDS if kinds is None else kinds)
    if max_nodes is not None and len(d.nodes) >= max_nodes:
        pool = [k for k in pool if k not in _GROWING]
    rng.shuffle(pool)
    for kind in pool:
        options = applicable_moves(d, [kind])
        if options:
            return rng.choice(options)
    return None


def random_walk(
    d: Diagram,
    rng: random.Random,
    steps: int,
    kinds: Iterable[str] | None = None,
    max_nodes: int | None = None,
):
    """Yield ``(move, diagram)`` after each of ``steps`` random moves."""
    for _ in range(steps):
        m = random_move(d, rng, kinds, max_nodes)
        if m is None:
            return
        d = apply_move(d, m)
        yield m, d


# -- edge deletion ----------------------------------------------------------


def remove_edges(d: Diagram, edges: Iterable[int]) -> Diagram:
    """Delete whole graph edges (given by any of their labels).

    Every vertex must keep 0 or 2 of its ends; a vertex keeping two ends
    becomes a plain join. Crossings on deleted strands disappear.
    """
    wanted = set(edges)
    if not wanted:
        return d
    removed: set[int] = set()
    for strand in graph_edges(d) + _closed_strands(d):
        if strand & wanted:
            removed |= strand
    missing = wanted - removed
    if missing:
        raise DiagramError(f"unknown edge labels {sorted(missing)}")
    b = _Builder(d)
    drop, joins = [], []
    for i, n in enumerate(d.nodes):
        if n.kind == CROSSING:
            gone = [n.ends[s] in removed for s in range(4)]
            if not any(gone):
                continue
            drop.append(i)
            for s in (0, 1):
                if not gone[s]:
                    joins.append((n.ends[s], n.ends[s + 2]))
        else:
            kept = [e for e in n.ends if e not in removed]
            if len(kept) == 4:
                continue
            if len(kept) not in (0, 2):
                raise DegreeError(f"vertex {i} would keep {len(kept)} ends")
            drop.append(i)
            if kept:
                joins.append(tuple(kept))
    b.splice(drop, joins)
    return b.build()


def _closed_strands(d: Diagram) -> list[frozenset[int]]:
    uf = UnionFind()
    for lab in d.label_ends:
        uf.find(lab)
    for n in d.nodes:
        if n.kind == CROSSING:
            uf.union(n.ends[0], n.ends[2])
            uf.union(n.ends[1], n.ends[3])
    groups: dict[int, set[int]] = defaultdict(set)
    for lab in d.label_ends:
        groups[uf.find(lab)].add(lab)
    on_vertex = {e for n in d.nodes if n.kind == VERTEX for e in n.ends}
    return [frozenset(g) for g in groups.values() if not g & on_vertex]


# -- gadgets: twist regions, closures, random generation --------------------


def _twist_nodes(ex: int, ey: int, fx: int, fy: int, k: int, fresh) -> list[Node]:
    # e runs bottom-right -> top-right, f runs top-left -> bottom-left
    if k == 0:
        raise ValueError("empty twist")
    nodes = []
    bl, br = fy, ex
    for j in range(abs(k)):
        last = j == abs(k) - 1
        tl = fx if last else fresh()
        tr = ey if last else fresh()
        if k > 0:
            nodes.append(Node(CROSSING, (tr, tl, bl, br)))
        else:
            nodes.append(Node(CROSSING, (br, tr, tl, bl)))
        bl, br = tl, tr
    return nodes


def insert_twist(d: Diagram, e: Side, f: Side, k: int) -> Diagram:
    """Fill the 2-strand slot between sides ``e`` and ``f`` with ``b^k``.

    ``e`` and ``f`` must bound a common face (or lie in different
    components). ``b`` is the braid generator whose bracket is
    ``A^-1 * <identity> + A * <cup-cap>``.
    """
    if k == 0:
        return d
    b = _Builder(d)
    ex, ey = b.cut(e)
    fx, fy = b.cut(f)
    for n in _twist_nodes(ex, ey, fx, fy, k, b.fresh):
        b.add(n.kind, n.ends)
    return b.build()


def braid_closure(k: int) -> Diagram:
    """Closure of the 2-strand braid ``b^k``."""
    if k == 0:
        return Diagram((), 2)
    counter = iter(range(3, 10**9))
    nodes = _twist_nodes(1, 1, 2, 2, k, lambda: next(counter))
    return relabel(Diagram(tuple(nodes)))


def _random_side_pair(d: Diagram, rng: random.Random) -> tuple[Side, Side] | None:
    """Two distinct sides that may be joined planarly, possibly free loops."""
    options = []
    if d.nodes:
        for face in faces(d):
            for a in face:
                for b2 in face:
                    if a.label != b2.label:
                        options.append((a, b2))
    n_free = d.free_loops
    loop = Side(0, None, None)
    if n_free and d.nodes:
        side = rng.choice(rng.choice(faces(d)))
        options.append((side, loop))
        options.append((loop, side))
    if n_free >= 2:
        options.append((loop, loop))
    return rng.choice(options) if options else None


def random_diagram(seed: int, max_crossings: int, max_vertices: int) -> Diagram:
    """Deterministic random planar diagram grown from circles.

    The generator curls edges, clasps pairs of edges, and joins pairs of
    sides of a common face into new crossings or vertices, so every output
    is a planar code.
    """
    if max_crossings < 0 or max_vertices < 0:
        raise ValueError("bounds must be nonnegative")
    rng = random.Random(seed)
    d = Diagram((), rng.randint(1, 2))
    target_c = rng.randint(0, max_crossings)
    target_v = rng.randint(0, max_vertices)
    for _ in range(4 * (target_c + target_v) + 4):
        c, v = d.n_crossings, d.n_vertices
        ops = []
        if c < target_c:
            ops += ["curl", "join_x", "join_x"]
            if c + 2 <= target_c:
                ops.append("clasp")
        if v < target_v:
            ops += ["join_v", "cap"]
        if not ops:
            break
        if rng.random() < 0.1:
            d = Diagram(d.nodes, d.free_loops + 1)
        op = rng.choice(ops)
        labels = d.labels + ([0] if d.free_loops else [])
        if op in ("curl", "cap"):
            lab = rng.choice(labels)
            kind = CROSSING if op == "curl" else VERTEX
            d = _insert_on_edge(d, kind, lab, rng.randrange(4))
            continue
        pair = _random_side_pair(d, rng)
        if pair is None:
            d = _insert_on_edge(d, CROSSING if c < target_c else VERTEX, rng.choice(labels), rng.randrange(4))
            continue
        e, f = pair
        b = _Builder(d)
        ex, ey = b.cut(e)
        fx, fy = b.cut(f)
        if op == "clasp":
            e2, f2 = b.fresh(), b.fresh()
            b.add(CROSSING, (fx, e2, f2, ey))
            b.add(CROSSING, (f2, e2, fy, ex))
        elif op == "join_x":
            ends = [ex, ey, fx, fy]
            if rng.random() < 0.5:
                ends = ends[1:] + ends[:1]
            b.add(CROSSING, ends)
        else:
            b.add(VERTEX, (ex, ey, fx, fy))
        d = b.build()
    return relabel(d)
