"""
Moves, skein relations and unlinked graphs
==========================================
"""

import random

from rgraph import braid_closure, r_graph, r_link, random_diagram, random_walk
from rgraph.cli import default_corpus
from rgraph.diagram import parse_diagram
from rgraph.oracles import constituent_links, random_skein_context, skein_relation_check, unlinked_heuristic

# R stays put along a random walk of moves, vertex moves included
d = random_diagram(27, 6, 2)
start = r_graph(d)
for _, d in random_walk(d, random.Random(27), 30, max_nodes=14):
    assert r_graph(d) == start
print("30 moves, R =", start.format())

# the cubic relation on closed 2-braids
r = [r_link(braid_closure(k)).format() for k in (3, 2, 1, 0)]
print("closures of b^3, b^2, b, 1:", r)

g, e, f = random_skein_context(4, 3, 2)
print("cubic relation in a random graph context:", skein_relation_check("cubic_R", g, e, f))

# deleting edges of a graph can only give links; if all of them look
# like unlinks the graph screens as unlinked, even when R is not trivial
corpus = default_corpus()
for name in ("B_prime", "B_double_prime", "C_prime"):
    graph = parse_diagram((corpus / f"{name}.pd").read_text())
    links = [r_link(x).format() for x in constituent_links(graph)]
    print(name, unlinked_heuristic(graph), r_graph(graph).format(), links)
