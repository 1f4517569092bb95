"""
Embedded graphs
===============

Each 4-valent vertex expands into two smoothings (weight L) and the two
crossings (weight 1), all divided by (L+1)(L+2). The result is a
rational function in L.
"""

from rgraph import parse_diagram, r_graph, r_link
from rgraph.invariant import expand_vertices

bouquet = parse_diagram("V 1 1 2 2")
for power, link in expand_vertices(bouquet):
    print(f"L^{power} *", r_link(link).format())
print("sum over (L+1)(L+2):", r_graph(bouquet).format())

# two different embeddings of the handcuff graph
plain = parse_diagram("V 1 2 3 1\nV 4 4 3 2")
tangled = parse_diagram("X 1 2 3 4\nX 4 3 5 6\nV 6 7 8 1\nV 2 8 7 5")
print(r_graph(plain).format(), "vs", r_graph(tangled).format())

# at L = 2 only the abstract graph matters
print(r_graph(plain).evaluate(2), r_graph(tangled).evaluate(2))

theta_pair = parse_diagram("V 1 2 3 4\nV 5 6 1 4\nV 5 3 7 8\nV 6 8 7 2")
r = r_graph(theta_pair)
print(r.format(), r.evaluate(2), r.evaluate(1), r.evaluate(-1))
