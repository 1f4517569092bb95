"""
R for a few small links
=======================

A link diagram goes in as a list of crossings. The bracket is computed,
multiplied by its mirror, and rewritten in L = A^4 + A^-4.
"""

from rgraph import kauffman_bracket, parse_diagram, r_link, specialize, r_graph
from rgraph.oracles import three_colorings, writhe_check_knot

hopf = parse_diagram("X 4 1 3 2\nX 2 3 1 4")
trefoil = parse_diagram("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3")

# the bracket itself depends on the diagram, the product does not
print(kauffman_bracket(trefoil).format("A"))
print(r_link(trefoil).format())

# values at L = 2, 1, -1: a power of 4 per component, the number of
# 3-colourings, and always 1 for links
for name, d in [("hopf", hopf), ("trefoil", trefoil)]:
    rep = specialize(r_graph(d))
    print(name, rep.r.format(), [str(v) for v in rep.values()], "colourings:", three_colorings(d))

# the same polynomial from the oriented-knot route through the Jones polynomial
check = writhe_check_knot(trefoil)
print("writhe", check.writhe, "V(t) =", check.jones.format("t"), "agrees:", check.ok)
