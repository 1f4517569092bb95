import doctest

from hypothesis import given
from hypothesis import strategies as st

import rgraph.unionfind
from rgraph.unionfind import UnionFind


def test_doctests():
    assert doctest.testmod(rgraph.unionfind).failed == 0


@given(st.lists(st.tuples(st.integers(0, 15), st.integers(0, 15)), max_size=30))
def test_matches_naive_partition(pairs):
    uf = UnionFind(range(16))
    groups = [{i} for i in range(16)]
    for a, b in pairs:
        uf.union(a, b)
        ga = next(g for g in groups if a in g)
        gb = next(g for g in groups if b in g)
        if ga is not gb:
            groups.remove(gb)
            ga |= gb
    assert uf.n_sets == len(groups)
    for g in groups:
        assert len({uf.find(x) for x in g}) == 1
