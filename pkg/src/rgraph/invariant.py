"""The invariant R for links and 4-valent embedded graphs.

For a link diagram, ``R(A^4 + A^-4) = <D>(A) <D>(A^-1)``; with the loop
convention of :mod:`rgraph.bracket` this gives ``R = L + 2`` for the
unknot and 1 for the empty diagram, and no orientation is needed because
writhe factors cancel in the product.

A 4-valent vertex is expanded as

    P(L) * (L*[smooth I] + L*[smooth II] + [crossing +] + [crossing -])

with ``P(L) = 1 / ((L+1)(L+2))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .bracket import A_PAIRS, B_PAIRS, contract, kauffman_bracket, sweep_order
from .diagram import CROSSING, Diagram, _Builder
from .polyring import (
    LambdaRational,
    LaurentPoly,
    chebyshev_to_lambda,
    rational_evaluate,
    rational_reduce,
)

__all__ = [
    "SMOOTH_I",
    "SMOOTH_II",
    "CROSS_POS",
    "CROSS_NEG",
    "VertexResolution",
    "InvariantReport",
    "IntegrityError",
    "bracket_product",
    "r_link",
    "vertex_resolutions",
    "expand_vertices",
    "resolve",
    "r_graph",
    "specialize",
    "evaluate",
]

SMOOTH_I = "SmoothI"
SMOOTH_II = "SmoothII"
CROSS_POS = "CrossPos"
CROSS_NEG = "CrossNeg"
TAGS = (SMOOTH_I, SMOOTH_II, CROSS_POS, CROSS_NEG)

_L = LaurentPoly.monomial(1)


class IntegrityError(AssertionError):
    """A bracket product failed its symmetry or exponent check."""


@dataclass(frozen=True)
class VertexResolution:
    choices: tuple[str, ...]

    @property
    def smooth_count(self) -> int:
        return sum(1 for c in self.choices if c in (SMOOTH_I, SMOOTH_II))


@dataclass(frozen=True)
class InvariantReport:
    r: LambdaRational
    at2: Fraction
    at1: object
    atm1: object

    def values(self) -> tuple:
        return (self.at2, self.at1, self.atm1)


def _to_lambda(q: LaurentPoly) -> LaurentPoly:
    """Check a product polynomial in A and rewrite it in lambda."""
    if not q.is_symmetric():
        raise IntegrityError(f"bracket product not symmetric in A: {q!r}")
    if any(e % 4 for e, _ in q.items()):
        raise IntegrityError(f"bracket product has exponents not divisible by 4: {q!r}")
    return chebyshev_to_lambda(q.compress(4))


def bracket_product(d: Diagram, method: str = "contract") -> LaurentPoly:
    """``<d>(A) * <d>(A^-1)`` as a Laurent polynomial in A."""
    b = kauffman_bracket(d, method)
    return b * b.invert_variable()


def r_link(d: Diagram, method: str = "contract") -> LaurentPoly:
    """R of a link diagram as a polynomial in lambda."""
    if d.n_vertices:
        raise ValueError("r_link needs a diagram without vertices")
    return _to_lambda(bracket_product(d, method))


def vertex_resolutions(d: Diagram) -> Iterator[VertexResolution]:
    for choice in product(TAGS, repeat=d.n_vertices):
        yield VertexResolution(choice)


def resolve(d: Diagram, res: VertexResolution) -> Diagram:
    """Replace the k-th vertex of ``d`` according to ``res.choices[k]``."""
    vs = d.vertex_indices()
    if len(vs) != len(res.choices):
        raise ValueError("resolution does not match vertex count")
    b = _Builder(d)
    removed, joins = [], []
    for i, tag in zip(vs, res.choices):
        a0, a1, a2, a3 = d.nodes[i].ends
        if tag == SMOOTH_I:
            removed.append(i)
            joins += [(a0, a1), (a2, a3)]
        elif tag == SMOOTH_II:
            removed.append(i)
            joins += [(a1, a2), (a3, a0)]
        elif tag == CROSS_POS:
            b.nodes[i] = [CROSSING, [a0, a1, a2, a3]]
        elif tag == CROSS_NEG:
            b.nodes[i] = [CROSSING, [a1, a2, a3, a0]]
        else:
            raise ValueError(f"unknown resolution tag {tag!r}")
    b.splice(removed, joins)
    return b.build()


def expand_vertices(d: Diagram) -> list[tuple[int, Diagram]]:
    """All ``4^V`` vertex resolutions as ``(power of lambda, link diagram)``."""
    return [(res.smooth_count, resolve(d, res)) for res in vertex_resolutions(d)]


# Vertex weights in the doubled state sum. A vertex replaced by slot pairing
# p in the A-copy and q in the A^-1-copy carries T[p][q]; the index 0 is
# pairing (01)(23) and 1 is (12)(30).
_T_SAME = LaurentPoly({4: 1, 0: 2, -4: 1})  # lambda + 2
_T_CROSS = LaurentPoly({2: 1, -2: 1})
_VERTEX_T = ((_T_SAME, _T_CROSS), (_T_CROSS, _T_SAME))
_PAIRINGS = (A_PAIRS, B_PAIRS)


def _numerator_fused(d: Diagram) -> LaurentPoly:
    vs = d.vertex_indices()
    cross_terms = ((A_PAIRS, 1), (B_PAIRS, -1))
    order = sweep_order(d)
    z: dict[tuple, LaurentPoly] = {}
    for p in product((0, 1), repeat=len(vs)):
        terms = [cross_terms] * len(d.nodes)
        for i, k in zip(vs, p):
            terms[i] = ((_PAIRINGS[k], 0),)
        z[p] = contract(d, terms, order)
    # w[p] = sum_q zbar[q] * prod_v T[p_v][q_v], one vertex axis at a time
    w = {p: zp.invert_variable() for p, zp in z.items()}
    for axis in range(len(vs)):
        nxt = {}
        for p in w:
            lo = p[:axis] + (0,) + p[axis + 1 :]
            hi = p[:axis] + (1,) + p[axis + 1 :]
            row = _VERTEX_T[p[axis]]
            nxt[p] = w[lo] * row[0] + w[hi] * row[1]
        w = nxt
    total = LaurentPoly()
    for p, zp in z.items():
        if zp and w[p]:
            total = total + zp * w[p]
    return total


def r_graph(d: Diagram, method: str = "fused") -> LambdaRational:
    """R of an embedded-graph diagram as a reduced rational function.

    ``method="expand"`` sums ``L^s * r_link`` over every vertex resolution.
    ``method="fused"`` (default) gets the same numerator from ``2^V``
    brackets, by expanding each resolved crossing into its smoothings
    before taking the product with the mirrored copy.
    """
    n_v = d.n_vertices
    if method == "expand":
        num = LaurentPoly()
        for power, link in expand_vertices(d):
            num = num + _L**power * r_link(link)
    elif method == "fused":
        num = _to_lambda(_numerator_fused(d))
    else:
        raise ValueError(f"unknown method {method!r}")
    return rational_reduce(num, n_v, n_v)


def specialize(r: LambdaRational) -> InvariantReport:
    return InvariantReport(
        r, rational_evaluate(r, 2), rational_evaluate(r, 1), rational_evaluate(r, -1)
    )


def evaluate(d: Diagram) -> InvariantReport:
    return specialize(r_graph(d))
