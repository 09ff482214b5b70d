"""
The monoid action of simple reflections on clans and the weak order graph.

Each simple root index i in 1..n-1 either moves a clan up one dimension or
fixes it.  The moving cases, looking at the adjacent symbols (c_i, c_{i+1}):

* a sign then a number whose mate lies to the right: swap the two symbols;
* a number whose mate lies to the left, then a sign: swap;
* two unequal numbers, mate of the first left of mate of the second: swap;
* two opposite signs: replace both by a fresh matching pair.

The first three are "complex" swaps, the last is the non-compact imaginary
case.  Anything else fixes the clan.  Applying a word of indices right to
left gives the monoid action; on reduced words it is independent of the
word chosen, which lets :func:`act` pick a canonical one.

The weak order graph has all (p,q)-clans as nodes and one labeled edge per
non-fixing application.  Its sources are the sign-only clans, its unique
sink is the dense clan, and every edge raises orbit dimension by one.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import clans, permutations
from .clans import MINUS, PLUS, Clan
from .permutations import Perm

# In GL(p+q) acting through GL(p) x GL(q), every non-compact imaginary root
# is type I: the cross action moves the orbit (see cross_swap), so the weak
# order graph has no double edges and every path to the dense clan crosses
# zero of them.  Brion's expansion weights a path by 2^(#double edges).
DOUBLE_EDGES_ON_PATH = 0


class RootType(enum.Enum):
    COMPLEX_SWAP = "complex-swap"
    NONCOMPACT_IMAGINARY = "noncompact-imaginary"
    FIXED = "fixed"


def _is_sign(s) -> bool:
    return s == PLUS or s == MINUS


def classify_root(i: int, gamma: Clan) -> RootType:
    """Which action rule (if any) applies to gamma at index i."""
    n = len(gamma)
    if not 1 <= i <= n - 1:
        raise IndexError(f"root index must lie in 1..{n - 1}, got {i}")
    a, b = gamma[i - 1], gamma[i]
    if _is_sign(a) and _is_sign(b):
        return RootType.NONCOMPACT_IMAGINARY if a != b else RootType.FIXED
    if _is_sign(a):
        # b is a number at position i+1; moves iff its mate is to the right
        return RootType.COMPLEX_SWAP if clans.mate(gamma, i + 1) > i + 1 else RootType.FIXED
    if _is_sign(b):
        # a is a number at position i; moves iff its mate is to the left
        return RootType.COMPLEX_SWAP if clans.mate(gamma, i) < i else RootType.FIXED
    if a == b:
        return RootType.FIXED
    return (
        RootType.COMPLEX_SWAP
        if clans.mate(gamma, i) < clans.mate(gamma, i + 1)
        else RootType.FIXED
    )


def cross_swap(i: int, gamma: Clan) -> Clan:
    """Cross action of s_i: plainly exchange the symbols at i, i+1."""
    raw = list(gamma)
    raw[i - 1], raw[i] = raw[i], raw[i - 1]
    return clans.normalize(raw)


def act_simple(i: int, gamma: Clan) -> Clan:
    """s_i acting on gamma; returns gamma itself in the fixed case.

    >>> act_simple(2, ('+', '+', '-', '-'))
    ('+', 1, 1, '-')
    """
    kind = classify_root(i, gamma)
    if kind is RootType.FIXED:
        return gamma
    if kind is RootType.COMPLEX_SWAP:
        return cross_swap(i, gamma)
    # non-compact imaginary: the two opposite signs become a nested pair.
    # Type I certificate: the cross action must move the clan.
    assert cross_swap(i, gamma) != gamma
    fresh = len(gamma) + 1  # any unused label; normalize renames it
    raw = list(gamma)
    raw[i - 1] = fresh
    raw[i] = fresh
    return clans.normalize(raw)


def act_word(word: Sequence[int], gamma: Clan) -> Clan:
    """Apply a word of simple-root indices, rightmost letter first.

    >>> act_word((2, 1, 3, 2, 3, 4), ('+', '-', '+', '-', '+'))
    (1, 2, '+', 2, 1)
    """
    for i in reversed(tuple(word)):
        gamma = act_simple(i, gamma)
    return gamma


def act(w: Perm, gamma: Clan) -> Clan:
    """The monoid action of the permutation w on gamma.

    Computed along one reduced word; any reduced word gives the same clan.
    """
    if len(w) != len(gamma):
        raise ValueError(f"degree mismatch: permutation in S_{len(w)}, clan of length {len(gamma)}")
    return act_word(permutations.reduced_word(w), gamma)


class Edge(NamedTuple):
    src: Clan
    dst: Clan
    root: int
    mult: int


@dataclass(frozen=True)
class WeakOrderGraph:
    p: int
    q: int
    nodes: tuple[Clan, ...]
    edges: tuple[Edge, ...]


def weak_order_graph(p: int, q: int, guard: int | None = None) -> WeakOrderGraph:
    """The full weak order graph on (p,q)-clans.

    Edge multiplicity is computed honestly (2 would mean a type II root,
    i.e. a cross-action fixed point) even though it is always 1 here.
    """
    nodes = tuple(clans.enumerate_clans(p, q, guard=guard))
    n = p + q
    edges = []
    for gamma in nodes:
        for i in range(1, n):
            kind = classify_root(i, gamma)
            if kind is RootType.FIXED:
                continue
            target = act_simple(i, gamma)
            if kind is RootType.NONCOMPACT_IMAGINARY and cross_swap(i, gamma) == gamma:
                mult = 2
            else:
                mult = 1
            edges.append(Edge(gamma, target, i, mult))
    return WeakOrderGraph(p, q, nodes, tuple(edges))


def sources(graph: WeakOrderGraph) -> list[Clan]:
    """Nodes with no incoming edge; these are the sign-only clans."""
    targets = {e.dst for e in graph.edges}
    return [g for g in graph.nodes if g not in targets]


def sinks(graph: WeakOrderGraph) -> list[Clan]:
    """Nodes with no outgoing edge; the dense clan is the only one."""
    srcs = {e.src for e in graph.edges}
    return [g for g in graph.nodes if g not in srcs]


def graph_dot(graph: WeakOrderGraph) -> str:
    """DOT text: nodes labeled by clan text, edges by their root index."""
    lines = ["digraph weak_order {", "  rankdir=BT;"]
    for gamma in graph.nodes:
        lines.append(f'  "{clans.format_clan(gamma)}";')
    for e in graph.edges:
        attrs = f"label={e.root}"
        if e.mult != 1:
            attrs += f", style=bold, penwidth={e.mult}"
        lines.append(
            f'  "{clans.format_clan(e.src)}" -> "{clans.format_clan(e.dst)}" [{attrs}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json_dict(graph: WeakOrderGraph) -> dict:
    return {
        "p": graph.p,
        "q": graph.q,
        "nodes": [clans.format_clan(g) for g in graph.nodes],
        "edges": [
            {
                "src": clans.format_clan(e.src),
                "dst": clans.format_clan(e.dst),
                "root": e.root,
                "mult": e.mult,
            }
            for e in graph.edges
        ],
    }


def graph_json(graph: WeakOrderGraph) -> str:
    return json.dumps(graph_json_dict(graph), indent=2, sort_keys=True) + "\n"


def w_set(gamma: Clan, guard: int | None = None) -> list[Perm]:
    """All w of length codim(gamma) whose action takes gamma to the dense clan.

    These index the Schubert classes appearing in the orbit closure's
    fundamental class.
    """
    p, q = clans.signature(gamma)
    n = p + q
    codim = n * (n - 1) // 2 - clans.orbit_dimension(gamma)
    target = clans.dense_clan(p, q)
    return [
        w
        for w in permutations.enumerate_by_length(n, codim, guard=guard)
        if act(w, gamma) == target
    ]


def brion_class(gamma: Clan, guard: int | None = None) -> dict[Perm, int]:
    """Schubert-basis expansion of the orbit closure's class: each w in the
    w-set contributes 2^(#double edges on its path), which is always 2^0
    here since all edges are single."""
    coeff = 2 ** DOUBLE_EDGES_ON_PATH
    return {w: coeff for w in w_set(gamma, guard=guard)}
