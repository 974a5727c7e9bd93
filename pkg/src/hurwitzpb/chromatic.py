"""Chromatic polynomials of small simple graphs.

``pbar`` is ``(-1)^|V| P(G, -x)``, which Stanley showed counts pairs of a
map ``V -> {1..x}`` and a compatible acyclic orientation. Both the
deletion-contraction route and a brute-force count are available.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial

from .algebra import Polynomial
from .errors import SizeLimitError
from .mstirling import m_stirling_explicit

MAX_VERTICES = 12
BRUTE_MAX_VERTICES = 5
BRUTE_MAX_EDGES = 8
BRUTE_MAX_X = 3


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            u, v = min(u, v), max(u, v)
            if u < 0 or v >= self.vertex_count:
                raise ValueError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    def delete_edge(self, e: tuple[int, int]) -> "SimpleGraph":
        return SimpleGraph(self.vertex_count, self.edges - {e})

    def contract_edge(self, e: tuple[int, int]) -> "SimpleGraph":
        """Merge ``e[1]`` into ``e[0]``; loops vanish and parallel edges merge."""
        keep, gone = e

        def relabel(w: int) -> int:
            w = keep if w == gone else w
            return w - 1 if w > gone else w

        new = set()
        for u, v in self.edges:
            if (u, v) == e:
                continue
            u, v = relabel(u), relabel(v)
            if u != v:
                new.add((min(u, v), max(u, v)))
        return SimpleGraph(self.vertex_count - 1, frozenset(new))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(n), 2)))


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    off = g.vertex_count
    return SimpleGraph(
        g.vertex_count + h.vertex_count,
        g.edges | {(u + off, v + off) for u, v in h.edges},
    )


@lru_cache(maxsize=4096)
def _chromatic(n: int, edges: frozenset) -> Polynomial:
    if not edges:
        return Polynomial([0] * n + [1])
    g = SimpleGraph(n, edges)
    e = min(edges)
    return _chromatic(n, g.delete_edge(e).edges) - _chromatic(n - 1, g.contract_edge(e).edges)


def chromatic_polynomial(g: SimpleGraph) -> Polynomial:
    """``P(G, x)`` by deletion-contraction on the smallest edge."""
    if g.vertex_count > MAX_VERTICES:
        raise SizeLimitError(f"{g.vertex_count} vertices exceeds limit {MAX_VERTICES}")
    return _chromatic(g.vertex_count, g.edges)


def pbar(g: SimpleGraph) -> Polynomial:
    p = chromatic_polynomial(g).reflect()
    return -p if g.vertex_count % 2 else p


def _is_acyclic(n: int, arcs: list[tuple[int, int]]) -> bool:
    # repeatedly strip sinks
    alive = set(range(n))
    out = {v: set() for v in range(n)}
    for u, v in arcs:
        out[u].add(v)
    while alive:
        sinks = [v for v in alive if not (out[v] & alive)]
        if not sinks:
            return False
        alive.difference_update(sinks)
    return True


def pbar_bruteforce(g: SimpleGraph, x: int) -> int:
    """Count pairs (map, acyclic orientation) with ``sigma(u) >= sigma(v)`` on every arc ``u -> v``."""
    n, edges = g.vertex_count, sorted(g.edges)
    if n > BRUTE_MAX_VERTICES or len(edges) > BRUTE_MAX_EDGES or not 0 <= x <= BRUTE_MAX_X:
        raise SizeLimitError("brute-force enumeration limited to 5 vertices, 8 edges, x <= 3")
    total = 0
    for flips in product((False, True), repeat=len(edges)):
        arcs = [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]
        if not _is_acyclic(n, arcs):
            continue
        for sigma in product(range(1, x + 1), repeat=n):
            if all(sigma[u] >= sigma[v] for u, v in arcs):
                total += 1
    return total


def theorem35_sum(n: int, k: int, m: int) -> Fraction:
    """``(1/k!) sum_j (-1)^(k-j) C(k, j) pbar(O_n + K_m)(j)``."""
    p = pbar(disjoint_union(empty_graph(n), complete_graph(m)))
    total = sum((-1) ** (k - j) * comb(k, j) * p(j) for j in range(k + 1))
    return Fraction(total) / factorial(k)


def theorem35_check(n: int, k: int, m: int) -> bool:
    if n + m > MAX_VERTICES:
        raise SizeLimitError(f"O_{n} + K_{m} exceeds {MAX_VERTICES} vertices")
    return theorem35_sum(n, k, m) == m_stirling_explicit(n, k, m)


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty graph description")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError(f"first line must be 'n <vertex_count>', got {lines[0]!r}")
    n = int(head[1])
    edges = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.add((min(u, v), max(u, v)))
    return SimpleGraph(n, frozenset(edges))


def format_edge_list(g: SimpleGraph) -> str:
    return "\n".join([f"n {g.vertex_count}"] + [f"{u} {v}" for u, v in sorted(g.edges)]) + "\n"
