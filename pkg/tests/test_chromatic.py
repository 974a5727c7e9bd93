import random
from itertools import combinations

import pytest

from hurwitzpb.algebra import Polynomial
from hurwitzpb.chromatic import (
    SimpleGraph,
    chromatic_polynomial,
    complete_graph,
    disjoint_union,
    empty_graph,
    format_edge_list,
    parse_edge_list,
    pbar,
    pbar_bruteforce,
    theorem35_check,
    theorem35_sum,
)
from hurwitzpb.errors import SizeLimitError
from hurwitzpb.mstirling import m_stirling_explicit
from hurwitzpb.stirling import stirling_second

X = Polynomial.x()


def rising(n):
    p = Polynomial([1])
    for t in range(n):
        p = p * (X + t)
    return p


def count_colorings(g, x):
    """Proper colorings by enumeration."""
    from itertools import product

    return sum(
        all(c[u] != c[v] for u, v in g.edges)
        for c in product(range(x), repeat=g.vertex_count)
    )


def all_graphs(nmax):
    for n in range(nmax + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield SimpleGraph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


class TestGraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            SimpleGraph(2, frozenset({(1, 1)}))
        with pytest.raises(ValueError):
            SimpleGraph(2, frozenset({(0, 2)}))
        assert SimpleGraph(3, frozenset({(2, 0)})).edges == {(0, 2)}

    def test_union(self):
        g = disjoint_union(empty_graph(2), complete_graph(2))
        assert g.vertex_count == 4 and g.edges == {(2, 3)}
        h = complete_graph(3)
        assert disjoint_union(empty_graph(0), h) == h

    def test_contract_merges_parallel(self):
        tri = complete_graph(3)
        assert tri.contract_edge((0, 1)) == SimpleGraph(2, frozenset({(0, 1)}))

    def test_edge_list_round_trip(self):
        g = SimpleGraph(4, frozenset({(0, 1), (1, 3)}))
        assert parse_edge_list(format_edge_list(g)) == g
        with pytest.raises(ValueError):
            parse_edge_list("4\n0 1\n")


class TestChromatic:
    def test_examples(self):
        assert chromatic_polynomial(empty_graph(3)) == X**3
        assert chromatic_polynomial(complete_graph(3)) == X * (X - 1) * (X - 2)
        assert chromatic_polynomial(complete_graph(2)) == X**2 - X

    def test_against_coloring_count(self):
        for g in all_graphs(4):
            p = chromatic_polynomial(g)
            for x in range(4):
                assert p(x) == count_colorings(g, x)

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            chromatic_polynomial(empty_graph(13))


class TestPbar:
    def test_examples(self):
        assert pbar(empty_graph(1)) == X
        for n in range(7):
            assert pbar(complete_graph(n)) == rising(n)
            assert pbar(empty_graph(n)) == X**n

    def test_bruteforce_examples(self):
        assert pbar_bruteforce(complete_graph(2), 2) == 6
        assert pbar_bruteforce(empty_graph(2), 2) == 4
        assert pbar_bruteforce(empty_graph(1), 3) == 3

    def test_bruteforce_all_small_graphs(self):
        for g in all_graphs(4):
            p = pbar(g)
            for x in range(4):
                assert pbar_bruteforce(g, x) == p(x)

    def test_bruteforce_limits(self):
        with pytest.raises(SizeLimitError):
            pbar_bruteforce(empty_graph(6), 1)
        with pytest.raises(SizeLimitError):
            pbar_bruteforce(empty_graph(1), 4)

    def test_deletion_contraction_random(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randint(2, 6)
            g = SimpleGraph(n, frozenset(p for p in combinations(range(n), 2) if rng.random() < 0.5))
            for e in g.edges:
                assert pbar(g) == pbar(g.delete_edge(e)) + pbar(g.contract_edge(e))

    def test_multiplicative(self):
        assert pbar(disjoint_union(empty_graph(1), complete_graph(2))) == X * X * (X + 1)
        g = SimpleGraph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
        h = complete_graph(3)
        assert pbar(disjoint_union(g, h)) == pbar(g) * pbar(h)


class TestGraphSum:
    def test_examples(self):
        assert theorem35_check(2, 3, 2) and theorem35_sum(2, 3, 2) == 7
        assert theorem35_check(0, 1, 3) and theorem35_sum(0, 1, 3) == 6

    def test_m0(self):
        for n in range(6):
            for k in range(6):
                assert theorem35_sum(n, k, 0) == stirling_second(n, k)

    def test_grid(self):
        for n in range(6):
            for m in range(4):
                for k in range(n + m + 1):
                    assert theorem35_check(n, k, m)
                    assert theorem35_sum(n, k, m) == m_stirling_explicit(n, k, m)
