import itertools
from collections import Counter

import pytest

from pmhkit.counterexamples import torus_q3_spec
from pmhkit.errors import CompletionError, InvalidParameterError
from pmhkit.graph import build_complete, build_cycle, build_hypercube, torus
from pmhkit.matchings import (MATCHING_OF_G, PAIRING, Matching, complete_matching,
                              count_perfect_matchings, double_factorial, enumerate_pairings,
                              enumerate_pairings_indexed, enumerate_perfect_matchings,
                              iter_pairing_mates, validate)

from conftest import small_corpus


def brute_force_pm_count(g):
    """Count edge subsets of size n/2 covering every vertex."""
    k = g.n // 2
    return sum(1 for sub in itertools.combinations(sorted(g.edges), k)
               if len({x for e in sub for x in e}) == g.n)


def ryser_permanent(a):
    n = len(a)
    total = 0
    for mask in range(1, 1 << n):
        cols = [j for j in range(n) if mask >> j & 1]
        prod = 1
        for row in a:
            prod *= sum(row[j] for j in cols)
        total += (-1) ** len(cols) * prod
    return (-1) ** n * total


def bipartite_pm_count(g):
    """Perfect matchings of a bipartite graph as a permanent."""
    color = {0: 0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in color:
                color[w] = 1 - color[v]
                stack.append(w)
            assert color[w] != color[v]
    left = [v for v in range(g.n) if color[v] == 0]
    right = [v for v in range(g.n) if color[v] == 1]
    return ryser_permanent([[int(g.has_edge(u, w)) for w in right] for u in left])


class TestValidate:
    def test_examples(self):
        c4 = build_cycle(4)
        assert validate(Matching([(0, 1), (2, 3)], 4), c4, MATCHING_OF_G)
        diag = Matching([(0, 2), (1, 3)], 4)
        assert not validate(diag, c4, MATCHING_OF_G)
        assert validate(diag, c4, PAIRING)
        bad = Matching([(0, 1), (1, 2)], 4)
        assert not validate(bad, c4, MATCHING_OF_G)
        assert not validate(bad, c4, PAIRING)

    def test_not_perfect(self):
        assert not validate(Matching([(0, 1)], 4), build_cycle(4), PAIRING)

    def test_host_mismatch(self):
        with pytest.raises(InvalidParameterError):
            validate(Matching([(0, 1)], 2), build_cycle(4))


class TestPerfectMatchings:
    @pytest.mark.parametrize("g,count", [(build_complete(4), 3), (build_cycle(6), 2)])
    def test_trivial_counts(self, g, count):
        assert count_perfect_matchings(g) == count

    def test_q3_against_subset_oracle(self):
        g = build_hypercube(3)
        assert brute_force_pm_count(g) == 9
        assert count_perfect_matchings(g) == 9

    def test_c4c4_against_permanent(self):
        g = torus(4, 4)
        assert bipartite_pm_count(g) == 272
        assert count_perfect_matchings(g) == 272

    def test_odd_order_is_empty(self):
        assert list(enumerate_perfect_matchings(build_cycle(5))) == []

    def test_each_once_and_valid(self):
        for g in small_corpus(12):
            ms = list(enumerate_perfect_matchings(g))
            assert len(set(ms)) == len(ms)
            assert all(validate(m, g) for m in ms)

    def test_deterministic_order(self):
        g = torus(4, 3)
        assert list(enumerate_perfect_matchings(g)) == list(enumerate_perfect_matchings(g))
        first = next(enumerate_perfect_matchings(build_cycle(6)))
        assert first.sorted_pairs() == [(0, 1), (2, 3), (4, 5)]

    def test_equals_filtered_pairings(self):
        for g in small_corpus(12):
            if g.n % 2:
                continue
            filtered = {m for m in enumerate_pairings(g.n)
                        if all(g.has_edge(*e) for e in m.pairs)}
            assert filtered == set(enumerate_perfect_matchings(g)), g.label


class TestPairings:
    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
    def test_counts_and_distinct(self, n):
        ps = list(enumerate_pairings(n))
        assert len(ps) == double_factorial(n - 1)
        assert len(set(ps)) == len(ps)
        assert all(m.is_perfect for m in ps)

    def test_16(self):
        assert sum(1 for _ in iter_pairing_mates(16)) == 2027025 == double_factorial(15)

    def test_small(self):
        assert len(list(enumerate_pairings(4))) == 3
        assert len(list(enumerate_pairings(6))) == 15

    @pytest.mark.parametrize("n", [0, 3, 7])
    def test_odd_rejected(self, n):
        with pytest.raises(InvalidParameterError):
            list(enumerate_pairings(n))

    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
    @pytest.mark.parametrize("w", [1, 2, 3, 7])
    def test_shards_partition_stream(self, n, w):
        full = list(enumerate_pairings(n))
        merged = Counter()
        for k in range(w):
            merged.update(enumerate_pairings(n, shard=(k, w)))
        assert merged == Counter(full)
        idx = sorted(i for k in range(w) for i, _ in enumerate_pairings_indexed(n, shard=(k, w)))
        assert idx == list(range(len(full)))

    def test_bad_shard(self):
        with pytest.raises(InvalidParameterError):
            list(enumerate_pairings(4, shard=(2, 2)))

    def test_fixed_pair(self):
        ps = list(enumerate_pairings(8, fixed=(0, 5)))
        assert len(ps) == double_factorial(5)
        assert all((0, 5) in m for m in ps)
        full = [m for m in enumerate_pairings(8) if (0, 5) in m]
        assert ps == full


class TestComplete:
    def test_c6(self):
        out = complete_matching(build_cycle(6), Matching([(0, 1)], 6))
        assert out.sorted_pairs() == [(0, 1), (2, 3), (4, 5)]

    def test_figure_edges(self):
        spec = torus_q3_spec(6)
        g = torus(6, 3)
        partial = Matching(spec.listed_ids(), 18)
        out = complete_matching(g, partial)
        assert len(out) == 9
        assert partial.pairs <= out.pairs
        assert validate(out, g)

    def test_non_edge(self):
        with pytest.raises(CompletionError) as err:
            complete_matching(build_cycle(4), Matching([(0, 2)], 4))
        assert err.value.partial == Matching([(0, 2)], 4)

    def test_blocked(self):
        # isolating vertex 0's neighbours leaves 0 uncoverable
        with pytest.raises(CompletionError):
            complete_matching(build_cycle(6), Matching([(1, 2), (4, 5)], 6))

    def test_contains_partial(self):
        for g in small_corpus(12):
            for m in itertools.islice(enumerate_perfect_matchings(g), 5):
                part = Matching(m.sorted_pairs()[: len(m) // 2], g.n)
                out = complete_matching(g, part)
                assert part.pairs <= out.pairs and validate(out, g)
