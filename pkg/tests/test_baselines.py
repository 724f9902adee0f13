import math

import pytest
from hypothesis import given, settings

from cisenum import (
    BruteForceCapExceeded,
    CanonicalSolutionSet,
    DuplicateSolutionError,
    brute_force_enumerate,
    simple_enumerate,
)
from cisenum.baselines import collect
from cisenum.graph import clique_graph, cycle_graph, path_graph, star_graph

from oracles import oracle_solutions, small_graphs
from test_kdelta import SAMPLE_K5


class TestBruteForce:
    def test_sample(self, sample):
        assert list(brute_force_enumerate(sample, 5)) == SAMPLE_K5

    def test_star(self):
        sols = brute_force_enumerate(star_graph(5), 3)
        assert len(sols) == 10 and all(0 in s for s in sols)

    def test_cycle_full(self):
        assert list(brute_force_enumerate(cycle_graph(6), 6)) == [tuple(range(6))]

    def test_lexicographic(self, sample):
        sets = brute_force_enumerate(sample, 3).sets
        assert list(sets) == sorted(sets)

    def test_cap(self):
        with pytest.raises(BruteForceCapExceeded, match="cap of 100"):
            brute_force_enumerate(path_graph(20), 10, cap=100)

    def test_rejects_k0(self, sample):
        with pytest.raises(ValueError):
            brute_force_enumerate(sample, 0)


class TestSimple:
    def test_sample(self, sample, backend):
        assert collect("simple", sample, 5, backend)[0].sets == tuple(SAMPLE_K5)

    def test_clique(self, backend):
        assert simple_enumerate(clique_graph(5), 3, backend=backend).solutions == 10

    def test_path(self, backend):
        assert simple_enumerate(path_graph(6), 3, backend=backend).solutions == 4

    def test_k_errors(self, sample, backend):
        with pytest.raises(ValueError):
            simple_enumerate(sample, 0, backend=backend)
        assert simple_enumerate(sample, 9, backend=backend).solutions == 0

    @settings(max_examples=150, deadline=None)
    @given(small_graphs(max_n=10))
    def test_matches_oracle_without_duplicates(self, g):
        from cisenum import BACKENDS

        for backend in BACKENDS:
            for k in range(1, g.n + 1):
                seen = []
                simple_enumerate(g, k, lambda s, i: seen.append(tuple(sorted(s))), backend=backend)
                assert len(set(seen)) == len(seen)
                assert sorted(seen) == oracle_solutions(g, k)


class TestCanonicalSet:
    def test_duplicates_rejected(self):
        with pytest.raises(DuplicateSolutionError):
            CanonicalSolutionSet.from_solutions([(1, 2), (2, 1)], 2)

    def test_wrong_size_rejected(self):
        with pytest.raises(ValueError):
            CanonicalSolutionSet.from_solutions([(1, 2, 3)], 2)

    def test_first_difference(self):
        a = CanonicalSolutionSet.from_solutions([(0, 1), (1, 2)], 2)
        b = CanonicalSolutionSet.from_solutions([(1, 2), (2, 3)], 2)
        assert a.first_difference(b) == ("missing", (0, 1))
        assert b.first_difference(a) == ("extra", (0, 1))
        assert a.first_difference(a) is None

    def test_star_closed_form(self):
        for m in range(1, 8):
            for k in range(2, m + 2):
                assert len(brute_force_enumerate(star_graph(m), k)) == math.comb(m, k - 1)
