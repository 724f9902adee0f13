import math

import pytest
from hypothesis import given, settings

from cisenum import (
    DelayBoundError,
    EnumerationState,
    StopEnumeration,
    delay_probe,
    enumerate_k_subgraphs,
    induced_is_connected,
    list_k_subgraphs,
)
from cisenum.graph import Graph, clique_graph, path_graph

from oracles import oracle_solutions, small_graphs

SAMPLE_K5 = sorted([(1, 2, 3, 4, 5), (0, 1, 3, 4, 5), (0, 1, 2, 4, 5), (0, 1, 2, 3, 5), (0, 1, 2, 3, 4)])


def run(g, k, backend):
    found = []
    stats = enumerate_k_subgraphs(g, k, lambda s, i: found.append(s), backend=backend)
    return found, stats


class TestEnumerateExamples:
    def test_sample_k5(self, sample, backend):
        found, stats = run(sample, 5, backend)
        assert sorted(tuple(sorted(s)) for s in found) == SAMPLE_K5
        assert stats.solutions == 5

    def test_sample_emission_order(self, sample, backend):
        found, _ = run(sample, 5, backend)
        assert found[0] == (5, 1, 2, 4, 3)        # {5,1} ∪ T with T = {4,2,3}
        assert set(found[3]) == {5, 1, 0, 2, 3}   # last set containing 5
        assert 5 not in found[4]

    def test_k1_gives_singletons(self, sample, backend):
        found, _ = run(sample, 1, backend)
        assert sorted(found) == [(v,) for v in range(6)]

    def test_k1_isolated_vertices(self, backend):
        g = Graph.from_edges(4, [(0, 1)])
        found, _ = run(g, 1, backend)
        assert sorted(found) == [(0,), (1,), (2,), (3,)]

    def test_path_windows(self, backend):
        found, _ = run(path_graph(6), 3, backend)
        assert sorted(tuple(sorted(s)) for s in found) == [(i, i + 1, i + 2) for i in range(4)]

    def test_clique(self, backend):
        assert run(clique_graph(5), 3, backend)[1].solutions == 10

    def test_k0_rejected(self, sample, backend):
        with pytest.raises(ValueError):
            enumerate_k_subgraphs(sample, 0, backend=backend)

    def test_k_above_n(self, sample, backend):
        assert run(sample, 7, backend)[1].solutions == 0

    def test_k_equals_n(self, backend):
        assert run(path_graph(5), 5, backend)[1].solutions == 1
        assert run(Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)]), 5, backend)[1].solutions == 0

    def test_small_components_skipped(self, backend):
        g = Graph.from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 6)])
        found, _ = run(g, 3, backend)
        assert sorted(tuple(sorted(s)) for s in found) == [(2, 3, 4), (3, 4, 5), (4, 5, 6)]

    def test_list_helper(self, sample, backend):
        assert sorted(list_k_subgraphs(sample, 5, backend)) == SAMPLE_K5

    def test_ordinals_are_consecutive(self, sample, backend):
        seen = []
        enumerate_k_subgraphs(sample, 3, lambda s, i: seen.append(i), backend=backend)
        assert seen == list(range(len(seen)))


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=10))
def test_exact_once_against_oracle(g):
    for backend in ("python", "compiled"):
        if backend not in __import__("cisenum").BACKENDS:
            continue
        for k in range(1, g.n + 1):
            found, stats = run(g, k, backend)
            canon = sorted(tuple(sorted(s)) for s in found)
            assert canon == oracle_solutions(g, k)
            assert len(set(canon)) == len(canon)
            assert all(len(s) == k and induced_is_connected(g, s) for s in found)
            if stats.solutions:
                assert stats.max_calls_between_outputs <= k
                assert stats.unproductive_top_calls == 0
                assert stats.max_trailing_calls == 0


class TestRecursiveFrames:
    """Direct calls of the recursive step on hand-built states."""

    def state(self, graph, k, S, F, closed=()):
        st = EnumerationState(graph, k)
        for v in S:
            st.push(st.S, v)
        for v in F:
            st.push(st.F, v)
        return st

    def test_first_top_level_call(self, sample):
        st = self.state(sample, 5, [5], [1, 3, 4])
        got = []
        st.emit = got.append
        assert st.enumerate_recursive(3) is True
        assert sorted(tuple(sorted(s)) for s in got) == [s for s in SAMPLE_K5 if 5 in s]
        assert st.N == [4, 3, 1] and st.F == [] and st.T == []

    def test_second_top_level_call(self, sample):
        st = self.state(sample, 5, [4], [5, 2, 3])
        got = []
        st.emit = got.append
        assert st.enumerate_recursive(2) is True
        assert [tuple(sorted(s)) for s in got] == [(0, 1, 2, 3, 4)]
        assert st.F == [5]

    def test_inner_emission_flushes_t(self, sample):
        # S = {5, 1} and T = {4, 2, 3} already visited: |S| + |T| = k
        st = self.state(sample, 5, [5, 1], [])
        for v in (4, 2, 3):
            st.push_t(v)
        got = []
        st.emit = got.append
        assert st.enumerate_recursive(0) is True
        assert got == [(5, 1, 4, 2, 3)]
        assert st.T == [] and not any(st.mark_t)

    def test_empty_frame(self, sample):
        st = self.state(sample, 5, [0], [])
        got = []
        st.emit = got.append
        assert st.enumerate_recursive(0) is False
        assert got == []


class TestDelayProbe:
    def test_sample(self, sample, backend):
        report = delay_probe(run(sample, 5, backend)[1])
        assert report.max_calls_between_outputs <= 5
        assert sum(report.histogram.values()) == 5

    def test_clique6(self, backend):
        stats = run(clique_graph(6), 3, backend)[1]
        assert delay_probe(stats).max_calls_between_outputs <= 3
        assert sum(stats.histogram.values()) == math.comb(6, 3)

    def test_single_solution_path(self, backend):
        stats = run(path_graph(4), 4, backend)[1]
        report = delay_probe(stats)
        assert stats.solutions == 1
        assert report.max_calls_between_outputs <= 4

    def test_empty_run(self, backend):
        report = delay_probe(run(path_graph(3), 5, backend)[1])
        assert report.histogram == {}

    def test_violation_raises(self, sample, backend):
        stats = run(sample, 5, backend)[1]
        with pytest.raises(DelayBoundError):
            delay_probe(stats, bound=0)

    def test_wall_clock_delay_recorded(self, sample, backend):
        stats = run(sample, 3, backend)[1]
        assert 0 < stats.max_delay < stats.wall_time + 1e-9

    def test_sink_time_inclusion(self, backend):
        import time

        g = path_graph(8)

        def slow(s, i):
            time.sleep(0.01)

        excl = enumerate_k_subgraphs(g, 3, slow, backend=backend)
        incl = enumerate_k_subgraphs(g, 3, slow, backend=backend, include_sink_time=True)
        assert incl.max_delay >= 0.009
        assert excl.max_delay < 0.009


class TestAbort:
    def test_stop_after_ten(self, backend):
        g = clique_graph(7)
        got = []

        def sink(s, i):
            got.append(s)
            if len(got) == 10:
                raise StopEnumeration

        stats = enumerate_k_subgraphs(g, 3, sink, backend=backend)
        assert len(got) == 10 and stats.solutions == 10 and stats.aborted
        assert stats.calls_total <= 10 * 3

    def test_other_exceptions_propagate(self, sample, backend):
        def sink(s, i):
            raise KeyError("boom")

        with pytest.raises(KeyError):
            enumerate_k_subgraphs(sample, 2, sink, backend=backend)


def test_backends_emit_identical_sequences():
    from cisenum import BACKENDS, generate_graph

    if len(BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    g = generate_graph("random:40:0.15:5")
    for k in (2, 3, 4):
        seqs = [run(g, k, b)[0] for b in ("python", "compiled")]
        assert seqs[0] == seqs[1]
