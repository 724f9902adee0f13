"""Streaming enumeration of connected induced subgraphs with bounded delay.

The main loop visits each component in reverse DFS discovery order, so the
vertices not yet closed always stay connected and every top-level call is
productive. Inside a call, open neighbors are taken from the back of F and
explored with the others closed; once explored, a neighbor is parked in N and
becomes open again after the next solution. Vertices explored since the last
solution are kept in T, and as soon as ``|S| + |T| = k`` the set ``S ∪ T`` is
itself a solution. Between two consecutive solutions at most ``k`` recursive
calls are made, each costing ``O(Δ)`` apart from one ``O(kΔ)`` flush of N.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from ._backend import get_kernels
from .graph import Graph, connected_components, dfs_discovery_order

Sink = Callable[[tuple, int], object]


class StopEnumeration(Exception):
    """Raised by a sink to end an enumeration early."""


class DelayBoundError(AssertionError):
    """An instrumented run exceeded its call-count delay bound."""


@dataclass
class EnumerationStats:
    algorithm: str
    backend: str
    k: int
    solutions: int = 0
    calls_total: int = 0
    max_calls_between_outputs: int = 0
    max_delay: float = 0.0
    wall_time: float = 0.0
    top_level_calls: int = 0
    unproductive_top_calls: int = 0
    max_trailing_calls: int = 0
    aborted: bool = False
    histogram: dict[int, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["histogram"] = {str(g): c for g, c in sorted(self.histogram.items())}
        return d


def _drive(
    algorithm: str,
    g: Graph,
    k: int,
    sink: Optional[Sink],
    backend: str | None,
    measure_delay: bool,
    include_sink_time: bool,
    trace=None,
) -> EnumerationStats:
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    kernels = get_kernels(backend)
    stats = EnumerationStats(algorithm, kernels.NAME, k)

    emit = None
    clock = time.perf_counter
    last = max_delay = 0.0
    ordinal = 0
    if measure_delay or sink is not None:
        def emit(sol):
            nonlocal last, max_delay, ordinal
            now = clock()
            if now - last > max_delay:
                max_delay = now - last
            i = ordinal
            ordinal += 1
            if sink is not None:
                sink(sol, i)
                if not include_sink_time:
                    now = clock()
            last = now

    hist = stats.histogram
    start = last = clock()
    try:
        for comp in connected_components(g):
            if len(comp) < k:
                continue
            out: dict = {}
            if algorithm == "kdelta":
                order = dfs_discovery_order(g, comp)
            last = clock()  # component decomposition and DFS are preprocessing
            try:
                if algorithm == "kdelta":
                    kernels.kdelta_component(g, order, k, emit, hist, trace=trace, out=out)
                else:
                    kernels.simple_component(g, comp, k, emit, hist, out=out)
            finally:
                stats.solutions += out.get("emitted", 0)
                stats.calls_total += out.get("calls", 0)
                stats.max_calls_between_outputs = max(stats.max_calls_between_outputs,
                                                      out.get("max_gap", 0))
                stats.top_level_calls += out.get("top_calls", 0)
                stats.unproductive_top_calls += out.get("idle_top", 0)
                stats.max_trailing_calls = max(stats.max_trailing_calls, out.get("max_tail", 0))
    except StopEnumeration:
        stats.aborted = True
    stats.wall_time = clock() - start
    stats.max_delay = max_delay
    return stats


def enumerate_k_subgraphs(
    g: Graph,
    k: int,
    sink: Optional[Sink] = None,
    *,
    backend: str | None = None,
    measure_delay: bool = True,
    include_sink_time: bool = False,
    trace=None,
) -> EnumerationStats:
    """Stream every connected induced subgraph of ``g`` with ``k`` vertices.

    Parameters
    ----------
    g : Graph
    k : int
        Subgraph size, at least 1. Sizes above ``g.n`` simply yield nothing.
    sink : callable, optional
        Called as ``sink(vertices, ordinal)`` once per solution, where
        ``vertices`` is a tuple of internal ids in emission order (not
        sorted). Raise :class:`StopEnumeration` to stop early.
    backend : {"compiled", "python"}, optional
        Kernel implementation; defaults to the compiled one when built.
    measure_delay : bool
        Track the largest wall-clock gap between consecutive solutions.
    include_sink_time : bool
        Whether time spent inside ``sink`` counts towards that gap.
    trace : callable, optional
        ``trace(S, N, F, ell)`` before every top-level recursive call.

    Returns
    -------
    EnumerationStats
    """
    return _drive("kdelta", g, k, sink, backend, measure_delay, include_sink_time, trace)


def list_k_subgraphs(g: Graph, k: int, backend: str | None = None) -> list[tuple[int, ...]]:
    """All solutions as sorted tuples, in emission order."""
    found: list[tuple[int, ...]] = []
    enumerate_k_subgraphs(g, k, lambda s, _: found.append(tuple(sorted(s))),
                          backend=backend, measure_delay=False)
    return found


@dataclass(frozen=True)
class DelayReport:
    max_calls_between_outputs: int
    max_delay: float
    histogram: dict[int, int]


def delay_probe(stats: EnumerationStats, bound: int | None = None) -> DelayReport:
    """Summarize the inter-emission behaviour of an instrumented run.

    Raises :class:`DelayBoundError` if the run emitted something and needed
    more than ``bound`` (default ``k``) recursive calls for some solution.
    """
    if stats.solutions == 0:
        return DelayReport(stats.max_calls_between_outputs, stats.max_delay, {})
    limit = stats.k if bound is None else bound
    if stats.max_calls_between_outputs > limit:
        raise DelayBoundError(
            f"{stats.max_calls_between_outputs} calls between outputs exceeds bound {limit}")
    return DelayReport(stats.max_calls_between_outputs, stats.max_delay, dict(stats.histogram))
