"""Reference enumerators: exhaustive search and the classical bottom-up method."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import Graph, induced_is_connected
from .kdelta import EnumerationStats, Sink, _drive

DEFAULT_BRUTE_CAP = 2_000_000


class BruteForceCapExceeded(ValueError):
    pass


class DuplicateSolutionError(AssertionError):
    pass


@dataclass(frozen=True)
class CanonicalSolutionSet:
    """Solutions with each set sorted and the collection sorted
    lexicographically; suitable for equality comparison."""

    k: int
    sets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_solutions(cls, solutions: Iterable[Iterable[int]], k: int) -> "CanonicalSolutionSet":
        canon = sorted(tuple(sorted(s)) for s in solutions)
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise DuplicateSolutionError(f"set {a} emitted more than once")
        for s in canon:
            if len(s) != k:
                raise ValueError(f"set {s} has size {len(s)}, expected {k}")
        return cls(k, tuple(canon))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def first_difference(self, other: "CanonicalSolutionSet") -> Optional[tuple[str, tuple]]:
        """The smallest set in exactly one of the two collections, tagged
        ``"missing"`` (only in ``self``) or ``"extra"`` (only in ``other``)."""
        mine, theirs = set(self.sets), set(other.sets)
        diff = sorted((s, "missing") for s in mine - theirs)
        diff += sorted((s, "extra") for s in theirs - mine)
        if not diff:
            return None
        s, tag = min(diff)
        return tag, s


def brute_force_enumerate(g: Graph, k: int, cap: int = DEFAULT_BRUTE_CAP) -> CanonicalSolutionSet:
    """Check every k-subset for connectivity, in lexicographic order."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    total = math.comb(g.n, k)
    if total > cap:
        raise BruteForceCapExceeded(
            f"C({g.n}, {k}) = {total} subsets exceeds the brute-force cap of {cap}")
    sols = [c for c in combinations(range(g.n), k) if induced_is_connected(g, c)]
    return CanonicalSolutionSet(k, tuple(sols))


def simple_enumerate(
    g: Graph,
    k: int,
    sink: Optional[Sink] = None,
    *,
    backend: str | None = None,
    measure_delay: bool = True,
    include_sink_time: bool = False,
) -> EnumerationStats:
    """Bottom-up baseline with the same calling convention as
    :func:`~cisenum.kdelta.enumerate_k_subgraphs`.

    Sets grow from their smallest vertex through exclusive extension sets;
    a branch that comes back empty ends its parent's loop, which bounds the
    delay by ``O(k^2 Δ)``.
    """
    return _drive("simple", g, k, sink, backend, measure_delay, include_sink_time)


def collect(algorithm: str, g: Graph, k: int, backend: str | None = None,
            cap: int = DEFAULT_BRUTE_CAP) -> tuple[CanonicalSolutionSet, Optional[EnumerationStats]]:
    """Run one algorithm by name and canonicalize its output."""
    if algorithm == "brute":
        return brute_force_enumerate(g, k, cap), None
    if algorithm not in ("kdelta", "simple"):
        raise ValueError(f"unknown algorithm {algorithm!r}")
    found: list[tuple[int, ...]] = []
    stats = _drive(algorithm, g, k, lambda s, _: found.append(s), backend, False, False)
    return CanonicalSolutionSet.from_solutions(found, k), stats
