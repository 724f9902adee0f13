"""Checked enumeration engine.

:class:`EnumerationState` runs the same algorithm as the fast kernels but
routes every list mutation through methods that re-verify the state
invariants. It is slow (an O(n) check after each mutation) and meant for
small graphs, traces and debugging. Its emission order is identical to the
kernels', which the test-suite relies on.
"""

from __future__ import annotations

from typing import Callable

from .graph import Graph, connected_components, dfs_discovery_order


class InvariantViolation(AssertionError):
    pass


class EnumerationState:
    """Global lists S, N, F, T with their membership flags.

    ``mark_snf[v]`` is set iff ``v`` is in one of S, N, F; ``mark_t[v]`` iff
    ``v`` is in T. All lists are only ever changed at their back.
    """

    def __init__(self, graph: Graph, k: int, check: bool = True):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.graph = graph
        self.k = k
        self.check = check
        self.S: list[int] = []
        self.N: list[int] = []
        self.F: list[int] = []
        self.T: list[int] = []
        self.mark_snf = [False] * graph.n
        self.mark_t = [False] * graph.n
        self.emit: Callable[[tuple[int, ...]], object] | None = None
        self.calls = 0
        self.gap = 0
        self.max_gap = 0
        self.emitted = 0
        self.peak = {"S": 0, "T": 0, "NF": 0}
        self.top_calls: list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], int]] = []
        self.top_emissions: list[int] = []
        self.max_tail = 0

    # -- invariant checking ------------------------------------------------

    def _fail(self, msg: str):
        raise InvariantViolation(
            f"{msg} (S={self.S}, N={self.N}, F={self.F}, T={self.T})")

    def verify(self) -> None:
        S, N, F, T = self.S, self.N, self.F, self.T
        snf = set(S) | set(N) | set(F)
        if len(snf) != len(S) + len(N) + len(F):
            self._fail("S, N, F not pairwise disjoint")
        if len(set(T)) != len(T):
            self._fail("T has repeated vertices")
        for v in range(self.graph.n):
            if self.mark_snf[v] != (v in snf):
                self._fail(f"mark_snf[{v}] inconsistent")
            if self.mark_t[v] != (v in T):
                self._fail(f"mark_t[{v}] inconsistent")
        if len(S) + len(T) > self.k:
            self._fail("|S| + |T| exceeds k")
        if len(N) + len(F) > self.graph.n:
            self._fail("|N| + |F| exceeds n")
        pk = self.peak
        pk["S"] = max(pk["S"], len(S))
        pk["T"] = max(pk["T"], len(T))
        pk["NF"] = max(pk["NF"], len(N) + len(F))

    def _checked(self):
        if self.check:
            self.verify()

    # -- primitive mutations -----------------------------------------------

    def push(self, lst: list[int], v: int, mark: bool = True) -> None:
        lst.append(v)
        if mark:
            self.mark_snf[v] = True
        self._checked()

    def pop(self, lst: list[int], unmark: bool = False) -> int:
        v = lst.pop()
        if unmark:
            self.mark_snf[v] = False
        self._checked()
        return v

    def move(self, src: list[int], dst: list[int]) -> int:
        """Move the back of ``src`` to the back of ``dst``; marks unchanged."""
        v = src.pop()
        dst.append(v)
        self._checked()
        return v

    def push_t(self, v: int) -> None:
        self.T.append(v)
        self.mark_t[v] = True
        self._checked()

    def clear_t(self) -> None:
        for v in self.T:
            self.mark_t[v] = False
        self.T.clear()
        self._checked()

    def _output(self, solution: tuple[int, ...]) -> None:
        if len(solution) != self.k:
            self._fail(f"emitted set of size {len(solution)}")
        self.max_gap = max(self.max_gap, self.gap)
        self.gap = 0
        self.emitted += 1
        if self.emit is not None:
            self.emit(solution)

    # -- the algorithm -----------------------------------------------------

    def enumerate_recursive(self, ell: int) -> bool:
        """Emit every size-k connected set containing S that avoids the closed
        part of F; the last ``ell`` entries of F are the open neighbors.

        Returns whether anything was emitted in this subtree.
        """
        S, N, F, T, k = self.S, self.N, self.F, self.T, self.k
        self.calls += 1
        self.gap += 1
        entry_s, entry_n, entry_f = list(S), list(N), len(F)
        opened = F[len(F) - ell:] if ell else []

        if len(S) == k:
            if T:
                self._fail("T not empty at a leaf emission")
            self._output(tuple(S))
            return True
        has_solution = False
        if len(S) + len(T) == k:
            self._output(tuple(S) + tuple(T))
            self.clear_t()
            has_solution = True

        for _ in range(ell):
            u = self.move(F, S)
            added = 0
            ell2 = 0
            if len(S) < k:
                for v in self.graph.adjacency[u]:
                    if self.mark_snf[v]:
                        continue
                    added += 1
                    if self.mark_t[v]:
                        self.push(N, v)
                    else:
                        self.push(F, v)
                        ell2 += 1
                if has_solution:
                    ell2 += len(N)
                    while N:
                        self.move(N, F)
            if self.enumerate_recursive(ell2):
                has_solution = True
            else:
                self.push_t(u)
            for _ in range(added):
                self.pop(N, unmark=True)
            self.move(S, N)

        if self.check:
            if S != entry_s:
                self._fail("S not restored on return")
            if len(F) != entry_f - ell:
                self._fail(f"|F| did not shrink by {ell}")
            if N[:len(entry_n)] != entry_n or N[len(entry_n):] != opened[::-1]:
                self._fail("open vertices not moved to the back of N in visiting order")
        return has_solution

    def run_component(self, order: list[int]) -> None:
        """Main loop over one component given its DFS discovery order."""
        S, N, F, k = self.S, self.N, self.F, self.k
        if len(order) < k:
            return
        base_f = len(F)
        for v in reversed(order):
            self.push(S, v)
            ell = 0
            if k > 1:
                for u in self.graph.adjacency[v]:
                    if not self.mark_snf[u]:
                        self.push(F, u)
                        ell += 1
            self.top_calls.append((tuple(S), tuple(N), tuple(F[base_f:]), ell))
            before = self.emitted
            self.gap = 0
            self.enumerate_recursive(ell)
            self.top_emissions.append(self.emitted - before)
            self.max_tail = max(self.max_tail, self.gap)
            if self.check and self.T:
                self._fail("T not empty after a top-level call")
            self.pop(S, unmark=True)
            if self.check and len(N) != ell:
                self._fail("N does not hold exactly the opened vertices")
            for _ in range(ell):
                self.pop(N, unmark=True)
            self.push(F, v)
            if len(order) - (len(F) - base_f) < k:
                break
        # closed vertices of this component can never meet another component
        while len(F) > base_f:
            self.pop(F, unmark=True)


def checked_enumerate(graph: Graph, k: int, emit=None, check: bool = True) -> EnumerationState:
    """Run the checked engine over every component; returns the final state."""
    state = EnumerationState(graph, k, check=check)
    state.emit = emit
    for comp in connected_components(graph):
        if len(comp) >= k:
            state.run_component(dfs_discovery_order(graph, comp))
    return state
