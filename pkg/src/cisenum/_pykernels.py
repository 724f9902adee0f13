"""Pure-Python enumeration kernels.

Same interface as the compiled ``_ckernels`` module; it is used when the
extension is not built or ``CISENUM_PURE_PYTHON`` is set.

Each kernel walks one connected component and returns a counter dict:

``calls``        recursive invocations
``max_gap``      most invocations counted up to one emission (reset at emission
                 and at the start of every top-level call)
``top_calls``    top-level calls issued by the main loop
``idle_top``     top-level calls that emitted nothing
``max_tail``     most invocations after the last emission of a top-level call
``emitted``      solutions emitted

The counters are written into ``out`` (a fresh dict if omitted) even when
``emit`` raises, so an aborted run still reports its work.

``emit`` receives a tuple of internal vertex ids, or is ``None`` to count only.
``hist`` (a dict) accumulates how many emissions had each gap.
"""

from __future__ import annotations

import sys

NAME = "python"

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def _counters():
    return {"calls": 0, "max_gap": 0, "top_calls": 0, "idle_top": 0, "max_tail": 0, "emitted": 0}


def kdelta_component(graph, order, k, emit=None, hist=None, trace=None, out=None):
    """Enumerate the size-``k`` connected sets of one component.

    ``order`` is the component's DFS discovery order; top-level vertices are
    taken from its back. ``trace(S, N, F, ell)`` is called before each
    top-level recursive call.
    """
    adj = graph.adjacency
    size = len(order)
    out = _counters() if out is None else out
    if size < k:
        return out
    mark = bytearray(graph.n)    # v in S, N or F
    mark_t = bytearray(graph.n)  # v in T
    S: list[int] = []
    N: list[int] = []
    F: list[int] = []
    T: list[int] = []
    calls = gap = max_gap = emitted = 0

    def found(sol):
        nonlocal gap, max_gap, emitted
        if gap > max_gap:
            max_gap = gap
        if hist is not None:
            hist[gap] = hist.get(gap, 0) + 1
        gap = 0
        emitted += 1
        if emit is not None:
            emit(sol)

    def rec(ell):
        nonlocal calls, gap
        calls += 1
        gap += 1
        depth = len(S)
        if depth == k:
            found(tuple(S))
            return True
        has_solution = False
        if depth + len(T) == k:
            found(tuple(S) + tuple(T))
            for t in T:
                mark_t[t] = 0
            T.clear()
            has_solution = True
        grow = depth + 1 < k
        for _ in range(ell):
            u = F.pop()
            S.append(u)
            added = 0
            ell2 = 0
            if grow:
                for v in adj[u]:
                    if not mark[v]:
                        mark[v] = 1
                        added += 1
                        if mark_t[v]:
                            N.append(v)
                        else:
                            F.append(v)
                            ell2 += 1
                if has_solution and N:
                    ell2 += len(N)
                    N.reverse()
                    F.extend(N)
                    N.clear()
            if rec(ell2):
                has_solution = True
            else:
                T.append(u)
                mark_t[u] = 1
            S.pop()
            for _ in range(added):
                mark[N.pop()] = 0
            N.append(u)
        return has_solution

    top_calls = idle = max_tail = 0
    try:
        for v in reversed(order):
            S.append(v)
            mark[v] = 1
            ell = 0
            if k > 1:
                for u in adj[v]:
                    if not mark[u]:
                        mark[u] = 1
                        F.append(u)
                        ell += 1
            if trace is not None:
                trace(tuple(S), tuple(N), tuple(F), ell)
            before = emitted
            gap = 0
            top_calls += 1
            rec(ell)
            if emitted == before:
                idle += 1
            if gap > max_tail:
                max_tail = gap
            S.pop()
            for _ in range(ell):
                mark[N.pop()] = 0
            F.append(v)
            if size - len(F) < k:
                break
    finally:
        out.update(calls=calls, max_gap=max_gap, top_calls=top_calls, idle_top=idle,
                   max_tail=max_tail, emitted=emitted)
    return out


def simple_component(graph, vertices, k, emit=None, hist=None, out=None):
    """Bottom-up baseline: ESU extension sets with the fail-fast pruning rule.

    Each root ``v`` grows sets whose other members all carry a larger id;
    a candidate joins the extension set only if no earlier member is its
    neighbor. A branch that finds nothing ends the loop of its parent.
    """
    adj = graph.adjacency
    out = _counters() if out is None else out
    if len(vertices) < k:
        return out
    cnt = [0] * graph.n  # number of members of S adjacent to the vertex
    S: list[int] = []
    ext: list[int] = []
    calls = gap = max_gap = emitted = 0
    root = -1

    def rec(lo):
        nonlocal calls, gap, max_gap, emitted
        calls += 1
        gap += 1
        if len(S) == k:
            if gap > max_gap:
                max_gap = gap
            if hist is not None:
                hist[gap] = hist.get(gap, 0) + 1
            gap = 0
            emitted += 1
            if emit is not None:
                emit(tuple(S))
            return True
        found = False
        popped = []
        grow = len(S) + 1 < k
        while len(ext) > lo:
            w = ext.pop()
            popped.append(w)
            S.append(w)
            base = len(ext)
            if grow:
                for u in adj[w]:
                    c = cnt[u]
                    cnt[u] = c + 1
                    if c == 0 and u > root:
                        ext.append(u)
            ok = rec(lo)
            del ext[base:]
            if grow:
                for u in adj[w]:
                    cnt[u] -= 1
            S.pop()
            if not ok:
                break
            found = True
        popped.reverse()
        ext.extend(popped)
        return found

    top_calls = idle = 0
    try:
        for v in vertices:
            root = v
            S.append(v)
            for u in adj[v]:
                cnt[u] += 1
                if u > v and k > 1:
                    ext.append(u)
            before = emitted
            gap = 0
            top_calls += 1
            rec(0)
            if emitted == before:
                idle += 1
            ext.clear()
            for u in adj[v]:
                cnt[u] -= 1
            S.pop()
    finally:
        out.update(calls=calls, max_gap=max_gap, top_calls=top_calls, idle_top=idle,
                   max_tail=0, emitted=emitted)
    return out
