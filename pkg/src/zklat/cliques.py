"""Backtracking search for n mutually orthogonal vectors.

The orthogonality relation is a graph on the candidate vectors; a frame
is a clique of the target size.  The search is exhaustive, so a None
answer is a proof of nonexistence (a blown budget raises instead).

Adjacency is never materialized: with six-figure candidate counts an
n x n bitset runs to gigabytes, so neighbourhoods are recomputed from
inner products on the fly (O(n) memory per search level).  Inner
products are taken in float32, which is exact here: entries are tiny,
so every product and partial sum stays far below 2**24.
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetExceeded

_BLOCK = 512


def core_filter(vectors: np.ndarray, target: int) -> np.ndarray:
    """Indices surviving iterated degree pruning.

    Every member of an orthogonal set of the target size is orthogonal
    to at least target-1 of the other candidates, so repeatedly dropping
    low-degree vertices (a (target-1)-core in the orthogonality graph)
    cannot discard any solution.  Degrees are accumulated blockwise;
    nothing quadratic is ever stored.
    """
    v = np.ascontiguousarray(vectors, dtype=np.float32)
    idx = np.arange(vectors.shape[0])
    while True:
        m = v.shape[0]
        if m < target:
            return idx[:0]
        deg = np.zeros(m, dtype=np.int64)
        for lo in range(0, m, _BLOCK):
            dots = v[lo : lo + _BLOCK] @ v.T
            deg[lo : lo + _BLOCK] = (dots == 0).sum(axis=1)
        alive = deg >= target - 1
        if alive.all():
            return idx
        v = v[alive]
        idx = idx[alive]


def find_orthogonal_set(
    vectors: np.ndarray, target: int, budget: int = 50_000_000
) -> list[int] | None:
    """First index set of `target` mutually orthogonal vectors, else None.

    Enumerates cliques in increasing index order, filtering the
    candidate pool against each chosen vector with one matvec.  A None
    return means the whole space was covered.
    """
    if target == 0:
        return []
    core = core_filter(vectors, target)
    if core.shape[0] < target:
        return None
    v = np.ascontiguousarray(vectors[core], dtype=np.float32)
    nodes = 0

    def dfs(chosen: list[int], pool: np.ndarray) -> list[int] | None:
        nonlocal nodes
        need = target - len(chosen)
        for pos in range(pool.shape[0] - need + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("clique search budget exhausted")
            i = int(pool[pos])
            chosen.append(i)
            if need == 1:
                return list(chosen)
            rest = pool[pos + 1 :]
            sub = rest[v[rest] @ v[i] == 0.0]
            if sub.shape[0] >= need - 1:
                res = dfs(chosen, sub)
                if res is not None:
                    return res
            chosen.pop()
        return None

    res = dfs([], np.arange(v.shape[0]))
    if res is None:
        return None
    return sorted(int(core[i]) for i in res)
