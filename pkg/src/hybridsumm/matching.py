"""Maximum-weight bipartite matching (Hungarian method).

The solver pads the weight matrix to a square, runs the shortest augmenting
path form of the Kuhn-Munkres algorithm on negated weights and keeps the dual
potentials. Every optimal assignment uses only edges that are tight under
those potentials, so ties between optimal assignments are resolved on the
tight-edge subgraph: rows are fixed in order to the smallest column for which
a perfect matching of the remaining tight subgraph still exists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int, float], ...]
    total_weight: float

    def __len__(self):
        return len(self.pairs)


def _solve_min_cost(cost: np.ndarray):
    """Square min-cost assignment.

    Returns ``(row_to_col, u, v)`` with ``u[i] + v[j] <= cost[i, j]`` for all
    pairs and equality on the assignment.
    """
    n = cost.shape[0]
    inf = np.inf
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    p = np.zeros(n + 1, dtype=np.int64)  # p[j]: row matched to column j (1-based)
    way = np.zeros(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = np.full(n + 1, inf)
        used = np.zeros(n + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = p[j0]
            free = np.flatnonzero(~used[1:]) + 1
            cur = cost[i0 - 1, free - 1] - u[i0] - v[free]
            better = cur < minv[free]
            minv[free[better]] = cur[better]
            way[free[better]] = j0
            k = int(np.argmin(minv[free]))
            delta = minv[free[k]]
            j1 = int(free[k])
            used_idx = np.flatnonzero(used)
            u[p[used_idx]] += delta
            v[used_idx] -= delta
            minv[free] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break
    row_to_col = np.empty(n, dtype=np.int64)
    for j in range(1, n + 1):
        row_to_col[p[j] - 1] = j - 1
    return row_to_col, u[1:], v[1:]


def _swap_in(i, j, match, owner, tight, fixed_col) -> bool:
    """Move edge ``(i, j)`` into the perfect matching if some alternating cycle allows it."""
    released = match[i]
    start = owner[j]
    parent = {}
    seen = {j}
    queue = deque([start])
    while queue:
        r = queue.popleft()
        for c in tight[r]:
            if fixed_col[c] or c in seen:
                continue
            seen.add(c)
            parent[c] = r
            if c == released:
                match[i] = j
                owner[j] = i
                while True:
                    pr = parent[c]
                    prev = match[pr]
                    match[pr] = c
                    owner[c] = pr
                    if pr == start:
                        return True
                    c = prev
            queue.append(owner[c])
    return False


def _lexicographic(tight, match, rows: int, real_cols: int) -> list[int]:
    """Lexicographically smallest perfect matching of the tight-edge graph.

    ``match`` must already be a perfect matching of that graph. Rows
    ``0..rows-1`` are fixed in order to their smallest feasible real column;
    a row with none keeps its padding column.
    """
    match = list(match)
    owner = [0] * len(match)
    for r, c in enumerate(match):
        owner[c] = r
    fixed_col = [False] * len(match)
    for i in range(rows):
        for j in sorted(c for c in tight[i] if c < real_cols and not fixed_col[c]):
            if match[i] == j or _swap_in(i, j, match, owner, tight, fixed_col):
                break
        fixed_col[match[i]] = True
    return match


def hungarian_max_matching(weights) -> Matching:
    """Maximum total weight one-to-one assignment of ``min(m, n)`` pairs.

    Among optimal assignments the one whose sorted ``(i, j)`` pair list is
    lexicographically smallest is returned.
    """
    w = np.asarray(getattr(weights, "values", weights), dtype=np.float64)
    if w.ndim != 2:
        raise ValueError("weights must be a 2-d matrix")
    m, n = w.shape
    if m == 0 or n == 0:
        return Matching((), 0.0)
    if not np.all(np.isfinite(w)):
        raise ValueError("weights must be finite")
    size = max(m, n)
    padded = np.zeros((size, size))
    padded[:m, :n] = w
    cost = -padded
    row_to_col, u, v = _solve_min_cost(cost)

    scale = max(1.0, float(np.abs(w).max()))
    reduced = cost - u[:, None] - v[None, :]
    tol = 1e-9 * scale * size
    tight = [list(np.flatnonzero(reduced[r] <= tol)) for r in range(size)]
    match = [int(c) for c in row_to_col]
    match = _lexicographic(tight, match, m, n)

    pairs = tuple((i, match[i], float(w[i, match[i]])) for i in range(m) if match[i] < n)
    total = 0.0
    for _, _, x in pairs:
        total += x
    return Matching(pairs, total)
