"""Reference implementations used only by the tests.

Each one is written independently of the package code, in the most direct
form available (brute force, plain loops, networkx), so that agreement is
meaningful.
"""

import itertools
import math
from collections import Counter

import networkx as nx
import numpy as np


def brute_force_matching(w):
    """Best total weight over all injections of the smaller side, row order sums."""
    w = np.asarray(w, dtype=float)
    m, n = w.shape
    best = -math.inf
    best_pairs = None
    if m <= n:
        for cols in itertools.permutations(range(n), m):
            total = 0.0
            for i, j in enumerate(cols):
                total += w[i, j]
            if total > best:
                best, best_pairs = total, [(i, j) for i, j in enumerate(cols)]
    else:
        for rows in itertools.permutations(range(m), n):
            pairs = sorted((i, j) for j, i in enumerate(rows))
            total = 0.0
            for i, j in pairs:
                total += w[i, j]
            if total > best:
                best, best_pairs = total, pairs
    return best, best_pairs


def power_iteration(sim, d=0.85, eps=1e-6, max_iter=200):
    """Damped power iteration with plain Python lists."""
    n = len(sim)
    rows = []
    for i in range(n):
        row = [0.0 if i == j else float(sim[i][j]) for j in range(n)]
        s = sum(row)
        rows.append([x / s for x in row] if s > 0 else [1.0 / n] * n)
    r = [1.0 / n] * n
    for _ in range(max_iter):
        nxt = [(1 - d) / n + d * sum(rows[j][i] * r[j] for j in range(n)) for i in range(n)]
        delta = sum(abs(a - b) for a, b in zip(nxt, r))
        r = nxt
        if delta < eps:
            break
    total = sum(r)
    return [x / total for x in r]


def stationary_solution(sim, d=0.85):
    """Exact fixed point of the damped iteration via a linear solve."""
    s = np.array(sim, dtype=float)
    n = s.shape[0]
    np.fill_diagonal(s, 0.0)
    sums = s.sum(axis=1, keepdims=True)
    p = np.where(sums > 0, s / np.where(sums > 0, sums, 1), 1.0 / n)
    a = np.eye(n) - d * p.T
    r = np.linalg.solve(a, np.full(n, (1 - d) / n))
    return r / r.sum()


def path_similarity(lexicon, a, b):
    g = nx.Graph()
    g.add_nodes_from(lexicon.synsets)
    for child, parents in lexicon.hypernyms.items():
        for p in parents:
            g.add_edge(child, p)
    try:
        edges = nx.shortest_path_length(g, a, b)
    except nx.NetworkXNoPath:
        return 0.0
    return 1.0 / (edges + 1)


def cosine(u, v):
    dot = sum(x * y for x, y in zip(u, v))
    nu = math.sqrt(sum(x * x for x in u))
    nv = math.sqrt(sum(y * y for y in v))
    if nu == 0 or nv == 0:
        return 0.0
    return dot / (nu * nv)


def rouge(candidate, references, n):
    def grams(text):
        toks = "".join(c if c.isalnum() else " " for c in text.lower()).split()
        return Counter(tuple(toks[i:i + n]) for i in range(len(toks) - n + 1))

    cand = grams(candidate)
    hits = ref_total = 0
    for ref in references:
        rg = grams(ref)
        ref_total += sum(rg.values())
        hits += sum((cand & rg).values())
    c_total = sum(cand.values())
    if c_total == 0:
        return 0.0, 0.0, 0.0
    r = hits / ref_total if ref_total else 0.0
    p = hits / (c_total * len(references))
    f = 2 * p * r / (p + r) if p + r else 0.0
    return r, p, f
