"""Labeled undirected trees and exact bounded-length path counting.

All counts are plain Python integers (arbitrary precision) and all
betweenness values are `fractions.Fraction`; nothing here ever rounds.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DiameterTooSmallError,
    DisconnectedError,
    DuplicateEdgeError,
    OutOfRangeError,
    SelfLoopError,
    WrongEdgeCountError,
)

# Above this vertex count the numpy convolutions inside path_counts_fast
# could overflow int64; fall back to pure-Python big ints.
_NUMPY_VERTEX_LIMIT = 100_000


@dataclass(frozen=True)
class Tree:
    """Immutable tree on vertices 0..n-1 with sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return sorted(
            (min(u, v), max(u, v)) for u in range(self.n) for v in self.adj[u] if u < v
        )


def build_tree(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    if n < 1:
        raise OutOfRangeError(f"vertex count must be >= 1, got {n}")
    edges = list(edges)
    if len(edges) != n - 1:
        raise WrongEdgeCountError(f"tree on {n} vertices needs {n - 1} edges, got {len(edges)}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    tree = Tree(n, tuple(tuple(sorted(a)) for a in adj))
    if sum(1 for d in bfs_distances(tree, 0) if d >= 0) != n:
        raise DisconnectedError("graph is not connected")
    return tree


def bfs_distances(t: Tree, source: int) -> list[int]:
    """Hop distances from source; -1 for unreachable vertices."""
    if not 0 <= source < t.n:
        raise OutOfRangeError(f"source {source} out of range for n={t.n}")
    dist = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in t.adj[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def bfs_parents(t: Tree, source: int) -> list[int]:
    """BFS parent pointers from source (parent[source] = -1)."""
    parent = [-2] * t.n
    parent[source] = -1
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in t.adj[u]:
            if parent[w] == -2:
                parent[w] = u
                queue.append(w)
    return parent


def diameter(t: Tree) -> int:
    """Max pairwise distance, by double BFS (exact on trees)."""
    d0 = bfs_distances(t, 0)
    far = max(range(t.n), key=lambda v: d0[v])
    d1 = bfs_distances(t, far)
    return max(d1)


@dataclass(frozen=True)
class PathCountTable:
    """Per-length path counts for one tree.

    p[l] is the number of (unordered) paths of length exactly l, pv[v][l]
    the number of those containing v as an interior vertex, for l = 0..d
    (entries below l=2 are zero). Pk/Pkv are the prefix sums over l=2..k.
    """

    d: int
    p: tuple[int, ...]
    pv: tuple[tuple[int, ...], ...]
    Pk: tuple[int, ...]
    Pkv: tuple[tuple[int, ...], ...]

    def total_up_to(self, k: int) -> int:
        return self.Pk[min(k, self.d)]

    def through_up_to(self, v: int, k: int) -> int:
        return self.Pkv[v][min(k, self.d)]


def _finish_table(d: int, p: list[int], pv: list[list[int]]) -> PathCountTable:
    Pk = list(itertools.accumulate(p))
    Pkv = tuple(tuple(itertools.accumulate(row)) for row in pv)
    return PathCountTable(
        d=d,
        p=tuple(p),
        pv=tuple(tuple(row) for row in pv),
        Pk=tuple(Pk),
        Pkv=Pkv,
    )


def path_counts_naive(t: Tree) -> PathCountTable:
    """Brute-force oracle: walk the unique path of every vertex pair."""
    n = t.n
    d = diameter(t)
    p = [0] * (d + 1)
    pv = [[0] * (d + 1) for _ in range(n)]
    for s in range(n):
        parent = bfs_parents(t, s)
        dist = bfs_distances(t, s)
        for u in range(s + 1, n):
            length = dist[u]
            if length < 2:
                continue
            p[length] += 1
            w = parent[u]
            while w != s:
                pv[w][length] += 1
                w = parent[w]
    return _finish_table(d, p, pv)


def _branch_histograms(t: Tree, v: int) -> tuple[list[int], list[tuple[int, ...]]]:
    """BFS from v: total distance histogram and one histogram per neighbor branch."""
    dist = [-1] * t.n
    branch = [-1] * t.n
    dist[v] = 0
    per_branch: list[list[int]] = []
    queue = deque()
    for b, w in enumerate(t.adj[v]):
        dist[w] = 1
        branch[w] = b
        per_branch.append([0, 1])
        queue.append(w)
    total = [0] * 2
    total[1] = len(t.adj[v])
    while queue:
        u = queue.popleft()
        du = dist[u]
        bu = branch[u]
        for w in t.adj[u]:
            if dist[w] < 0:
                dw = du + 1
                dist[w] = dw
                branch[w] = bu
                hb = per_branch[bu]
                if len(hb) <= dw:
                    hb.extend([0] * (dw + 1 - len(hb)))
                hb[dw] += 1
                if len(total) <= dw:
                    total.extend([0] * (dw + 1 - len(total)))
                total[dw] += 1
                queue.append(w)
    return total, [tuple(h) for h in per_branch]


def _self_conv(hist: Sequence[int], out_len: int, use_numpy: bool) -> list[int]:
    if use_numpy:
        arr = np.asarray(hist, dtype=np.int64)
        conv = np.convolve(arr, arr)
        return [int(x) for x in conv[:out_len]] + [0] * max(0, out_len - len(conv))
    out = [0] * out_len
    for a, ha in enumerate(hist):
        if ha == 0:
            continue
        for b, hb in enumerate(hist):
            if a + b >= out_len:
                break
            out[a + b] += ha * hb
    return out


def _through_from_hists(
    total: Sequence[int], branches: Sequence[tuple[int, ...]], use_numpy: bool
) -> list[int]:
    out_len = 2 * (len(total) - 1) + 1
    conv_total = _self_conv(total, out_len, use_numpy)
    # Branches with identical histograms (e.g. many single leaves) are
    # convolved once and scaled.
    for hist, mult in Counter(branches).items():
        conv_b = _self_conv(hist, out_len, use_numpy)
        for l, c in enumerate(conv_b):
            conv_total[l] -= mult * c
    assert all(c % 2 == 0 for c in conv_total)
    return [c // 2 for c in conv_total]


def counts_through_vertex(t: Tree, v: int) -> list[int]:
    """p_l(v) for l = 0..(max reachable path length through v).

    Pairs the per-branch distance histograms: a path of length l through v
    picks one endpoint in each of two distinct branches at distances a+b=l.
    """
    total, branches = _branch_histograms(t, v)
    return _through_from_hists(total, branches, t.n <= _NUMPY_VERTEX_LIMIT)


def path_counts_fast(t: Tree) -> PathCountTable:
    """Same table as path_counts_naive via per-vertex histogram pairing."""
    n = t.n
    d = diameter(t)
    pair_counts = [0] * (d + 1)
    pv = [[0] * (d + 1) for _ in range(n)]
    use_numpy = n <= _NUMPY_VERTEX_LIMIT
    for v in range(n):
        total, branches = _branch_histograms(t, v)
        for l, c in enumerate(total):
            if l >= 1:
                pair_counts[l] += c
        through = _through_from_hists(total, branches, use_numpy)
        row = pv[v]
        for l in range(2, min(d, len(through) - 1) + 1):
            row[l] = through[l]
    p = [0] * (d + 1)
    for l in range(2, d + 1):
        assert pair_counts[l] % 2 == 0
        p[l] = pair_counts[l] // 2
    return _finish_table(d, p, pv)


@dataclass(frozen=True)
class Profile:
    """Exact profile (BC_2, ..., BC_d) of one vertex."""

    vertex: int
    entries: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def k_range(self) -> range:
        return range(2, 2 + len(self.entries))

    def decimals(self, digits: int = 6) -> list[str]:
        return [f"{float(e):.{digits}f}" for e in self.entries]


def profile(t: Tree, v: int, table: PathCountTable | None = None) -> Profile:
    if not 0 <= v < t.n:
        raise OutOfRangeError(f"vertex {v} out of range for n={t.n}")
    if table is None:
        table = path_counts_fast(t)
    if table.d < 2:
        raise DiameterTooSmallError(f"diameter {table.d} < 2: profile is empty")
    entries = tuple(
        Fraction(table.Pkv[v][k], table.Pk[k]) for k in range(2, table.d + 1)
    )
    return Profile(vertex=v, entries=entries)


def all_profiles(t: Tree, table: PathCountTable | None = None) -> list[Profile]:
    if table is None:
        table = path_counts_fast(t)
    return [profile(t, v, table) for v in range(t.n)]


def read_tree(lines: Iterable[str]) -> Tree:
    """Parse the tree file format: comments (#), vertex count, n-1 edges."""
    data = [ln.strip() for ln in lines]
    data = [ln for ln in data if ln and not ln.startswith("#")]
    if not data:
        raise WrongEdgeCountError("empty tree file")
    n = int(data[0])
    edges = []
    for ln in data[1:]:
        a, b = ln.split()
        edges.append((int(a), int(b)))
    return build_tree(n, edges)


def write_tree(t: Tree, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(str(t.n))
    out.extend(f"{u} {v}" for u, v in t.edges())
    return "\n".join(out) + "\n"
