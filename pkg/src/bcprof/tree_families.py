"""Worst-case tree families and their closed-form path counts.

Families: simple paths, brooms, double brooms, the dip construction
(central path with paired branches), and the crossing construction (two
sets of leaf-tipped brooms hanging off a u-v path).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    BadSpecError,
    OddMError,
    OutOfDomainError,
    OutOfRangeError,
    OutOfTabulatedRangeError,
    SearchCapExceededError,
)
from .tree_core import Tree, build_tree, counts_through_vertex

SEARCH_CAP = 10**9


def make_path(n: int) -> Tree:
    """Path with n edges, vertices 0..n."""
    if n < 1:
        raise OutOfRangeError(f"path length must be >= 1, got {n}")
    return build_tree(n + 1, [(i, i + 1) for i in range(n)])


def make_broom(m: int, n: int) -> tuple[Tree, int]:
    """Path of length m with n leaves attached to endpoint m.

    Returns (tree, center) where center is the endpoint carrying the leaves.
    """
    if m < 1 or n < 1:
        raise OutOfRangeError(f"broom needs m >= 1 and n >= 1, got m={m}, n={n}")
    edges = [(i, i + 1) for i in range(m)]
    edges += [(m, m + 1 + i) for i in range(n)]
    return build_tree(m + 1 + n, edges), m


def make_double_broom(m: int, n: int) -> tuple[Tree, int]:
    """Path of length m (m even) with n leaves at both endpoints.

    Returns (tree, middle) where middle is the central path vertex.
    """
    if m < 2:
        raise OutOfRangeError(f"double broom needs m >= 2, got {m}")
    if m % 2 != 0:
        raise OddMError(f"double broom needs even m, got {m}")
    if n < 1:
        raise OutOfRangeError(f"double broom needs n >= 1, got {n}")
    edges = [(i, i + 1) for i in range(m)]
    nxt = m + 1
    for _ in range(n):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(n):
        edges.append((m, nxt))
        nxt += 1
    return build_tree(nxt, edges), m // 2


def make_gij(i: int, j: int) -> tuple[Tree, int]:
    """Dip construction: central path of length i(j+1)+2 with 2i branches.

    Two length-j branches are attached at every central position congruent
    to 3 mod (j+1). The designated vertex is central position 1.
    """
    if i < 1 or j < 1:
        raise OutOfRangeError(f"construction needs i >= 1 and j >= 1, got i={i}, j={j}")
    central_len = i * (j + 1) + 2
    edges = [(p, p + 1) for p in range(central_len)]
    nxt = central_len + 1
    for idx in range(i):
        attach = 3 + idx * (j + 1)
        for _ in range(2):
            prev = attach
            for _ in range(j):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return build_tree(nxt, edges), 1


@dataclass(frozen=True)
class TellChoice:
    a: tuple[int, ...]
    b: tuple[int, ...]
    strategy: str


def _tell_build(l: int, a: list[int], b: list[int]) -> tuple[Tree, int, int]:
    """Assemble the crossing-construction tree for given leaf counts.

    u = 0 and v = 2l sit on a central path of length 2l. Branch j on u's
    side is a path of 2j edges ending at a handle with a[j] leaves (the
    handle is u itself for j=0); on v's side the path has 2j+1 edges and
    b[j] leaves. Zero leaf counts are allowed (partial trees during search).
    """
    u, v = 0, 2 * l
    edges = [(p, p + 1) for p in range(2 * l)]
    nxt = 2 * l + 1
    for j in range(l):
        handle = u
        for _ in range(2 * j):
            edges.append((handle, nxt))
            handle = nxt
            nxt += 1
        for _ in range(a[j]):
            edges.append((handle, nxt))
            nxt += 1
        handle = v
        for _ in range(2 * j + 1):
            edges.append((handle, nxt))
            handle = nxt
            nxt += 1
        for _ in range(b[j]):
            edges.append((handle, nxt))
            nxt += 1
    return build_tree(nxt, edges), u, v


def _pk_through(t: Tree, x: int, k: int) -> int:
    counts = counts_through_vertex(t, x)
    return sum(counts[2 : k + 1])


def _tell_margin(l: int, a: list[int], b: list[int], k: int, side: str, slot: int, val: int) -> int:
    """P_k(u) - P_k(v) (side 'a') or P_k(v) - P_k(u) (side 'b') with a trial leaf count."""
    aa, bb = list(a), list(b)
    (aa if side == "a" else bb)[slot] = val
    t, u, v = _tell_build(l, aa, bb)
    pu, pv = _pk_through(t, u, k), _pk_through(t, v, k)
    return pu - pv if side == "a" else pv - pu


def _minimal_leaf_count(l, a, b, k, side, slot):
    """Smallest positive leaf count making the margin positive, or None.

    The margin is a quadratic polynomial in the leaf count (linear except
    for leaves attached directly to u, whose pairs add a binomial term), so
    three small builds determine it exactly; adding leaves to the favored
    side never decreases the margin, so binary search applies.
    """
    g0 = _tell_margin(l, a, b, k, side, slot, 0)
    g1 = _tell_margin(l, a, b, k, side, slot, 1)
    g2 = _tell_margin(l, a, b, k, side, slot, 2)
    d1, d2 = g1 - g0, g2 - 2 * g1 + g0

    def g(t: int) -> int:
        return g0 + d1 * t + d2 * t * (t - 1) // 2

    if g(1) > 0:
        return 1
    if g(SEARCH_CAP) <= 0:
        return None
    lo, hi = 1, SEARCH_CAP
    while lo < hi:
        mid = (lo + hi) // 2
        if g(mid) > 0:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _tell_minimal_search(l: int) -> tuple[list[int], list[int]]:
    a, b = [0] * l, [0] * l
    for k in range(2, 2 * l):
        if k % 2 == 0:
            side, slot = "a", k // 2 - 1
        else:
            side, slot = "b", (k - 1) // 2 - 1
        val = _minimal_leaf_count(l, a, b, k, side, slot)
        if val is None:
            raise SearchCapExceededError(f"no {side}[{slot}] below {SEARCH_CAP} works at k={k}")
        (a if side == "a" else b)[slot] = val
    if a[l - 1] == 0:
        a[l - 1] = 1
    # The final b slot is unconstrained by the alternation inequalities;
    # extend the alternation one step past the u-v distance if affordable.
    val = _minimal_leaf_count(l, a, b, 2 * l + 1, "b", l - 1)
    b[l - 1] = val if val is not None else 1
    return a, b


def _tell_paper_bound(l: int) -> tuple[list[int], list[int]]:
    a, b = [0] * l, [0] * l
    a[0] = comb(l + 1, 2)

    def upper_v(m: int) -> int:
        return (sum(b[j] for j in range(-(-m // 2) - 1)) + (l + 1) * (m - 1)) ** 2

    def upper_u(m: int) -> int:
        return (sum(a[j] for j in range(m // 2)) + (l + 1) * (m - 1)) ** 2

    for k in range(3, 2 * l):
        if k % 2 == 0:
            slot = k // 2 - 1
            s_k = sum(upper_v(m) for m in range(2, k + 1))
            a[slot] = max(1, s_k - 2 * sum(a[:slot]))
        else:
            slot = (k - 1) // 2 - 1
            s_k = sum(upper_u(m) for m in range(2, k + 1))
            b[slot] = max(1, -((2 * sum(b[:slot]) - s_k) // 2))
    if a[l - 1] == 0:
        a[l - 1] = 1
    if b[l - 1] == 0:
        b[l - 1] = 1
    for side, vals in (("a", a), ("b", b)):
        for slot, val in enumerate(vals):
            if val > SEARCH_CAP:
                raise SearchCapExceededError(f"{side}[{slot}] = {val} exceeds {SEARCH_CAP}")
    return a, b


def make_tell(l: int, strategy: str = "minimal_search") -> tuple[Tree, int, int, TellChoice]:
    """Crossing construction with leaf counts chosen by the given strategy."""
    if l < 1:
        raise OutOfRangeError(f"construction needs l >= 1, got {l}")
    if strategy == "minimal_search":
        a, b = _tell_minimal_search(l)
    elif strategy == "paper_bound":
        a, b = _tell_paper_bound(l)
    else:
        raise BadSpecError(f"unknown strategy {strategy!r}")
    t, u, v = _tell_build(l, a, b)
    return t, u, v, TellChoice(a=tuple(a), b=tuple(b), strategy=strategy)


def closed_form_path_Pkv(n: int, i: int, k: int) -> int:
    """Paths of length at most k containing vertex i of a length-n path."""
    if not (0 <= i <= n // 2) or not (2 <= k <= n):
        raise OutOfDomainError(f"need 0 <= i <= n/2 and 2 <= k <= n, got n={n}, i={i}, k={k}")
    if k <= i:
        return comb(k, 2)
    if k <= n + 1 - i:
        return comb(i, 2) + i * (k - i)
    return (
        comb(i, 2)
        + i * (n - 2 * i + 1)
        + (n + 1) * (k - n + i - 1)
        + comb(n + 2 - i, 2)
        - comb(k + 1, 2)
    )


def closed_form_path_bck(n: int, i: int, k: int) -> Fraction:
    return Fraction(closed_form_path_Pkv(n, i, k), k * (n + 1) - n - comb(k + 1, 2))


def closed_form_gij_pk(i: int, j: int, k: int) -> int:
    """Tabulated exact-length path counts p_k of the dip construction (j >= 5)."""
    if i < 1 or j < 5:
        raise OutOfDomainError(f"tabulated rows need i >= 1 and j >= 5, got i={i}, j={j}")
    if k == 2:
        return 3 * i * j + 4 * i + 1
    if k == 3:
        return 3 * i * j + 7 * i
    if 4 <= k <= j + 1:
        return i * (3 * j + 3) + (3 * k - 5) * (i - 1) + 6
    if j + 2 <= k <= j + 4:
        return k * (3 * i - 9) + i * (3 * j - 6) + 6 * j + 21
    if j + 5 <= k <= 2 * j:
        return k * (3 * i - 9) + i * (3 * j - 6) + 6 * j + 23
    if k == 2 * j + 1:
        return k * (-4 * i + 1) + i * (17 * j + 1) - 14 * j + 13
    if 2 * j + 2 <= k <= 2 * j + 3:
        return k * (-4 * i - 1) + i * (17 * j + 9) - 10 * j + 9
    r = (k - 2) // (j + 1)
    if 2 <= r <= i - 1:
        if k <= r * (j + 1) + 3:
            return -9 * k + i * (9 * j - 3) + 6 * j + 12 * r + 9
        if k <= (r + 1) * j + r - 1:
            return -9 * k + i * (9 * j - 3) + 6 * j + 12 * r + 11
        if k <= (r + 1) * j + r + 1:
            return (
                k * (4 * i - 3 - 4 * r)
                + i * (-3 + 5 * j - 4 * r * j - 4 * r)
                + j * (-2 * r + 4 * r * r)
                + 6 * r
                + 4 * r * r
                + 11
            )
        if k == (r + 1) * j + r + 2:
            return (
                k * (-4 * i - 3 + 4 * r)
                + i * (4 * r * j + 13 * j + 4 * r + 5)
                + j * (-4 * r * r - 10 * r)
                - 4 * r * r
                - 2 * r
                + 9
            )
    raise OutOfTabulatedRangeError(f"k={k} not covered by any tabulated row for i={i}, j={j}")


def tabulated_gij_k_values(i: int, j: int) -> list[int]:
    """All k for which closed_form_gij_pk has a row, in increasing order."""
    ks = list(range(2, 2 * j + 4))
    for r in range(2, i):
        ks.extend(range(r * (j + 1) + 2, (r + 1) * j + r + 3))
    return ks


def closed_form_gij_Pk(i: int, j: int, r: int) -> tuple[int, int, int]:
    """Prefix sums P_k of the dip construction at k = r(j+1)+2, +3, +4."""
    if j < 5 or not (2 <= r <= i - 1):
        raise OutOfDomainError(f"need j >= 5 and 2 <= r <= i-1, got i={i}, j={j}, r={r}")
    base = (
        r * r * Fraction(-9 * j * j - 6 * j - 1, 2)
        + r
        * (
            9 * i * j * j
            + 6 * i * j
            + i
            + 6 * j * j
            + Fraction(-23 * j + 17, 2)
        )
        + i * (-6 * j * j + 16 * j - 7)
        - 3 * j * j
        + 15 * j
        - 17
    )
    assert base.denominator == 1
    first = int(base)
    inc1 = (9 * j - 3) * (i - r) + 6 * j - 18
    inc2 = (9 * j - 3) * (i - r) + 6 * j - 25
    return first, first + inc1, first + inc1 + inc2


def closed_form_gij_Pkv(i: int, j: int, r: int) -> tuple[int, int, int]:
    """P_k(v) of the designated vertex at k = r(j+1)+2, +3, +4."""
    if not (2 <= r <= i - 1) or j < 1:
        raise OutOfDomainError(f"need 2 <= r <= i-1 and j >= 1, got i={i}, j={j}, r={r}")
    base = r * (3 * j + 1)
    return base + 1, base + 2, base + 5
