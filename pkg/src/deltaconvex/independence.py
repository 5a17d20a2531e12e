"""Caratheodory/exchange/Helly independence tests and invariant searches.

Decision procedures return machine-checkable witnesses: an uncovered hull
element for Caratheodory, a (pivot, uncovered element) pair for exchange.
Ties break to the least vertex / least lexicographic pair so outputs are
reproducible.

The invariant searches enumerate candidate sets by size ascending, then
lexicographically, and keep the first independent set found at the largest
size. For Caratheodory and exchange the search space is pruned with sound
structural filters:

* candidate sets of size >= 2 need an internal edge, and may not contain
  all three vertices of any triangle;
* Caratheodory candidates are drawn from triangle vertices only;
* exchange candidates allow at most one member lying on no triangle;
* sizes are capped at k+1 (Caratheodory) / k+2 (exchange) for a graph with
  k triangles.

The ``naive_*`` variants bypass every filter and cap; they are the oracle
side of the pruned searches, and the Helly early stop (hereditarity) is
likewise only used in the non-naive path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .graphs import Graph, GraphError, iter_bits, lowest_bit, vertex_mask
from .hull import hull_mask

CARATHEODORY = "caratheodory"
EXCHANGE = "exchange"
HELLY = "helly"


@dataclass(frozen=True)
class IndependenceVerdict:
    """Outcome of one independence test.

    ``witness`` is the least uncovered hull element for Caratheodory, the
    least (pivot, uncovered element) pair for exchange, and None for Helly
    (emptiness of the intersection is the certificate) or when dependent.
    """

    kind: str
    independent: bool
    witness: int | tuple[int, int] | None = None


@dataclass(frozen=True)
class InvariantResult:
    """Invariant value with its certifying set.

    ``exhaustive`` is False when a caller-supplied size cap truncated the
    search, in which case ``value`` is only a lower bound.
    ``search_bound_used`` is the largest set size the search considered.
    """

    value: int
    extremal_set: frozenset[int]
    exhaustive: bool
    search_bound_used: int


def _members(g: Graph, s: Iterable[int]) -> list[int]:
    members = sorted(set(s))
    if not members:
        raise GraphError("independence is undefined for the empty set")
    if members[0] < 0 or members[-1] >= g.n:
        raise GraphError(f"vertex set {members} not within 0..{g.n - 1}")
    return members


def _c_witness(g: Graph, smask: int, members: Iterable[int]) -> int | None:
    hull_s = hull_mask(g, smask)
    covered = 0
    for a in members:
        covered |= hull_mask(g, smask & ~(1 << a))
        if hull_s & ~covered == 0:
            return None
    return lowest_bit(hull_s & ~covered)


def _e_witness(g: Graph, smask: int, members: list[int]) -> tuple[int, int] | None:
    subhulls = [hull_mask(g, smask & ~(1 << a)) for a in members]
    for i, p in enumerate(members):
        others = 0
        for j, h in enumerate(subhulls):
            if j != i:
                others |= h
        rem = subhulls[i] & ~others
        if rem:
            return (p, lowest_bit(rem))
    return None


def _h_independent(g: Graph, smask: int, members: Iterable[int]) -> bool:
    inter = g.full_mask
    for a in members:
        inter &= hull_mask(g, smask & ~(1 << a))
        if inter == 0:
            return True
    return inter == 0


def is_c_independent(g: Graph, s: Iterable[int]) -> IndependenceVerdict:
    """Independent iff some hull element escapes every leave-one-out hull."""
    members = _members(g, s)
    p = _c_witness(g, vertex_mask(members), members)
    return IndependenceVerdict(CARATHEODORY, p is not None, p)


def is_e_independent(g: Graph, s: Iterable[int]) -> IndependenceVerdict:
    """Independent iff |S| = 1 or some pivot p admits an element of the
    hull of S minus p escaping every other leave-one-out hull."""
    members = _members(g, s)
    if len(members) == 1:
        return IndependenceVerdict(EXCHANGE, True, None)
    w = _e_witness(g, vertex_mask(members), members)
    return IndependenceVerdict(EXCHANGE, w is not None, w)


def is_h_independent(g: Graph, s: Iterable[int]) -> IndependenceVerdict:
    members = _members(g, s)
    ok = _h_independent(g, vertex_mask(members), members)
    return IndependenceVerdict(HELLY, ok, None)


def _has_internal_edge(g: Graph, members: Iterable[int], smask: int) -> bool:
    for v in members:
        if g.adj[v] & smask:
            return True
    return False


def _contains_triangle(g: Graph, smask: int) -> bool:
    for tm in g.triangle_masks:
        if tm & smask == tm:
            return True
    return False


def _cap(hard_cap: int, max_size: int | None) -> tuple[int, bool]:
    if max_size is None:
        return hard_cap, True
    cap = max(1, min(hard_cap, max_size))
    return cap, cap >= hard_cap


def caratheodory_number(g: Graph, max_size: int | None = None) -> InvariantResult:
    """Maximum size of a Caratheodory-independent set (pruned search)."""
    if g.n == 0:
        raise GraphError("invariants are undefined for the empty graph")
    k = len(g.triangles)
    cap, exhaustive = _cap(min(k + 1, g.n), max_size)
    best_size, best_set = 1, frozenset({0})
    tri_vertices = sorted(iter_bits(g.triangle_vertex_mask))
    for size in range(2, cap + 1):
        if size > len(tri_vertices):
            break
        for combo in combinations(tri_vertices, size):
            smask = vertex_mask(combo)
            if not _has_internal_edge(g, combo, smask):
                continue
            if _contains_triangle(g, smask):
                continue
            if _c_witness(g, smask, combo) is not None:
                best_size, best_set = size, frozenset(combo)
                break
    return InvariantResult(best_size, best_set, exhaustive, cap)


def exchange_number(g: Graph, max_size: int | None = None) -> InvariantResult:
    """Maximum size of an exchange-independent set (pruned search)."""
    if g.n == 0:
        raise GraphError("invariants are undefined for the empty graph")
    n = g.n
    k = len(g.triangles)
    cap, exhaustive = _cap(min(k + 2, n), max_size)
    best_size, best_set = 1, frozenset({0})
    if n >= 2 and cap >= 2:
        # Every pair is exchange independent.
        best_size, best_set = 2, frozenset({0, 1})
    tvm = g.triangle_vertex_mask
    for size in range(3, cap + 1):
        for combo in combinations(range(n), size):
            smask = vertex_mask(combo)
            off = smask & ~tvm
            if off & (off - 1):
                continue
            if not _has_internal_edge(g, combo, smask):
                continue
            if _contains_triangle(g, smask):
                continue
            if _e_witness(g, smask, list(combo)) is not None:
                best_size, best_set = size, frozenset(combo)
                break
    return InvariantResult(best_size, best_set, exhaustive, cap)


def helly_number(g: Graph, max_size: int | None = None) -> InvariantResult:
    """Maximum size of a Helly-independent set.

    Helly independence is hereditary, so the size-ascending scan stops as
    soon as one size admits no independent set.
    """
    if g.n == 0:
        raise GraphError("invariants are undefined for the empty graph")
    limit = g.n if max_size is None else max(1, min(g.n, max_size))
    best_size, best_set = 0, frozenset()
    for size in range(1, limit + 1):
        found = None
        for combo in combinations(range(g.n), size):
            if _h_independent(g, vertex_mask(combo), combo):
                found = frozenset(combo)
                break
        if found is None:
            return InvariantResult(best_size, best_set, True, size)
        best_size, best_set = size, found
    return InvariantResult(best_size, best_set, limit >= g.n, limit)


def _naive_search(
    g: Graph,
    independent: Callable[[Graph, int, list[int]], bool],
    max_size: int | None,
) -> InvariantResult:
    if g.n == 0:
        raise GraphError("invariants are undefined for the empty graph")
    limit = g.n if max_size is None else max(1, min(g.n, max_size))
    best_size, best_set = 0, frozenset()
    for size in range(1, limit + 1):
        for combo in combinations(range(g.n), size):
            if independent(g, vertex_mask(combo), list(combo)):
                best_size, best_set = size, frozenset(combo)
                break
    return InvariantResult(best_size, best_set, limit >= g.n, limit)


def naive_caratheodory_number(g: Graph, max_size: int | None = None) -> InvariantResult:
    return _naive_search(
        g, lambda gr, m, mem: _c_witness(gr, m, mem) is not None, max_size
    )


def naive_exchange_number(g: Graph, max_size: int | None = None) -> InvariantResult:
    return _naive_search(
        g,
        lambda gr, m, mem: len(mem) == 1 or _e_witness(gr, m, mem) is not None,
        max_size,
    )


def naive_helly_number(g: Graph, max_size: int | None = None) -> InvariantResult:
    return _naive_search(g, _h_independent, max_size)


def sierksma_check(g: Graph) -> tuple[bool, tuple[int, int, int]]:
    """Check e - 1 <= c <= max(h, e - 1) on exhaustively computed values."""
    c = caratheodory_number(g)
    e = exchange_number(g)
    h = helly_number(g)
    for r in (c, e, h):
        if not r.exhaustive:
            raise GraphError("cannot certify the inequality from a capped search")
    holds = e.value - 1 <= c.value <= max(h.value, e.value - 1)
    return holds, (c.value, e.value, h.value)


def cara_property_iii_violations(
    g: Graph, s: Iterable[int]
) -> tuple[tuple[int, int], ...]:
    """Pairs u, v of S whose two-point hull meets the hull of S minus both.

    Diagnostic only: the corresponding property of Caratheodory-independent
    sets is not used for pruning, so violations are reported, never fatal.
    """
    members = _members(g, s)
    smask = vertex_mask(members)
    out = []
    for u, v in combinations(members, 2):
        rest = hull_mask(g, smask & ~(1 << u) & ~(1 << v))
        if rest & hull_mask(g, vertex_mask((u, v))):
            out.append((u, v))
    return tuple(out)
