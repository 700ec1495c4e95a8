"""Maximal and maximum matchings, with a brute-force oracle.

The maximum matching routine is an augmenting-path search with odd-cycle
(blossom) contraction, so it is correct on general graphs.  Everything
scans vertices and edges in ascending id order, which makes the returned
matching itself (not just its size) reproducible.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Union

from .graph import Edge, Graph, GraphError, TooLargeError

BRUTE_FORCE_EDGE_LIMIT = 24


class Matching:
    """A set of pairwise vertex-disjoint edges of one graph."""

    __slots__ = ("graph", "edge_ids", "_partner")

    def __init__(self, graph: Graph, edge_ids: Iterable[int] = ()):
        partner = [-1] * graph.n
        ids = sorted(set(edge_ids))
        for eid in ids:
            if not 0 <= eid < len(graph.edges):
                raise GraphError(f"edge id {eid} leaves [0, {len(graph.edges)})")
            e = graph.edges[eid]
            if partner[e.u] != -1 or partner[e.v] != -1:
                raise GraphError(f"matching edges share endpoint at edge {eid}")
            partner[e.u] = e.v
            partner[e.v] = e.u
        self.graph = graph
        self.edge_ids = frozenset(ids)
        self._partner = tuple(partner)

    @property
    def size(self) -> int:
        return len(self.edge_ids)

    def partner(self, v: int) -> Union[int, None]:
        mate = self._partner[v]
        return None if mate == -1 else mate

    def is_matched(self, v: int) -> bool:
        return self._partner[v] != -1

    def edges(self) -> list[Edge]:
        return [self.graph.edges[eid] for eid in sorted(self.edge_ids)]

    def unmatched_vertices(self) -> list[int]:
        return [v for v in range(self.graph.n) if self._partner[v] == -1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.graph == other.graph and self.edge_ids == other.edge_ids

    def __repr__(self) -> str:
        return f"Matching(size={self.size}, edge_ids={sorted(self.edge_ids)})"


def greedy_maximal_matching(g: Graph) -> Matching:
    """Scan edges in ascending id order, taking every edge whose endpoints
    are both still free.  The result is maximal: no edge of the graph has
    two unmatched endpoints."""
    free = [True] * g.n
    taken = []
    for e in g.edges:
        if free[e.u] and free[e.v]:
            free[e.u] = free[e.v] = False
            taken.append(e.id)
    return Matching(g, taken)


def maximum_matching(g: Graph) -> Matching:
    """Compute a maximum-cardinality matching of a general graph.

    Grows an alternating tree from each unmatched vertex in ascending
    order.  When a scanned edge closes an odd cycle, the cycle is
    contracted onto its nearest common ancestor (the blossom base) and the
    search continues in the contracted graph; when it reaches another
    unmatched vertex, the alternating path is flipped to gain one edge.
    Neighbors are scanned in ascending order, so the output is
    deterministic.
    """
    n = g.n
    match = [-1] * n

    def find_augmenting_path(root: int) -> None:
        parent = [-1] * n
        base = list(range(n))
        in_queue = [False] * n
        queue = deque([root])
        in_queue[root] = True

        def lowest_common_base(a: int, b: int) -> int:
            on_path = [False] * n
            x = a
            while True:
                x = base[x]
                on_path[x] = True
                if match[x] == -1:
                    break
                x = parent[match[x]]
            y = b
            while True:
                y = base[y]
                if on_path[y]:
                    return y
                y = parent[match[y]]

        def mark_cycle(x: int, anchor: int, child: int, in_blossom: list[bool]) -> None:
            while base[x] != anchor:
                in_blossom[base[x]] = True
                in_blossom[base[match[x]]] = True
                parent[x] = child
                child = match[x]
                x = parent[match[x]]

        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if base[v] == base[w] or match[v] == w:
                    continue
                if w == root or (match[w] != -1 and parent[match[w]] != -1):
                    # second endpoint is an outer vertex: contract the odd cycle
                    anchor = lowest_common_base(v, w)
                    in_blossom = [False] * n
                    mark_cycle(v, anchor, w, in_blossom)
                    mark_cycle(w, anchor, v, in_blossom)
                    for x in range(n):
                        if in_blossom[base[x]]:
                            base[x] = anchor
                            if not in_queue[x]:
                                in_queue[x] = True
                                queue.append(x)
                elif parent[w] == -1:
                    parent[w] = v
                    if match[w] == -1:
                        # augment along root .. v - w
                        x = w
                        while x != -1:
                            prev = parent[x]
                            nxt = match[prev]
                            match[x] = prev
                            match[prev] = x
                            x = nxt
                        return
                    mate = match[w]
                    if not in_queue[mate]:
                        in_queue[mate] = True
                        queue.append(mate)

    for root in range(n):
        if match[root] == -1:
            find_augmenting_path(root)

    edge_ids = set()
    for v in range(n):
        if match[v] > v:
            eid = g.edge_id(v, match[v])
            assert eid is not None
            edge_ids.add(eid)
    return Matching(g, edge_ids)


def brute_force_maximum_matching(g: Graph) -> Matching:
    """Exhaustive maximum matching, for cross-checking on small graphs.

    Depth-first over edge subsets in ascending id order (take before
    skip), pruning branches that cannot beat the best found and stopping
    at the floor(n/2) ceiling.  Guarded at BRUTE_FORCE_EDGE_LIMIT edges.
    """
    m = len(g.edges)
    if m > BRUTE_FORCE_EDGE_LIMIT:
        raise TooLargeError(f"{m} edges exceeds the brute-force guard of {BRUTE_FORCE_EDGE_LIMIT}")
    best: list[int] = []
    chosen: list[int] = []
    used = [False] * g.n
    ceiling = g.n // 2
    done = False

    def search(i: int) -> None:
        nonlocal best, done
        if done:
            return
        if len(chosen) > len(best):
            best = chosen.copy()
            if len(best) == ceiling:
                done = True
                return
        if i == m or len(chosen) + (m - i) <= len(best):
            return
        e = g.edges[i]
        if not used[e.u] and not used[e.v]:
            used[e.u] = used[e.v] = True
            chosen.append(i)
            search(i + 1)
            chosen.pop()
            used[e.u] = used[e.v] = False
        search(i + 1)

    search(0)
    return Matching(g, best)


def _augmenting_path_exists(g: Graph, partner: list[int]) -> bool:
    # Exhaustive search over simple alternating paths; after each
    # non-matching edge the matched continuation is forced, so the tree
    # only branches at outer vertices.  Slow but independent of the
    # blossom machinery above.
    def extend(v: int, visited: frozenset[int]) -> bool:
        for w in g.adj[v]:
            if w == partner[v] or w in visited:
                continue
            if partner[w] == -1:
                return True
            mate = partner[w]
            if mate in visited:
                continue
            if extend(mate, visited | {w, mate}):
                return True
        return False

    return any(
        partner[r] == -1 and extend(r, frozenset((r,)))
        for r in range(g.n)
    )


def verify_matching(g: Graph, matching, mode: str = "valid") -> bool:
    """Check a matching (a Matching or a collection of edge ids).

    mode "valid": edges exist and are pairwise vertex-disjoint.
    mode "maximal": additionally no edge of g could still be added.
    mode "maximum": additionally no augmenting path exists, established
    by an independent exhaustive alternating-path search.
    """
    if mode not in ("valid", "maximal", "maximum"):
        raise ValueError(f"unknown mode {mode!r}")
    edge_ids = matching.edge_ids if isinstance(matching, Matching) else set(matching)
    partner = [-1] * g.n
    for eid in sorted(edge_ids):
        if not 0 <= eid < len(g.edges):
            return False
        e = g.edges[eid]
        if partner[e.u] != -1 or partner[e.v] != -1:
            return False
        partner[e.u] = e.v
        partner[e.v] = e.u
    if mode == "valid":
        return True
    if mode == "maximal":
        return all(partner[e.u] != -1 or partner[e.v] != -1 for e in g.edges)
    return not _augmenting_path_exists(g, partner)
