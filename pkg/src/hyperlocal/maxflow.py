"""Maximum s-t flow / minimum s-t cut by highest-label push-relabel.

Capacities are floats and ``math.inf`` marks uncuttable arcs.  Internally
infinite arcs carry a finite stand-in larger than the sum of all finite
capacities, which no finite cut can reach; a flow that reaches it is
reported as infinite.
"""

from __future__ import annotations

import math
from collections import deque

__all__ = ["FlowNetwork", "StaleStateError"]

INF = math.inf
# residuals at or below this fraction of the total capacity count as zero
DUST = 1e-12


class StaleStateError(RuntimeError):
    """Cut requested before ``max_flow`` ran, or after the network changed."""


class FlowNetwork:
    """Directed capacitated network with paired residual arcs.

    Arc ``a`` and its reverse ``a ^ 1`` are created together; the reverse
    starts with zero capacity.  Nodes are dense integers.
    """

    def __init__(self, n_nodes: int = 2, source: int = 0, sink: int = 1):
        if source == sink:
            raise ValueError("source and sink must differ")
        self.source = source
        self.sink = sink
        self._adj: list[list[int]] = [[] for _ in range(n_nodes)]
        self._head: list[int] = []
        self._cap: list[float] = []
        self._res: list[float] | None = None
        self._value: float | None = None
        self._tol = 0.0

    # ----------------------------------------------------------------- building

    @property
    def n_nodes(self) -> int:
        return len(self._adj)

    @property
    def n_arcs(self) -> int:
        """Number of forward arcs (reverse residual arcs not counted)."""
        return len(self._head) // 2

    def add_node(self) -> int:
        self._adj.append([])
        self._value = None
        return len(self._adj) - 1

    def add_nodes(self, count: int) -> range:
        start = len(self._adj)
        self._adj.extend([] for _ in range(count))
        self._value = None
        return range(start, start + count)

    def add_arc(self, u: int, v: int, capacity: float) -> int:
        if capacity < 0 or math.isnan(capacity):
            raise ValueError(f"capacity must be nonnegative, got {capacity}")
        a = len(self._head)
        self._head += [v, u]
        self._cap += [float(capacity), 0.0]
        self._adj[u].append(a)
        self._adj[v].append(a + 1)
        self._value = None
        return a // 2

    def arcs(self):
        """Yield ``(u, v, capacity)`` for every forward arc."""
        for a in range(0, len(self._head), 2):
            yield self._head[a + 1], self._head[a], self._cap[a]

    def cut_capacity(self, side) -> float:
        """Total capacity of arcs leaving the node set ``side``."""
        side = side if isinstance(side, (set, frozenset)) else set(side)
        total = 0.0
        for u, v, c in self.arcs():
            if u in side and v not in side:
                total += c
        return total

    def flow(self, arc: int) -> float:
        """Flow on forward arc ``arc`` after a solve."""
        self._require_solved()
        a = 2 * arc
        return self._res[a + 1]

    # ------------------------------------------------------------------ solving

    def max_flow(self) -> float:
        n = self.n_nodes
        s, t = self.source, self.sink
        head, adj = self._head, self._adj
        finite = [c for c in self._cap if c != INF]
        biggest = max(finite, default=0.0)
        big = sum(finite) + max(1.0, biggest)
        res = [big if c == INF else c for c in self._cap]
        tol = DUST * big
        self._tol = tol

        height = [0] * n
        excess = [0.0] * n
        cur = [0] * n
        two_n = 2 * n

        # highest-label buckets of active nodes, plus layers for the gap heuristic
        active: list[list[int]] = [[] for _ in range(two_n + 1)]
        in_active = [False] * n
        layer: list[set[int]] = [set() for _ in range(n + 1)]

        def activate(v):
            if not in_active[v] and v != s and v != t and height[v] < two_n:
                in_active[v] = True
                active[height[v]].append(v)

        def global_relabel():
            for h in layer:
                h.clear()
            for v in range(n):
                height[v] = two_n
            height[t] = 0
            queue = deque([t])
            while queue:
                v = queue.popleft()
                hv = height[v] + 1
                for a in adj[v]:
                    u = head[a]
                    if height[u] == two_n and u != s and res[a ^ 1] > tol:
                        height[u] = hv
                        queue.append(u)
            height[s] = n
            queue = deque([s])
            while queue:
                v = queue.popleft()
                hv = height[v] + 1
                for a in adj[v]:
                    u = head[a]
                    if height[u] == two_n and u != t and res[a ^ 1] > tol:
                        height[u] = hv
                        queue.append(u)
            for v in range(n):
                if height[v] < n:
                    layer[height[v]].add(v)
                cur[v] = 0
            for bucket in active:
                bucket.clear()
            for v in range(n):
                in_active[v] = False
                if excess[v] > tol:
                    activate(v)

        height[s] = n
        for a in adj[s]:
            if a & 1 == 0 and res[a] > 0:
                v = head[a]
                delta = res[a]
                res[a] = 0.0
                res[a ^ 1] += delta
                excess[v] += delta
                excess[s] -= delta
        global_relabel()

        relabels = 0
        top = two_n
        while True:
            while top >= 0 and not active[top]:
                top -= 1
            if top < 0:
                break
            u = active[top].pop()
            in_active[u] = False
            if height[u] != top:
                # stale entry left behind by a gap or global relabel
                activate(u)
                top = max(top, min(height[u], two_n))
                continue

            arcs_u = adj[u]
            deg = len(arcs_u)
            rebuilt = False
            while excess[u] > tol:
                i = cur[u]
                if i < deg:
                    a = arcs_u[i]
                    r = res[a]
                    v = head[a]
                    if r > tol and height[u] == height[v] + 1:
                        delta = excess[u] if excess[u] < r else r
                        res[a] = r - delta
                        res[a ^ 1] += delta
                        excess[u] -= delta
                        excess[v] += delta
                        if excess[v] > tol:
                            activate(v)
                    else:
                        cur[u] = i + 1
                    continue

                old = height[u]
                new = two_n
                for a in arcs_u:
                    if res[a] > tol:
                        hv = height[head[a]] + 1
                        if hv < new:
                            new = hv
                cur[u] = 0
                relabels += 1
                if old < n:
                    layer[old].discard(u)
                    if not layer[old]:
                        # gap: nothing at or above `old` can reach the sink
                        for h in range(old + 1, n):
                            for w in layer[h]:
                                height[w] = n + 1
                                cur[w] = 0
                            layer[h].clear()
                        new = max(new, n + 1)
                height[u] = min(new, two_n)
                if height[u] < n:
                    layer[height[u]].add(u)
                if height[u] >= two_n:
                    # floating-point dust with no residual route anywhere
                    excess[u] = 0.0
                    break
                if relabels % n == 0:
                    global_relabel()
                    rebuilt = True
                    break

            if excess[u] > tol:
                activate(u)
            top = two_n if rebuilt else max(top, min(height[u], two_n))

        value = excess[t]
        self._res = res
        self._big = big
        self._value = INF if value >= big * (1 - 1e-12) else value
        return self._value

    def _require_solved(self):
        if self._value is None or self._res is None:
            raise StaleStateError("max_flow must be computed before reading flows or cuts")

    def min_cut_source_side(self) -> frozenset[int]:
        """Nodes reachable from the source in the residual graph.

        This is the unique inclusion-minimal source side among all minimum cuts.
        """
        self._require_solved()
        res, head, adj, tol = self._res, self._head, self._adj, self._tol
        seen = {self.source}
        queue = deque([self.source])
        while queue:
            v = queue.popleft()
            for a in adj[v]:
                u = head[a]
                if u not in seen and res[a] > tol:
                    seen.add(u)
                    queue.append(u)
        seen.discard(self.sink)
        return frozenset(seen)
