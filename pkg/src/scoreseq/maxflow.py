"""Integral max-flow (Dinic) with residual reachability for min cuts."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, size: int) -> None:
        self.size = size
        self.adj: list[list[int]] = [[] for _ in range(size)]
        # arc k and its reverse k ^ 1 live side by side
        self.head: list[int] = []
        self.cap: list[int] = []
        self.flow: list[int] = []

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        if capacity < 0:
            raise ValueError("negative capacity")
        k = len(self.head)
        self.head += [v, u]
        self.cap += [capacity, 0]
        self.flow += [0, 0]
        self.adj[u].append(k)
        self.adj[v].append(k + 1)
        return k

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.size
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for k in self.adj[u]:
                v = self.head[k]
                if level[v] < 0 and self.cap[k] > self.flow[k]:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _augment(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        # iterative blocking-flow DFS: finds one augmenting path per call
        path: list[int] = []
        u = s
        while True:
            if u == t:
                pushed = min(self.cap[k] - self.flow[k] for k in path)
                for k in path:
                    self.flow[k] += pushed
                    self.flow[k ^ 1] -= pushed
                return pushed
            arcs = self.adj[u]
            while it[u] < len(arcs):
                k = arcs[it[u]]
                v = self.head[k]
                if level[v] == level[u] + 1 and self.cap[k] > self.flow[k]:
                    break
                it[u] += 1
            else:
                if u == s:
                    return 0
                level[u] = -1  # dead end
                k = path.pop()
                u = self.head[k ^ 1]
                it[u] += 1
                continue
            path.append(k)
            u = self.head[k]

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while (level := self._levels(s, t)) is not None:
            it = [0] * self.size
            while pushed := self._augment(s, t, level, it):
                total += pushed
        return total

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for k in self.adj[u]:
                v = self.head[k]
                if v not in seen and self.cap[k] > self.flow[k]:
                    seen.add(v)
                    queue.append(v)
        return seen
