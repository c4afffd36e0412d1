"""Capacity-network engine: Dinic maximum flow plus lower-bound machinery.

Networks carry integer lower/upper bounds per arc.  Unbounded capacity is
expressed with the ``INF`` marker; solvers substitute an integer sentinel
larger than any achievable flow so that all arithmetic stays integral.

Determinism: arcs are traversed in ascending insertion order everywhere
(BFS level construction and blocking-flow DFS), so a given network always
yields the same flow assignment, not merely the same value.
"""

import math
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

INF = math.inf


class InfeasibleFlowError(RuntimeError):
    """No flow satisfies the lower/upper bounds of the network."""


class Arc(NamedTuple):
    tail: int
    head: int
    lower: int = 0
    cap: int | float = 1
    tag: str | None = None


class FlowAssignment(NamedTuple):
    """Per-arc integer flows (aligned with the network's arc list) and the
    net source-to-sink value."""

    flow: tuple[int, ...]
    value: int


@dataclass(frozen=True)
class BoundedFlowNetwork:
    """Directed capacity network with per-arc bounds ``lower <= cap``.

    ``source`` and ``sink`` are the endpoints of the flow problem the network
    poses.  Apart from an explicit return arc (sink -> source), the source
    must have no incoming arcs and the sink no outgoing arcs.  Parallel arcs
    and self-loop arcs are permitted.
    """

    node_count: int
    arcs: tuple[Arc, ...]
    source: int
    sink: int

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))
        n = self.node_count
        if not (0 <= self.source < n and 0 <= self.sink < n):
            raise ValueError("source/sink out of range")
        if self.source == self.sink:
            raise ValueError("source and sink must differ")
        for a in self.arcs:
            if not (0 <= a.tail < n and 0 <= a.head < n):
                raise ValueError(f"arc endpoint out of range: {a}")
            if a.lower < 0 or int(a.lower) != a.lower:
                raise ValueError(f"lower bound must be a non-negative integer: {a}")
            if a.cap != INF:
                if int(a.cap) != a.cap:
                    raise ValueError(f"finite capacity must be an integer: {a}")
                if a.lower > a.cap:
                    raise ValueError(f"lower bound exceeds capacity: {a}")
            if a.head == self.source and a.tail != self.sink and a.cap > 0:
                raise ValueError("source admits no incoming arc besides a return arc")
            if a.tail == self.sink and a.head != self.source and a.cap > 0:
                raise ValueError("sink admits no outgoing arc besides a return arc")

    def arcs_from(self, node: int) -> list[int]:
        return [i for i, a in enumerate(self.arcs) if a.tail == node]

    def arcs_into(self, node: int) -> list[int]:
        return [i for i, a in enumerate(self.arcs) if a.head == node]


def _int_sentinel(arcs) -> int:
    """Integer strictly larger than any flow the finite bounds can carry."""
    total = 1
    for a in arcs:
        if a.cap != INF:
            total += int(a.cap)
        total += int(a.lower)
    return total


class _Dinic:
    """Residual-graph Dinic solver.

    Arcs live in paired slots: forward arc at index ``2k`` and its residual
    reverse at ``2k ^ 1``.  Adjacency lists keep insertion order, which makes
    every BFS/DFS tie-break resolve toward the lowest arc index.
    """

    def __init__(self, n: int):
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, cap_fwd: int, cap_rev: int = 0) -> int:
        i = len(self.to)
        self.to.append(v)
        self.cap.append(cap_fwd)
        self.adj[u].append(i)
        self.to.append(u)
        self.cap.append(cap_rev)
        self.adj[v].append(i + 1)
        return i

    def flow_on(self, arc_id: int, cap_fwd: int) -> int:
        return cap_fwd - self.cap[arc_id]

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while self._bfs(s, t):
            total += self._blocking_flow(s, t)
        return total

    def _bfs(self, s: int, t: int) -> bool:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        to, cap, adj = self.to, self.cap, self.adj
        t_level = -1
        while q:
            u = q.popleft()
            lu = level[u]
            if t_level >= 0 and lu >= t_level:
                continue  # nothing past the sink's layer can matter
            lu += 1
            for i in adj[u]:
                if cap[i] > 0:
                    v = to[i]
                    if level[v] < 0:
                        level[v] = lu
                        if v == t:
                            t_level = lu
                        else:
                            q.append(v)
        self.level = level
        return level[t] >= 0

    def _blocking_flow(self, s: int, t: int) -> int:
        to, cap, adj, level = self.to, self.cap, self.adj, self.level
        it = [0] * self.n
        path: list[int] = []
        total = 0
        u = s
        while True:
            if u == t:
                aug = min(cap[i] for i in path)
                total += aug
                cut = None
                for idx, i in enumerate(path):
                    cap[i] -= aug
                    cap[i ^ 1] += aug
                    if cut is None and cap[i] == 0:
                        cut = idx
                del path[cut + 1 :]
                sat = path.pop()
                u = to[sat ^ 1]
                it[u] += 1
                continue
            lst = adj[u]
            iu = it[u]
            nxt = level[u] + 1
            arc = -1
            while iu < len(lst):
                i = lst[iu]
                if cap[i] > 0 and level[to[i]] == nxt:
                    arc = i
                    break
                iu += 1
            it[u] = iu
            if arc >= 0:
                path.append(arc)
                u = to[arc]
            else:
                if u == s:
                    break
                level[u] = -1  # dead end for the rest of this phase
                i = path.pop()
                u = to[i ^ 1]
                it[u] += 1
        return total


class _DinicUnit:
    """Dinic specialized to networks whose capacities are all one.

    Residual capacities live in a bytearray (arc ``i`` forward at slot
    ``2i``, reverse at ``2i ^ 1``); level construction runs layer by layer
    as vectorized numpy gathers over a CSR adjacency, while the blocking
    flow walks flat Python lists.  Traversal order is ascending arc index,
    matching the generic solver exactly.
    """

    def __init__(self, n: int, arcs):
        self.n = n
        m = len(arcs)
        self.cap = bytearray(2 * m)
        head = [0] * (2 * m)
        buckets: list[list[int]] = [[] for _ in range(n)]
        for i, a in enumerate(arcs):
            p = 2 * i
            self.cap[p] = 1
            head[p] = a.head
            head[p + 1] = a.tail
            buckets[a.tail].append(p)
            buckets[a.head].append(p + 1)
        self.head = head
        indptr = [0] * (n + 1)
        adj_flat: list[int] = []
        for v in range(n):
            adj_flat.extend(buckets[v])
            indptr[v + 1] = len(adj_flat)
        self.adj_flat = adj_flat
        self.indptr = indptr
        self._adj_np = np.asarray(adj_flat, dtype=np.int64)
        self._head_np = np.asarray(head, dtype=np.int64)
        self._tail_np = self._head_np[np.arange(2 * m, dtype=np.int64) ^ 1]
        self._indptr_np = np.asarray(indptr, dtype=np.int64)
        self._cap_np = np.frombuffer(self.cap, dtype=np.uint8)

    def _gather(self, frontier):
        indptr, adj = self._indptr_np, self._adj_np
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            return adj[:0]
        before = np.repeat(np.cumsum(counts) - counts, counts)
        return adj[np.repeat(starts, counts) + np.arange(total) - before]

    def _reachable(self, root: int, backward: bool):
        """Nodes reachable from ``root`` along unit arcs (forward slots are
        even); ``backward`` follows arcs head-to-tail via the odd slots."""
        seen = np.zeros(self.n, dtype=bool)
        seen[root] = True
        frontier = np.array([root], dtype=np.int64)
        parity = 1 if backward else 0
        while frontier.size:
            pos = self._gather(frontier)
            pos = pos[(pos & 1) == parity]
            nxt = self._head_np[pos]
            nxt = np.unique(nxt[~seen[nxt]])
            if nxt.size == 0:
                break
            seen[nxt] = True
            frontier = nxt
        return seen

    def _prune(self, s: int, t: int) -> None:
        """Drop arcs through nodes that no source-to-sink path can use.
        Sound once and for all: residual arcs never extend reachability
        into regions that start out disconnected from both endpoints."""
        alive = self._reachable(s, False) & self._reachable(t, True)
        adj = self._adj_np
        keep = alive[self._head_np[adj]] & alive[self._head_np[adj ^ 1]]
        pref = np.concatenate(([0], np.cumsum(keep)))
        self._indptr_np = pref[self._indptr_np]
        self._adj_np = adj[keep]
        self.adj_flat = self._adj_np.tolist()
        self.indptr = self._indptr_np.tolist()

    def _levels(self, s: int, t: int):
        level = np.full(self.n, -1, dtype=np.int64)
        level[s] = 0
        frontier = np.array([s], dtype=np.int64)
        heads, cap = self._head_np, self._cap_np
        depth = 0
        while frontier.size:
            depth += 1
            pos = self._gather(frontier)
            nxt = heads[pos[cap[pos] > 0]]
            nxt = nxt[level[nxt] < 0]
            if nxt.size == 0:
                break
            level[nxt] = depth
            if level[t] == depth:
                return level
            frontier = np.unique(nxt)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        self._prune(s, t)
        while True:
            lv = self._levels(s, t)
            if lv is None:
                break
            total += self._blocking_flow(s, t, lv)
        return total

    def _admissible_csr(self, level):
        """Restrict the adjacency to level-graph arcs (tail reached, head one
        layer deeper, residual capacity left), preserving per-node order."""
        adj = self._adj_np
        ltail = level[self._tail_np]
        ok = ((self._cap_np > 0) & (ltail >= 0)
              & (level[self._head_np] == ltail + 1))
        keep = ok[adj]
        pref = np.concatenate(([0], np.cumsum(keep)))
        indptr = pref[self._indptr_np]
        return adj[keep].tolist(), indptr.tolist()

    def _blocking_flow(self, s: int, t: int, level) -> int:
        cap, head = self.cap, self.head
        flat, indptr = self._admissible_csr(level)
        it = indptr[:-1]
        dead = bytearray(self.n)
        path: list[int] = []
        total = 0
        u = s
        while True:
            if u == t:
                for p in path:
                    cap[p] = 0
                    cap[p ^ 1] = 1
                total += 1
                path.clear()
                u = s
                continue
            k = it[u]
            end = indptr[u + 1]
            p = -1
            while k < end:
                q = flat[k]
                if cap[q] and not dead[head[q]]:
                    p = q
                    break
                k += 1
            it[u] = k
            if p >= 0:
                path.append(p)
                u = head[p]
            else:
                if u == s:
                    break
                dead[u] = 1
                p = path.pop()
                u = head[p ^ 1]
                it[u] += 1
        return total


def max_flow_dinic(net: BoundedFlowNetwork,
                   source: int | None = None,
                   sink: int | None = None) -> FlowAssignment:
    """Maximum integer flow on a network whose lower bounds are all zero.

    Repeated breadth-first level graphs with blocking flows on the residual
    network.  Returns the per-arc flows and the flow value.
    """
    s = net.source if source is None else source
    t = net.sink if sink is None else sink
    if s == t:
        raise ValueError("source equals sink")
    if not (0 <= s < net.node_count and 0 <= t < net.node_count):
        raise ValueError("source/sink out of range")
    all_unit = True
    for a in net.arcs:
        if a.lower != 0:
            raise ValueError("max_flow_dinic requires all lower bounds zero")
        if a.cap != 1:
            all_unit = False

    # The vectorized engine wins on bulk instances; below a few thousand
    # arcs the numpy call overhead outweighs it.  Both produce identical
    # assignments, so the dispatch is invisible.
    if all_unit and len(net.arcs) >= 2000:
        unit = _DinicUnit(net.node_count, net.arcs)
        value = unit.max_flow(s, t)
        flow = tuple(1 - unit.cap[2 * i] for i in range(len(net.arcs)))
        return FlowAssignment(flow, value)

    big = _int_sentinel(net.arcs)
    solver = _Dinic(net.node_count)
    caps = []
    ids = []
    for a in net.arcs:
        c = big if a.cap == INF else int(a.cap)
        ids.append(solver.add_arc(a.tail, a.head, c))
        caps.append(c)
    value = solver.max_flow(s, t)
    flow = tuple(solver.flow_on(i, c) for i, c in zip(ids, caps))
    return FlowAssignment(flow, value)


def build_associate_graph(net: BoundedFlowNetwork):
    """Lower-bound elimination transform.

    Adds a fresh source/sink pair; every original arc keeps its endpoints
    with capacity ``cap - lower``, and each node gains an arc from the new
    source with capacity equal to the sum of lower bounds entering it, plus
    an arc to the new sink with capacity equal to the sum of lower bounds
    leaving it.  Returns ``(plain_network, arc_map)`` where ``arc_map[i]``
    is the index of the image of original arc ``i``.
    """
    n = net.node_count
    s_add, t_add = n, n + 1
    in_lower = [0] * n
    out_lower = [0] * n
    arcs: list[Arc] = []
    for a in net.arcs:
        in_lower[a.head] += a.lower
        out_lower[a.tail] += a.lower
        cap = INF if a.cap == INF else a.cap - a.lower
        arcs.append(Arc(a.tail, a.head, 0, cap, a.tag))
    arc_map = tuple(range(len(arcs)))
    for v in range(n):
        arcs.append(Arc(s_add, v, 0, in_lower[v]))
    for v in range(n):
        arcs.append(Arc(v, t_add, 0, out_lower[v]))
    plain = BoundedFlowNetwork(n + 2, tuple(arcs), s_add, t_add)
    return plain, arc_map


def feasible_circulation(net: BoundedFlowNetwork) -> Optional[FlowAssignment]:
    """Circulation satisfying every arc's bounds, or ``None`` if none exists.

    Saturates the associate graph: a circulation exists exactly when its
    maximum flow equals the sum of all lower bounds, in which case the
    circulation is ``image flow + lower`` per arc.  The reported value is
    the flow returning from the network's sink to its source.
    """
    plain, arc_map = build_associate_graph(net)
    assignment = max_flow_dinic(plain)
    lower_sum = sum(a.lower for a in net.arcs)
    if assignment.value != lower_sum:
        return None
    flow = tuple(assignment.flow[arc_map[i]] + a.lower
                 for i, a in enumerate(net.arcs))
    value = sum(f for f, a in zip(flow, net.arcs)
                if a.tail == net.sink and a.head == net.source)
    return FlowAssignment(flow, value)


def min_flow_with_bounds(net: BoundedFlowNetwork,
                         source: int | None = None,
                         sink: int | None = None) -> FlowAssignment:
    """Feasible flow of minimum source-to-sink value.

    First finds a feasible circulation (adding a temporary unbounded return
    arc sink -> source unless the network already carries one), then cancels
    as much of it as possible by maximizing residual flow from sink back to
    source.  The result's value is the circulation value minus the canceled
    amount, which is minimal among all feasible flows.
    """
    s = net.source if source is None else source
    t = net.sink if sink is None else sink

    return_idx = None
    for i, a in enumerate(net.arcs):
        if a.tail == t and a.head == s and a.cap == INF and a.lower == 0:
            return_idx = i
            break

    if return_idx is None:
        work = BoundedFlowNetwork(net.node_count,
                                  net.arcs + (Arc(t, s, 0, INF),), s, t)
        return_pos = len(net.arcs)
    else:
        work = net
        return_pos = return_idx

    circ = feasible_circulation(work)
    if circ is None:
        raise InfeasibleFlowError("no feasible flow")
    value0 = circ.flow[return_pos]

    # Residual cancellation: push sink -> source through everything except
    # the return arc itself.
    big = _int_sentinel(work.arcs)
    solver = _Dinic(net.node_count)
    ids = []
    caps = []
    for i, a in enumerate(work.arcs):
        if i == return_pos:
            ids.append(None)
            caps.append(None)
            continue
        c = big if a.cap == INF else int(a.cap)
        f = circ.flow[i]
        ids.append(solver.add_arc(a.tail, a.head, c - f, f - a.lower))
        caps.append(c)
    canceled = solver.max_flow(t, s)

    final = []
    for i, a in enumerate(work.arcs):
        if i == return_pos:
            final.append(value0 - canceled)
        else:
            final.append(caps[i] - solver.cap[ids[i]])
    flow = tuple(final[: len(net.arcs)])
    return FlowAssignment(flow, value0 - canceled)


def validate_assignment(net: BoundedFlowNetwork,
                        assignment: FlowAssignment,
                        source: int | None = None,
                        sink: int | None = None) -> None:
    """Raise ``ValueError`` unless bounds hold on every arc and every node
    other than source/sink conserves flow exactly."""
    s = net.source if source is None else source
    t = net.sink if sink is None else sink
    if len(assignment.flow) != len(net.arcs):
        raise ValueError("flow vector length mismatch")
    balance = [0] * net.node_count
    for a, f in zip(net.arcs, assignment.flow):
        if f != int(f):
            raise ValueError("non-integer flow")
        if f < a.lower or (a.cap != INF and f > a.cap):
            raise ValueError(f"flow {f} violates bounds on {a}")
        balance[a.tail] -= f
        balance[a.head] += f
    for v in range(net.node_count):
        if v in (s, t):
            continue
        if balance[v] != 0:
            raise ValueError(f"conservation violated at node {v}")
    if balance[s] != -balance[t]:
        raise ValueError("source and sink imbalance differ")
