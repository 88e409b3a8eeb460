"""Periodic time-varying trellises in controller canonical form.

A trellis has one section per phase of the code period; section s is used at
times t = s (mod period).  States are the shift-register contents, one
register per generator row, register i holding the last nu_i input symbols;
states are packed little-endian by row then delay slot as base-Q digits.

Distance measures follow the loop convention: a loop leaves the zero state,
never rides a weight-0 edge from zero state to zero state, and returns to the
zero state after exactly ell edges.
"""

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

__all__ = [
    "Trellis",
    "TrellisEdge",
    "PathStep",
    "FreeDistanceResult",
    "CatastrophicityResult",
    "UnitMemoryBounds",
    "build_trellis",
    "is_catastrophic",
    "unit_memory_bounds",
    "export_dot",
]


class TrellisEdge(NamedTuple):
    to_state: int
    label: tuple
    weight: int


class PathStep(NamedTuple):
    section: int
    from_state: int
    input_block: tuple
    label: tuple
    to_state: int


@dataclass
class FreeDistanceResult:
    value: float
    stabilized: bool
    achieved_by: str  # "loop" or "zero_output_tail"
    loop_length: int | None
    witness: list | None

    def __int__(self):
        return int(self.value)


class CatastrophicityResult(NamedTuple):
    catastrophic: bool
    witness: list | None


class UnitMemoryBounds(NamedTuple):
    d_free_bound: int | None
    slope_bound: int


class Trellis:
    def __init__(self, field, k, n, register_lengths, sections):
        self.field = field
        self.k = k
        self.n = n
        self.q = field.size
        self.register_lengths = tuple(register_lengths)
        self.external_degree = sum(register_lengths)
        self.memory = max(register_lengths, default=0)
        self.num_states = self.q**self.external_degree
        self.sections = sections
        self.num_sections = len(sections)
        self.num_inputs = self.q**self.k

    # -- packing helpers --

    def input_block(self, idx):
        q = self.q
        out = []
        for _ in range(self.k):
            idx, d = divmod(idx, q)
            out.append(d)
        return tuple(out)

    def input_weight(self, idx):
        return sum(1 for v in self.input_block(idx) if v)

    def state_registers(self, state):
        """Register contents as a tuple per row, delay slot 1 first."""
        q = self.q
        out = []
        for length in self.register_lengths:
            row = []
            for _ in range(length):
                state, d = divmod(state, q)
                row.append(d)
            out.append(tuple(row))
        return tuple(out)

    def state_name(self, state):
        regs = [v for row in self.state_registers(state) for v in row]
        if not regs:
            return "0"
        return ",".join(self.field.element_name(v) for v in regs)

    def edge(self, section, from_state, input_idx):
        return self.sections[section % self.num_sections][from_state][input_idx]

    # -- the period-unrolled state graph --

    def _node(self, phase, state):
        return phase * self.num_states + state

    def _graph(self):
        """Adjacency over (phase, state) nodes with the weight-0 zero-to-zero
        edges removed.  Entries are (to_node, weight, input_idx)."""
        adj = [[] for _ in range(self.num_sections * self.num_states)]
        for s in range(self.num_sections):
            nxt = (s + 1) % self.num_sections
            for st in range(self.num_states):
                node = self._node(s, st)
                for idx, e in enumerate(self.sections[s][st]):
                    if st == 0 and e.to_state == 0 and e.weight == 0:
                        continue
                    adj[node].append((self._node(nxt, e.to_state), e.weight, idx))
        return adj

    @staticmethod
    def _sccs(num_nodes, adj):
        """Tarjan strongly connected components, iterative."""
        index = [-1] * num_nodes
        low = [0] * num_nodes
        on_stack = [False] * num_nodes
        stack = []
        sccs = []
        counter = 0
        for root in range(num_nodes):
            if index[root] != -1:
                continue
            work = [(root, 0)]
            while work:
                v, pi = work[-1]
                if pi == 0:
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack[v] = True
                advanced = False
                for i in range(pi, len(adj[v])):
                    w = adj[v][i][0]
                    if index[w] == -1:
                        work[-1] = (v, i + 1)
                        work.append((w, 0))
                        advanced = True
                        break
                    if on_stack[w]:
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                work.pop()
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    sccs.append(comp)
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
        return sccs

    def _return_costs(self, adj):
        """Cheapest weight from each node to any zero-state node (Dijkstra on
        the reversed graph, zero-state nodes as sources)."""
        num_nodes = len(adj)
        radj = [[] for _ in range(num_nodes)]
        for u, edges in enumerate(adj):
            for v, w, _ in edges:
                radj[v].append((u, w))
        dist = [math.inf] * num_nodes
        heap = []
        for phase in range(self.num_sections):
            src = self._node(phase, 0)
            dist[src] = 0
            heap.append((0, src))
        heapq.heapify(heap)
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for v, w in radj[u]:
                nd = d + w
                if nd < dist[v]:
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
        return dist

    def _zero_output_cycle_nodes(self, adj):
        """Nodes lying on a cycle whose edges all carry zero output weight."""
        num_nodes = len(adj)
        zadj = [[(v, w, i) for (v, w, i) in edges if w == 0] for edges in adj]
        nodes = set()
        for scc in self._sccs(num_nodes, zadj):
            sset = set(scc)
            if len(scc) > 1:
                nodes.update(scc)
            else:
                u = scc[0]
                if any(v == u for v, _, _ in zadj[u]):
                    nodes.add(u)
        return nodes, zadj

    # -- distance measures --

    def active_burst_distance(self, ell):
        """Minimum weight of ell-loops, minimized over all starting phases;
        math.inf if no ell-loop exists."""
        if ell < 1:
            raise ValueError("ell must be >= 1")
        best = math.inf
        for start in range(self.num_sections):
            dist = [math.inf] * self.num_states
            dist[0] = 0
            for step in range(ell):
                section = self.sections[(start + step) % self.num_sections]
                ndist = [math.inf] * self.num_states
                for st, dv in enumerate(dist):
                    if dv == math.inf:
                        continue
                    forbid_zero = st == 0
                    for e in section[st]:
                        if forbid_zero and e.to_state == 0 and e.weight == 0:
                            continue
                        cand = dv + e.weight
                        if cand < ndist[e.to_state]:
                            ndist[e.to_state] = cand
                dist = ndist
            best = min(best, dist[0])
        return best

    def free_distance(self, ell_max=None):
        """Minimum nonzero codeword weight.

        Scans loops up to ell_max and, separately, paths that enter a cycle of
        zero output weight (the catastrophic case, where the minimum is not
        attained by any loop).  The stabilized flag certifies that no loop
        longer than ell_max can beat the reported value.
        """
        if ell_max is None:
            ell_max = 8 * (self.external_degree + 1) * self.num_sections
        adj = self._graph()
        ret = self._return_costs(adj)

        best = math.inf
        best_trace = None  # (start_phase, length, parents list)
        frontier_bound = math.inf
        for start in range(self.num_sections):
            dist = [math.inf] * self.num_states
            dist[0] = 0
            parents = []
            for step in range(ell_max):
                section = self.sections[(start + step) % self.num_sections]
                ndist = [math.inf] * self.num_states
                npar = [None] * self.num_states
                for st, dv in enumerate(dist):
                    if dv == math.inf:
                        continue
                    forbid_zero = st == 0
                    for idx, e in enumerate(section[st]):
                        if forbid_zero and e.to_state == 0 and e.weight == 0:
                            continue
                        cand = dv + e.weight
                        if cand < ndist[e.to_state]:
                            ndist[e.to_state] = cand
                            npar[e.to_state] = (st, idx)
                parents.append(npar)
                dist = ndist
                if dist[0] < best:
                    best = dist[0]
                    best_trace = (start, step + 1, parents[:])
            end_phase = (start + ell_max) % self.num_sections
            for st, dv in enumerate(dist):
                if dv == math.inf:
                    continue
                frontier_bound = min(frontier_bound, dv + ret[self._node(end_phase, st)])

        cyc_nodes, _ = self._zero_output_cycle_nodes(adj)
        tail_min = math.inf
        if cyc_nodes:
            dist0 = self._forward_costs(adj)
            tail_min = min((dist0[v] for v in cyc_nodes), default=math.inf)

        value = min(best, tail_min)
        stabilized = frontier_bound >= value
        if tail_min < best:
            return FreeDistanceResult(value, stabilized, "zero_output_tail", None, None)
        witness = None
        loop_length = None
        if best_trace is not None:
            start, length, parents = best_trace
            witness = self._trace_loop(start, length, parents)
            loop_length = length
        return FreeDistanceResult(value, stabilized, "loop", loop_length, witness)

    def _forward_costs(self, adj):
        dist = [math.inf] * len(adj)
        heap = []
        for phase in range(self.num_sections):
            src = self._node(phase, 0)
            dist[src] = 0
            heap.append((0, src))
        heapq.heapify(heap)
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for v, w, _ in adj[u]:
                nd = d + w
                if nd < dist[v]:
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
        return dist

    def _trace_loop(self, start, length, parents):
        steps = []
        state = 0
        for step in range(length - 1, -1, -1):
            prev_state, idx = parents[step][state]
            section = (start + step) % self.num_sections
            e = self.sections[section][prev_state][idx]
            steps.append(
                PathStep(section, prev_state, self.input_block(idx), e.label, state)
            )
            state = prev_state
        steps.reverse()
        return steps

    def slope(self):
        """Minimum mean edge weight over directed cycles of the unrolled state
        graph, as an exact Fraction (Karp's recurrence per strong component)."""
        adj = self._graph()
        num_nodes = len(adj)
        best = None
        for scc in self._sccs(num_nodes, adj):
            sset = set(scc)
            internal = []
            pos = {v: i for i, v in enumerate(scc)}
            for u in scc:
                for v, w, _ in adj[u]:
                    if v in sset:
                        internal.append((pos[u], pos[v], w))
            if not internal:
                continue
            m = len(scc)
            INF = math.inf
            dk = [[INF] * m for _ in range(m + 1)]
            dk[0][0] = 0
            for step in range(1, m + 1):
                prev = dk[step - 1]
                cur = dk[step]
                for u, v, w in internal:
                    if prev[u] != INF and prev[u] + w < cur[v]:
                        cur[v] = prev[u] + w
            for v in range(m):
                if dk[m][v] == INF:
                    continue
                worst = None
                for kstep in range(m):
                    if dk[kstep][v] == INF:
                        continue
                    mean = Fraction(int(dk[m][v] - dk[kstep][v]), m - kstep)
                    if worst is None or mean > worst:
                        worst = mean
                if worst is not None and (best is None or worst < best):
                    best = worst
        return best if best is not None else math.inf

    def catastrophic_cycle(self):
        """A cycle with zero output weight but positive input weight, or None."""
        adj = self._graph()
        _, zadj = self._zero_output_cycle_nodes(adj)
        num_nodes = len(adj)
        for scc in self._sccs(num_nodes, zadj):
            sset = set(scc)
            seed = None
            for u in scc:
                for v, _, idx in zadj[u]:
                    if v in sset and self.input_weight(idx) > 0:
                        if len(scc) > 1 or v == u:
                            seed = (u, v, idx)
                            break
                if seed:
                    break
            if seed is None:
                continue
            u, v, idx = seed
            # close the cycle: BFS from v back to u inside the component
            prev = {v: None}
            queue = [v]
            while queue and u not in prev:
                x = queue.pop(0)
                for y, _, yidx in zadj[x]:
                    if y in sset and y not in prev:
                        prev[y] = (x, yidx)
                        queue.append(y)
            if u not in prev and v != u:
                continue
            steps = [self._path_step(u, idx)]
            node = u
            back = []
            while node != v:
                x, yidx = prev[node]
                back.append(self._path_step(x, yidx))
                node = x
            steps.extend(reversed(back))
            return steps
        return None

    def _path_step(self, node, input_idx):
        phase, state = divmod(node, self.num_states)
        e = self.sections[phase][state][input_idx]
        return PathStep(phase, state, self.input_block(input_idx), e.label, e.to_state)


def build_trellis(code):
    """Controller-canonical-form trellis of a skew convolutional code."""
    field = code.field
    q = field.size
    k, n = code.k, code.n
    regs = code.row_degrees
    nu = sum(regs)
    num_states = q**nu
    num_inputs = q**k

    def unpack_state(state):
        out = []
        for length in regs:
            row = []
            for _ in range(length):
                state, d = divmod(state, q)
                row.append(d)
            out.append(row)
        return out

    def pack_state(rows):
        digits = [v for row in rows for v in row]
        state = 0
        for d in reversed(digits):
            state = state * q + d
        return state

    sections = []
    for s in range(code.period):
        coeffs = [code.time_coefficient(s, i) for i in range(code.memory + 1)]
        per_state = []
        for st in range(num_states):
            reg_rows = unpack_state(st)
            held = [0] * n
            for row in range(k):
                for delay, val in enumerate(reg_rows[row], start=1):
                    if val == 0:
                        continue
                    mat = coeffs[delay]
                    for j in range(n):
                        if mat[row][j]:
                            held[j] = field.add_int(held[j], field.mul_int(val, mat[row][j]))
            edges = []
            for idx in range(num_inputs):
                u = idx
                ub = []
                for _ in range(k):
                    u, d = divmod(u, q)
                    ub.append(d)
                label = held[:]
                g0 = coeffs[0]
                for row, val in enumerate(ub):
                    if val == 0:
                        continue
                    for j in range(n):
                        if g0[row][j]:
                            label[j] = field.add_int(label[j], field.mul_int(val, g0[row][j]))
                new_rows = [
                    ([ub[row]] + reg_rows[row][: regs[row] - 1]) if regs[row] else []
                    for row in range(k)
                ]
                weight = sum(1 for v in label if v)
                edges.append(TrellisEdge(pack_state(new_rows), tuple(label), weight))
            per_state.append(edges)
        sections.append(per_state)
    return Trellis(field, k, n, regs, sections)


def is_catastrophic(code_or_trellis):
    """True iff the state graph has a cycle emitting zero output weight while
    consuming positive input weight; the witness cycle is returned with it."""
    tr = code_or_trellis if isinstance(code_or_trellis, Trellis) else build_trellis(code_or_trellis)
    witness = tr.catastrophic_cycle()
    return CatastrophicityResult(witness is not None, witness)


def unit_memory_bounds(code):
    """(2n - k + 1, n - k); the distance bound applies to unit-memory codes
    only and is None otherwise."""
    d_bound = 2 * code.n - code.k + 1 if code.memory == 1 else None
    return UnitMemoryBounds(d_bound, code.n - code.k)


def export_dot(trellis, sections):
    """Graphviz DOT text for the unrolled trellis with the given number of
    sections: (sections + 1) state columns, edges labeled by output blocks."""
    if sections < 1:
        raise ValueError("sections must be >= 1")
    field = trellis.field
    lines = ["digraph trellis {", "  rankdir=LR;", "  node [shape=circle fontsize=10];"]
    for layer in range(sections + 1):
        for st in range(trellis.num_states):
            lines.append(f'  t{layer}_s{st} [label="{trellis.state_name(st)}"];')
    for layer in range(sections):
        section = trellis.sections[layer % trellis.num_sections]
        for st in range(trellis.num_states):
            for e in section[st]:
                label = " ".join(field.element_name(v) for v in e.label)
                lines.append(f'  t{layer}_s{st} -> t{layer + 1}_s{e.to_state} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
