"""Ribbon graphs with pending (orbifold) edges, their induced skew forms,
boundary faces and Poisson centers, and the compilation of paths into
2x2 matrix words.

Conventions
-----------
A vertex stores a cyclic triple (e1, e2, e3); cyclically consecutive
pairs have bracket +1, so the induced skew form is

    beta[a][b] = sum over vertices of (+1 if b follows a, -1 if a follows b).

A written matrix word multiplies left to right while the underlying path
runs right to left.  For consecutive written factors ``X_a T X_b`` the
path enters the shared vertex along b and leaves along a, and the turn
token T is L when a is the cyclic successor of b, R when a is its
predecessor.  Pending edges may carry a symbolic weight parameter or an
exact weight 2*cos(pi/p); edges with a single attachment and no orbifold
point are spectators standing for the unexplored rest of the surface.
"""

from __future__ import annotations

import json

from .coeffs import Coefficient
from .matrices import (
    AlgMatrix,
    double_edge_matrix,
    edge_matrix,
    f_matrix,
    turn_matrix,
)
from .torus import SkewForm


class PendingInfo:
    """Orbifold data of a pending edge: a weight coefficient and, when the
    weight came from an integer order p, that order (used by the numeric
    oracle)."""

    __slots__ = ("weight", "p")

    def __init__(self, weight, p=None):
        self.weight = weight
        self.p = p

    @staticmethod
    def from_order(p):
        p = int(p)
        if p < 2:
            raise ValueError("orbifold order must be >= 2")
        if p == 2:
            return PendingInfo(Coefficient.zero(), 2)
        if p == 3:
            return PendingInfo(Coefficient.rational(1), 3)
        return PendingInfo(Coefficient.parameter(f"w{p}"), p)

    @staticmethod
    def from_param(name):
        return PendingInfo(Coefficient.parameter(str(name)), None)

    def __repr__(self):
        return f"PendingInfo(weight={self.weight!r}, p={self.p})"


class FatGraph:
    """Immutable fat graph: named edges, cyclic vertex triples, pending
    edge table and optional (g, s, r) metadata."""

    __slots__ = ("edges", "vertices", "pending", "meta", "_incidence")

    def __init__(self, edges, vertices, pending=None, meta=None):
        self.edges = tuple(edges)
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("edge names must be distinct")
        self.vertices = tuple(tuple(v) for v in vertices)
        for v in self.vertices:
            if len(v) != 3:
                raise ValueError("all interior vertices must be trivalent")
            for e in v:
                if e not in self.edges:
                    raise ValueError(f"vertex references unknown edge {e!r}")
        self.pending = dict(pending or {})
        for e in self.pending:
            if e not in self.edges:
                raise ValueError(f"pending table references unknown edge {e!r}")
        self.meta = tuple(meta) if meta is not None else None

        incidence = {e: [] for e in self.edges}
        for vi, v in enumerate(self.vertices):
            for pos, e in enumerate(v):
                incidence[e].append((vi, pos))
        for e, slots in incidence.items():
            if len(slots) > 2:
                raise ValueError(f"edge {e!r} attached more than twice")
            if e in self.pending and len(slots) != 1:
                raise ValueError(f"pending edge {e!r} must attach exactly once")
        self._incidence = incidence

    # -- structure helpers ------------------------------------------------

    def incidence(self, edge):
        return tuple(self._incidence[edge])

    def is_pending(self, edge):
        return edge in self.pending

    def is_internal(self, edge):
        return len(self._incidence[edge]) == 2

    def is_spectator(self, edge):
        return len(self._incidence[edge]) == 1 and edge not in self.pending

    def weight(self, edge):
        return self.pending[edge].weight

    def vertex_of_pending(self, edge):
        (vi, _), = self.incidence(edge)
        return vi

    def succ_at(self, vi, edge):
        v = self.vertices[vi]
        pos = v.index(edge)
        return v[(pos + 1) % 3]

    def pred_at(self, vi, edge):
        v = self.vertices[vi]
        pos = v.index(edge)
        return v[(pos + 2) % 3]

    def shared_vertices(self, a, b):
        va = {vi for vi, _ in self._incidence[a]}
        vb = {vi for vi, _ in self._incidence[b]}
        return sorted(va & vb)

    def replace_vertices(self, new_vertices, pending=None):
        return FatGraph(self.edges, new_vertices, pending or self.pending, self.meta)

    # -- induced algebraic structure ----------------------------------------

    def skew_form(self):
        n = len(self.edges)
        index = {e: i for i, e in enumerate(self.edges)}
        beta = [[0] * n for _ in range(n)]
        for v in self.vertices:
            for k in range(3):
                a, b = index[v[k]], index[v[(k + 1) % 3]]
                beta[a][b] += 1
                beta[b][a] -= 1
        return SkewForm(self.edges, beta)

    def faces(self):
        """Boundary cycles as lists of (edge, endpoint) directed edges.

        Directed edge (e, k) heads toward endpoint k; endpoint indices
        beyond the attachment list are free ends (orbifold points or
        spectator stubs) where the walk U-turns.
        """
        nexts = {}
        for e in self.edges:
            slots = self._incidence[e]
            for k in (0, 1):
                if k >= len(slots):
                    nexts[(e, k)] = (e, 0)
                    continue
                vi, pos = slots[k]
                out_pos = (pos + 1) % 3
                e2 = self.vertices[vi][out_pos]
                slots2 = self._incidence[e2]
                start = slots2.index((vi, out_pos))
                if len(slots2) == 2:
                    nexts[(e, k)] = (e2, 1 - start)
                else:
                    nexts[(e, k)] = (e2, 1)
        seen = set()
        faces = []
        for d0 in nexts:
            if d0 in seen:
                continue
            cyc = []
            d = d0
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                d = nexts[d]
            faces.append(cyc)
        return faces

    def center_elements(self):
        """One doubled-exponent vector per face: each boundary traversal of
        an edge contributes a full unit of that edge, so pending edges
        (walked out and back) count twice."""
        index = {e: i for i, e in enumerate(self.edges)}
        centers = []
        for face in self.faces():
            du = [0] * len(self.edges)
            for e, _ in face:
                du[index[e]] += 2
            centers.append(tuple(du))
        return centers

    def validate(self):
        """Collect structural problems; empty list means valid."""
        problems = []
        for e in self.edges:
            k = len(self._incidence[e])
            if k == 0:
                problems.append(f"edge {e!r} is attached to no vertex")
        if self.meta is not None:
            g, s, r = self.meta
            expected = 6 * g - 6 + 3 * s + 2 * r
            if len(self.edges) != expected:
                problems.append(
                    f"edge count {len(self.edges)} violates 6g-6+3s+2r = {expected} "
                    f"for (g,s,r)=({g},{s},{r})"
                )
            pend = len(self.pending)
            if pend != r:
                problems.append(f"pending edge count {pend} does not match declared r={r}")
            if len(self.faces()) != s:
                problems.append(f"face count {len(self.faces())} does not match declared s={s}")
        form = self.skew_form()
        for c in self.center_elements():
            for i in range(form.dim):
                basis = tuple(2 if j == i else 0 for j in range(form.dim))
                if form.pairing(c, basis) != 0:
                    problems.append("face center fails to commute with the torus")
                    break
        return problems

    def __repr__(self):
        return f"FatGraph(edges={self.edges}, vertices={self.vertices})"


# -- paths ----------------------------------------------------------------


class PathWord:
    """A written matrix word: steps are ('edge', name), ('turn', 'L'|'R') or
    ('orb', name, k); the leftmost step is the final leg of the path."""

    __slots__ = ("steps", "closed")

    def __init__(self, steps, closed=False):
        self.steps = tuple(tuple(s) for s in steps)
        self.closed = bool(closed)
        kinds = [s[0] for s in self.steps]
        for i, k in enumerate(kinds):
            if k not in ("edge", "turn", "orb"):
                raise ValueError(f"unknown step kind {k!r}")
            if k == "orb" and self.steps[i][2] < 1:
                raise ValueError("winding count must be at least 1")
            if k == "turn":
                if i == 0 or i + 1 == len(kinds):
                    raise ValueError("turn cannot start or end a word")
                if kinds[i - 1] == "turn" or kinds[i + 1] == "turn":
                    raise ValueError("turns must sit between traversals")

    def __repr__(self):
        bits = []
        for s in self.steps:
            if s[0] == "edge":
                bits.append(f"X_{s[1]}")
            elif s[0] == "turn":
                bits.append(s[1])
            else:
                bits.append(f"[X_{s[1]} F^{s[2]} X_{s[1]}]")
        return " ".join(bits)

    def turn_counts(self):
        r = sum(1 for s in self.steps if s[0] == "turn" and s[1] == "R")
        l = sum(1 for s in self.steps if s[0] == "turn" and s[1] == "L")
        return r, l


def _check_turn(graph, after, turn, before):
    """Validate the written fragment X_after TURN X_before."""
    a = after[1]
    b = before[1]
    for vi in graph.shared_vertices(a, b):
        want = graph.succ_at(vi, b) if turn == "L" else graph.pred_at(vi, b)
        if want == a:
            return
    raise ValueError(
        f"turn {turn} from {b!r} to {a!r} is inconsistent with the ribbon structure"
    )


def compile_path(graph, path, form=None):
    """Left-to-right product of edge, turn and winding factors.

    Winding steps ('orb', e, k) insert X_e * (-1)**(k+1) F_w**k * X_e.
    For closed paths the caller takes the trace of the full cyclic word.
    """
    if form is None:
        form = graph.skew_form()
    mat = None
    steps = path.steps
    for i, step in enumerate(steps):
        if step[0] == "turn":
            factor = turn_matrix(form, step[1])
        elif step[0] == "edge":
            factor = edge_matrix(form, step[1])
        else:
            _, name, k = step
            if not graph.is_pending(name):
                raise ValueError(f"winding at non-pending edge {name!r}")
            info = graph.pending[name]
            if info.p == 2 and k == 1:
                factor = double_edge_matrix(form, name)
            else:
                fw = f_matrix(form, info.weight)
                acc = AlgMatrix.identity(form)
                for _ in range(k):
                    acc = acc.mul(fw)
                if k % 2 == 0:
                    acc = acc.neg()
                factor = edge_matrix(form, name).mul(acc).mul(edge_matrix(form, name))
        if i >= 2 and steps[i - 1][0] == "turn" and step[0] != "turn":
            _check_turn(graph, steps[i - 2], steps[i - 1][1], step)
        mat = factor if mat is None else mat.mul(factor)
    if mat is None:
        raise ValueError("empty path")
    return mat


def monodromy_path(graph, root, target, winding=1):
    """Written word for the open segment root -> around target -> root.

    Both root and target are pending edges; the route runs through the
    unique chain of internal edges joining their base vertices.
    """
    if not graph.is_pending(root) or not graph.is_pending(target):
        raise ValueError("monodromy paths join pending edges")
    if root == target:
        raise ValueError("root and target must differ")
    vr = graph.vertex_of_pending(root)
    vt = graph.vertex_of_pending(target)

    # BFS through internal edges
    prev = {vr: None}
    queue = [vr]
    while queue:
        vi = queue.pop(0)
        if vi == vt:
            break
        for e in self_edges(graph, vi):
            if not graph.is_internal(e):
                continue
            (va, _), (vb, _) = graph.incidence(e)
            other = vb if va == vi else va
            if other not in prev:
                prev[other] = (vi, e)
                queue.append(other)
    if vt not in prev:
        raise ValueError(f"no path between {root!r} and {target!r}")
    chain = []
    vi = vt
    while prev[vi] is not None:
        back, e = prev[vi]
        chain.append(e)
        vi = back
    chain.reverse()

    def turn_token(vi, incoming, outgoing):
        if graph.succ_at(vi, incoming) == outgoing:
            return "L"
        if graph.pred_at(vi, incoming) == outgoing:
            return "R"
        raise ValueError("edges do not meet at the vertex")

    true_tokens = [("edge", root)]
    route = [root] + chain + [target]
    vertex_route = [vr]
    vi = vr
    for e in chain:
        (va, _), (vb, _) = graph.incidence(e)
        vi = vb if va == vi else va
        vertex_route.append(vi)
    for k in range(len(route) - 1):
        t = turn_token(vertex_route[k], route[k], route[k + 1])
        true_tokens.append(("turn", t))
        if k + 1 < len(route) - 1:
            true_tokens.append(("edge", route[k + 1]))
    true_tokens.append(("orb", target, winding))
    flip = {"L": "R", "R": "L"}
    back_tokens = []
    for tok in reversed(true_tokens[:-1]):
        if tok[0] == "turn":
            back_tokens.append(("turn", flip[tok[1]]))
        else:
            back_tokens.append(tok)
    true_tokens.extend(back_tokens)
    return PathWord(tuple(reversed(true_tokens)), closed=False)


def self_edges(graph, vi):
    return graph.vertices[vi]


# -- bundled graphs -----------------------------------------------------------


def spine_graph_an(n, root_param="omega0"):
    """Caterpillar spine with root pending edge S and n ordered order-2
    pending edges Z1..Zn.

    For n = 2 this is the two-vertex local picture with a spectator stub W
    at the root vertex; for n >= 3 the last point shares the root vertex
    and the graph is the tree spine of a disc with n+1 orbifold points.
    """
    if n < 2:
        raise ValueError("need at least two orbifold points besides the root")
    pend = {"S": PendingInfo.from_param(root_param)}
    for i in range(1, n + 1):
        pend[f"Z{i}"] = PendingInfo.from_order(2)
    if n == 2:
        edges = ("S", "X1", "Z1", "Z2", "W")
        vertices = (("X1", "S", "W"), ("X1", "Z2", "Z1"))
        return FatGraph(edges, vertices, pend, meta=None)
    xs = tuple(f"X{i}" for i in range(1, n - 1))
    edges = ("S",) + xs + tuple(f"Z{i}" for i in range(1, n + 1))
    vertices = [("X1", "S", f"Z{n}")]
    for i in range(1, n - 2):
        vertices.append((f"X{i + 1}", f"Z{i}", f"X{i}"))
    vertices.append((f"X{n - 2}", f"Z{n - 1}", f"Z{n - 2}"))
    return FatGraph(edges, tuple(vertices), pend, meta=(0, 1, n + 1))


def pvi_graph():
    """One-vertex graph for the four-point sphere: pending Y, Z carry the
    second and first orbifold weights and X is the spectator leg toward the
    root."""
    pend = {
        "Y": PendingInfo.from_param("omega2"),
        "Z": PendingInfo.from_param("omega1"),
    }
    return FatGraph(("X", "Y", "Z"), (("X", "Y", "Z"),), pend, meta=None)


def an_point_order(graph):
    """The pending edges Z1..Zn of a bundled A-type spine, in linear order."""
    points = sorted(
        (e for e in graph.pending if e != "S"),
        key=lambda e: int(e[1:]) if e[1:].isdigit() else e,
    )
    return points


# -- graph-level mutation moves ------------------------------------------------


def flip_roles(graph, edge):
    """The four surrounding edges of an internal edge, by role.

    Returns (A, B, C, D): A/B are the cyclic successor/predecessor at the
    first endpoint, C/D at the second.  A and C receive the positive
    shift under the flip, B and D the negative one.
    """
    slots = graph.incidence(edge)
    if len(slots) != 2:
        raise ValueError(f"cannot flip non-internal edge {edge!r}")
    (vu, _), (vv, _) = slots
    if vu == vv:
        raise ValueError(f"cannot flip loop edge {edge!r}")
    a = graph.succ_at(vu, edge)
    b = graph.pred_at(vu, edge)
    c = graph.succ_at(vv, edge)
    d = graph.pred_at(vv, edge)
    return a, b, c, d


def flip_graph(graph, edge):
    """Whitehead move on an internal edge; returns (new_graph, roles)."""
    a, b, c, d = flip_roles(graph, edge)
    (vu, _), (vv, _) = graph.incidence(edge)
    new_vertices = list(graph.vertices)
    new_vertices[vu] = (edge, d, a)
    new_vertices[vv] = (edge, b, c)
    return graph.replace_vertices(tuple(new_vertices)), (a, b, c, d)


def pending_flip_roles(graph, edge):
    if not graph.is_pending(edge):
        raise ValueError(f"{edge!r} is not a pending edge")
    vi = graph.vertex_of_pending(edge)
    return graph.succ_at(vi, edge), graph.pred_at(vi, edge)


def pending_flip_graph(graph, edge):
    """Pending-edge move; returns (new_graph, (A, B))."""
    a, b = pending_flip_roles(graph, edge)
    vi = graph.vertex_of_pending(edge)
    new_vertices = list(graph.vertices)
    new_vertices[vi] = (a, edge, b)
    return graph.replace_vertices(tuple(new_vertices)), (a, b)


# -- text format ------------------------------------------------------------


def graph_to_dict(graph):
    pending = {}
    for e, info in graph.pending.items():
        if info.p is not None:
            pending[e] = {"p": info.p}
        else:
            name = None
            for (_, params), val in info.weight.items():
                if len(params) == 1 and params[0][1] == 1 and val == 1:
                    name = params[0][0]
            if name is None:
                raise ValueError(f"pending weight of {e!r} is not a plain parameter")
            pending[e] = {"param": name}
    out = {
        "edges": list(graph.edges),
        "vertices": [list(v) for v in graph.vertices],
        "pending": pending,
    }
    if graph.meta is not None:
        g, s, r = graph.meta
        out["meta"] = {"g": g, "s": s, "r": r}
    return out


def graph_from_dict(data):
    if not isinstance(data, dict):
        raise ValueError("graph document must be a JSON object")
    allowed = {"edges", "vertices", "pending", "meta"}
    unknown = set(data) - allowed
    if unknown:
        raise ValueError(f"unknown graph fields: {sorted(unknown)}")
    if "edges" not in data or "vertices" not in data:
        raise ValueError("graph document needs 'edges' and 'vertices'")
    pending = {}
    for e, entry in (data.get("pending") or {}).items():
        keys = set(entry)
        if keys == {"param"}:
            pending[e] = PendingInfo.from_param(entry["param"])
        elif keys == {"p"}:
            pending[e] = PendingInfo.from_order(entry["p"])
        else:
            raise ValueError(f"pending entry for {e!r} must have exactly 'param' or 'p'")
    meta = None
    if "meta" in data:
        m = data["meta"]
        if set(m) != {"g", "s", "r"}:
            raise ValueError("meta must have exactly the fields g, s, r")
        meta = (int(m["g"]), int(m["s"]), int(m["r"]))
    return FatGraph(data["edges"], data["vertices"], pending, meta)


def load_graph(path):
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_dict(json.load(fh))


def save_graph(graph, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_dict(graph), fh, indent=1)
        fh.write("\n")
