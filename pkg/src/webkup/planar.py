"""Second, independent evaluator for closed webs: diagram rewriting.

A closed ladder web is converted to a planar trivalent graph.  Edges are
oriented (single strands point up, double strands point down, rungs
follow the slice direction, doubled rungs the opposite way); each graph
vertex is then forced to be a pure sink or a pure source, and every
2-valent point is smoothed away.  Valueless label-3 segments disappear,
which can smooth a single strand into a double strand; orientation
consistency at every smoothing is asserted, so a convention error would
crash rather than give wrong numbers.

The value is computed by the closed-web rewriting rules: a free loop
contributes the quantum integer [3]; a 2-sided face contracts and
contributes [2]; a 4-sided face splits into the sum of its two parallel
smoothings.  A counting argument guarantees a 2- or 4-sided face always
exists while vertices remain, and faces are even, so this terminates.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

from .qlaurent import LaurentPoly, ONE, qint
from .webs import LadderWeb


@dataclass
class _Edge:
    tail: int | None  # node the edge leaves
    head: int | None  # node the edge enters


@dataclass
class _Node:
    inc: list  # (eid, endkind) pairs; endkind 'head' means the edge arrives
    kind: str = ""  # 'sink' | 'source' once classified


@dataclass
class PlanarWeb:
    nodes: dict[int, _Node] = field(default_factory=dict)
    edges: dict[int, _Edge] = field(default_factory=dict)
    loops: int = 0
    digons: int = 0
    _next_eid: int = 0

    # -- construction ----------------------------------------------------

    @classmethod
    def from_ladder(cls, web: LadderWeb) -> "PlanarWeb":
        if not web.is_closed():
            raise ValueError("planar evaluation needs a closed web")
        levels = web.levels()
        pw = cls()
        raw_inc: dict[tuple, dict] = {}  # node key -> {angle: (eid, endkind)}

        def add_end(nkey, angle, eid, endkind):
            slot = raw_inc.setdefault(nkey, {})
            assert angle not in slot, f"two edges share an angle at {nkey}"
            slot[angle] = (eid, endkind)

        def add_edge(n_tail_key, tail_angle, n_head_key, head_angle):
            eid = pw._next_eid
            pw._next_eid += 1
            pw.edges[eid] = _Edge(tail=None, head=None)
            add_end(n_tail_key, tail_angle, eid, "tail")
            add_end(n_head_key, head_angle, eid, "head")
            return eid

        n = web.n_cols
        # vertical edges between consecutive slices touching a column
        for i in range(n):
            events = [
                k for k, s in enumerate(web.slices) if s.index - 1 in (i - 1, i)
            ]
            for k1, k2 in zip(events, events[1:]):
                w = levels[k1 + 1][i]
                if w in (0, 3):
                    continue
                lo, hi = (k1, i), (k2, i)
                if w == 1:  # single strands point up
                    add_edge(lo, 90, hi, 270)
                else:  # double strands point down
                    add_edge(hi, 270, lo, 90)
            # closed web: the outer spans must be invisible
            if events:
                assert levels[0][i] in (0, 3) and levels[-1][i] in (0, 3)

        # rung edges
        for k, s in enumerate(web.slices):
            if s.power == 3:
                continue
            c = s.index - 1
            left, right = (k, c), (k, c + 1)
            to_left = s.sign == "+"
            if s.power == 2:
                to_left = not to_left
            if to_left:
                add_edge(right, 180, left, 0)
            else:
                add_edge(left, 0, right, 180)

        # materialize nodes with counterclockwise incidence order
        for nkey, slot in raw_inc.items():
            if not slot:
                continue
            nid = len(pw.nodes)
            inc = [slot[a] for a in sorted(slot)]
            pw.nodes[nid] = _Node(inc=inc)
            for eid, endkind in inc:
                setattr(pw.edges[eid], endkind, nid)
        for nid, node in pw.nodes.items():
            if len(node.inc) == 1:
                raise AssertionError("dangling edge in closed web")

        pw._classify()
        pw._normalize()
        return pw

    def _classify(self) -> None:
        for nid, node in self.nodes.items():
            if len(node.inc) != 3:
                continue
            kinds = {endkind for _, endkind in node.inc}
            if kinds == {"head"}:
                node.kind = "sink"
            elif kinds == {"tail"}:
                node.kind = "source"
            else:
                raise AssertionError(f"mixed orientation at trivalent node {nid}")

    def _normalize(self) -> None:
        """Smooth all 2-valent nodes, collecting free loops."""
        todo = [nid for nid, nd in self.nodes.items() if len(nd.inc) != 3]
        while todo:
            nid = todo.pop()
            node = self.nodes.get(nid)
            if node is None or len(node.inc) == 3:
                continue
            if len(node.inc) == 0:
                del self.nodes[nid]
                continue
            assert len(node.inc) == 2, "dangling edge while smoothing"
            (e1, k1), (e2, k2) = node.inc
            if e1 == e2:
                # both ends of one edge meet here: a free loop
                self.loops += 1
                del self.edges[e1]
                del self.nodes[nid]
                continue
            assert {k1, k2} == {"head", "tail"}, (
                f"orientation clash while smoothing node {nid}"
            )
            e_in, e_out = (e1, e2) if k1 == "head" else (e2, e1)
            new = self._next_eid
            self._next_eid += 1
            tail, head = self.edges[e_in].tail, self.edges[e_out].head
            self.edges[new] = _Edge(tail=tail, head=head)
            self._replace_ref(tail, e_in, "tail", new)
            self._replace_ref(head, e_out, "head", new)
            del self.edges[e_in]
            del self.edges[e_out]
            del self.nodes[nid]
        for node in self.nodes.values():
            assert len(node.inc) == 3

    def _replace_ref(self, nid, old_eid, endkind, new_eid) -> None:
        node = self.nodes[nid]
        for pos, (eid, kind) in enumerate(node.inc):
            if eid == old_eid and kind == endkind:
                node.inc[pos] = (new_eid, endkind)
                return
        raise AssertionError("missing incidence reference")

    # -- faces -----------------------------------------------------------

    def faces(self) -> list[list[tuple]]:
        """Faces as dart cycles; a dart (eid, endkind) sits at the node
        holding that end.  Faces are orbits of: twin, then next dart
        counterclockwise around the node."""
        darts = []
        for eid in self.edges:
            darts.append((eid, "tail"))
            darts.append((eid, "head"))
        pos_at = {}
        for nid, node in self.nodes.items():
            for pos, ref in enumerate(node.inc):
                pos_at[ref] = (nid, pos)

        def step(d):
            eid, kind = d
            twin = (eid, "head" if kind == "tail" else "tail")
            nid, pos = pos_at[twin]
            node = self.nodes[nid]
            return node.inc[(pos + 1) % len(node.inc)]

        seen = set()
        out = []
        for d in darts:
            if d in seen:
                continue
            cyc = []
            cur = d
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur)
                cur = step(cur)
            out.append(cyc)
        return out

    def euler_check(self) -> None:
        """V - E + F must equal twice the component count."""
        parent = {nid: nid for nid in self.nodes}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.edges.values():
            ra, rb = find(e.tail), find(e.head)
            parent[ra] = rb
        comps = len({find(nid) for nid in self.nodes})
        v, e, f = len(self.nodes), len(self.edges), len(self.faces())
        if v == 0:
            return
        assert v - e + f == 2 * comps, f"euler check failed: {v}-{e}+{f} != 2*{comps}"

    # -- rewriting -------------------------------------------------------

    def _face_info(self, cyc):
        """Cyclic (edge, vertex-entered) pairs for a face dart cycle."""
        info = []
        for eid, kind in cyc:
            other = "head" if kind == "tail" else "tail"
            vid = getattr(self.edges[eid], other)
            info.append((eid, vid))
        return info

    def _external_end(self, vid, face_edges):
        node = self.nodes[vid]
        ext = [(eid, kind) for eid, kind in node.inc if eid not in face_edges]
        assert len(ext) == 1, "face corner without a unique external edge"
        return ext[0]

    def _join(self, enda, endb) -> None:
        """Connect two external edge ends through a fresh 2-valent node."""
        nid = max(self.nodes, default=-1) + 1
        self.nodes[nid] = _Node(inc=[enda, endb])
        for eid, endkind in (enda, endb):
            setattr(self.edges[eid], endkind, nid)

    def contract_digon(self, cyc) -> None:
        info = self._face_info(cyc)
        face_edges = {eid for eid, _ in info}
        verts = {vid for _, vid in info}
        assert len(face_edges) == 2 and len(verts) == 2, "degenerate 2-face"
        kinds = {self.nodes[v].kind for v in verts}
        assert kinds == {"sink", "source"}, "2-face corners must be sink+source"
        ends = [self._external_end(v, face_edges) for v in verts]
        for eid in face_edges:
            del self.edges[eid]
        for vid in verts:
            del self.nodes[vid]
        self._join(*ends)
        self.digons += 1
        self._normalize()

    def resolve_square(self, cyc, which: int) -> None:
        info = self._face_info(cyc)
        face_edges = {eid for eid, _ in info}
        verts = [vid for _, vid in info]
        assert len(face_edges) == 4 and len(set(verts)) == 4, "degenerate 4-face"
        for va, vb in zip(verts, verts[1:] + verts[:1]):
            assert self.nodes[va].kind != self.nodes[vb].kind, (
                "4-face corners must alternate sink/source"
            )
        ends = [self._external_end(v, face_edges) for v in verts]
        for eid in face_edges:
            del self.edges[eid]
        for vid in verts:
            del self.nodes[vid]
        if which == 0:
            self._join(ends[0], ends[1])
            self._join(ends[2], ends[3])
        else:
            self._join(ends[1], ends[2])
            self._join(ends[3], ends[0])
        self._normalize()

    def clone_bare(self) -> "PlanarWeb":
        dup = copy.deepcopy(self)
        dup.loops = 0
        dup.digons = 0
        return dup

    def evaluate(self) -> LaurentPoly:
        """Consume the graph, returning its closed-web value."""
        acc = ONE
        while True:
            acc = acc * (qint(3) ** self.loops) * (qint(2) ** self.digons)
            self.loops = 0
            self.digons = 0
            if not self.nodes:
                return acc
            faces = sorted(
                self.faces(), key=lambda c: (len(c), min(e for e, _ in c))
            )
            smallest = faces[0]
            assert len(smallest) % 2 == 0, "odd face in a sink/source graph"
            if len(smallest) == 2:
                self.contract_digon(smallest)
                continue
            assert len(smallest) == 4, (
                f"no reducible face: smallest has {len(smallest)} sides"
            )
            a = self.clone_bare()
            a.resolve_square(smallest, 0)
            b = self.clone_bare()
            b.resolve_square(smallest, 1)
            return acc * (a.evaluate() + b.evaluate())


def rewrite_bracket(web: LadderWeb) -> LaurentPoly:
    """Closed-web value by diagram rewriting (independent of state sums)."""
    pw = PlanarWeb.from_ladder(web)
    pw.euler_check()
    return pw.evaluate()
