"""Combinatorial model for Heegaard graphs and link diagrams drawn over them.

A Heegaard graph is a planar fat graph on the boundary sphere of the unique
0-handle of a handle decomposition: ``g`` reflected pairs of fat vertices
(the 1-handle co-core discs) and colored edges which, chained through the
1-handles, reconstitute the ``g`` attaching curves of the 2-handles.

A link diagram is a tangle projection over such a graph: oriented strands
attached inside the fat vertices, closed circles, crossings off the graph,
and transversal intersections with the edges.  Planarity is encoded locally
(cyclic orders at vertices, ordered slots along edges, end order at
crossings); global realizability is the fixture author's responsibility.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional, Union

# A fat vertex is addressed by (pair index i >= 1, sign +1/-1).
VertexId = tuple[int, int]
# An attachment point of a strand: (vertex, position identifier).
Attachment = tuple[VertexId, str]
# A reference to one of the four ends met at a crossing:
# (component id, event index within that component, "in" | "out").
EndRef = tuple[str, int, str]


def format_vertex(v: VertexId) -> str:
    i, s = v
    return f"{i}{'+' if s > 0 else '-'}"


def parse_vertex(token: str) -> VertexId:
    if len(token) < 2 or token[-1] not in "+-":
        raise ValueError(f"bad vertex token {token!r}")
    return int(token[:-1]), (1 if token[-1] == "+" else -1)


def canonical_rotation(seq: Iterable[str]) -> tuple[str, ...]:
    """Rotate a cyclic sequence to its lexicographically smallest rotation."""
    items = tuple(seq)
    if len(items) <= 1:
        return items
    best = min(range(len(items)), key=lambda k: items[k:] + items[:k])
    return items[best:] + items[:best]


def rotations_equal(a: Iterable[str], b: Iterable[str]) -> bool:
    return canonical_rotation(a) == canonical_rotation(b)


class ValidationReport:
    """Accumulates invariant violations; empty means the value is valid."""

    def __init__(self) -> None:
        self.issues: list[str] = []

    def add(self, message: str) -> None:
        self.issues.append(message)

    @property
    def ok(self) -> bool:
        return not self.issues

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        state = "ok" if self.ok else "; ".join(self.issues)
        return f"<ValidationReport {state}>"


class DanglingAttachment(ValueError):
    """A strand attachment participates in no passage."""


# ---------------------------------------------------------------------------
# Heegaard graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    """One edge of a characteristic-curve cycle, directed tail -> head."""

    edge_id: str
    color: int
    tail: tuple[VertexId, str]
    head: tuple[VertexId, str]


@dataclass(frozen=True)
class HeegaardGraph:
    genus: int
    vertex_orders: dict[VertexId, tuple[str, ...]]
    reflections: dict[int, dict[str, str]]  # V_i+ marker -> V_i- marker
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        orders = {v: canonical_rotation(seq) for v, seq in self.vertex_orders.items()}
        object.__setattr__(self, "vertex_orders", orders)
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.edge_id)))

    # -- basic access -------------------------------------------------------

    def vertices(self) -> list[VertexId]:
        return [(i, s) for i in range(1, self.genus + 1) for s in (1, -1)]

    def markers_of(self, v: VertexId) -> tuple[str, ...]:
        return self.vertex_orders.get(v, ())

    def colors(self) -> list[int]:
        return list(range(1, self.genus + 1))

    def edges_of_color(self, color: int) -> list[Edge]:
        return [e for e in self.edges if e.color == color]

    def edge_by_id(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.edge_id == edge_id:
                return e
        raise KeyError(edge_id)

    def reflect(self, v: VertexId, marker: str) -> tuple[VertexId, str]:
        """Image of a marker under the vertex-pair reflection."""
        i, s = v
        table = self.reflections[i]
        if s > 0:
            return (i, -1), table[marker]
        inverse = {m2: m1 for m1, m2 in table.items()}
        return (i, 1), inverse[marker]

    def beta_cycle(self, color: int) -> list[Edge]:
        """Edges of one characteristic curve in traversal order.

        The cycle starts at the lexicographically smallest edge id of the
        color; ordinals along the curve are the positions in this list.
        Requires a graph that passed validation.
        """
        pool = self.edges_of_color(color)
        if not pool:
            raise ValueError(f"color {color} has no edges")
        by_tail = {e.tail: e for e in pool}
        start = min(pool, key=lambda e: e.edge_id)
        cycle = [start]
        cur = start
        while True:
            v, m = cur.head
            nxt = by_tail.get(self.reflect(v, m))
            if nxt is None:
                raise ValueError(f"broken chain for color {color} after {cur.edge_id}")
            if nxt is start:
                return cycle
            cycle.append(nxt)
            cur = nxt
            if len(cycle) > len(pool):
                raise ValueError(f"color {color} does not chain into one cycle")


def validate_graph(graph: HeegaardGraph) -> ValidationReport:
    """Check every structural invariant; violations become report entries."""
    report = ValidationReport()
    g = graph.genus
    if g < 0:
        report.add(f"genus must be non-negative, got {g}")
        return report

    expected = {(i, s) for i in range(1, g + 1) for s in (1, -1)}
    present = set(graph.vertex_orders)
    for v in sorted(present - expected):
        report.add(f"unexpected vertex {format_vertex(v)}")
    for v in sorted(expected - present):
        report.add(f"vertex {format_vertex(v)} missing")

    # Marker uniqueness per vertex.
    for v in sorted(present & expected):
        seq = graph.vertex_orders[v]
        if len(set(seq)) != len(seq):
            report.add(f"duplicate markers on {format_vertex(v)}")
        if not seq:
            report.add(f"vertex {format_vertex(v)} is met by no edge")

    # Reflections must be bijections between the marker sets of each pair.
    reflect_ok = True
    for i in range(1, g + 1):
        table = graph.reflections.get(i)
        plus = set(graph.vertex_orders.get((i, 1), ()))
        minus = set(graph.vertex_orders.get((i, -1), ()))
        if table is None:
            report.add(f"reflection for pair {i} missing")
            reflect_ok = False
            continue
        if set(table) != plus or set(table.values()) != minus or len(set(table.values())) != len(table):
            report.add(f"reflection for pair {i} is not a bijection V{i}+ -> V{i}-")
            reflect_ok = False
    for i in sorted(set(graph.reflections) - set(range(1, g + 1))):
        report.add(f"reflection given for nonexistent pair {i}")

    # Reflection reverses the cyclic order of each vertex pair.
    if reflect_ok:
        for i in range(1, g + 1):
            plus_seq = graph.vertex_orders.get((i, 1), ())
            minus_seq = graph.vertex_orders.get((i, -1), ())
            image = tuple(graph.reflections[i][m] for m in plus_seq)
            if not rotations_equal(tuple(reversed(image)), minus_seq):
                report.add(f"reflection of pair {i} does not reverse the cyclic order")

    # Edges: unique ids, legal colors, endpoints on real markers.
    seen_ids: set[str] = set()
    end_use: dict[tuple[VertexId, str], int] = {}
    edges_ok = True
    for e in graph.edges:
        if e.edge_id in seen_ids:
            report.add(f"duplicate edge id {e.edge_id}")
            edges_ok = False
        seen_ids.add(e.edge_id)
        if not (1 <= e.color <= g):
            report.add(f"edge {e.edge_id} has color {e.color} outside 1..{g}")
            edges_ok = False
        for which, (v, m) in (("tail", e.tail), ("head", e.head)):
            if m not in graph.vertex_orders.get(v, ()):
                report.add(f"edge {e.edge_id} {which} references unknown marker {format_vertex(v)}.{m}")
                edges_ok = False
            else:
                end_use[(v, m)] = end_use.get((v, m), 0) + 1

    # Every marker carries exactly one edge end.
    for v in sorted(present & expected):
        for m in graph.vertex_orders[v]:
            n = end_use.get((v, m), 0)
            if n != 1:
                report.add(f"marker {format_vertex(v)}.{m} has {n} edge ends (expected 1)")

    # One closed cycle per color, covering all edges of that color.
    if edges_ok and reflect_ok and report.ok:
        for j in range(1, g + 1):
            pool = graph.edges_of_color(j)
            if not pool:
                report.add(f"color {j} has no edges")
                continue
            by_tail: dict[tuple[VertexId, str], Edge] = {}
            tails_ok = True
            for e in pool:
                if e.tail in by_tail:
                    report.add(f"color {j}: two edges share tail marker")
                    tails_ok = False
                by_tail[e.tail] = e
            if not tails_ok:
                continue
            remaining = {e.edge_id for e in pool}
            cycles = 0
            while remaining:
                start_id = min(remaining)
                cur = next(e for e in pool if e.edge_id == start_id)
                cycles += 1
                while True:
                    remaining.discard(cur.edge_id)
                    v, m = cur.head
                    try:
                        nxt = by_tail.get(graph.reflect(v, m))
                    except KeyError:
                        nxt = None
                    if nxt is None:
                        report.add(f"color {j}: chain breaks after edge {cur.edge_id}")
                        break
                    if nxt.edge_id not in remaining:
                        break
                    cur = nxt
            if cycles > 1:
                report.add(f"color {j} splits into {cycles} cycles")
    return report


# ---------------------------------------------------------------------------
# Link diagrams over a Heegaard graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrossingEvent:
    crossing_id: str
    role: str  # "over" | "under"


@dataclass(frozen=True)
class TransversalEvent:
    edge_id: str
    slot: int
    sign: int  # +1: crossing from the right of the edge to its left


Event = Union[CrossingEvent, TransversalEvent]


@dataclass(frozen=True)
class Strand:
    strand_id: str
    start: Attachment
    events: tuple[Event, ...]
    end: Attachment


@dataclass(frozen=True)
class Circle:
    circle_id: str
    events: tuple[Event, ...]


@dataclass(frozen=True)
class Crossing:
    """Sign +1 is right-handed: the over direction rotated 90 degrees
    counterclockwise gives the under direction."""

    crossing_id: str
    sign: int
    order: tuple[EndRef, EndRef, EndRef, EndRef]  # counterclockwise


@dataclass(frozen=True)
class Passage:
    """The link running through a 1-handle: an end attachment on one side
    continues as a start attachment at the reflected position opposite."""

    end: Attachment
    start: Attachment


def crossing_end_order(sign: int, over: tuple[str, int], under: tuple[str, int]) -> tuple[EndRef, EndRef, EndRef, EndRef]:
    """Canonical counterclockwise end order of a crossing."""
    o_in: EndRef = (over[0], over[1], "in")
    o_out: EndRef = (over[0], over[1], "out")
    u_in: EndRef = (under[0], under[1], "in")
    u_out: EndRef = (under[0], under[1], "out")
    if sign > 0:
        return (u_in, o_out, u_out, o_in)
    return (u_out, o_out, u_in, o_in)


@dataclass(frozen=True)
class LinkDiagram:
    graph: HeegaardGraph
    strands: tuple[Strand, ...]
    circles: tuple[Circle, ...]
    crossings: tuple[Crossing, ...]
    passages: tuple[Passage, ...]
    vertex_orders: dict[VertexId, tuple[str, ...]]  # markers and positions, merged

    def __post_init__(self) -> None:
        orders = {v: canonical_rotation(seq) for v, seq in self.vertex_orders.items()}
        object.__setattr__(self, "vertex_orders", orders)
        object.__setattr__(self, "strands", tuple(sorted(self.strands, key=lambda s: s.strand_id)))
        object.__setattr__(self, "circles", tuple(sorted(self.circles, key=lambda c: c.circle_id)))
        object.__setattr__(
            self, "crossings", tuple(sorted(self.crossings, key=lambda c: c.crossing_id))
        )
        object.__setattr__(
            self,
            "passages",
            tuple(sorted(self.passages, key=lambda p: (format_vertex(p.end[0]), p.end[1]))),
        )

    # -- derived views ------------------------------------------------------

    def components(self) -> list[Union[Strand, Circle]]:
        return list(self.strands) + list(self.circles)

    def component_by_id(self, cid: str) -> Union[Strand, Circle]:
        for c in self.components():
            if component_id(c) == cid:
                return c
        raise KeyError(cid)

    def start_attachments(self) -> dict[Attachment, Strand]:
        return {s.start: s for s in self.strands}

    def end_attachments(self) -> dict[Attachment, Strand]:
        return {s.end: s for s in self.strands}

    def attachment_sign(self, att: Attachment) -> int:
        """+1 for a forward (strand end) attachment, -1 for a backward one."""
        if att in self.end_attachments():
            return 1
        if att in self.start_attachments():
            return -1
        raise KeyError(att)

    def passage_by_end(self) -> dict[Attachment, Passage]:
        return {p.end: p for p in self.passages}

    def passage_by_start(self) -> dict[Attachment, Passage]:
        return {p.start: p for p in self.passages}

    def passage_partner(self, att: Attachment) -> Attachment:
        for p in self.passages:
            if p.end == att:
                return p.start
            if p.start == att:
                return p.end
        raise KeyError(att)

    def attachments_at(self, v: VertexId) -> list[str]:
        markers = set(self.graph.markers_of(v))
        return [x for x in self.vertex_orders.get(v, ()) if x not in markers]

    def edge_transversals(self, edge_id: str) -> list[tuple[int, str, int, int]]:
        """Ordered slots along one edge: (slot, component id, event index, sign)."""
        out = []
        for comp in self.components():
            cid = component_id(comp)
            for k, ev in enumerate(comp.events):
                if isinstance(ev, TransversalEvent) and ev.edge_id == edge_id:
                    out.append((ev.slot, cid, k, ev.sign))
        return sorted(out)

    def crossing_by_id(self, crossing_id: str) -> Crossing:
        for c in self.crossings:
            if c.crossing_id == crossing_id:
                return c
        raise KeyError(crossing_id)


def component_id(comp: Union[Strand, Circle]) -> str:
    return comp.strand_id if isinstance(comp, Strand) else comp.circle_id


def empty_diagram(graph: HeegaardGraph) -> LinkDiagram:
    orders = {v: tuple(graph.markers_of(v)) for v in graph.vertices()}
    return LinkDiagram(graph, (), (), (), (), orders)


def validate_diagram(diagram: LinkDiagram) -> ValidationReport:
    """Check the diagram invariants; graph violations are reported prefixed."""
    report = ValidationReport()
    graph = diagram.graph
    graph_report = validate_graph(graph)
    for issue in graph_report.issues:
        report.add(f"graph: {issue}")
    if not graph_report.ok:
        return report

    comps = diagram.components()
    ids = [component_id(c) for c in comps]
    if len(set(ids)) != len(ids):
        report.add("duplicate component ids")
        return report

    # Vertex orders must cover every vertex, refine the marker order, and
    # contain exactly the declared attachment positions besides the markers.
    attachments: dict[Attachment, tuple[str, int]] = {}  # att -> (strand, +1 end/-1 start)
    for s in diagram.strands:
        for att, sgn in ((s.start, -1), (s.end, 1)):
            if att in attachments:
                report.add(f"attachment {format_vertex(att[0])}.{att[1]} used twice")
            attachments[att] = (s.strand_id, sgn)

    for v in graph.vertices():
        merged = diagram.vertex_orders.get(v)
        if merged is None:
            report.add(f"vertex order for {format_vertex(v)} missing")
            continue
        if len(set(merged)) != len(merged):
            report.add(f"duplicate entries in vertex order of {format_vertex(v)}")
            continue
        markers = [x for x in merged if x in set(graph.markers_of(v))]
        if not rotations_equal(markers, graph.markers_of(v)):
            report.add(f"vertex order of {format_vertex(v)} does not refine the marker order")
        declared = {pos for (w, pos) in attachments if w == v}
        present = {x for x in merged if x not in set(graph.markers_of(v))}
        for pos in sorted(declared - present):
            report.add(f"attachment {format_vertex(v)}.{pos} missing from vertex order")
        for pos in sorted(present - declared):
            report.add(f"vertex order of {format_vertex(v)} lists unknown position {pos}")
    for (v, pos) in attachments:
        if v not in set(graph.vertices()):
            report.add(f"attachment on nonexistent vertex {format_vertex(v)}")

    # Passages: exactly one per attachment, end-to-start across a vertex pair.
    used: dict[Attachment, int] = {}
    for p in diagram.passages:
        for att in (p.end, p.start):
            used[att] = used.get(att, 0) + 1
            if att not in attachments:
                report.add(f"passage references unknown attachment {format_vertex(att[0])}.{att[1]}")
        if p.end in attachments and attachments[p.end][1] != 1:
            report.add(f"passage end side {format_vertex(p.end[0])}.{p.end[1]} is not a strand end")
        if p.start in attachments and attachments[p.start][1] != -1:
            report.add(f"passage start side {format_vertex(p.start[0])}.{p.start[1]} is not a strand start")
        (i1, s1), (i2, s2) = p.end[0], p.start[0]
        if i1 != i2 or s1 != -s2:
            report.add(f"passage {format_vertex(p.end[0])}.{p.end[1]} ~ {format_vertex(p.start[0])}.{p.start[1]} does not cross a vertex pair")
    for att in attachments:
        n = used.get(att, 0)
        if n != 1:
            report.add(f"attachment {format_vertex(att[0])}.{att[1]} participates in {n} passages (expected 1)")

    # The reflection extended by the passage pairing must reverse the merged
    # cyclic order of every vertex pair.
    if report.ok:
        partner = {}
        for p in diagram.passages:
            partner[p.end] = p.start
            partner[p.start] = p.end
        for i in range(1, graph.genus + 1):
            plus, minus = (i, 1), (i, -1)
            image = []
            consistent = True
            for item in diagram.vertex_orders[plus]:
                if item in set(graph.markers_of(plus)):
                    image.append(graph.reflections[i][item])
                else:
                    other = partner.get((plus, item))
                    if other is None or other[0] != minus:
                        report.add(f"passage violates reflection at {format_vertex(plus)}.{item}")
                        consistent = False
                        break
                    image.append(other[1])
            if consistent and not rotations_equal(tuple(reversed(image)), diagram.vertex_orders[minus]):
                report.add(f"passage violates reflection: merged order of pair {i} is not reversed")

    # Crossings: one over and one under event each, canonical end order.
    over_events: dict[str, tuple[str, int]] = {}
    under_events: dict[str, tuple[str, int]] = {}
    known = {c.crossing_id for c in diagram.crossings}
    for comp in comps:
        cid = component_id(comp)
        for k, ev in enumerate(comp.events):
            if isinstance(ev, CrossingEvent):
                if ev.crossing_id not in known:
                    report.add(f"{cid} event {k} references unknown crossing {ev.crossing_id}")
                    continue
                table = over_events if ev.role == "over" else under_events
                if ev.crossing_id in table:
                    report.add(f"crossing {ev.crossing_id} has two {ev.role} events")
                table[ev.crossing_id] = (cid, k)
    for c in diagram.crossings:
        if c.sign not in (1, -1):
            report.add(f"crossing {c.crossing_id} has sign {c.sign}")
            continue
        over = over_events.get(c.crossing_id)
        under = under_events.get(c.crossing_id)
        if over is None or under is None:
            report.add(f"crossing {c.crossing_id} lacks an over or under event")
            continue
        want = crossing_end_order(c.sign, over, under)
        got = tuple(c.order)
        if len(got) != 4 or not any(got == want[k:] + want[:k] for k in range(4)):
            report.add(f"crossing {c.crossing_id} end order is inconsistent with its sign")

    # Transversals: real edges, slots unique along each edge.
    edge_ids = {e.edge_id for e in graph.edges}
    slot_use: dict[tuple[str, int], int] = {}
    for comp in comps:
        cid = component_id(comp)
        for k, ev in enumerate(comp.events):
            if isinstance(ev, TransversalEvent):
                if ev.edge_id not in edge_ids:
                    report.add(f"{cid} event {k} crosses unknown edge {ev.edge_id}")
                    continue
                if ev.sign not in (1, -1):
                    report.add(f"{cid} event {k} has transversal sign {ev.sign}")
                key = (ev.edge_id, ev.slot)
                slot_use[key] = slot_use.get(key, 0) + 1
    for (edge_id, slot), n in sorted(slot_use.items()):
        if n > 1:
            report.add(f"edge {edge_id} slot {slot} is crossed {n} times")

    # Every component must close up through the passages.
    if report.ok:
        try:
            component_walk(diagram)
        except DanglingAttachment as exc:
            report.add(str(exc))
    return report


# ---------------------------------------------------------------------------
# Component traversal
# ---------------------------------------------------------------------------

WalkItem = tuple[str, str]  # ("strand" | "passage" | "circle", identifier)


def component_walk(diagram: LinkDiagram) -> list[tuple[WalkItem, ...]]:
    """Close every link component into a cycle of strands and passages.

    Each component is returned as the cyclic item sequence starting from its
    lexicographically smallest strand (circles stand alone).  Raises
    DanglingAttachment if an end attachment has no passage.
    """
    by_start = diagram.start_attachments()
    by_end = diagram.passage_by_end()
    components: list[tuple[WalkItem, ...]] = []
    visited: set[str] = set()
    for s in sorted(diagram.strands, key=lambda s: s.strand_id):
        if s.strand_id in visited:
            continue
        items: list[WalkItem] = []
        cur = s
        while True:
            visited.add(cur.strand_id)
            items.append(("strand", cur.strand_id))
            passage = by_end.get(cur.end)
            if passage is None:
                raise DanglingAttachment(
                    f"attachment {format_vertex(cur.end[0])}.{cur.end[1]} has no passage"
                )
            items.append(("passage", f"{format_vertex(passage.end[0])}.{passage.end[1]}"))
            nxt = by_start.get(passage.start)
            if nxt is None:
                raise DanglingAttachment(
                    f"attachment {format_vertex(passage.start[0])}.{passage.start[1]} starts no strand"
                )
            if nxt is s:
                break
            cur = nxt
        components.append(tuple(items))
    for c in sorted(diagram.circles, key=lambda c: c.circle_id):
        components.append((("circle", c.circle_id),))
    return components


def component_members(walk: Iterable[tuple[WalkItem, ...]]) -> list[frozenset[str]]:
    """Strand/circle id sets of each walked component."""
    out = []
    for items in walk:
        out.append(frozenset(name for kind, name in items if kind in ("strand", "circle")))
    return out


# ---------------------------------------------------------------------------
# Programmatic construction helpers
# ---------------------------------------------------------------------------


def graph_from_cycles(
    genus: int,
    passes: dict[int, list[tuple[int, int]]],
    vertex_orders: Optional[dict[VertexId, tuple[str, ...]]] = None,
) -> HeegaardGraph:
    """Build a graph from the handle itineraries of its characteristic curves.

    ``passes[j]`` lists the passes of curve j in traversal order as
    ``(handle index, direction)`` with direction +1 when the curve enters the
    handle through the plus vertex.  One marker pair is created per pass; the
    marker carries the same name on both sides of the pair.  When
    ``vertex_orders`` is omitted, markers sit in creation order.
    """
    markers: dict[VertexId, list[str]] = {(i, s): [] for i in range(1, genus + 1) for s in (1, -1)}
    reflections: dict[int, dict[str, str]] = {i: {} for i in range(1, genus + 1)}
    edges: list[Edge] = []
    for j in sorted(passes):
        route = passes[j]
        if not route:
            raise ValueError(f"curve {j} passes no handle")
        ends = []  # per pass: (head endpoint, tail endpoint of the next edge)
        for k, (i, d) in enumerate(route):
            if d not in (1, -1) or not (1 <= i <= genus):
                raise ValueError(f"bad pass {(i, d)} for curve {j}")
            name = f"c{j}p{k}"
            markers[(i, 1)].append(name)
            markers[(i, -1)].append(name)
            reflections[i][name] = name
            head = ((i, d), name)
            tail = ((i, -d), name)
            ends.append((head, tail))
        p = len(route)
        for k in range(p):
            head = ends[k][0]
            tail = ends[(k - 1) % p][1]
            edges.append(Edge(f"e{j}_{k}", j, tail, head))
    if vertex_orders is None:
        orders: dict[VertexId, tuple[str, ...]] = {}
        for i in range(1, genus + 1):
            orders[(i, 1)] = tuple(markers[(i, 1)])
            orders[(i, -1)] = tuple(reversed(markers[(i, -1)]))
    else:
        orders = {v: tuple(seq) for v, seq in vertex_orders.items()}
    return HeegaardGraph(genus, orders, reflections, tuple(edges))


def insert_after(order: tuple[str, ...], anchor: str, items: list[str]) -> tuple[str, ...]:
    k = order.index(anchor)
    return order[: k + 1] + tuple(items) + order[k + 1 :]


def insert_before(order: tuple[str, ...], anchor: str, items: list[str]) -> tuple[str, ...]:
    k = order.index(anchor)
    return order[:k] + tuple(items) + order[k:]
