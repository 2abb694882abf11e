"""Line-oriented text formats: `.hg` graphs, `.tgl` diagrams, `.plat`
flat plats, `.surf` surface reports.

All four are UTF-8, one record per line, `#` starts a comment.  Parsers
return ``(value, diagnostics)``: a value with no diagnostics, or ``None``
with positioned diagnostics; they never raise on malformed text.
Serializers require validated values and emit records in a fixed canonical
order, cyclic sequences starting at their lexicographically smallest
rotation, so serialization is deterministic and round-trips are literal.

Grammar sketch::

    # .hg
    genus <g>
    vertex <i><+|-> : <marker>,<marker>,...
    reflect <i> : <m>-><m>,...
    edge <id> color <j> <vertex>.<marker> -> <vertex>.<marker>

    # .tgl (graph supplied separately)
    strand <id> : <vertex>.<pos> [x<crossing>:<over|under> | t<edge>:<slot>:<+|->]* <vertex>.<pos>
    circle <id> : [events]*
    crossing <id> sign <+|-> order <comp>.<idx>.<in|out>,... (counterclockwise)
    passage <vertex>.<pos> ~ <vertex>.<pos>      (forward end ~ backward end)
    vorder <vertex> : <marker-or-pos>,...

    # .plat
    bridge <b> feet <p1> <p2>
    arc <id> : <foot> [u<bridge>:<slot>:<+|->]* <foot>
    framing <component> <int>

    # .surf
    h0/h1-pairing/h1-twist/h2/chi/boundary/genus <int>
    circle <k> : <comp>.<arc>,...
    band pairing <i> : <att> ~ <att> joins <k> <k>
    band twist <crossing> sign <+|-> joins <k> <k>
    cap <component> color <j> orientation <+|->

Identifiers are ``[A-Za-z0-9_]+``; transversal sign ``+`` means the strand
crosses the edge from its right side to its left.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional

from .model import (
    Circle,
    Crossing,
    CrossingEvent,
    Edge,
    HeegaardGraph,
    LinkDiagram,
    Passage,
    Strand,
    TransversalEvent,
    format_vertex,
    parse_vertex,
)
from .plat import Bridge, FlatPlat, PlatArc, UnderPass
from .surface import Cap, PairingBand, SpanningSurface, TwistBand

_ID = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class Diagnostic:
    line: int
    col: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.message}"


class _LineReader:
    def __init__(self, text: str) -> None:
        self.rows: list[tuple[int, str]] = []
        for n, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0].rstrip()
            if body.strip():
                self.rows.append((n, body))
        self.diagnostics: list[Diagnostic] = []

    def error(self, line: int, col: int, message: str) -> None:
        self.diagnostics.append(Diagnostic(line, col, message))

    def token_col(self, line_body: str, token: str) -> int:
        at = line_body.find(token)
        return at + 1 if at >= 0 else 1


def _check_id(name: str) -> bool:
    return bool(_ID.match(name))


def _split_attachment(token: str):
    v, _, pos = token.partition(".")
    if not pos:
        raise ValueError(f"expected <vertex>.<name>, got {token!r}")
    return parse_vertex(v), pos


def _sign_token(token: str) -> int:
    if token == "+":
        return 1
    if token == "-":
        return -1
    raise ValueError(f"expected + or -, got {token!r}")


# ---------------------------------------------------------------------------
# .hg
# ---------------------------------------------------------------------------


def parse_hg(text: str) -> tuple[Optional[HeegaardGraph], list[Diagnostic]]:
    reader = _LineReader(text)
    genus: Optional[int] = None
    vertex_orders: dict = {}
    reflections: dict[int, dict[str, str]] = {}
    edges: list[Edge] = []
    edge_ids: set[str] = set()

    for n, body in reader.rows:
        tokens = body.split()
        kind = tokens[0]
        try:
            if kind == "genus":
                if genus is not None:
                    reader.error(n, 1, "duplicate genus line")
                    continue
                genus = int(tokens[1])
                if genus < 0:
                    reader.error(n, reader.token_col(body, tokens[1]), "genus must be non-negative")
            elif kind == "vertex":
                if genus is None:
                    reader.error(n, 1, "vertex before genus")
                    continue
                v = parse_vertex(tokens[1])
                if tokens[2] != ":":
                    raise ValueError("expected ':'")
                markers = tuple(m for m in "".join(tokens[3:]).split(",") if m)
                for m in markers:
                    if not _check_id(m):
                        reader.error(n, reader.token_col(body, m), f"bad marker id {m!r}")
                if v in vertex_orders:
                    reader.error(n, 1, f"duplicate vertex {format_vertex(v)}")
                if not (1 <= v[0] <= genus):
                    reader.error(n, reader.token_col(body, tokens[1]), f"vertex index {v[0]} outside 1..{genus}")
                vertex_orders[v] = markers
            elif kind == "reflect":
                i = int(tokens[1])
                if tokens[2] != ":":
                    raise ValueError("expected ':'")
                if i in reflections:
                    reader.error(n, 1, f"duplicate reflect line for pair {i}")
                table: dict[str, str] = {}
                for pair in "".join(tokens[3:]).split(","):
                    if not pair:
                        continue
                    a, sep, b = pair.partition("->")
                    if not sep or not a or not b:
                        raise ValueError(f"bad reflection pair {pair!r}")
                    if a in table:
                        reader.error(n, reader.token_col(body, pair), f"marker {a} reflected twice")
                    table[a] = b
                reflections[i] = table
            elif kind == "edge":
                if tokens[2] != "color" or tokens[5] != "->":
                    raise ValueError("expected 'edge <id> color <j> <endpoint> -> <endpoint>'")
                edge_id = tokens[1]
                if not _check_id(edge_id):
                    raise ValueError(f"bad edge id {edge_id!r}")
                if edge_id in edge_ids:
                    reader.error(n, reader.token_col(body, edge_id), f"duplicate edge id {edge_id}")
                edge_ids.add(edge_id)
                color = int(tokens[3])
                tail = _split_attachment(tokens[4])
                head = _split_attachment(tokens[6])
                edges.append(Edge(edge_id, color, tail, head))
            else:
                reader.error(n, 1, f"unknown record {kind!r}")
        except (ValueError, IndexError) as exc:
            reader.error(n, 1, str(exc))

    if genus is None:
        reader.error(0, 0, "missing genus")
        return None, reader.diagnostics
    for i in range(1, genus + 1):
        for s in (1, -1):
            vertex_orders.setdefault((i, s), ())
        reflections.setdefault(i, {})
    # Reference checks with positions.
    for n, body in reader.rows:
        tokens = body.split()
        if tokens[0] == "edge" and len(tokens) >= 7:
            for tok in (tokens[4], tokens[6]):
                try:
                    v, m = _split_attachment(tok)
                except ValueError:
                    continue
                if v not in vertex_orders or m not in vertex_orders.get(v, ()):
                    reader.error(n, reader.token_col(body, tok), f"unknown marker {tok}")
    if reader.diagnostics:
        return None, reader.diagnostics
    return HeegaardGraph(genus, vertex_orders, reflections, tuple(edges)), []


def serialize_hg(graph: HeegaardGraph) -> str:
    lines = [f"genus {graph.genus}"]
    for v in graph.vertices():
        lines.append(f"vertex {format_vertex(v)} : {','.join(graph.vertex_orders[v])}")
    for i in range(1, graph.genus + 1):
        table = graph.reflections[i]
        pairs = ",".join(f"{m}->{table[m]}" for m in graph.vertex_orders[(i, 1)])
        lines.append(f"reflect {i} : {pairs}")
    for e in graph.edges:
        lines.append(
            f"edge {e.edge_id} color {e.color} "
            f"{format_vertex(e.tail[0])}.{e.tail[1]} -> {format_vertex(e.head[0])}.{e.head[1]}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# .tgl
# ---------------------------------------------------------------------------


def _parse_event(token: str):
    if token.startswith("x"):
        body = token[1:]
        cid, sep, role = body.partition(":")
        if not sep or role not in ("over", "under") or not _check_id(cid):
            raise ValueError(f"bad crossing event {token!r}")
        return CrossingEvent(cid, role)
    if token.startswith("t"):
        parts = token[1:].split(":")
        if len(parts) != 3 or not _check_id(parts[0]):
            raise ValueError(f"bad transversal event {token!r}")
        return TransversalEvent(parts[0], int(parts[1]), _sign_token(parts[2]))
    raise ValueError(f"unknown event token {token!r}")


def _event_token(ev) -> str:
    if isinstance(ev, CrossingEvent):
        return f"x{ev.crossing_id}:{ev.role}"
    return f"t{ev.edge_id}:{ev.slot}:{'+' if ev.sign > 0 else '-'}"


def parse_tgl(text: str, graph: HeegaardGraph) -> tuple[Optional[LinkDiagram], list[Diagnostic]]:
    reader = _LineReader(text)
    strands: list[Strand] = []
    circles: list[Circle] = []
    crossings: list[Crossing] = []
    passages: list[Passage] = []
    vertex_orders: dict = {}
    component_ids: set[str] = set()

    for n, body in reader.rows:
        tokens = body.split()
        kind = tokens[0]
        try:
            if kind == "strand":
                sid = tokens[1]
                if not _check_id(sid):
                    raise ValueError(f"bad strand id {sid!r}")
                if sid in component_ids:
                    reader.error(n, reader.token_col(body, sid), f"duplicate component id {sid}")
                component_ids.add(sid)
                if tokens[2] != ":":
                    raise ValueError("expected ':'")
                if len(tokens) < 5:
                    raise ValueError("strand needs two attachments")
                start = _split_attachment(tokens[3])
                end = _split_attachment(tokens[-1])
                events = tuple(_parse_event(t) for t in tokens[4:-1])
                strands.append(Strand(sid, start, events, end))
            elif kind == "circle":
                cid = tokens[1]
                if not _check_id(cid):
                    raise ValueError(f"bad circle id {cid!r}")
                if cid in component_ids:
                    reader.error(n, reader.token_col(body, cid), f"duplicate component id {cid}")
                component_ids.add(cid)
                if tokens[2] != ":":
                    raise ValueError("expected ':'")
                events = tuple(_parse_event(t) for t in tokens[3:])
                circles.append(Circle(cid, events))
            elif kind == "crossing":
                if tokens[2] != "sign" or tokens[4] != "order":
                    raise ValueError("expected 'crossing <id> sign <s> order <ends>'")
                xid = tokens[1]
                if not _check_id(xid):
                    raise ValueError(f"bad crossing id {xid!r}")
                sign = _sign_token(tokens[3])
                ends = []
                for part in "".join(tokens[5:]).split(","):
                    bits = part.split(".")
                    if len(bits) != 3 or bits[2] not in ("in", "out"):
                        raise ValueError(f"bad end reference {part!r}")
                    ends.append((bits[0], int(bits[1]), bits[2]))
                if len(ends) != 4:
                    raise ValueError(f"crossing {xid} needs 4 ends, got {len(ends)}")
                crossings.append(Crossing(xid, sign, tuple(ends)))
            elif kind == "passage":
                if tokens[2] != "~":
                    raise ValueError("expected '~'")
                passages.append(Passage(_split_attachment(tokens[1]), _split_attachment(tokens[3])))
            elif kind == "vorder":
                v = parse_vertex(tokens[1])
                if tokens[2] != ":":
                    raise ValueError("expected ':'")
                items = tuple(x for x in "".join(tokens[3:]).split(",") if x)
                if v in vertex_orders:
                    reader.error(n, 1, f"duplicate vorder for {format_vertex(v)}")
                vertex_orders[v] = items
            else:
                reader.error(n, 1, f"unknown record {kind!r}")
        except (ValueError, IndexError) as exc:
            reader.error(n, 1, str(exc))

    # Reference checks against the graph.
    edge_ids = {e.edge_id for e in graph.edges}
    crossing_ids = {c.crossing_id for c in crossings}
    vertex_set = set(graph.vertices())
    for n, body in reader.rows:
        tokens = body.split()
        if tokens[0] in ("strand", "circle"):
            for tok in tokens[3:]:
                if tok.startswith("t") and ":" in tok:
                    eid = tok[1:].split(":")[0]
                    if eid not in edge_ids:
                        reader.error(n, reader.token_col(body, tok), f"unknown edge {eid}")
                elif tok.startswith("x") and ":" in tok:
                    xid = tok[1:].split(":")[0]
                    if xid not in crossing_ids:
                        reader.error(n, reader.token_col(body, tok), f"unknown crossing {xid}")
        if tokens[0] in ("strand", "passage", "vorder"):
            for tok in tokens[1:]:
                if "." in tok and not tok.startswith(("x", "t")):
                    try:
                        v, _ = _split_attachment(tok)
                    except ValueError:
                        continue
                    if v not in vertex_set:
                        reader.error(n, reader.token_col(body, tok), f"unknown vertex in {tok}")
    if reader.diagnostics:
        return None, reader.diagnostics
    for v in graph.vertices():
        vertex_orders.setdefault(v, tuple(graph.markers_of(v)))
    diagram = LinkDiagram(
        graph, tuple(strands), tuple(circles), tuple(crossings), tuple(passages), vertex_orders
    )
    return diagram, []


def serialize_tgl(diagram: LinkDiagram) -> str:
    lines = []
    for s in diagram.strands:
        parts = [f"{format_vertex(s.start[0])}.{s.start[1]}"]
        parts += [_event_token(ev) for ev in s.events]
        parts.append(f"{format_vertex(s.end[0])}.{s.end[1]}")
        lines.append(f"strand {s.strand_id} : {' '.join(parts)}")
    for c in diagram.circles:
        parts = [_event_token(ev) for ev in c.events]
        suffix = f" {' '.join(parts)}" if parts else ""
        lines.append(f"circle {c.circle_id} :{suffix}")
    for x in diagram.crossings:
        ends = ",".join(f"{cid}.{idx}.{side}" for cid, idx, side in x.order)
        lines.append(f"crossing {x.crossing_id} sign {'+' if x.sign > 0 else '-'} order {ends}")
    for p in diagram.passages:
        lines.append(
            f"passage {format_vertex(p.end[0])}.{p.end[1]} ~ "
            f"{format_vertex(p.start[0])}.{p.start[1]}"
        )
    for v in diagram.graph.vertices():
        lines.append(f"vorder {format_vertex(v)} : {','.join(diagram.vertex_orders[v])}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# .plat
# ---------------------------------------------------------------------------


def parse_plat(text: str) -> tuple[Optional[FlatPlat], list[Diagnostic]]:
    reader = _LineReader(text)
    bridges: list[Bridge] = []
    arcs: list[PlatArc] = []
    framings: dict[int, int] = {}
    bridge_ids: set[int] = set()
    arc_ids: set[str] = set()

    for n, body in reader.rows:
        tokens = body.split()
        kind = tokens[0]
        try:
            if kind == "bridge":
                if tokens[2] != "feet":
                    raise ValueError("expected 'bridge <id> feet <p1> <p2>'")
                bid = int(tokens[1])
                if bid in bridge_ids:
                    reader.error(n, reader.token_col(body, tokens[1]), f"duplicate bridge {bid}")
                bridge_ids.add(bid)
                bridges.append(Bridge(bid, (int(tokens[3]), int(tokens[4]))))
            elif kind == "arc":
                aid = tokens[1]
                if not _check_id(aid):
                    raise ValueError(f"bad arc id {aid!r}")
                if aid in arc_ids:
                    reader.error(n, reader.token_col(body, aid), f"duplicate arc {aid}")
                arc_ids.add(aid)
                if tokens[2] != ":":
                    raise ValueError("expected ':'")
                if len(tokens) < 5:
                    raise ValueError("arc needs two feet")
                start = int(tokens[3])
                end = int(tokens[-1])
                events = []
                for tok in tokens[4:-1]:
                    if not tok.startswith("u"):
                        raise ValueError(f"bad under-pass token {tok!r}")
                    parts = tok[1:].split(":")
                    if len(parts) != 3:
                        raise ValueError(f"bad under-pass token {tok!r}")
                    events.append(UnderPass(int(parts[0]), int(parts[1]), _sign_token(parts[2])))
                arcs.append(PlatArc(aid, start, end, tuple(events)))
            elif kind == "framing":
                idx = int(tokens[1])
                if idx in framings:
                    reader.error(n, reader.token_col(body, tokens[1]), f"duplicate framing for component {idx}")
                framings[idx] = int(tokens[2])
            else:
                reader.error(n, 1, f"unknown record {kind!r}")
        except (ValueError, IndexError) as exc:
            reader.error(n, 1, str(exc))

    for n, body in reader.rows:
        tokens = body.split()
        if tokens[0] == "arc":
            for tok in tokens[4:-1]:
                if tok.startswith("u") and ":" in tok:
                    try:
                        bid = int(tok[1:].split(":")[0])
                    except ValueError:
                        continue
                    if bid not in bridge_ids:
                        reader.error(n, reader.token_col(body, tok), f"unknown bridge {bid}")
    if reader.diagnostics:
        return None, reader.diagnostics
    return FlatPlat(tuple(bridges), tuple(arcs), framings), []


def serialize_plat(plat: FlatPlat) -> str:
    lines = []
    for b in sorted(plat.bridges, key=lambda b: b.bridge_id):
        lines.append(f"bridge {b.bridge_id} feet {b.feet[0]} {b.feet[1]}")
    for a in sorted(plat.arcs, key=lambda a: a.arc_id):
        parts = [str(a.start_foot)]
        parts += [f"u{e.bridge_id}:{e.slot}:{'+' if e.sign > 0 else '-'}" for e in a.events]
        parts.append(str(a.end_foot))
        lines.append(f"arc {a.arc_id} : {' '.join(parts)}")
    for idx in sorted(plat.framings):
        lines.append(f"framing {idx} {plat.framings[idx]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# .surf
# ---------------------------------------------------------------------------

_SURF_FIELDS = ("h0", "h1-pairing", "h1-twist", "h2", "chi", "boundary", "genus")


def parse_surf(text: str) -> tuple[Optional[SpanningSurface], list[Diagnostic]]:
    reader = _LineReader(text)
    fields: dict[str, int] = {}
    circles: list[tuple[str, ...]] = []
    pairing: list[PairingBand] = []
    twists: list[TwistBand] = []
    caps: list[Cap] = []

    for n, body in reader.rows:
        tokens = body.split()
        kind = tokens[0]
        try:
            if kind in _SURF_FIELDS:
                if kind in fields:
                    reader.error(n, 1, f"duplicate field {kind}")
                fields[kind] = int(tokens[1])
            elif kind == "circle":
                idx = int(tokens[1])
                if tokens[2] != ":":
                    raise ValueError("expected ':'")
                arcs = tuple(x for x in "".join(tokens[3:]).split(",") if x)
                if idx != len(circles) + 1:
                    reader.error(n, 1, f"circle {idx} out of order")
                circles.append(arcs)
            elif kind == "band" and tokens[1] == "pairing":
                if tokens[3] != ":" or tokens[5] != "~" or tokens[7] != "joins":
                    raise ValueError("expected 'band pairing <i> : <att> ~ <att> joins <k> <k>'")
                pairing.append(
                    PairingBand(
                        handle=int(tokens[2]),
                        forward_end=tokens[4],
                        backward_end=tokens[6],
                        joins=(int(tokens[8]) - 1, int(tokens[9]) - 1),
                    )
                )
            elif kind == "band" and tokens[1] == "twist":
                if tokens[3] != "sign" or tokens[5] != "joins":
                    raise ValueError("expected 'band twist <id> sign <s> joins <k> <k>'")
                twists.append(
                    TwistBand(tokens[2], _sign_token(tokens[4]), (int(tokens[6]) - 1, int(tokens[7]) - 1))
                )
            elif kind == "cap":
                if tokens[2] != "color" or tokens[4] != "orientation":
                    raise ValueError("expected 'cap <component> color <j> orientation <s>'")
                caps.append(Cap(tokens[1], int(tokens[3]), _sign_token(tokens[5])))
            else:
                reader.error(n, 1, f"unknown record {kind!r}")
        except (ValueError, IndexError) as exc:
            reader.error(n, 1, str(exc))

    missing = [f for f in _SURF_FIELDS if f not in fields]
    if missing:
        reader.error(0, 0, f"missing fields: {', '.join(missing)}")
    if reader.diagnostics:
        return None, reader.diagnostics
    surface = SpanningSurface(
        h0=fields["h0"],
        h1_pairing=fields["h1-pairing"],
        h1_twist=fields["h1-twist"],
        h2=fields["h2"],
        chi=fields["chi"],
        boundary_count=fields["boundary"],
        genus=fields["genus"],
        circles=tuple(circles),
        pairing_bands=tuple(pairing),
        twist_bands=tuple(twists),
        caps=tuple(caps),
    )
    return surface, []


def serialize_surf(surface: SpanningSurface) -> str:
    lines = [
        f"h0 {surface.h0}",
        f"h1-pairing {surface.h1_pairing}",
        f"h1-twist {surface.h1_twist}",
        f"h2 {surface.h2}",
        f"chi {surface.chi}",
        f"boundary {surface.boundary_count}",
        f"genus {surface.genus}",
    ]
    for k, circle in enumerate(surface.circles, start=1):
        lines.append(f"circle {k} : {','.join(circle)}")
    for band in surface.pairing_bands:
        lines.append(
            f"band pairing {band.handle} : {band.forward_end} ~ {band.backward_end} "
            f"joins {band.joins[0] + 1} {band.joins[1] + 1}"
        )
    for band in surface.twist_bands:
        lines.append(
            f"band twist {band.crossing_id} sign {'+' if band.sign > 0 else '-'} "
            f"joins {band.joins[0] + 1} {band.joins[1] + 1}"
        )
    for cap in surface.caps:
        lines.append(
            f"cap {cap.component} color {cap.color} orientation {'+' if cap.orientation > 0 else '-'}"
        )
    return "\n".join(lines) + "\n"
