"""Balancedness and extension-link synthesis.

A diagram is balanced when every fat vertex carries as many forward strand
ends as backward ones; equivalently the link's homology class vanishes.  An
unbalanced link is completed by an extension link: for each color j with
solved coefficient x_j, |x_j| parallel pushoff copies of the color-j curve
with orientation -sign(x_j), routed alongside the edge cycle and passing
under every original strand they meet.
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import (
    Circle,
    Crossing,
    CrossingEvent,
    HeegaardGraph,
    LinkDiagram,
    Passage,
    Strand,
    TransversalEvent,
    component_id,
    crossing_end_order,
    insert_after,
    insert_before,
    validate_diagram,
)


@dataclass(frozen=True)
class BalanceReport:
    """Per vertex pair: (#forward ends, #backward ends) at the plus vertex."""

    per_vertex: dict[int, tuple[int, int]]

    @property
    def balanced(self) -> bool:
        return all(f == b for f, b in self.per_vertex.values())

    def __bool__(self) -> bool:
        return self.balanced


def is_balanced(diagram: LinkDiagram) -> BalanceReport:
    counts = {i: [0, 0] for i in range(1, diagram.graph.genus + 1)}
    for s in diagram.strands:
        (i, sgn), _ = s.end
        if sgn > 0:
            counts[i][0] += 1
        (i, sgn), _ = s.start
        if sgn > 0:
            counts[i][1] += 1
    return BalanceReport({i: (f, b) for i, (f, b) in counts.items()})


@dataclass(frozen=True)
class CopySpec:
    color: int
    count: int
    orientation: int  # +1: parallel to the color cycle, -1: reversed
    component_ids: tuple[str, ...]
    strand_ids: tuple[tuple[str, ...], ...]  # per copy


@dataclass(frozen=True)
class ExtensionPlan:
    x: tuple[int, ...]
    copies: tuple[CopySpec, ...]

    @property
    def k(self) -> int:
        return sum(abs(v) for v in self.x)

    def component_ids(self) -> list[str]:
        return [cid for spec in self.copies for cid in spec.component_ids]

    def strand_ids(self) -> set[str]:
        return {sid for spec in self.copies for copy in spec.strand_ids for sid in copy}


class _PendingCrossing:
    """Crossing whose event indices are resolved after all splicing."""

    __slots__ = ("crossing_id", "sign")

    def __init__(self, crossing_id: str, sign: int) -> None:
        self.crossing_id = crossing_id
        self.sign = sign


def _sign(x: int) -> int:
    return 1 if x >= 0 else -1


def synthesize_extension_link(
    graph: HeegaardGraph, diagram: LinkDiagram, x: list[int]
) -> tuple[LinkDiagram, ExtensionPlan]:
    """Insert the extension link prescribed by the coefficient vector x.

    Each copy of the color-j curve is offset to the left of the edge
    orientation, copy 1 innermost; a copy crosses an original component once
    per transversal of the parent edge, always as the under strand; its
    passages sit adjacent to the parent edge markers so the augmented
    diagram validates and is balanced whenever R x equals the link class.
    """
    if len(x) != graph.genus:
        raise ValueError(f"coefficient vector has length {len(x)}, expected {graph.genus}")
    plan_x = tuple(int(v) for v in x)
    if all(v == 0 for v in plan_x):
        return diagram, ExtensionPlan(plan_x, ())

    taken_components = {component_id(c) for c in diagram.components()}
    taken_crossings = {c.crossing_id for c in diagram.crossings}
    orders = dict(diagram.vertex_orders)
    spliced: dict[str, list] = {component_id(c): list(c.events) for c in diagram.components()}
    new_strands: list[Strand] = []
    new_passages: list[Passage] = list(diagram.passages)
    new_crossings: list = list(diagram.crossings)
    specs: list[CopySpec] = []

    def locate(events: list, original: TransversalEvent) -> int:
        # Transversal events are unique per (edge, slot), so equality
        # identifies the original even after splicing.
        for k, ev in enumerate(events):
            if isinstance(ev, TransversalEvent) and ev == original:
                return k
        raise AssertionError(f"transversal event {original!r} lost during splice")

    for j in range(1, graph.genus + 1):
        coeff = plan_x[j - 1]
        if coeff == 0:
            continue
        orientation = -_sign(coeff)
        count = abs(coeff)
        cycle = graph.beta_cycle(j)
        p = len(cycle)

        copy_ids = []
        for c in range(1, count + 1):
            cid = f"E{j}c{c}"
            while cid in taken_components:
                cid += "x"
            taken_components.add(cid)
            copy_ids.append(cid)

        # Passage k of the cycle links edge k's head marker to the tail
        # marker of edge k+1; every copy needs a position pair there.
        head_pos: dict[tuple[int, int], str] = {}
        tail_pos: dict[tuple[int, int], str] = {}
        for k in range(p):
            hv, hm = cycle[k].head
            tv, tm = graph.reflect(hv, hm)
            heads = [f"{copy_ids[c - 1]}_{k}h" for c in range(1, count + 1)]
            tails = [f"{copy_ids[c - 1]}_{k}t" for c in range(1, count + 1)]
            for c in range(1, count + 1):
                head_pos[(k, c)] = heads[c - 1]
                tail_pos[(k, c)] = tails[c - 1]
            # Left of the edge orientation: counterclockwise-before the head
            # marker, counterclockwise-after the tail marker; copy 1 nearest.
            orders[hv] = insert_before(orders[hv], hm, list(reversed(heads)))
            orders[tv] = insert_after(orders[tv], tm, tails)

        copy_strand_ids: list[tuple[str, ...]] = []
        for c in range(1, count + 1):
            cid = copy_ids[c - 1]
            strands_of_copy: list[Strand] = []
            for step in range(p):
                if orientation > 0:
                    edge = cycle[step]
                    start = (edge.tail[0], tail_pos[((step - 1) % p, c)])
                    end = (edge.head[0], head_pos[(step, c)])
                    slots = diagram.edge_transversals(edge.edge_id)
                else:
                    edge = cycle[p - 1 - step]
                    start = (edge.head[0], head_pos[(p - 1 - step, c)])
                    end = (edge.tail[0], tail_pos[((p - 2 - step) % p, c)])
                    slots = list(reversed(diagram.edge_transversals(edge.edge_id)))
                events = []
                for slot, other_cid, other_idx, tau in slots:
                    x_id = f"x{cid}_{other_cid}_{other_idx}"
                    while x_id in taken_crossings:
                        x_id += "x"
                    taken_crossings.add(x_id)
                    events.append(CrossingEvent(x_id, "under"))
                    original = diagram.component_by_id(other_cid).events[other_idx]
                    lst = spliced[other_cid]
                    anchor = locate(lst, original)
                    if tau > 0:
                        # The component meets the edge first, then copies
                        # 1..n outward: splice after the transversal.
                        lst.insert(anchor + c, CrossingEvent(x_id, "over"))
                    else:
                        # Arriving from the left: outermost copy first, the
                        # edge last.
                        lst.insert(anchor - (c - 1), CrossingEvent(x_id, "over"))
                    new_crossings.append(_PendingCrossing(x_id, -tau * orientation))
                strands_of_copy.append(Strand(f"{cid}s{step}", start, tuple(events), end))
            for step in range(p):
                cur = strands_of_copy[step]
                nxt = strands_of_copy[(step + 1) % p]
                new_passages.append(Passage(cur.end, nxt.start))
            new_strands.extend(strands_of_copy)
            copy_strand_ids.append(tuple(s.strand_id for s in strands_of_copy))
        specs.append(CopySpec(j, count, orientation, tuple(copy_ids), tuple(copy_strand_ids)))

    strands = tuple(
        Strand(s.strand_id, s.start, tuple(spliced[s.strand_id]), s.end)
        for s in diagram.strands
    ) + tuple(new_strands)
    circles = tuple(Circle(c.circle_id, tuple(spliced[c.circle_id])) for c in diagram.circles)
    augmented = LinkDiagram(
        graph,
        strands,
        circles,
        tuple(_finalize_crossings(new_crossings, strands, circles)),
        tuple(new_passages),
        orders,
    )
    plan = ExtensionPlan(plan_x, tuple(specs))
    report = validate_diagram(augmented)
    if not report.ok:
        raise AssertionError(f"synthesized diagram is invalid: {report.issues[:3]}")
    return augmented, plan


def _finalize_crossings(crossings, strands, circles) -> list[Crossing]:
    over: dict[str, tuple[str, int]] = {}
    under: dict[str, tuple[str, int]] = {}
    for comp in list(strands) + list(circles):
        cid = component_id(comp)
        for k, ev in enumerate(comp.events):
            if isinstance(ev, CrossingEvent):
                (over if ev.role == "over" else under)[ev.crossing_id] = (cid, k)
    out = []
    for c in crossings:
        if isinstance(c, Crossing):
            out.append(c)
        else:
            order = crossing_end_order(c.sign, over[c.crossing_id], under[c.crossing_id])
            out.append(Crossing(c.crossing_id, c.sign, order))
    return out
