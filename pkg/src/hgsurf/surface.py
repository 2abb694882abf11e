"""The spanning-surface pipeline for a balanced diagram.

Stages: choose pairing chords inside every plus vertex (mirrored through the
reflection), smooth all crossings respecting orientation, count the closed
curves of the smoothed system plus chords (one 0-handle disc each), then
assemble the handle census: rectangular bands through the 1-handles (one per
chord pair), half-twisted bands (one per crossing), and caps over the
extension components.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .extension import ExtensionPlan, is_balanced, synthesize_extension_link
from .homology import link_class, relator_matrix, solve_extension_coefficients
from .model import (
    Attachment,
    Circle,
    CrossingEvent,
    HeegaardGraph,
    LinkDiagram,
    Strand,
    component_id,
    component_members,
    component_walk,
    format_vertex,
)


class UnbalancedVertex(ValueError):
    """A vertex fails the balance count, so no pairing exists."""


class OpenChain(ValueError):
    """The glued system does not close up; the matching is inconsistent."""


# ---------------------------------------------------------------------------
# Pairing chords
# ---------------------------------------------------------------------------

Chord = tuple[Attachment, Attachment]  # (forward end, backward end)


@dataclass(frozen=True)
class PairingMatching:
    """Non-crossing perfect matchings of the strand attachments, per vertex
    pair: chords on the plus vertex and their reflected images opposite."""

    plus_chords: dict[int, tuple[Chord, ...]]
    minus_chords: dict[int, tuple[Chord, ...]]

    def chord_count(self) -> int:
        return sum(len(v) for v in self.plus_chords.values())


def _vertex_chords(diagram: LinkDiagram, v) -> list[Chord]:
    """Canonical non-crossing matching by adjacent-opposite-pair elimination.

    Scans the cyclic attachment sequence from the lexicographically smallest
    position, repeatedly matching an adjacent pair of opposite signs.
    """
    attachments = diagram.attachments_at(v)
    if not attachments:
        return []
    signs = {pos: diagram.attachment_sign((v, pos)) for pos in attachments}
    plus = sum(1 for s in signs.values() if s > 0)
    if 2 * plus != len(attachments):
        raise UnbalancedVertex(
            f"vertex {format_vertex(v)} carries {plus} forward and "
            f"{len(attachments) - plus} backward ends"
        )
    k = attachments.index(min(attachments))
    ordered = attachments[k:] + attachments[:k]
    stack: list[str] = []
    chords: list[Chord] = []
    for pos in ordered:
        if stack and signs[stack[-1]] != signs[pos]:
            other = stack.pop()
            fwd, bwd = (other, pos) if signs[other] > 0 else (pos, other)
            chords.append(((v, fwd), (v, bwd)))
        else:
            stack.append(pos)
    if stack:
        raise UnbalancedVertex(f"vertex {format_vertex(v)}: unmatched attachments remain")
    return chords


def pairing_matching(diagram: LinkDiagram) -> PairingMatching:
    plus: dict[int, tuple[Chord, ...]] = {}
    minus: dict[int, tuple[Chord, ...]] = {}
    for i in range(1, diagram.graph.genus + 1):
        chords = _vertex_chords(diagram, (i, 1))
        plus[i] = tuple(chords)
        mirrored = []
        for fwd, bwd in chords:
            # The partner of a forward end is a backward end opposite, and
            # vice versa, so the mirrored chord swaps roles.
            mirrored.append((diagram.passage_partner(bwd), diagram.passage_partner(fwd)))
        minus[i] = tuple(mirrored)
        # The minus vertex must balance as well; its matching is forced, but
        # an inconsistent diagram would leave attachments unmatched there.
        mirrored_ends = {att for chord in mirrored for att in chord}
        leftover = [
            pos for pos in diagram.attachments_at((i, -1)) if ((i, -1), pos) not in mirrored_ends
        ]
        if leftover:
            raise UnbalancedVertex(
                f"vertex {format_vertex((i, -1))}: attachments {sorted(leftover)} unmatched"
            )
    return PairingMatching(plus, minus)


# ---------------------------------------------------------------------------
# Oriented crossing resolution
# ---------------------------------------------------------------------------

ArcId = tuple[str, int]  # (component id, arc index along the component)


@dataclass(frozen=True)
class CrossingBand:
    """A smoothed crossing: the two reconnected pairs it used to join."""

    crossing_id: str
    sign: int
    over_in: ArcId
    over_out: ArcId
    under_in: ArcId
    under_out: ArcId


@dataclass(frozen=True)
class ResolvedSystem:
    """Crossing-free curve system left by oriented smoothing.

    Arcs carry an orientation inherited from the link; ``joins`` glue the
    outgoing end of one arc to the incoming end of another (smoothings and
    the closing seam of event-free circles).  Attachment ends stay open for
    the pairing chords.
    """

    arcs: tuple[ArcId, ...]
    joins: tuple[tuple[ArcId, ArcId], ...]
    start_arc: dict[Attachment, ArcId]  # attachment -> arc it begins
    end_arc: dict[Attachment, ArcId]  # attachment -> arc it finishes
    crossing_bands: tuple[CrossingBand, ...]


def resolve_crossings(diagram: LinkDiagram) -> ResolvedSystem:
    arcs: list[ArcId] = []
    joins: list[tuple[ArcId, ArcId]] = []
    start_arc: dict[Attachment, ArcId] = {}
    end_arc: dict[Attachment, ArcId] = {}
    # Per crossing end: which arc comes in / goes out.
    incoming: dict[tuple[str, str], ArcId] = {}  # (crossing, role) -> arc
    outgoing: dict[tuple[str, str], ArcId] = {}

    for comp in diagram.components():
        cid = component_id(comp)
        cuts = [k for k, ev in enumerate(comp.events) if isinstance(ev, CrossingEvent)]
        if isinstance(comp, Strand):
            pieces = len(cuts) + 1
            ids = [(cid, t) for t in range(pieces)]
            arcs.extend(ids)
            start_arc[comp.start] = ids[0]
            end_arc[comp.end] = ids[-1]
            for t, k in enumerate(cuts):
                ev = comp.events[k]
                incoming[(ev.crossing_id, ev.role)] = ids[t]
                outgoing[(ev.crossing_id, ev.role)] = ids[t + 1]
        else:
            if not cuts:
                ids = [(cid, 0)]
                arcs.extend(ids)
                joins.append((ids[0], ids[0]))  # closing seam
                continue
            ids = [(cid, t) for t in range(len(cuts))]
            arcs.extend(ids)
            # Arc t runs from crossing event cuts[t] to cuts[t+1], cyclically.
            for t, k in enumerate(cuts):
                ev = comp.events[k]
                incoming[(ev.crossing_id, ev.role)] = ids[t - 1]
                outgoing[(ev.crossing_id, ev.role)] = ids[t]

    bands: list[CrossingBand] = []
    for c in diagram.crossings:
        o_in = incoming[(c.crossing_id, "over")]
        o_out = outgoing[(c.crossing_id, "over")]
        u_in = incoming[(c.crossing_id, "under")]
        u_out = outgoing[(c.crossing_id, "under")]
        # Oriented smoothing: incoming over continues as outgoing under and
        # vice versa.
        joins.append((o_in, u_out))
        joins.append((u_in, o_out))
        bands.append(CrossingBand(c.crossing_id, c.sign, o_in, o_out, u_in, u_out))
    return ResolvedSystem(tuple(arcs), tuple(joins), start_arc, end_arc, tuple(bands))


# ---------------------------------------------------------------------------
# Seifert circles of the smoothed system plus chords
# ---------------------------------------------------------------------------


class _UnionFind:
    def __init__(self, items) -> None:
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class CircleCount:
    count: int
    circles: tuple[tuple[ArcId, ...], ...]  # each sorted, ordered by minimum
    circle_of: dict[ArcId, int]  # arc -> index into circles


def count_seifert_circles(system: ResolvedSystem, matching: PairingMatching) -> CircleCount:
    """Closed curves of the smoothed link together with the pairing chords.

    Chords glue a forward attachment end to a backward one on both vertices
    of every pair; passages are never glued, their trip through the handle
    is replaced by the mirrored chord.  Every arc end must be consumed
    exactly once or the matching is inconsistent.
    """
    out_used: dict[ArcId, int] = {a: 0 for a in system.arcs}
    in_used: dict[ArcId, int] = {a: 0 for a in system.arcs}
    joins = list(system.joins)
    for chords in list(matching.plus_chords.values()) + list(matching.minus_chords.values()):
        for fwd, bwd in chords:
            if fwd not in system.end_arc or bwd not in system.start_arc:
                raise OpenChain(f"chord end {fwd} or {bwd} is not an open arc end")
            joins.append((system.end_arc[fwd], system.start_arc[bwd]))
    uf = _UnionFind(system.arcs)
    for out_arc, in_arc in joins:
        out_used[out_arc] += 1
        in_used[in_arc] += 1
        uf.union(out_arc, in_arc)
    bad = [a for a in system.arcs if out_used[a] != 1 or in_used[a] != 1]
    if bad:
        raise OpenChain(f"open chain detected at arcs {sorted(bad)[:4]}")
    groups: dict[ArcId, list[ArcId]] = {}
    for a in system.arcs:
        groups.setdefault(uf.find(a), []).append(a)
    circles = tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))
    circle_of = {a: k for k, circle in enumerate(circles) for a in circle}
    return CircleCount(len(circles), circles, circle_of)


# ---------------------------------------------------------------------------
# Handle census of the spanning surface
# ---------------------------------------------------------------------------


def _arc_token(arc: ArcId) -> str:
    return f"{arc[0]}.{arc[1]}"


@dataclass(frozen=True)
class PairingBand:
    handle: int
    forward_end: str  # attachment token <vertex>.<pos>
    backward_end: str
    joins: tuple[int, int]  # circle indices (plus side, minus side)


@dataclass(frozen=True)
class TwistBand:
    crossing_id: str
    sign: int
    joins: tuple[int, int]


@dataclass(frozen=True)
class Cap:
    component: str
    color: int
    orientation: int


@dataclass(frozen=True)
class SpanningSurface:
    h0: int
    h1_pairing: int
    h1_twist: int
    h2: int
    chi: int
    boundary_count: int
    genus: int
    circles: tuple[tuple[str, ...], ...]  # arc tokens per 0-handle disc
    pairing_bands: tuple[PairingBand, ...]
    twist_bands: tuple[TwistBand, ...]
    caps: tuple[Cap, ...]

    @property
    def h1(self) -> int:
        return self.h1_pairing + self.h1_twist


def assemble_surface(
    diagram: LinkDiagram,
    plan: ExtensionPlan,
    matching: PairingMatching,
) -> SpanningSurface:
    """Handle decomposition bounded by the original link.

    ``diagram`` is the balanced (possibly augmented) diagram; the plan's
    extension components are capped and excluded from the boundary count.
    """
    system = resolve_crossings(diagram)
    counted = count_seifert_circles(system, matching)

    h0 = counted.count
    h1_pairing = matching.chord_count()
    h1_twist = len(diagram.crossings)
    h2 = plan.k
    chi = h0 - (h1_pairing + h1_twist) + h2

    walk = component_walk(diagram)
    extension_strands = plan.strand_ids()
    mu = sum(1 for members in component_members(walk) if not (members & extension_strands))

    if not diagram.components():
        genus = 0
        chi = 0
        mu = 0
    else:
        if (2 - chi - mu) % 2 != 0:
            raise ValueError(f"parity violation: chi={chi}, boundary={mu}")
        genus = (2 - chi - mu) // 2

    pairing_bands = []
    for i in sorted(matching.plus_chords):
        for (fwd, bwd), (m_fwd, m_bwd) in zip(matching.plus_chords[i], matching.minus_chords[i]):
            plus_circle = counted.circle_of[system.end_arc[fwd]]
            minus_circle = counted.circle_of[system.end_arc[m_fwd]]
            pairing_bands.append(
                PairingBand(
                    handle=i,
                    forward_end=f"{format_vertex(fwd[0])}.{fwd[1]}",
                    backward_end=f"{format_vertex(bwd[0])}.{bwd[1]}",
                    joins=(plus_circle, minus_circle),
                )
            )
    twist_bands = []
    for band in system.crossing_bands:
        a = counted.circle_of[band.over_in]
        b = counted.circle_of[band.under_in]
        twist_bands.append(TwistBand(band.crossing_id, band.sign, (a, b)))
    caps = []
    for spec in plan.copies:
        for cid in spec.component_ids:
            caps.append(Cap(cid, spec.color, spec.orientation))

    return SpanningSurface(
        h0=h0,
        h1_pairing=h1_pairing,
        h1_twist=h1_twist,
        h2=h2,
        chi=chi,
        boundary_count=mu,
        genus=genus,
        circles=tuple(tuple(_arc_token(a) for a in circle) for circle in counted.circles),
        pairing_bands=tuple(pairing_bands),
        twist_bands=tuple(twist_bands),
        caps=tuple(caps),
    )


# ---------------------------------------------------------------------------
# Full pipeline
# ---------------------------------------------------------------------------


def spanning_surface(
    graph: HeegaardGraph, diagram: LinkDiagram
) -> tuple[LinkDiagram, ExtensionPlan, SpanningSurface]:
    """Run the whole algorithm: solve for the extension link, synthesize it,
    pair, smooth, and assemble the surface census.

    Raises NoIntegralSolution when the link is not homologically trivial.
    """
    ell = link_class(diagram)
    matrix = relator_matrix(graph)
    x = solve_extension_coefficients(matrix, ell)
    augmented, plan = synthesize_extension_link(graph, diagram, x)
    balance = is_balanced(augmented)
    if not balance.balanced:
        raise UnbalancedVertex(f"augmented diagram is unbalanced: {balance.per_vertex}")
    matching = pairing_matching(augmented)
    surface = assemble_surface(augmented, plan, matching)
    return augmented, plan, surface
