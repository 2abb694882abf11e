"""Framed flat-plat presentations and their compilation to Heegaard graphs.

A flat plat holds a link as disjoint simple arcs in the plane joined by
unknotted bridges standing above it; every diagram crossing is an arc
passing under a bridge.  Surgery with coefficient equal to each component's
writhe is encoded by attaching tubes over the bridges: bridges become
1-handles, the link components (plus neighborhood curves of enough arcs)
become the characteristic curves, and cutting those curves at the 1-handle
co-cores yields the Heegaard graph.

Conventions fixed here (the construction is usually drawn, not written):

* Bridge spans on the base line must be pairwise disjoint, so the gate
  segment between a bridge's feet meets only its own co-core wall.
* A curve crosses the co-core of bridge b once per under-pass beneath b
  (traversals over the bridge top avoid the co-core); a neighborhood curve
  crosses it once per parent-arc endpoint on b and twice per parent-arc
  under-pass beneath b.
* Components are oriented starting at their smallest foot, walking the arc
  attached there away from it; neighborhood curves run counterclockwise.
* Markers along each co-core are ordered by position along the base line:
  left-foot loop first, then slot crossings (neighborhood curves straddling
  their parent arc), then the right-foot loop.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .model import Edge, HeegaardGraph, ValidationReport


class InvalidPlat(ValueError):
    """Raised when an operation needs a plat that fails validation."""

    def __init__(self, report: ValidationReport) -> None:
        super().__init__("; ".join(report.issues))
        self.report = report


class InsufficientCurves(ValueError):
    """Fewer qualifying neighborhood arcs than characteristic curves needed."""


class FramingMismatch(ValueError):
    """A component's writhe differs from its declared framing."""


@dataclass(frozen=True)
class Bridge:
    bridge_id: int
    feet: tuple[int, int]  # base-line positions, left < right after validation

    @property
    def left(self) -> int:
        return min(self.feet)

    @property
    def right(self) -> int:
        return max(self.feet)


@dataclass(frozen=True)
class UnderPass:
    bridge_id: int
    slot: int  # position along the gate, unique per bridge, ascending left to right
    sign: int  # diagram crossing sign, bridge over, relative to the canonical orientations


@dataclass(frozen=True)
class PlatArc:
    arc_id: str
    start_foot: int
    end_foot: int
    events: tuple[UnderPass, ...]  # in order along the arc from start to end


@dataclass(frozen=True)
class FlatPlat:
    bridges: tuple[Bridge, ...]
    arcs: tuple[PlatArc, ...]
    framings: dict[int, int]  # 1-based component index -> surgery coefficient

    def bridge_by_id(self, bridge_id: int) -> Bridge:
        for b in self.bridges:
            if b.bridge_id == bridge_id:
                return b
        raise KeyError(bridge_id)

    def arc_by_id(self, arc_id: str) -> PlatArc:
        for a in self.arcs:
            if a.arc_id == arc_id:
                return a
        raise KeyError(arc_id)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate_plat(plat: FlatPlat) -> ValidationReport:
    report = ValidationReport()
    ids = [b.bridge_id for b in plat.bridges]
    if len(set(ids)) != len(ids):
        report.add("duplicate bridge ids")
    feet: list[int] = []
    for b in plat.bridges:
        if b.feet[0] == b.feet[1]:
            report.add(f"bridge {b.bridge_id} has coincident feet")
        feet.extend(b.feet)
    if len(set(feet)) != len(feet):
        report.add("feet positions are not distinct")
    spans = sorted((b.left, b.right, b.bridge_id) for b in plat.bridges)
    for (l1, r1, b1), (l2, r2, b2) in zip(spans, spans[1:]):
        if l2 <= r1:
            report.add(f"bridges {b1} and {b2} have overlapping spans")

    arc_ids = [a.arc_id for a in plat.arcs]
    if len(set(arc_ids)) != len(arc_ids):
        report.add("duplicate arc ids")
    foot_use: dict[int, int] = {}
    for a in plat.arcs:
        for f in (a.start_foot, a.end_foot):
            foot_use[f] = foot_use.get(f, 0) + 1
            if f not in set(feet):
                report.add(f"arc {a.arc_id} attaches to unknown foot {f}")
    for f in sorted(set(feet)):
        n = foot_use.get(f, 0)
        if n != 1:
            report.add(f"foot {f} is used by {n} arc ends (expected 1)")

    bridge_ids = set(ids)
    slot_use: dict[tuple[int, int], int] = {}
    for a in plat.arcs:
        for ev in a.events:
            if ev.bridge_id not in bridge_ids:
                report.add(f"arc {a.arc_id} passes under unknown bridge {ev.bridge_id}")
            if ev.sign not in (1, -1):
                report.add(f"arc {a.arc_id} has under-pass sign {ev.sign}")
            key = (ev.bridge_id, ev.slot)
            slot_use[key] = slot_use.get(key, 0) + 1
    for (b, slot), n in sorted(slot_use.items()):
        if n > 1:
            report.add(f"bridge {b} slot {slot} is crossed {n} times")

    if report.ok:
        _check_planarity(plat, report)
    return report


def _check_planarity(plat: FlatPlat, report: ValidationReport) -> None:
    """Euler-characteristic check of the arcs-and-gates map.

    Arcs and the gate walls form a map on the sphere once the rotation at
    every wall crossing is fixed by the crossing direction; the data is
    realizable by disjoint simple arcs iff every connected piece traces to
    V - E + F = 2.
    """
    try:
        walk = link_components(plat, _validated=True)
    except ValueError as exc:
        report.add(f"component walk failed: {exc}")
        return
    direction = _crossing_directions(plat, walk)

    feet_v = {("foot", f) for b in plat.bridges for f in b.feet}
    event_v = {("ev", a.arc_id, k) for a in plat.arcs for k in range(len(a.events))}
    vertices = feet_v | event_v
    edges: list[tuple[tuple, tuple]] = []
    # Wall segments, left foot to right foot through the slot crossings.
    wall_chain: dict[int, list[tuple]] = {}
    for b in plat.bridges:
        stations: list[tuple[int, tuple]] = []
        for a in plat.arcs:
            for k, ev in enumerate(a.events):
                if ev.bridge_id == b.bridge_id:
                    stations.append((ev.slot, ("ev", a.arc_id, k)))
        chain = [("foot", b.left)] + [v for _, v in sorted(stations)] + [("foot", b.right)]
        wall_chain[b.bridge_id] = chain
        edges.extend(zip(chain, chain[1:]))
    for a in plat.arcs:
        chain = [("foot", a.start_foot)] + [("ev", a.arc_id, k) for k in range(len(a.events))] + [
            ("foot", a.end_foot)
        ]
        edges.extend(zip(chain, chain[1:]))

    darts_at: dict[tuple, list[int]] = {v: [] for v in vertices}
    head: dict[int, tuple] = {}
    for k, (u, v) in enumerate(edges):
        head[2 * k] = v
        head[2 * k + 1] = u
    tail = {d: head[d ^ 1] for d in head}

    def dart_between(u, v, used: set[int]) -> int:
        for k, (a_, b_) in enumerate(edges):
            if (a_, b_) == (u, v) and 2 * k not in used:
                return 2 * k
            if (b_, a_) == (u, v) and 2 * k + 1 not in used:
                return 2 * k + 1
        raise AssertionError("dart lookup failed")

    # Rotations: feet have degree 2 (order immaterial); events are
    # transversal crossings whose rotation is fixed by the direction.
    used: set[int] = set()
    rotation: dict[tuple, list[int]] = {}
    for a in plat.arcs:
        chain = [("foot", a.start_foot)] + [("ev", a.arc_id, k) for k in range(len(a.events))] + [
            ("foot", a.end_foot)
        ]
        for k, ev in enumerate(a.events):
            v = ("ev", a.arc_id, k)
            wall = wall_chain[ev.bridge_id]
            t = wall.index(v)
            d_wall_left = dart_between(v, wall[t - 1], used)
            used.add(d_wall_left)
            d_wall_right = dart_between(v, wall[t + 1], used)
            used.add(d_wall_right)
            d_prev = dart_between(v, chain[k], used)
            used.add(d_prev)
            d_next = dart_between(v, chain[k + 2], used)
            used.add(d_next)
            if direction[(a.arc_id, k)] > 0:
                rotation[v] = [d_wall_right, d_prev, d_wall_left, d_next]
            else:
                rotation[v] = [d_wall_right, d_next, d_wall_left, d_prev]
    for d in head:
        v = tail[d]
        if v in feet_v:
            rotation.setdefault(v, []).append(d)

    # Face tracing: next dart after arriving along d is the rotation
    # successor of the reversed dart at its head.
    succ: dict[int, int] = {}
    for v, darts in rotation.items():
        for k, d in enumerate(darts):
            succ[d] = darts[(k + 1) % len(darts)]
    next_in_face = {d: succ[d ^ 1] for d in head}
    faces = 0
    seen: set[int] = set()
    face_component: dict[tuple, int] = {}
    comp_of = _map_components(vertices, edges)
    face_count: dict[int, int] = {}
    for d in sorted(next_in_face):
        if d in seen:
            continue
        faces += 1
        face_count[comp_of[tail[d]]] = face_count.get(comp_of[tail[d]], 0) + 1
        while d not in seen:
            seen.add(d)
            d = next_in_face[d]
    for c in sorted(set(comp_of.values())):
        v_c = sum(1 for v in vertices if comp_of[v] == c)
        e_c = sum(1 for (u, v) in edges if comp_of[u] == c)
        f_c = face_count.get(c, 0)
        if v_c - e_c + f_c != 2:
            report.add(
                f"arc system is not planar: a component traces V-E+F = {v_c - e_c + f_c}"
            )
            return


def _map_components(vertices, edges) -> dict[tuple, int]:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    roots = sorted({find(v) for v in vertices})
    index = {r: k for k, r in enumerate(roots)}
    return {v: index[find(v)] for v in vertices}


# ---------------------------------------------------------------------------
# Components, orientation, writhe
# ---------------------------------------------------------------------------

WalkItem = tuple  # ("arc", arc_id, forward) | ("bridge", bridge_id, rightward)


@dataclass(frozen=True)
class PlatComponent:
    index: int  # 1-based, ordered by smallest foot
    items: tuple[WalkItem, ...]
    arcs: frozenset[str]
    bridges: frozenset[int]


def link_components(plat: FlatPlat, _validated: bool = False) -> list[PlatComponent]:
    """Follow arcs and bridges alternately; orientation starts at each
    component's smallest foot, along its arc."""
    if not _validated:
        report = validate_plat(plat)
        if not report.ok:
            raise InvalidPlat(report)
    arc_at: dict[int, tuple[PlatArc, bool]] = {}
    for a in plat.arcs:
        arc_at[a.start_foot] = (a, True)
        arc_at[a.end_foot] = (a, False)
    bridge_at: dict[int, Bridge] = {}
    for b in plat.bridges:
        for f in b.feet:
            bridge_at[f] = b
    components: list[PlatComponent] = []
    visited: set[int] = set()
    for f0 in sorted(arc_at):
        if f0 in visited:
            continue
        items: list[WalkItem] = []
        arcs: set[str] = set()
        bridges: set[int] = set()
        foot = f0
        while True:
            visited.add(foot)
            arc, forward = arc_at[foot]
            items.append(("arc", arc.arc_id, forward))
            arcs.add(arc.arc_id)
            foot = arc.end_foot if forward else arc.start_foot
            visited.add(foot)
            bridge = bridge_at[foot]
            rightward = foot == bridge.left
            items.append(("bridge", bridge.bridge_id, rightward))
            bridges.add(bridge.bridge_id)
            foot = bridge.right if rightward else bridge.left
            if foot == f0:
                break
        components.append(PlatComponent(0, tuple(items), frozenset(arcs), frozenset(bridges)))
    return [
        PlatComponent(k + 1, c.items, c.arcs, c.bridges) for k, c in enumerate(components)
    ]


def _bridge_directions(walk: list[PlatComponent]) -> dict[int, int]:
    out: dict[int, int] = {}
    for comp in walk:
        for item in comp.items:
            if item[0] == "bridge":
                out[item[1]] = 1 if item[2] else -1
    return out


def _arc_directions(walk: list[PlatComponent]) -> dict[str, int]:
    out: dict[str, int] = {}
    for comp in walk:
        for item in comp.items:
            if item[0] == "arc":
                out[item[1]] = 1 if item[2] else -1
    return out


def _crossing_directions(plat: FlatPlat, walk: list[PlatComponent]) -> dict[tuple[str, int], int]:
    """Gate-crossing direction of each under-pass, measured along the arc's
    declared direction: +1 crosses from the bridge's front side to its back.

    The declared diagram sign, read against the canonical orientations,
    determines the direction: sign = -(direction along the canonical
    orientation) * (bridge direction)."""
    beta = _bridge_directions(walk)
    phi = _arc_directions(walk)
    out: dict[tuple[str, int], int] = {}
    for a in plat.arcs:
        for k, ev in enumerate(a.events):
            canonical = -ev.sign * beta[ev.bridge_id]
            out[(a.arc_id, k)] = canonical * phi[a.arc_id]
    return out


def writhe(plat: FlatPlat, component: Union[int, PlatComponent]) -> int:
    """Sum of self-crossing signs of one component of the projection."""
    walk = link_components(plat)
    if isinstance(component, PlatComponent):
        comp = component
    else:
        comp = walk[component - 1]
    total = 0
    for a in plat.arcs:
        if a.arc_id not in comp.arcs:
            continue
        for ev in a.events:
            if ev.bridge_id in comp.bridges:
                total += ev.sign
    return total


# ---------------------------------------------------------------------------
# Characteristic curve selection and compilation
# ---------------------------------------------------------------------------

CurveRef = tuple[str, Union[int, str]]  # ("component", index) | ("neighborhood", arc id)


def select_characteristic_curves(plat: FlatPlat) -> list[CurveRef]:
    """All link components, padded with neighborhood curves of arcs whose
    endpoints land on distinct bridges (greedy by ascending arc id)."""
    walk = link_components(plat)
    n = len(plat.bridges)
    curves: list[CurveRef] = [("component", c.index) for c in walk]
    needed = n - len(walk)
    if needed <= 0:
        return curves
    bridge_at: dict[int, int] = {}
    for b in plat.bridges:
        for f in b.feet:
            bridge_at[f] = b.bridge_id
    qualifying = [
        a.arc_id
        for a in sorted(plat.arcs, key=lambda a: a.arc_id)
        if bridge_at[a.start_foot] != bridge_at[a.end_foot]
    ]
    if len(qualifying) < needed:
        raise InsufficientCurves(
            f"need {needed} neighborhood curves but only {len(qualifying)} arcs qualify"
        )
    curves.extend(("neighborhood", aid) for aid in qualifying[:needed])
    return curves


def _component_crossings(
    plat: FlatPlat, comp: PlatComponent, direction
) -> list[tuple[int, int, tuple]]:
    """(bridge, co-core direction, gate position key) along the component."""
    out = []
    for item in comp.items:
        if item[0] != "arc":
            continue
        _, arc_id, forward = item
        arc = plat.arc_by_id(arc_id)
        indices = range(len(arc.events)) if forward else range(len(arc.events) - 1, -1, -1)
        for k in indices:
            ev = arc.events[k]
            d = direction[(arc_id, k)] * (1 if forward else -1)
            out.append((ev.bridge_id, d, (1, ev.slot, 0)))
    return out


def _neighborhood_crossings(
    plat: FlatPlat, arc: PlatArc, direction, bridge_at
) -> list[tuple[int, int, tuple]]:
    """Counterclockwise boundary of a thin neighborhood of one arc.

    The side right of the arc runs parallel first, then the loop around the
    end foot, then the left side backwards, then the loop around the start
    foot.  Foot loops cross the gate once: leaving a left foot the loop runs
    back to front (-1), leaving a right foot front to back (+1)."""
    out: list[tuple[int, int, tuple]] = []
    for k, ev in enumerate(arc.events):
        delta = direction[(arc.arc_id, k)]
        out.append((ev.bridge_id, delta, (1, ev.slot, -delta)))
    out.append(_foot_loop(plat, arc.end_foot, bridge_at))
    for k in range(len(arc.events) - 1, -1, -1):
        ev = arc.events[k]
        delta = direction[(arc.arc_id, k)]
        out.append((ev.bridge_id, -delta, (1, ev.slot, delta)))
    out.append(_foot_loop(plat, arc.start_foot, bridge_at))
    return out


def _foot_loop(plat: FlatPlat, foot: int, bridge_at) -> tuple[int, int, tuple]:
    bridge = plat.bridge_by_id(bridge_at[foot])
    if foot == bridge.left:
        return (bridge.bridge_id, -1, (0, 0, 0))
    return (bridge.bridge_id, 1, (2, 0, 0))


def compile_heegaard_graph(
    plat: FlatPlat, allow_framing_mismatch: bool = False
) -> tuple[HeegaardGraph, list[str]]:
    """Compile a validated, framed flat plat into a Heegaard graph.

    Returns the graph and a list of warnings (non-unit framings).  Raises
    InvalidPlat, FramingMismatch (unless overridden), InsufficientCurves, or
    ValueError when a characteristic curve misses every co-core (such a
    curve cannot be carried by the graph; add a cancelling pair of
    under-passes to the presentation).
    """
    report = validate_plat(plat)
    if not report.ok:
        raise InvalidPlat(report)
    walk = link_components(plat)
    warnings: list[str] = []

    expected = set(range(1, len(walk) + 1))
    declared = set(plat.framings)
    if declared != expected:
        raise FramingMismatch(
            f"framings declared for components {sorted(declared)}, link has {sorted(expected)}"
        )
    for comp in walk:
        w = writhe(plat, comp)
        f = plat.framings[comp.index]
        if w != f and not allow_framing_mismatch:
            raise FramingMismatch(
                f"component {comp.index} has writhe {w} but framing {f}"
            )
        if abs(f) != 1:
            warnings.append(
                f"component {comp.index} framing {f} is not +1 or -1; "
                "the compiled manifold need not be a homology sphere"
            )

    curves = select_characteristic_curves(plat)
    direction = _crossing_directions(plat, walk)
    bridge_at: dict[int, int] = {}
    for b in plat.bridges:
        for f in b.feet:
            bridge_at[f] = b.bridge_id

    sequences: list[list[tuple[int, int, tuple]]] = []
    for kind, ref in curves:
        if kind == "component":
            seq = _component_crossings(plat, walk[ref - 1], direction)
        else:
            seq = _neighborhood_crossings(plat, plat.arc_by_id(ref), direction, bridge_at)
        if not seq:
            raise ValueError(
                f"characteristic curve for {kind} {ref} meets no 1-handle co-core"
            )
        sequences.append(seq)

    # Number the markers of each co-core by base-line position.
    bridge_index = {b.bridge_id: k + 1 for k, b in enumerate(sorted(plat.bridges, key=lambda b: b.left))}
    stations: dict[int, list[tuple]] = {b.bridge_id: [] for b in plat.bridges}
    for seq in sequences:
        for bid, _, key in seq:
            stations[bid].append(key)
    marker_index: dict[tuple[int, tuple], int] = {}
    for bid, keys in stations.items():
        for idx, key in enumerate(sorted(keys)):
            marker_index[(bid, key)] = idx

    vertex_orders: dict = {}
    reflections: dict[int, dict[str, str]] = {}
    for b in plat.bridges:
        i = bridge_index[b.bridge_id]
        names = [f"m{t}" for t in range(len(stations[b.bridge_id]))]
        vertex_orders[(i, 1)] = tuple(names)
        vertex_orders[(i, -1)] = tuple(reversed(names))
        reflections[i] = {name: name for name in names}

    # Cut each curve at its crossings: edge k runs from the exit of crossing
    # k to the entry of crossing k+1; a crossing with direction d enters the
    # handle through the d-side vertex.
    edges: list[Edge] = []
    for j, seq in enumerate(sequences, start=1):
        p = len(seq)
        names = [f"m{marker_index[(bid, key)]}" for bid, _, key in seq]
        sides = [(bridge_index[bid], d) for bid, d, _ in seq]
        for k in range(p):
            i_out, d_out = sides[k]
            i_in, d_in = sides[(k + 1) % p]
            edges.append(
                Edge(
                    f"e{j}_{k}",
                    j,
                    ((i_out, -d_out), names[k]),
                    ((i_in, d_in), names[(k + 1) % p]),
                )
            )
    graph = HeegaardGraph(len(plat.bridges), vertex_orders, reflections, tuple(edges))
    return graph, warnings
