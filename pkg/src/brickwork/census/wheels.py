"""Splices of two odd wheels and the closed-form wheel-like test for them.

Both operands come from ``odd_wheel``: rim ``0..k-1`` and hub ``k``, so the
hub of each operand is fixed by its labelling. An instance splices ``G`` at
``u`` with ``H`` at ``v``; there are four attachment kinds, hub-rim,
rim-hub, rim-rim and hub-hub. Instances are generated up to the dihedral
symmetry of each rim, and parallel copies of an edge are interchangeable,
so a θ is only recorded up to which edge class each edge is sent to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product
from typing import Iterator

from ..canon import canonical_form, canonical_graph
from ..cuts import is_brick
from ..graph import MultiGraph, SpliceMap, odd_wheel, parallel_classes, splice
from ..io import emit_sparse6
from ..planarity import KuratowskiWitness, is_planar, k33_with_class, validate_witness
from ..removable import is_wheel_like
from .parallel import parallel_map

ATTACHMENT_KINDS = ("hub-rim", "rim-hub", "rim-rim", "hub-hub")


class NotABrick(ValueError):
    """The closed-form test only speaks about splices that are bricks."""


@dataclass(frozen=True)
class WheelSpliceInstance:
    s: int
    t: int
    g_spokes: tuple[int, ...]
    h_spokes: tuple[int, ...]
    u: int
    v: int
    theta: tuple[tuple[int, int], ...]

    @cached_property
    def G(self) -> MultiGraph:
        return odd_wheel(self.s, self.g_spokes)

    @cached_property
    def H(self) -> MultiGraph:
        return odd_wheel(self.t, self.h_spokes)

    @cached_property
    def graph(self) -> MultiGraph:
        return splice(self.G, self.H, SpliceMap(self.u, self.v, self.theta))

    @property
    def kind(self) -> str:
        return ("hub" if self.u == self.s else "rim") + "-" + ("hub" if self.v == self.t else "rim")

    @property
    def rim_offset(self) -> int | None:
        """``r`` in the 1-based labelling ``u_1 .. u_s`` of the hub-attached rim.

        ``u_1`` is the rim vertex joined to the rim neighbour ``v_1`` of the
        attachment vertex and ``u_r`` the one joined to ``v_{t-1}``. None
        unless exactly one attachment is a hub.
        """
        ends = _rim_attachment_ends(self)
        if ends is None:
            return None
        a, b, k = ends
        return (b - a) % k + 1

    def describe(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "kind": self.kind,
            "g_spokes": list(self.g_spokes),
            "h_spokes": list(self.h_spokes),
            "u": self.u,
            "v": self.v,
            "theta": [list(p) for p in self.theta],
        }


def _rim_attachment_ends(inst: WheelSpliceInstance) -> tuple[int, int, int] | None:
    """``(a, b, k)``: hub-side rim vertices receiving the two rim edges at the
    rim-side attachment vertex, and the hub-side rim length."""
    g_hub, h_hub = inst.u == inst.s, inst.v == inst.t
    if g_hub == h_hub:
        return None
    if g_hub:
        hub_side, rim_side, x, k = inst.G, inst.H, inst.v, inst.s
        pairs = {h: g for g, h in inst.theta}
    else:
        hub_side, rim_side, x, k = inst.H, inst.G, inst.u, inst.t
        pairs = {g: h for g, h in inst.theta}
    rk = rim_side.n - 1
    forward, backward = x, (x - 1) % rk  # rim edge ids x(x+1) and (x-1)x
    hub = k

    def rim_end(eid):
        return hub_side.other_end(pairs[eid], hub)

    return rim_end(forward), rim_end(backward), k


def wheel_splice_predicate(inst: WheelSpliceInstance) -> bool:
    """Closed-form wheel-like verdict for a splice of two odd wheels.

    True iff exactly one attachment vertex is a hub, the wheel attached at
    its hub has at least 6 vertices, every parallel class of either wheel
    meets its hub, and the two rim edges at the rim-side attachment vertex
    are sent to spokes ending at distinct, nonadjacent rim vertices.
    Raises ``NotABrick`` when the splice is not a brick.
    """
    if not is_brick(inst.graph):
        raise NotABrick("splice is not a brick")
    ends = _rim_attachment_ends(inst)
    if ends is None:
        return False
    a, b, k = ends
    hub_side_n = inst.s + 1 if inst.u == inst.s else inst.t + 1
    if hub_side_n < 6:
        return False
    for W, hub in ((inst.G, inst.s), (inst.H, inst.t)):
        for cls in parallel_classes(W):
            if hub not in W.ends(cls[0]):
                return False
    return a != b and (b - a) % k not in (1, k - 1)


wiwj_predicate = wheel_splice_predicate


# -- enumeration -------------------------------------------------------------

def _dihedral(k: int) -> list[tuple[int, ...]]:
    """All rim permutations of a k-cycle, as images of 0..k-1."""
    out = []
    for r in range(k):
        out.append(tuple((i + r) % k for i in range(k)))
        out.append(tuple((r - i) % k for i in range(k)))
    return out


def _reflections_fixing_zero(k: int) -> list[tuple[int, ...]]:
    return [tuple(range(k)), tuple((-i) % k for i in range(k))]


def _spoke_patterns(k: int, max_mult: int, max_doubled: int | None) -> list[tuple[int, ...]]:
    out = []
    for p in product(range(1, max_mult + 1), repeat=k):
        if max_doubled is not None and sum(x > 1 for x in p) > max_doubled:
            continue
        out.append(p)
    return out


def _orbit_min(p: tuple[int, ...], group) -> tuple[int, ...]:
    return min(tuple(p[g[i]] for i in range(len(p))) for g in group)


def _patterns_up_to(k, group, max_mult, max_doubled, fixed=None):
    """Orbit representatives of spoke patterns; ``fixed`` pins position 0."""
    seen = set()
    out = []
    for p in _spoke_patterns(k, max_mult, max_doubled):
        if fixed is not None:
            p = (fixed,) + p[1:]
        if p in seen:
            continue
        rep = _orbit_min(p, group)
        seen.add(p)
        if rep == p:
            out.append(p)
    return out


def _spokes_by_rim(W: MultiGraph, k: int) -> list[list[int]]:
    """Spoke edge ids grouped by rim vertex."""
    groups = [[] for _ in range(k)]
    for eid in W.incident(k):
        groups[W.other_end(eid, k)].append(eid)
    return groups


def _stabiliser(p, group):
    return [g for g in group if all(p[g[i]] == p[i] for i in range(len(p)))]


def _hub_rim(s, t, max_mult, max_doubled) -> Iterator[WheelSpliceInstance]:
    """G attached at its hub, H at rim vertex 0."""
    dg = _dihedral(s)
    for mg in _patterns_up_to(s, dg, max_mult, max_doubled):
        d = sum(mg)
        if d - 2 < 1:
            continue
        stab = _stabiliser(mg, dg)
        G = odd_wheel(s, mg)
        gspokes = _spokes_by_rim(G, s)
        rest_t = _patterns_up_to(t, _reflections_fixing_zero(t), max_mult, max_doubled, fixed=None)
        seen_h = set()
        for mh_tail in rest_t:
            mh = (d - 2,) + mh_tail[1:]
            if mh in seen_h:
                continue
            seen_h.add(mh)
            h_sym = mh == tuple(mh[(-i) % t] for i in range(t))
            H = odd_wheel(t, mh)
            fwd, back = 0, t - 1
            h_spokes = [e for e in H.incident(0) if e not in (fwd, back)]
            seen_ab = set()
            for a, b in product(range(s), repeat=2):
                if a == b and mg[a] < 2:
                    continue
                orbit = {(g[a], g[b]) for g in stab}
                if h_sym:
                    orbit |= {(y, x) for x, y in orbit}
                if min(orbit) in seen_ab:
                    continue
                seen_ab.add(min(orbit))
                pool = [list(x) for x in gspokes]
                ga = pool[a].pop(0)
                gb = pool[b].pop(0)
                left = [e for grp in pool for e in grp]
                theta = ((ga, fwd), (gb, back)) + tuple(zip(left, h_spokes))
                yield WheelSpliceInstance(s, t, mg, mh, s, 0, tuple(sorted(theta)))


def _mirror(inst: WheelSpliceInstance) -> WheelSpliceInstance:
    return WheelSpliceInstance(
        inst.t, inst.s, inst.h_spokes, inst.g_spokes, inst.v, inst.u,
        tuple(sorted((h, g) for g, h in inst.theta)),
    )


def _rim_rim(s, t, max_mult, max_doubled) -> Iterator[WheelSpliceInstance]:
    """Both wheels attached at rim vertex 0; the spoke multiplicities there agree."""
    for c in range(1, max_mult + 1):
        gpats = _patterns_up_to(s, _reflections_fixing_zero(s), max_mult, max_doubled, fixed=c)
        hpats = _patterns_up_to(t, _reflections_fixing_zero(t), max_mult, max_doubled, fixed=c)
        gpats = [p for p in gpats if p[0] == c]
        hpats = [p for p in hpats if p[0] == c]
        for mg, mh in product(gpats, hpats):
            G, H = odd_wheel(s, mg), odd_wheel(t, mh)
            # edge classes at the attachment vertex: +rim, -rim, spoke copies
            g_star = [0, s - 1] + [e for e in G.incident(0) if e not in (0, s - 1)]
            h_star = [0, t - 1] + [e for e in H.incident(0) if e not in (0, t - 1)]
            h_type = ["+", "-"] + ["h"] * c
            g_flip = mg == tuple(mg[(-i) % s] for i in range(s))
            h_flip = mh == tuple(mh[(-i) % t] for i in range(t))
            seen = set()
            for perm in permutations(range(len(h_star))):
                sig = tuple(h_type[j] for j in perm)
                variants = {sig}
                swap = {"+": "-", "-": "+", "h": "h"}
                if h_flip:
                    variants |= {tuple(swap[x] for x in z) for z in variants}
                if g_flip:
                    variants |= {(z[1], z[0]) + z[2:] for z in variants}
                key = min(variants)
                if key in seen:
                    continue
                seen.add(key)
                theta = tuple(sorted(zip(g_star, [h_star[j] for j in perm])))
                yield WheelSpliceInstance(s, t, mg, mh, 0, 0, theta)


def _hub_hub(s, t, max_mult, max_doubled) -> Iterator[WheelSpliceInstance]:
    """Both hubs consumed; θ is a table of how many G spokes at rim vertex
    ``i`` go to H spokes at rim vertex ``j``."""
    dg, dh = _dihedral(s), _dihedral(t)
    gpats = _patterns_up_to(s, dg, max_mult, max_doubled)
    hpats = _patterns_up_to(t, dh, max_mult, max_doubled)
    for mg, mh in product(gpats, hpats):
        if sum(mg) != sum(mh):
            continue
        G, H = odd_wheel(s, mg), odd_wheel(t, mh)
        gsp, hsp = _spokes_by_rim(G, s), _spokes_by_rim(H, t)
        gstab, hstab = _stabiliser(mg, dg), _stabiliser(mh, dh)
        seen = set()
        for table in _tables(mg, mh):
            key = min(
                tuple(table[g[i]][h[j]] for i in range(s) for j in range(t))
                for g in gstab for h in hstab
            )
            if key in seen:
                continue
            seen.add(key)
            gpool = [list(x) for x in gsp]
            hpool = [list(x) for x in hsp]
            theta = []
            for i in range(s):
                for j in range(t):
                    for _ in range(table[i][j]):
                        theta.append((gpool[i].pop(0), hpool[j].pop(0)))
            yield WheelSpliceInstance(s, t, mg, mh, s, t, tuple(sorted(theta)))


def _tables(rows, cols) -> Iterator[list[list[int]]]:
    """Nonnegative integer matrices with the given row and column sums."""
    s, t = len(rows), len(cols)
    table = [[0] * t for _ in range(s)]
    left = list(cols)

    def fill(i, j, need):
        if i == s:
            if all(x == 0 for x in left):
                yield [row[:] for row in table]
            return
        if j == t - 1:
            if need <= left[j]:
                table[i][j] = need
                left[j] -= need
                yield from fill(i + 1, 0, rows[i + 1] if i + 1 < s else 0)
                left[j] += need
                table[i][j] = 0
            return
        for x in range(min(need, left[j]), -1, -1):
            table[i][j] = x
            left[j] -= x
            yield from fill(i, j + 1, need - x)
            left[j] += x
        table[i][j] = 0

    yield from fill(0, 0, rows[0])


def wheel_splice_instances(
    sizes=(3, 5, 7),
    max_multiplicity: int = 2,
    max_doubled: int | None = None,
    hub_hub_max_doubled: int | None = 2,
    kinds=ATTACHMENT_KINDS,
) -> Iterator[WheelSpliceInstance]:
    """Every instance in the bounded family, in a fixed order.

    Spoke multiplicities are at most ``max_multiplicity``, except the spoke
    at a rim attachment vertex, whose multiplicity is forced by the degree
    match. ``max_doubled`` caps how many spokes per wheel exceed 1;
    ``hub_hub_max_doubled`` does the same for hub-hub splices, whose theta
    tables grow too fast to enumerate with every spoke doubled.
    """
    if hub_hub_max_doubled is None:
        hh = max_doubled
    elif max_doubled is None:
        hh = hub_hub_max_doubled
    else:
        hh = min(max_doubled, hub_hub_max_doubled)
    for s, t in product(sizes, repeat=2):
        if "hub-rim" in kinds:
            yield from _hub_rim(s, t, max_multiplicity, max_doubled)
        if "rim-hub" in kinds:
            yield from (_mirror(i) for i in _hub_rim(t, s, max_multiplicity, max_doubled))
        if "rim-rim" in kinds:
            yield from _rim_rim(s, t, max_multiplicity, max_doubled)
        if "hub-hub" in kinds:
            yield from _hub_hub(s, t, max_multiplicity, hh)


# -- census --------------------------------------------------------------------

def _vertex_in_splice(inst: WheelSpliceInstance, side: str, x: int) -> int:
    if side == "G":
        return x - (x > inst.u)
    return inst.s + (x - (x > inst.v))


def nonplanarity_witness(inst: WheelSpliceInstance) -> KuratowskiWitness | None:
    """K3,3 with colour class ``{u_1, u_r, hub of the rim-side wheel}``."""
    ends = _rim_attachment_ends(inst)
    if ends is None:
        return None
    a, b, _ = ends
    if inst.u == inst.s:
        side = (_vertex_in_splice(inst, "G", a), _vertex_in_splice(inst, "G", b),
                _vertex_in_splice(inst, "H", inst.t))
    else:
        side = (_vertex_in_splice(inst, "H", a), _vertex_in_splice(inst, "H", b),
                _vertex_in_splice(inst, "G", inst.s))
    if len(set(side)) < 3:
        return None
    return k33_with_class(inst.graph, side)


@dataclass(frozen=True)
class InstanceResult:
    index: int
    brick: bool
    predicate: bool | None
    wheel_like: bool | None
    planar: bool | None
    witness_ok: bool | None
    canonical: str


_memo: dict[tuple, tuple[bool, bool | None, bool | None]] = {}


def evaluate_instance(args: tuple[int, WheelSpliceInstance]) -> InstanceResult:
    index, inst = args
    W = inst.graph
    key = canonical_form(W)
    if key not in _memo:
        brick = is_brick(W)
        wl = is_wheel_like(W) if brick else None
        planar = is_planar(W) if wl else None
        _memo[key] = (brick, wl, planar)
    brick, wl, planar = _memo[key]
    canon = emit_sparse6(canonical_graph(W))
    if not brick:
        return InstanceResult(index, False, None, None, None, None, canon)
    pred = wheel_splice_predicate(inst)
    witness_ok = None
    if wl:
        w = nonplanarity_witness(inst)
        witness_ok = w is not None and validate_witness(W, w)
    return InstanceResult(index, True, pred, wl, planar, witness_ok, canon)


@dataclass
class WheelSpliceVerdict:
    instances: int = 0
    bricks: int = 0
    wheel_like: int = 0
    distinct_bricks: int = 0
    disagreements: list[dict] = field(default_factory=list)
    planar_wheel_like: list[dict] = field(default_factory=list)
    missing_witness: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.disagreements or self.planar_wheel_like or self.missing_witness)

    def summary(self) -> dict:
        return {
            "instances": self.instances,
            "bricks": self.bricks,
            "distinct_bricks": self.distinct_bricks,
            "wheel_like": self.wheel_like,
            "disagreements": self.disagreements,
            "planar_wheel_like": self.planar_wheel_like,
            "missing_witness": self.missing_witness,
            "passed": self.passed,
        }


def wheel_splice_census(
    sizes=(3, 5, 7),
    max_multiplicity: int = 2,
    max_doubled: int | None = None,
    hub_hub_max_doubled: int | None = 2,
    workers: int = 1,
) -> WheelSpliceVerdict:
    """Closed form against brute force on the whole bounded family.

    Every wheel-like splice must also be nonplanar, by the planarity test
    and by an explicit K3,3 built around the two hub-side rim attachments.
    """
    insts = list(wheel_splice_instances(sizes, max_multiplicity, max_doubled, hub_hub_max_doubled))
    verdict = WheelSpliceVerdict(instances=len(insts))
    distinct = set()
    for res in parallel_map(evaluate_instance, list(enumerate(insts)), workers):
        if not res.brick:
            continue
        inst = insts[res.index]
        verdict.bricks += 1
        distinct.add(res.canonical)
        verdict.wheel_like += bool(res.wheel_like)
        record = dict(inst.describe(), graph=res.canonical)
        if res.predicate != res.wheel_like:
            verdict.disagreements.append(dict(record, predicate=res.predicate, wheel_like=res.wheel_like))
        if res.wheel_like and res.planar:
            verdict.planar_wheel_like.append(record)
        if res.wheel_like and not res.witness_ok:
            verdict.missing_witness.append(record)
    verdict.distinct_bricks = len(distinct)
    return verdict


wiwj_census = wheel_splice_census
