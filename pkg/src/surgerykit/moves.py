"""Reidemeister moves on oriented diagrams.

Moves act on the signed Gauss sequence.  Sites are located through the
planar faces of the diagram, so every move produces a realizable diagram;
the planarity check in :class:`OrientedDiagram` guards each result.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .diagram import DiagramError, OrientedDiagram, from_gauss

__all__ = [
    "Move",
    "InapplicableMove",
    "R1Site",
    "R1RemoveSite",
    "R2Site",
    "R2RemoveSite",
    "R3Site",
    "apply_reidemeister",
    "sites",
]


class Move(str, Enum):
    R1_POS = "R1+"
    R1_NEG = "R1-"
    R1_REMOVE = "R1^-1"
    R2 = "R2"
    R2_REMOVE = "R2^-1"
    R3 = "R3"


class InapplicableMove(DiagramError):
    pass


@dataclass(frozen=True)
class R1Site:
    """Add a curl on edge ``edge`` (the segment after passage ``edge``)."""

    edge: int
    over_first: bool = True


@dataclass(frozen=True)
class R1RemoveSite:
    crossing: int


@dataclass(frozen=True)
class R2Site:
    """Push the edge of dart ``first`` across the edge of dart ``second``.

    Both darts are positions in ``d.faces()[face]``.
    """

    face: int
    first: int
    second: int
    first_over: bool = True


@dataclass(frozen=True)
class R2RemoveSite:
    a: int
    b: int


@dataclass(frozen=True)
class R3Site:
    face: int


def _out_slot(d: OrientedDiagram, x: int, q: int) -> bool:
    # does the strand leave crossing x through slot q?
    if q == 2:
        return True
    if q == 0:
        return False
    positive = d.crossings[x].sign > 0
    return (q == 1) == positive


def _rebuild(seq, signs) -> OrientedDiagram:
    # renumber crossings densely in order of first appearance
    order: dict[int, int] = {}
    for k, _ in seq:
        order.setdefault(k, len(order))
    new_seq = [(order[k], o) for k, o in seq]
    new_signs = [0] * len(order)
    for k, j in order.items():
        new_signs[j] = signs[k]
    try:
        return from_gauss(new_seq, new_signs)
    except DiagramError as exc:
        raise InapplicableMove(f"move produced an invalid diagram: {exc}") from None


def _r1(d: OrientedDiagram, sign: int, site: R1Site) -> OrientedDiagram:
    seq = d.passages()
    signs = list(d.signs())
    n = len(signs)
    m = len(seq)
    if m == 0:
        if site.edge != 0:
            raise InapplicableMove("the unknot diagram has a single edge, 0")
        pair = [(0, site.over_first), (0, not site.over_first)]
        return _rebuild(pair, [sign])
    if not 0 <= site.edge < m:
        raise InapplicableMove(f"edge {site.edge} out of range 0..{m - 1}")
    pair = [(n, site.over_first), (n, not site.over_first)]
    new = seq[: site.edge + 1] + pair + seq[site.edge + 1 :]
    return _rebuild(new, signs + [sign])


def _adjacent_positions(seq, k):
    pos = [t for t, (x, _) in enumerate(seq) if x == k]
    return pos


def _r1_remove(d: OrientedDiagram, site: R1RemoveSite) -> OrientedDiagram:
    seq = d.passages()
    m = len(seq)
    k = site.crossing
    if not 0 <= k < d.n_crossings:
        raise InapplicableMove(f"crossing {k} out of range")
    p, q = _adjacent_positions(seq, k)
    if not ((q - p) % m == 1 or (p - q) % m == 1):
        raise InapplicableMove(f"crossing {k} is not a curl")
    new = [s for s in seq if s[0] != k]
    return _rebuild(new, list(d.signs()))


def _r2(d: OrientedDiagram, site: R2Site) -> OrientedDiagram:
    faces = d.faces()
    if not d.crossings:
        raise InapplicableMove("R2 needs two distinct edges")
    if not 0 <= site.face < len(faces):
        raise InapplicableMove(f"face {site.face} out of range")
    face = faces[site.face]
    if not (0 <= site.first < len(face) and 0 <= site.second < len(face)):
        raise InapplicableMove("dart position out of range")
    slots = d.pd_slots()
    x1, q1 = face[site.first]
    x2, q2 = face[site.second]
    e1, e2 = slots[x1][q1], slots[x2][q2]
    if e1 == e2:
        raise InapplicableMove("R2 needs two distinct edges")
    s1 = 1 if _out_slot(d, x1, q1) else -1
    s2 = 1 if _out_slot(d, x2, q2) else -1
    o = 1 if site.first_over else -1
    seq = d.passages()
    signs = list(d.signs())
    n = len(signs)
    na, nb = n, n + 1
    signs += [s2 * o, -s2 * o]
    strand1 = [(na, site.first_over), (nb, site.first_over)]
    pair2 = [na, nb] if s1 == -s2 else [nb, na]
    strand2 = [(k, not site.first_over) for k in pair2]
    new = []
    for t, p in enumerate(seq):
        new.append(p)
        if t == e1:
            new.extend(strand1)
        if t == e2:
            new.extend(strand2)
    return _rebuild(new, signs)


def _is_bigon(d: OrientedDiagram, a: int, b: int) -> bool:
    for face in d.faces():
        if len(face) == 2 and {face[0][0], face[1][0]} == {a, b}:
            return True
    return False


def _r2_remove(d: OrientedDiagram, site: R2RemoveSite) -> OrientedDiagram:
    a, b = site.a, site.b
    n = d.n_crossings
    if a == b or not (0 <= a < n and 0 <= b < n):
        raise InapplicableMove("R2 removal needs two distinct crossings")
    if d.crossings[a].sign == d.crossings[b].sign:
        raise InapplicableMove("crossings of an R2 bigon have opposite signs")
    seq = d.passages()
    m = len(seq)
    pos = {(k, o): t for t, (k, o) in enumerate(seq)}
    for over in (True, False):
        if abs(pos[(a, over)] - pos[(b, over)]) % m not in (1, m - 1):
            raise InapplicableMove(f"crossings {a} and {b} are not adjacent along both strands")
    if not _is_bigon(d, a, b):
        raise InapplicableMove(f"crossings {a} and {b} do not bound a bigon")
    new = [s for s in seq if s[0] not in (a, b)]
    return _rebuild(new, list(d.signs()))


def _triangle_sides(d: OrientedDiagram, face):
    # each side is a pair of consecutive positions (t, t+1) in the Gauss sequence
    slots = d.pd_slots()
    m = 2 * d.n_crossings
    return [slots[x][q] for x, q in face], m


def _r3(d: OrientedDiagram, site: R3Site) -> OrientedDiagram:
    faces = d.faces()
    if not 0 <= site.face < len(faces):
        raise InapplicableMove(f"face {site.face} out of range")
    face = faces[site.face]
    if len(face) != 3 or len({x for x, _ in face}) != 3:
        raise InapplicableMove(f"face {site.face} is not a triangle")
    edges, m = _triangle_sides(d, face)
    seq = d.passages()
    kinds = []
    for e in edges:
        p, q = seq[e], seq[(e + 1) % m]
        kinds.append((p[1], q[1]))
    if kinds.count((True, True)) != 1 or kinds.count((False, False)) != 1:
        raise InapplicableMove(f"triangle {site.face} is alternating; R3 does not apply")
    new = list(seq)
    for e in edges:
        t, u = e, (e + 1) % m
        new[t], new[u] = seq[u], seq[t]
    return _rebuild(new, list(d.signs()))


def apply_reidemeister(d: OrientedDiagram, move: Move | str, site) -> OrientedDiagram:
    move = Move(move)
    if move in (Move.R1_POS, Move.R1_NEG):
        if not isinstance(site, R1Site):
            raise InapplicableMove("R1 needs an R1Site")
        return _r1(d, 1 if move is Move.R1_POS else -1, site)
    if move is Move.R1_REMOVE:
        return _r1_remove(d, site)
    if move is Move.R2:
        if not isinstance(site, R2Site):
            raise InapplicableMove("R2 needs an R2Site")
        return _r2(d, site)
    if move is Move.R2_REMOVE:
        return _r2_remove(d, site)
    if move is Move.R3:
        return _r3(d, site)
    raise InapplicableMove(f"unknown move {move!r}")


def sites(d: OrientedDiagram, move: Move | str) -> list:
    """Every site at which ``move`` applies, in a fixed order."""
    move = Move(move)
    if move in (Move.R1_POS, Move.R1_NEG):
        m = max(2 * d.n_crossings, 1)
        return [R1Site(e, o) for e in range(m) for o in (True, False)]
    if move is Move.R1_REMOVE:
        seq = d.passages()
        m = len(seq)
        out = []
        for k in range(d.n_crossings):
            p, q = _adjacent_positions(seq, k)
            if (q - p) % m in (1, m - 1):
                out.append(R1RemoveSite(k))
        return out
    if move is Move.R2:
        if not d.crossings:
            return []
        slots = d.pd_slots()
        out = []
        for f, face in enumerate(d.faces()):
            for i in range(len(face)):
                for j in range(len(face)):
                    if i == j:
                        continue
                    e1 = slots[face[i][0]][face[i][1]]
                    e2 = slots[face[j][0]][face[j][1]]
                    if e1 == e2:
                        continue
                    for over in (True, False):
                        out.append(R2Site(f, i, j, over))
        return out
    if move is Move.R2_REMOVE:
        out = []
        for face in d.faces():
            if len(face) == 2:
                ends = sorted({face[0][0], face[1][0]})
                if len(ends) != 2:
                    continue
                a, b = ends
                try:
                    _r2_remove(d, R2RemoveSite(a, b))
                except InapplicableMove:
                    continue
                if R2RemoveSite(a, b) not in out:
                    out.append(R2RemoveSite(a, b))
        return out
    if move is Move.R3:
        out = []
        seq = d.passages()
        for f, face in enumerate(d.faces()):
            if len(face) != 3 or len({x for x, _ in face}) != 3:
                continue
            edges, m = _triangle_sides(d, face)
            kinds = [(seq[e][1], seq[(e + 1) % m][1]) for e in edges]
            if kinds.count((True, True)) == 1 and kinds.count((False, False)) == 1:
                out.append(R3Site(f))
        return out
    raise InapplicableMove(f"unknown move {move!r}")
