"""Oriented knot diagrams.

A diagram is stored the way one reads it off a picture: a list of crossings
``(over, under_in, under_out, sign)`` over arc ids, plus the traversal, which
lists every arc once in travel order together with the crossings that arc
passes over.  From that data the signed Gauss sequence, the PD code and the
planar face structure are all derived.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "DiagramError",
    "ParseError",
    "ValidationError",
    "LinkError",
    "Crossing",
    "OrientedDiagram",
    "parse_native",
    "emit_native",
    "parse_pd",
    "emit_pd",
    "crossing_sign",
    "writhe",
    "mirror",
    "canonical_key",
    "default_names",
]


class DiagramError(ValueError):
    """Base class for everything that can go wrong with diagram input."""


class ParseError(DiagramError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(DiagramError):
    pass


class LinkError(ValidationError):
    """Raised when the input describes more than one closed component."""


@dataclass(frozen=True)
class Crossing:
    over: int
    under_in: int
    under_out: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValidationError(f"crossing sign must be +1 or -1, got {self.sign!r}")


def default_names(n: int) -> tuple[str, ...]:
    letters = string.ascii_lowercase
    if n <= len(letters):
        return tuple(letters[:n])
    return tuple(f"x{i}" for i in range(n))


_NAME_RE = re.compile(r"[A-Za-z][0-9]*\Z")


@dataclass(frozen=True)
class OrientedDiagram:
    """Immutable oriented single-component knot diagram.

    ``traversal[t] = (arc, overs)`` means arc ``arc`` is the t-th arc met when
    walking along the knot; it passes over the crossings ``overs`` in that
    order and then ends by passing under the crossing whose ``under_in`` is
    ``arc``.  The next traversal entry is that crossing's ``under_out``.
    """

    crossings: tuple[Crossing, ...]
    traversal: tuple[tuple[int, tuple[int, ...]], ...]
    names: tuple[str, ...] = ()
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        crossings = tuple(self.crossings)
        traversal = tuple((int(a), tuple(int(k) for k in ks)) for a, ks in self.traversal)
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "traversal", traversal)
        n_arcs = max(len(crossings), 1)
        names = tuple(self.names) if self.names else default_names(n_arcs)
        object.__setattr__(self, "names", names)
        _validate(self)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_arcs(self) -> int:
        return max(len(self.crossings), 1)

    @property
    def is_unknot_diagram(self) -> bool:
        return not self.crossings

    def passages(self) -> list[tuple[int, bool]]:
        """Signed Gauss sequence as ``(crossing, is_over)`` in travel order.

        Starts at the beginning of ``traversal[0]``.
        """
        seq = []
        for arc, overs in self.traversal:
            seq.extend((k, True) for k in overs)
            if self.crossings:
                seq.append((self._end_crossing()[arc], False))
        return seq

    def _end_crossing(self) -> dict[int, int]:
        # arc -> crossing at which it passes under
        cached = self._cache.get("end")
        if cached is None:
            cached = {c.under_in: k for k, c in enumerate(self.crossings)}
            self._cache["end"] = cached
        return cached

    def signs(self) -> tuple[int, ...]:
        return tuple(c.sign for c in self.crossings)

    def pd_slots(self) -> list[tuple[int, int, int, int]]:
        """Counterclockwise edge slots ``(i, j, k, l)`` per crossing.

        Edges are numbered 0..2c-1 along the traversal; edge t runs from
        passage t to passage t+1.  ``i`` is the incoming under edge.
        """
        cached = self._cache.get("slots")
        if cached is not None:
            return cached
        seq = self.passages()
        m = len(seq)
        under_pos = {}
        over_pos = {}
        for t, (k, is_over) in enumerate(seq):
            (over_pos if is_over else under_pos)[k] = t
        slots = []
        for k, c in enumerate(self.crossings):
            u, o = under_pos[k], over_pos[k]
            i, kk = (u - 1) % m, u
            o_in, o_out = (o - 1) % m, o
            if c.sign > 0:
                slots.append((i, o_out, kk, o_in))
            else:
                slots.append((i, o_in, kk, o_out))
        self._cache["slots"] = slots
        return slots

    def faces(self) -> list[list[tuple[int, int]]]:
        """Faces of the planar map, each as a cyclic list of darts.

        A dart ``(crossing, slot)`` means: leave ``crossing`` through ``slot``
        along that slot's edge.  Faces are traced with the face on the left.
        The 0-crossing unknot has two faces and no darts; it returns two
        empty lists.
        """
        if not self.crossings:
            return [[], []]
        cached = self._cache.get("faces")
        if cached is not None:
            return cached
        slots = self.pd_slots()
        # edge -> the two (crossing, slot) ends
        ends: dict[int, list[tuple[int, int]]] = {}
        for k, s in enumerate(slots):
            for p, e in enumerate(s):
                ends.setdefault(e, []).append((k, p))
        seen = set()
        faces = []
        for k in range(len(slots)):
            for p in range(4):
                if (k, p) in seen:
                    continue
                face = []
                dart = (k, p)
                while dart not in seen:
                    seen.add(dart)
                    face.append(dart)
                    x, q = dart
                    e = slots[x][q]
                    a, b = ends[e]
                    other = b if a == (x, q) else a
                    if a == b:  # cannot happen for valid slots; guard against loops
                        other = a
                    y, r = other
                    dart = (y, (r - 1) % 4)
                faces.append(face)
        self._cache["faces"] = faces
        return faces

    def is_planar(self) -> bool:
        if not self.crossings:
            return True
        return len(self.faces()) == len(self.crossings) + 2

    def arc_name(self, arc: int) -> str:
        return self.names[arc]


def _validate(d: OrientedDiagram) -> None:
    c = len(d.crossings)
    if c == 0:
        if d.traversal not in ((), ((0, ()),)):
            raise ValidationError("a diagram without crossings has exactly one arc, id 0")
        object.__setattr__(d, "traversal", ((0, ()),))
        if len(d.names) != 1:
            raise ValidationError("the 0-crossing unknot has exactly one arc name")
        return
    arcs = range(c)
    if len(d.names) != c:
        raise ValidationError(f"expected {c} arc names, got {len(d.names)}")
    if len(set(d.names)) != c:
        raise ValidationError("arc names must be distinct")
    for name in d.names:
        if not _NAME_RE.match(name):
            raise ValidationError(f"arc name {name!r} must be a letter followed by digits")
    for k, x in enumerate(d.crossings):
        for role, a in (("over", x.over), ("in", x.under_in), ("out", x.under_out)):
            if not 0 <= a < c:
                raise ValidationError(f"crossing {k}: {role} arc {a} out of range 0..{c - 1}")
    ins = [x.under_in for x in d.crossings]
    outs = [x.under_out for x in d.crossings]
    for label, used in (("in", ins), ("out", outs)):
        for a in arcs:
            n = used.count(a)
            if n != 1:
                raise ValidationError(f"arc {a} appears {n} times as '{label}' (must be exactly once)")
    if c > 1:
        for k, x in enumerate(d.crossings):
            if x.under_in == x.under_out:
                raise ValidationError(f"crossing {k}: in == out is only allowed for a single kink")
    # single component: follow under_out chains
    nxt = {x.under_in: x.under_out for x in d.crossings}
    a, seen = d.traversal[0][0] if d.traversal else 0, []
    start = a
    while True:
        seen.append(a)
        a = nxt[a]
        if a == start:
            break
    if len(seen) != c:
        raise LinkError(
            f"arcs close up after {len(seen)} of {c} arcs; multi-component links are not supported"
        )
    if len(d.traversal) != c:
        raise ValidationError(f"traversal lists {len(d.traversal)} arcs, expected {c}")
    trav_arcs = [a for a, _ in d.traversal]
    if trav_arcs != seen:
        raise ValidationError(
            f"traversal order {trav_arcs} does not follow the crossings (expected {seen})"
        )
    over_count = [0] * c
    for a, overs in d.traversal:
        for k in overs:
            if not 0 <= k < c:
                raise ValidationError(f"arc {a} passes over unknown crossing {k}")
            if d.crossings[k].over != a:
                raise ValidationError(
                    f"arc {a} listed as passing over crossing {k}, whose over arc is {d.crossings[k].over}"
                )
            over_count[k] += 1
    for k, n in enumerate(over_count):
        if n != 1:
            raise ValidationError(f"crossing {k} is passed over {n} times in the traversal")
    if not d.is_planar():
        raise ValidationError(
            "crossing signs and passage order do not describe a planar diagram"
        )


# --------------------------------------------------------------------------
# construction helpers


def from_gauss(
    seq: Sequence[tuple[int, bool]],
    signs: Sequence[int],
    names: Sequence[str] | None = None,
) -> OrientedDiagram:
    """Build a diagram from a signed Gauss sequence.

    ``seq`` lists ``(crossing, is_over)`` passages in travel order.  Arcs are
    numbered in travel order, arc 0 being the one that starts right after the
    last under passage of ``seq``.  Crossing indices are kept.
    """
    if not seq:
        return OrientedDiagram((), (), tuple(names) if names else ())
    n = len(signs)
    if len(seq) != 2 * n:
        raise ValidationError(f"{n} crossings need {2 * n} passages, got {len(seq)}")
    last_under = max(t for t, (_, o) in enumerate(seq) if not o)
    seq = list(seq[last_under + 1 :]) + list(seq[: last_under + 1])
    traversal = []
    overs: list[int] = []
    ends = []  # (crossing, arc)
    arc = 0
    for k, is_over in seq:
        if is_over:
            overs.append(k)
        else:
            traversal.append((arc, tuple(overs)))
            ends.append((k, arc))
            overs = []
            arc += 1
    over_arc = {}
    for a, ks in traversal:
        for k in ks:
            over_arc[k] = a
    crossing_in = {k: a for k, a in ends}
    crossings = []
    for k in range(n):
        if k not in crossing_in or k not in over_arc:
            raise ValidationError(f"crossing {k} must be passed once over and once under")
        a_in = crossing_in[k]
        crossings.append(Crossing(over_arc[k], a_in, (a_in + 1) % n, signs[k]))
    return OrientedDiagram(tuple(crossings), tuple(traversal), tuple(names) if names else ())


def relabel(d: OrientedDiagram, names: Sequence[str]) -> OrientedDiagram:
    return OrientedDiagram(d.crossings, d.traversal, tuple(names))


def crossing_sign(d: OrientedDiagram, k: int) -> int:
    if not 0 <= k < len(d.crossings):
        raise IndexError(f"crossing index {k} out of range for {len(d.crossings)} crossings")
    return d.crossings[k].sign


def writhe(d: OrientedDiagram) -> int:
    return sum(c.sign for c in d.crossings)


def mirror(d: OrientedDiagram) -> OrientedDiagram:
    """Reflect the diagram in a line of the plane: every sign flips."""
    crossings = tuple(Crossing(c.over, c.under_in, c.under_out, -c.sign) for c in d.crossings)
    return OrientedDiagram(crossings, d.traversal, d.names)


def canonical_key(d: OrientedDiagram) -> tuple:
    """Relabeling-invariant key: equal keys mean the same diagram.

    Minimises over every starting passage the signed Gauss sequence with
    crossings renumbered by first appearance.
    """
    seq = d.passages()
    if not seq:
        return ()
    signs = d.signs()
    best = None
    m = len(seq)
    for s in range(m):
        order: dict[int, int] = {}
        word = []
        for t in range(m):
            k, over = seq[(s + t) % m]
            if k not in order:
                order[k] = len(order)
            word.append((order[k], over, signs[k]))
        key = tuple(word)
        if best is None or key < best:
            best = key
    return best


# --------------------------------------------------------------------------
# native text format

_HEADER_RE = re.compile(r"knot\s+v(\d+)\Z")
_CROSSING_RE = re.compile(
    r"X\s*(\d+)\s*:\s*over\s*=\s*(\d+)\s+in\s*=\s*(\d+)\s+out\s*=\s*(\d+)\s+sign\s*=\s*([+-])\Z"
)
_TRAV_ITEM_RE = re.compile(r"\s*(\d+)\s*(?:\[([\d\s,]*)\])?\s*")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_native(text: str) -> OrientedDiagram:
    """Parse the native crossing-list format.

    Grammar (one statement per line, ``#`` starts a comment)::

        knot v1
        names: a, b, c                     # optional
        X 0: over=2 in=0 out=1 sign=+
        ...
        traverse: 0[1], 1[2], 2[0]

    The bracketed crossing lists on ``traverse`` give the crossings each arc
    passes over, in travel order.  When every bracket is omitted (or the
    whole ``traverse`` line is), overpasses are ordered by crossing index.
    The single word ``unknot`` is accepted as the 0-crossing diagram.
    """
    lines = [(n, _strip(raw)) for n, raw in enumerate(text.splitlines(), start=1)]
    lines = [(n, s) for n, s in lines if s]
    if not lines:
        raise ParseError("empty input")
    if len(lines) == 1 and lines[0][1].lower() == "unknot":
        return OrientedDiagram((), ())
    n0, head = lines[0]
    if not _HEADER_RE.match(" ".join(head.split())):
        raise ParseError(f"expected header 'knot v1', got {head!r}", n0)
    crossings: dict[int, Crossing] = {}
    crossing_line: dict[int, int] = {}
    traversal_spec = None
    trav_line = None
    names = None
    for n, s in lines[1:]:
        if s.lower() == "unknot":
            continue
        if s.startswith("X"):
            m = _CROSSING_RE.match(" ".join(s.split()))
            if not m:
                raise ParseError(f"malformed crossing line {s!r}", n)
            k, over, a_in, a_out = (int(g) for g in m.groups()[:4])
            if k in crossings:
                raise ParseError(f"crossing {k} defined twice", n)
            sign = 1 if m.group(5) == "+" else -1
            crossings[k] = Crossing(over, a_in, a_out, sign)
            crossing_line[k] = n
        elif s.startswith("traverse"):
            _, _, body = s.partition(":")
            if not _:
                raise ParseError("expected 'traverse: ...'", n)
            traversal_spec = _parse_traverse(body, n)
            trav_line = n
        elif s.startswith("names"):
            _, sep, body = s.partition(":")
            if not sep:
                raise ParseError("expected 'names: ...'", n)
            names = tuple(t for t in re.split(r"[\s,]+", body.strip()) if t)
            for t in names:
                if not _NAME_RE.match(t):
                    raise ParseError(f"bad arc name {t!r}", n)
        else:
            raise ParseError(f"unrecognised statement {s!r}", n)
    c = len(crossings)
    if sorted(crossings) != list(range(c)):
        raise ParseError(f"crossing indices must be 0..{c - 1}, got {sorted(crossings)}")
    xs = tuple(crossings[k] for k in range(c))
    if c == 0:
        return OrientedDiagram((), (), names or ())
    for k, x in enumerate(xs):
        for a in (x.over, x.under_in, x.under_out):
            if a >= c:
                raise ValidationError(
                    f"line {crossing_line[k]}: arc id {a} out of range 0..{c - 1}"
                )
    traversal = _complete_traversal(xs, traversal_spec, trav_line)
    try:
        return OrientedDiagram(xs, traversal, names or ())
    except ValidationError as exc:
        if trav_line is not None and "traversal" in str(exc):
            raise ValidationError(f"line {trav_line}: {exc}") from None
        raise


def _parse_traverse(body: str, line: int):
    items = []
    pos = 0
    body = body.strip()
    while pos < len(body):
        m = _TRAV_ITEM_RE.match(body, pos)
        if not m or m.end() == pos:
            raise ParseError(f"malformed traverse entry near {body[pos:]!r}", line)
        arc = int(m.group(1))
        overs = None
        if m.group(2) is not None:
            overs = tuple(int(t) for t in re.split(r"[\s,]+", m.group(2).strip()) if t)
        items.append((arc, overs))
        pos = m.end()
        if pos < len(body):
            if body[pos] != ",":
                raise ParseError(f"expected ',' in traverse near {body[pos:]!r}", line)
            pos += 1
    return items


def _complete_traversal(xs, spec, line):
    c = len(xs)
    nxt = {}
    for x in xs:
        if x.under_in in nxt:
            raise ValidationError(f"arc {x.under_in} appears more than once as 'in'")
        nxt[x.under_in] = x.under_out
    if spec is None:
        order = [0]
        while len(order) <= c:
            a = nxt.get(order[-1])
            if a is None or a == order[0]:
                break
            order.append(a)
        spec = [(a, None) for a in order]
    if all(o is None for _, o in spec):
        by_arc: dict[int, list[int]] = {}
        for k, x in enumerate(xs):
            by_arc.setdefault(x.over, []).append(k)
        return tuple((a, tuple(by_arc.get(a, ()))) for a, _ in spec)
    if any(o is None for _, o in spec):
        raise ParseError("either every traverse entry lists its overpasses or none does", line)
    return tuple((a, o) for a, o in spec)


def emit_native(d: OrientedDiagram) -> str:
    if not d.crossings:
        return "knot v1\n# 0-crossing unknot\n"
    out = ["knot v1"]
    if d.names != default_names(d.n_arcs):
        out.append("names: " + ", ".join(d.names))
    for k, x in enumerate(d.crossings):
        sign = "+" if x.sign > 0 else "-"
        out.append(f"X {k}: over={x.over} in={x.under_in} out={x.under_out} sign={sign}")
    trav = ", ".join(f"{a}[{','.join(str(k) for k in ks)}]" for a, ks in d.traversal)
    out.append(f"traverse: {trav}")
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# PD codes

_PD_TUPLE_RE = re.compile(r"X\s*[\[(]([^\])]*)[\])]")


def parse_pd(text: str, mirror_image: bool = False) -> OrientedDiagram:
    """Parse ``X(i,j,k,l)`` tuples (edge labels 1..2c, counterclockwise,
    ``i`` the incoming under edge).

    Signs follow the right-hand rule for the counterclockwise slot order.
    ``mirror_image`` flips every sign, for tables drawn with the opposite
    chirality.
    """
    body = text.strip()
    if body.upper().startswith("PD"):
        body = body[2:].strip()
        if body[:1] in "[(" and body[-1:] in "])":
            body = body[1:-1]
    tuples = []
    pos = 0
    for m in _PD_TUPLE_RE.finditer(body):
        gap = body[pos : m.start()].strip(" ,\n\t")
        if gap:
            raise ParseError(f"unexpected text {gap!r} in PD code")
        pos = m.end()
        parts = [p for p in re.split(r"[\s,]+", m.group(1).strip()) if p]
        if len(parts) != 4:
            raise ParseError(f"PD tuple {m.group(0)!r} must have 4 entries, has {len(parts)}")
        try:
            tuples.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ParseError(f"non-integer label in {m.group(0)!r}") from None
    tail = body[pos:].strip(" ,\n\t")
    if tail:
        raise ParseError(f"unexpected text {tail!r} in PD code")
    d = from_pd_tuples(tuples)
    return mirror(d) if mirror_image else d


def from_pd_tuples(tuples: Sequence[Sequence[int]]) -> OrientedDiagram:
    c = len(tuples)
    if c == 0:
        return OrientedDiagram((), ())
    m = 2 * c
    count: dict[int, int] = {}
    for t in tuples:
        if len(t) != 4:
            raise ParseError(f"PD tuple {tuple(t)} must have 4 entries")
        for e in t:
            if not 1 <= e <= m:
                raise ValidationError(f"edge label {e} out of range 1..{m}")
            count[e] = count.get(e, 0) + 1
    for e in range(1, m + 1):
        if count.get(e, 0) != 2:
            raise ValidationError(
                f"edge label {e} used {count.get(e, 0)} times (expected 2; tuple count must be c)"
            )
    # role of each slot: "h" if the edge there ends at the crossing, "t" if it starts there
    occ: dict[int, list[tuple[int, int]]] = {}
    for x, t in enumerate(tuples):
        for p in range(4):
            occ.setdefault(t[p], []).append((x, p))
    role: dict[tuple[int, int], str] = {}
    for x in range(c):
        role[(x, 0)] = "h"
        role[(x, 2)] = "t"
    flip = {"h": "t", "t": "h"}
    changed = True
    while changed:
        changed = False
        pairs = [tuple(v) for v in occ.values()]
        pairs += [((x, 1), (x, 3)) for x in range(c)]
        for a, b in pairs:
            ra, rb = role.get(a), role.get(b)
            if ra is not None and ra == rb:
                raise ValidationError(f"PD code cannot be oriented consistently (slot {a} vs {b})")
            if ra is not None and rb is None:
                role[b] = flip[ra]
                changed = True
            elif rb is not None and ra is None:
                role[a] = flip[rb]
                changed = True
    if len(role) != 4 * c:
        raise ValidationError("could not orient the PD code")
    head = {tuples[x][p]: (x, p) for (x, p), r in role.items() if r == "h"}
    tail = {tuples[x][p]: (x, p) for (x, p), r in role.items() if r == "t"}
    signs = []
    for x, t in enumerate(tuples):
        # over enters at l and leaves at j: positive
        signs.append(1 if tail[t[1]] == (x, 1) else -1)
    # walk the knot starting on edge 1
    seq = []
    e = 1
    for _ in range(m):
        x, p = head[e]
        is_over = p in (1, 3)
        seq.append((x, is_over))
        out_slot = 2 if p == 0 else (1 if p == 3 else 3)
        e = tuples[x][out_slot]
        if tail[e] != (x, out_slot):
            raise ValidationError("inconsistent PD orientation")
        if e == 1:
            break
    if len(seq) != m or e != 1:
        raise LinkError(
            f"PD code closes up after {len(seq)} of {m} edges; multi-component links are not supported"
        )
    return from_gauss(seq, signs)


def emit_pd(d: OrientedDiagram) -> str:
    """PD code with edges labelled 1..2c along the traversal."""
    parts = []
    for s in d.pd_slots():
        parts.append("X({})".format(",".join(str(e + 1) for e in s)))
    return ", ".join(parts)


def diagram_from_crossings(
    crossings: Iterable[tuple[int, int, int, int]],
    traversal: Iterable[tuple[int, Iterable[int]]],
    names: Sequence[str] = (),
) -> OrientedDiagram:
    xs = tuple(Crossing(*c) for c in crossings)
    tr = tuple((a, tuple(ks)) for a, ks in traversal)
    return OrientedDiagram(xs, tr, tuple(names))
