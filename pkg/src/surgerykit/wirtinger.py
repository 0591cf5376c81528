"""Knot group presentations and blackboard longitudes read off a diagram."""

from __future__ import annotations

from .diagram import OrientedDiagram
from .words import GroupWord, Presentation

__all__ = ["wirtinger_presentation", "longitude_word", "exponent_sum", "crossing_relator"]


def crossing_relator(over: int, under_in: int, under_out: int, sign: int) -> GroupWord:
    """Relator for one crossing, as a word equal to the identity.

    Positive crossings give ``b = c^-1 a c``, negative ones ``b = c a c^-1``,
    where ``a`` is the incoming under arc, ``b`` the outgoing one and ``c``
    the over arc.
    """
    a, b, c = under_in, under_out, over
    if sign > 0:
        letters = ((b, -1), (c, -1), (a, 1), (c, 1))
    else:
        letters = ((b, -1), (c, 1), (a, 1), (c, -1))
    return GroupWord(letters)


def wirtinger_presentation(d: OrientedDiagram) -> Presentation:
    relators = tuple(
        crossing_relator(x.over, x.under_in, x.under_out, x.sign) for x in d.crossings
    )
    return Presentation(d.n_arcs, d.names, relators)


def longitude_word(d: OrientedDiagram, start_arc: int = 0) -> GroupWord:
    """Blackboard longitude: walk once around from the start of ``start_arc``
    and record the over arc at each underpass, with the crossing sign as
    exponent.
    """
    if not d.crossings:
        if start_arc != 0:
            raise ValueError("the unknot diagram has only arc 0")
        return GroupWord()
    order = [a for a, _ in d.traversal]
    if start_arc not in order:
        raise ValueError(f"no arc {start_arc}")
    i = order.index(start_arc)
    end = {x.under_in: x for x in d.crossings}
    letters = []
    for a in order[i:] + order[:i]:
        x = end[a]
        letters.append((x.over, x.sign))
    return GroupWord(tuple(letters))


def exponent_sum(w: GroupWord) -> int:
    return w.exponent_sum()
