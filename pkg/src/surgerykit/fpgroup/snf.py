"""Smith normal form over the integers, exact arithmetic throughout."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..words import Presentation

__all__ = ["AbelianInvariants", "smith_diagonal", "invariant_factors", "relation_matrix", "abelianization"]


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank + Z/d_1 + ... with d_1 | d_2 | ..., every d_i > 1."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        if any(d <= 1 for d in torsion):
            raise ValueError(f"torsion coefficients must be > 1: {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"torsion coefficients must form a divisibility chain: {torsion}")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "torsion", torsion)

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form, as nonnegative ints in
    divisibility order.  The length of the result is the rank.
    """
    a = [[int(v) for v in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    diag = []
    t = 0
    while t < min(m, n):
        pivot = _smallest_nonzero(a, t, t)
        if pivot is None:
            break
        _move_to(a, pivot, t)
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, m):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        done = False
            if not done:
                # a remainder smaller than the pivot survives: pivot on it
                best = None
                for i in range(t + 1, m):
                    if a[i][t] and (best is None or abs(a[i][t]) < abs(a[best[0]][best[1]])):
                        best = (i, t)
                for j in range(t + 1, n):
                    if a[t][j] and (best is None or abs(a[t][j]) < abs(a[best[0]][best[1]])):
                        best = (t, j)
                _move_to(a, best, t)
                continue
            bad = _non_multiple(a, t, p)
            if bad is not None:
                # fold the offending row into the pivot row and retry
                i = bad
                for j in range(t, n):
                    a[t][j] += a[i][j]
                continue
            break
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def _smallest_nonzero(a, r0, c0):
    best = None
    for i in range(r0, len(a)):
        for j in range(c0, len(a[i])):
            v = a[i][j]
            if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                best = (i, j)
                if abs(v) == 1:
                    return best
    return best


def _move_to(a, pos, t):
    i, j = pos
    if i != t:
        a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def _non_multiple(a, t, p):
    for i in range(t + 1, len(a)):
        for j in range(t + 1, len(a[i])):
            if a[i][j] % p:
                return i
    return None


def invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    return smith_diagonal(matrix)


def relation_matrix(p: Presentation) -> list[list[int]]:
    rows = []
    for r in p.relators:
        row = [0] * p.generator_count
        for g, e in r.letters:
            row[g] += e
        rows.append(row)
    return rows


def abelianization(p: Presentation) -> AbelianInvariants:
    rows = [row for row in relation_matrix(p) if any(row)]
    diag = smith_diagonal(rows) if rows else []
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(torsion, p.generator_count - len(diag))
