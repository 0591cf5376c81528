"""Todd-Coxeter coset enumeration (HLT strategy with deduction scanning).

The inner loop lives in a compiled extension when it has been built;
otherwise the pure-Python kernel is used.  Both define cosets in the same
order, so results do not depend on the backend.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from ..words import GroupWord, Presentation
from . import _tc_py

try:  # pragma: no cover - depends on the build
    from . import _tc_ext
except ImportError:  # pragma: no cover
    _tc_ext = None

__all__ = [
    "CosetTable",
    "Status",
    "DEFAULT_BUDGET",
    "coset_enumerate",
    "backend",
    "available_backends",
]

DEFAULT_BUDGET = 200_000


class Status(str, Enum):
    COMPLETE = "complete"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class CosetTable:
    """Coset action table.

    ``rows[c][2*g]`` is the coset ``c * g`` and ``rows[c][2*g + 1]`` is
    ``c * g^-1``; cosets are numbered from 0 (the subgroup itself) in
    breadth-first order.
    """

    status: Status
    rows: tuple[tuple[int, ...], ...]
    generator_names: tuple[str, ...]
    cosets_defined: int

    @property
    def complete(self) -> bool:
        return self.status is Status.COMPLETE

    @property
    def index(self) -> int | None:
        return len(self.rows) if self.complete else None

    def action(self, g: int, inverse: bool = False) -> tuple[int, ...]:
        col = 2 * g + (1 if inverse else 0)
        return tuple(row[col] for row in self.rows)

    def apply(self, coset: int, w: GroupWord) -> int:
        for g, e in w.letters:
            coset = self.rows[coset][2 * g + (0 if e > 0 else 1)]
        return coset

    def is_permutation_action(self) -> bool:
        n = len(self.rows)
        for g in range(len(self.generator_names)):
            fwd, back = self.action(g), self.action(g, True)
            if sorted(fwd) != list(range(n)):
                return False
            if any(back[fwd[c]] != c for c in range(n)):
                return False
        return True

    def relators_close(self, relators: Sequence[GroupWord]) -> bool:
        return all(self.apply(c, r) == c for r in relators for c in range(len(self.rows)))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["coset"]
        for name in self.generator_names:
            header += [name, name + "'"]
        writer.writerow(header)
        for c, row in enumerate(self.rows):
            writer.writerow([c, *row])
        return buf.getvalue()


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _tc_ext is not None else [])


def backend() -> str:
    """Backend used by default: ``compiled`` unless unavailable or disabled
    with ``SURGERYKIT_PURE_PYTHON=1``."""
    if _tc_ext is not None and not os.environ.get("SURGERYKIT_PURE_PYTHON"):
        return "compiled"
    return "python"


def _encode(w: GroupWord, ngens: int) -> list[int]:
    out = []
    for g, e in w.letters:
        if not 0 <= g < ngens:
            raise ValueError(f"word uses generator {g} outside 0..{ngens - 1}")
        out.append(2 * g + (0 if e > 0 else 1))
    return out


def coset_enumerate(
    p: Presentation,
    subgroup_words: Sequence[GroupWord] = (),
    budget: int = DEFAULT_BUDGET,
    *,
    use: str | None = None,
) -> CosetTable:
    """Enumerate cosets of the subgroup generated by ``subgroup_words``.

    Gives up with status ``budget_exhausted`` once ``budget`` cosets have
    been defined.  ``use`` forces ``"python"`` or ``"compiled"``.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    ngens = p.generator_count
    rels = [_encode(r, ngens) for r in p.relators]
    subs = [_encode(w, ngens) for w in subgroup_words]
    which = use or backend()
    if ngens == 0:
        return CosetTable(Status.COMPLETE, ((),), (), 1)
    if which == "compiled":
        if _tc_ext is None:
            raise RuntimeError("compiled coset enumeration kernel is not built")
        complete, table, defined = _tc_ext.enumerate_cosets(ngens, rels, subs, budget)
    elif which == "python":
        complete, table, defined = _tc_py.enumerate_cosets(ngens, rels, subs, budget)
    else:
        raise ValueError(f"unknown backend {which!r}")
    if not complete:
        return CosetTable(Status.BUDGET_EXHAUSTED, (), p.generator_names, defined)
    rows = tuple(tuple(r) for r in table)
    return CosetTable(Status.COMPLETE, rows, p.generator_names, defined)
