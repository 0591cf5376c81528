"""Fundamental groups of manifolds obtained by 0- and 1-surgery.

0-surgery on M gives M # (S^1 x S^2), whose group is pi_1(M) * Z.  Surgery
on S^3 along a blackboard-framed knot kills the normal closure of the
framing longitude in the knot group, so the Wirtinger presentation plus the
longitude word as one extra relator presents the result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .diagram import OrientedDiagram, writhe
from .fpgroup import (
    DEFAULT_BUDGET,
    AbelianInvariants,
    CosetTable,
    abelianization,
    coset_enumerate,
    free_product,
    simplify_presentation,
)
from .knots import unknot_with_kinks
from .wirtinger import longitude_word, wirtinger_presentation
from .words import GroupWord, Presentation

__all__ = [
    "SurgeryError",
    "SurgeryKind",
    "SurgerySpec",
    "GroupReport",
    "zero_surgery_group",
    "surgery_presentation",
    "framed_unknot_surgery",
    "lens_space_name",
    "analyze_group",
    "identify",
    "perform_surgery",
]


class SurgeryError(ValueError):
    pass


class SurgeryKind(str, Enum):
    ZERO = "zero_surgery"
    ONE = "one_surgery"


@dataclass(frozen=True)
class SurgerySpec:
    kind: SurgeryKind
    diagram: OrientedDiagram | None = None
    base: Presentation = field(default_factory=Presentation.trivial)

    def __post_init__(self):
        kind = SurgeryKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is SurgeryKind.ONE:
            if self.diagram is None:
                raise SurgeryError("1-surgery needs a knot diagram")
            if self.base.generator_count:
                raise SurgeryError("knot surgery is only supported on S^3 (trivial base group)")


def zero_surgery_group(base: Presentation | None = None) -> Presentation:
    base = Presentation.trivial() if base is None else base
    return free_product(base, Presentation.free(["x"]))


def surgery_presentation(d: OrientedDiagram, start_arc: int = 0) -> Presentation:
    p = wirtinger_presentation(d)
    lam = longitude_word(d, start_arc)
    if not lam.letters:
        return p
    return p.with_relator(lam)


def lens_space_name(p: int) -> str:
    q = abs(p)
    if q == 0:
        return "L(0,1) = S^2 x S^1"
    if q == 1:
        return "L(1,1) = S^3"
    return f"L({q},1)"


def framed_unknot_surgery(p: int) -> Presentation:
    """Group of the lens space L(p,1): <m | m^p>.

    Cross-checked against the Wirtinger route on an unknot drawn with |p|
    curls; a mismatch raises ``AssertionError``.
    """
    rels = (GroupWord.power(0, p),) if p else ()
    direct = Presentation(1, ("m",), rels)
    via_diagram = surgery_presentation(unknot_with_kinks(p))
    if abelianization(direct) != abelianization(via_diagram):
        raise AssertionError(
            f"framing {p}: <m | m^p> and the kinked-unknot surgery disagree"
        )
    return direct


# --------------------------------------------------------------------------
# identification


@dataclass
class GroupReport:
    presentation: Presentation
    simplified: Presentation
    abelian: AbelianInvariants
    order: int | None
    identification: str
    certificates: list[str]
    coset_status: str
    table: CosetTable | None = None

    @property
    def perfect(self) -> bool:
        return self.abelian.is_trivial

    def to_dict(self) -> dict:
        return {
            "presentation": self.presentation.to_dict(),
            "simplified": self.simplified.to_dict(),
            "abelian_invariants": self.abelian.to_dict(),
            "order": self.order if self.order is not None else "unknown",
            "identification": self.identification,
            "certificates": list(self.certificates),
        }


def identify(abelian: AbelianInvariants, order: int | None, simplified: Presentation) -> str:
    """Match against the built-in table; "none" when nothing matches.

    Entries: finite cyclic groups (group order equals abelianization
    order), free groups (a presentation without relators), the binary
    tetrahedral group (order 24, abelianization Z/3) and the binary
    icosahedral group (order 120, perfect).  The last two only say
    "consistent": order and abelianization do not prove isomorphism.
    """
    if order is not None:
        if abelian.order == order:
            return "trivial group" if order == 1 else f"cyclic Z/{order}"
        if order == 24 and abelian.torsion == (3,) and not abelian.free_rank:
            return "binary tetrahedral <3,3,2> (consistent)"
        if order == 120 and abelian.is_trivial:
            return "binary icosahedral <5,3,2> / Poincare homology sphere (consistent)"
        return "none"
    if not simplified.relators:
        n = simplified.generator_count
        if n == 0:
            return "trivial group"
        return "infinite cyclic Z" if n == 1 else f"free group of rank {n}"
    return "none"


def analyze_group(
    p: Presentation,
    budget: int = DEFAULT_BUDGET,
    effort: int = 1000,
) -> GroupReport:
    """Abelian invariants, order by coset enumeration, and identification."""
    ab = abelianization(p)
    simplified = simplify_presentation(p, effort) if effort > 0 else p
    certs = [f"abelianization {ab}"]
    if ab.is_trivial:
        certs.append("perfect: trivial abelianization")
    order = None
    table = None
    status = "not attempted"
    if ab.free_rank:
        certs.append(f"infinite: abelianization has free rank {ab.free_rank}")
    else:
        table = coset_enumerate(p, (), budget)
        status = table.status.value
        if table.complete:
            order = table.index
            certs.append(
                f"coset enumeration complete: order {order} "
                f"({table.cosets_defined} cosets defined, budget {budget})"
            )
            if ab.order == order:
                certs.append("order equals abelianization order: group is abelian")
        else:
            certs.append(f"coset enumeration exhausted budget {budget}: order not determined")
    if not simplified.relators and simplified.generator_count:
        certs.append(f"Tietze simplification reached a free presentation of rank {simplified.generator_count}")
    ident = identify(ab, order, simplified)
    return GroupReport(p, simplified, ab, order, ident, certs, status, table)


def perform_surgery(
    spec: SurgerySpec, budget: int = DEFAULT_BUDGET, effort: int = 1000
) -> GroupReport:
    if spec.kind is SurgeryKind.ZERO:
        return analyze_group(zero_surgery_group(spec.base), budget, effort)
    return analyze_group(surgery_presentation(spec.diagram), budget, effort)


def framing_number(d: OrientedDiagram) -> int:
    """Blackboard framing of ``d`` (its writhe)."""
    return writhe(d)
