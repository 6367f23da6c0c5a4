"""Kervaire conditions for single groups and for pairs ``(G, Ḡ, φ, g, ḡ)``.

Each check returns a :class:`ConditionStatus` carrying the data that justifies
it (Smith diagonals, enumeration statistics, deficiency counts), so a verdict
can be re-checked without trusting this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .coset import DEFAULT_BUDGET, is_trivial_group
from .errors import PresentationError
from .linalg import (
    AbelianizationMap,
    abelianization,
    matrix_rank,
    relator_matrix,
    verify_map_abelianized,
)
from .parsing import format_word
from .presentation import GroupMap, Presentation, apply_map, quotient_by_normal_closure
from .words import Word


class Status(str, Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConditionStatus:
    status: Status
    check: str
    evidence: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def satisfied(cls, check: str, **evidence) -> "ConditionStatus":
        return cls(Status.SATISFIED, check, evidence)

    @classmethod
    def violated(cls, check: str, **evidence) -> "ConditionStatus":
        return cls(Status.VIOLATED, check, evidence)

    @classmethod
    def inconclusive(cls, check: str, reason: str, **evidence) -> "ConditionStatus":
        return cls(Status.INCONCLUSIVE, check, {"reason": reason, **evidence})

    @property
    def is_satisfied(self) -> bool:
        return self.status is Status.SATISFIED

    @property
    def is_violated(self) -> bool:
        return self.status is Status.VIOLATED

    @property
    def is_inconclusive(self) -> bool:
        return self.status is Status.INCONCLUSIVE

    def to_json(self) -> dict[str, Any]:
        return {"status": self.status.value, "check": self.check, "evidence": self.evidence}


def _snf_evidence(p: Presentation) -> dict[str, Any]:
    ab = AbelianizationMap(p)
    return {
        "abelianization": ab.invariants.to_json(),
        "abelianization_text": str(ab.invariants),
        "snf_diagonal": list(ab.diagonal),
    }


def check_finitely_presentable(p: Presentation) -> ConditionStatus:
    return ConditionStatus.satisfied(
        "finite presentation given",
        generators=len(p.generators),
        relators=len(p.relators),
    )


def check_abelianization_Z(p: Presentation) -> ConditionStatus:
    ev = _snf_evidence(p)
    if abelianization(p).is_infinite_cyclic:
        return ConditionStatus.satisfied("Smith normal form of relator matrix", **ev)
    return ConditionStatus.violated("Smith normal form of relator matrix", **ev)


def check_h2(p: Presentation) -> ConditionStatus:
    """H₂(G) = 0 via the deficiency-one shortcut, otherwise inconclusive.

    For the presentation 2-complex K (one vertex, g edges, r faces) the second
    boundary is the transposed relator matrix, so H₂(K) is free of rank
    ``r - rank``. With H₁ = Z the rank is g - 1 and deficiency one makes
    H₂(K) = 0; the Hopf sequence then gives a surjection H₂(K) → H₂(G).
    """
    check = "deficiency-one shortcut (Hopf sequence)"
    inv = abelianization(p)
    g, r = len(p.generators), len(p.relators)
    if p.deficiency >= 1 and inv.is_infinite_cyclic:
        rank = matrix_rank(relator_matrix(p))
        return ConditionStatus.satisfied(
            check,
            deficiency=p.deficiency,
            euler_characteristic=1 - g + r,
            boundary_rank=rank,
            h2_complex_rank=r - rank,
            abelianization=inv.to_json(),
        )
    return ConditionStatus.inconclusive(
        check,
        "H2(G) not decidable from this presentation",
        deficiency=p.deficiency,
        abelianization=inv.to_json(),
    )


def check_weight_one(p: Presentation, g: Word, budget: int = DEFAULT_BUDGET) -> ConditionStatus:
    """Is ``p`` the normal closure of ``g``? Decided by killing ``g``."""
    p.check_word(g, "meridian")
    q = quotient_by_normal_closure(p, [g])
    check = "normal closure of " + format_word(g)
    inv = abelianization(q)
    if not inv.is_trivial:
        return ConditionStatus.violated(check, quotient_abelianization=inv.to_json())
    verdict = is_trivial_group(q, budget)
    stats = verdict.evidence.statistics()
    if verdict.trivial:
        return ConditionStatus.satisfied(check, enumeration=stats)
    if verdict.evidence.completed:
        # a completed table of index > 1 is itself a certificate of a nontrivial quotient
        return ConditionStatus.violated(check, quotient_abelianization=inv.to_json(), enumeration=stats)
    return ConditionStatus.inconclusive(check, "coset enumeration exhausted its budget", enumeration=stats)


@dataclass(frozen=True)
class KervaireReport:
    finitely_presentable: ConditionStatus
    abelianization_Z: ConditionStatus
    h2_zero: ConditionStatus
    weight_one: ConditionStatus

    def conditions(self) -> dict[str, ConditionStatus]:
        return {
            "finitely_presentable": self.finitely_presentable,
            "abelianization_Z": self.abelianization_Z,
            "h2_zero": self.h2_zero,
            "weight_one": self.weight_one,
        }

    @property
    def all_satisfied(self) -> bool:
        return all(c.is_satisfied for c in self.conditions().values())

    @property
    def any_violated(self) -> bool:
        return any(c.is_violated for c in self.conditions().values())

    @property
    def any_inconclusive(self) -> bool:
        return any(c.is_inconclusive for c in self.conditions().values())

    def to_json(self) -> dict[str, Any]:
        return {name: c.to_json() for name, c in self.conditions().items()}


def kervaire_report(p: Presentation, g: Word, budget: int = DEFAULT_BUDGET) -> KervaireReport:
    p.check_word(g, "meridian")
    return KervaireReport(
        check_finitely_presentable(p),
        check_abelianization_Z(p),
        check_h2(p),
        check_weight_one(p, g, budget),
    )


@dataclass(frozen=True)
class PairReport:
    report_G: KervaireReport
    report_Gbar: KervaireReport
    map_consistency: ConditionStatus
    meridian_match: ConditionStatus
    map_provenance: str
    inclusion: GroupMap | None = None

    @property
    def all_satisfied(self) -> bool:
        return (
            self.report_G.all_satisfied
            and self.report_Gbar.all_satisfied
            and self.map_consistency.is_satisfied
            and self.meridian_match.is_satisfied
        )

    @property
    def any_violated(self) -> bool:
        return (
            self.report_G.any_violated
            or self.report_Gbar.any_violated
            or self.map_consistency.is_violated
            or self.meridian_match.is_violated
        )

    @property
    def any_inconclusive(self) -> bool:
        return (
            self.report_G.any_inconclusive
            or self.report_Gbar.any_inconclusive
            or self.map_consistency.is_inconclusive
            or self.meridian_match.is_inconclusive
        )

    def to_json(self) -> dict[str, Any]:
        data = {
            "boundary": self.report_G.to_json(),
            "ambient": self.report_Gbar.to_json(),
            "map_consistency": self.map_consistency.to_json(),
            "meridian_match": self.meridian_match.to_json(),
            "map_provenance": self.map_provenance,
        }
        if self.inclusion is not None:
            data["inclusion"] = {g: format_word(w) for g, w in self.inclusion.images.items()}
        return data


def decoupled_map(G: Presentation, g: Word, Gbar: Presentation, gbar: Word) -> GroupMap:
    """``x ↦ ḡ^ψ(x)`` for the abelianization ``ψ: G → Z`` normalized by ``ψ(g) = 1``."""
    ab = AbelianizationMap(G)
    if not ab.invariants.is_infinite_cyclic:
        raise PresentationError(f"cannot factor through Z: boundary abelianization is {ab.invariants}")
    psi = ab.free_generator_images()
    eg = sum(psi[x] * e for x, e in g)
    if eg not in (1, -1):
        raise PresentationError(f"meridian has abelianized image {eg}, not ±1")
    return GroupMap(G, Gbar, {x: gbar ** (psi[x] * eg) for x in G.generators})


def _meridian_match(phi: GroupMap, g: Word, gbar: Word) -> ConditionStatus:
    check = "abelianized φ(g) against ḡ"
    target = AbelianizationMap(phi.target)
    img = target.vector(apply_map(phi, g))
    ref = target.vector(gbar)
    ev: dict[str, Any] = {
        "image_coordinates": [list(c) for c in target.coordinates(img)],
        "meridian_coordinates": [list(c) for c in target.coordinates(ref)],
    }
    if target.is_zero([a - b for a, b in zip(img, ref)]):
        return ConditionStatus.satisfied(check, sign=1, **ev)
    if target.is_zero([a + b for a, b in zip(img, ref)]):
        return ConditionStatus.satisfied(check, sign=-1, **ev)
    return ConditionStatus.violated(check, **ev)


def pair_report(
    G: Presentation,
    g: Word,
    Gbar: Presentation,
    gbar: Word,
    phi: GroupMap | None = None,
    budget: int = DEFAULT_BUDGET,
) -> PairReport:
    if phi is not None and (phi.source != G or phi.target != Gbar):
        raise PresentationError("map source/target do not match the given presentations")
    G.check_word(g, "boundary meridian")
    Gbar.check_word(gbar, "ambient meridian")
    rep_G = kervaire_report(G, g, budget)
    rep_Gbar = kervaire_report(Gbar, gbar, budget)
    provenance = "given"
    if phi is None:
        provenance = "decoupled"
        try:
            phi = decoupled_map(G, g, Gbar, gbar)
        except PresentationError as exc:
            reason = f"decoupled map unavailable: {exc}"
            none = ConditionStatus.inconclusive("synthesized map", reason)
            return PairReport(rep_G, rep_Gbar, none, none, provenance)
    check = verify_map_abelianized(phi)
    if check:
        consistency = ConditionStatus.satisfied("relators map into target relator row space")
    else:
        consistency = ConditionStatus.violated(
            "relators map into target relator row space",
            relator_index=check.relator_index,
            image=list(check.image),
        )
    return PairReport(rep_G, rep_Gbar, consistency, _meridian_match(phi, g, gbar), provenance, phi)
