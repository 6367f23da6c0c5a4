"""Knot-group constructions as presentation transformers.

Knot sum, frame twist-spinning (single and multi-component), suspension, and
the single-stratum report. Every construction that renames generators returns
the translated distinguished meridians alongside the new presentations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping, Sequence

from .coset import DEFAULT_BUDGET
from .errors import PresentationError
from .kervaire import KervaireReport, kervaire_report
from .linalg import AbelianizationMap
from .parsing import format_word, presentation_to_json
from .presentation import (
    GroupMap,
    Presentation,
    direct_product_with_renaming,
    free_product_with_renaming,
)
from .words import Word


@dataclass(frozen=True)
class KnotGroupPair:
    """``(G, Ḡ, φ: G → Ḡ, g, ḡ)``: boundary group, knot group, inclusion, meridians."""

    boundary: Presentation
    ambient: Presentation
    inclusion: GroupMap
    meridian_boundary: Word
    meridian_ambient: Word

    def __post_init__(self) -> None:
        if self.inclusion.source != self.boundary or self.inclusion.target != self.ambient:
            raise PresentationError("inclusion must map the boundary group to the ambient group")
        if not self.meridian_ambient:
            raise PresentationError("the ambient meridian must be nonempty")
        if not self.meridian_boundary and self.boundary.generators:
            # only the trivial boundary group may carry the empty meridian
            raise PresentationError("the boundary meridian must be nonempty")
        self.boundary.check_word(self.meridian_boundary, "boundary meridian")
        self.ambient.check_word(self.meridian_ambient, "ambient meridian")

    @classmethod
    def point_singular(cls, ambient: Presentation, meridian: Word) -> "KnotGroupPair":
        """Locally-flat input: the boundary knot is the unknot ``<m | >`` mapped onto the meridian."""
        name = "m"
        while name in ambient.generators:
            name += "_"
        unknot = Presentation((name,), ())
        return cls(unknot, ambient, GroupMap(unknot, ambient, {name: meridian}), Word.generator(name), meridian)

    @classmethod
    def identity(cls, group: Presentation, meridian: Word) -> "KnotGroupPair":
        return cls(group, group, GroupMap.identity(group), meridian, meridian)


def knot_sum(
    first: tuple[Presentation, Word], second: tuple[Presentation, Word]
) -> tuple[Presentation, Word]:
    """Free product amalgamated over the meridians: ``P1 * P2 / <m1 m2^-1>``."""
    (p1, m1), (p2, m2) = first, second
    if not m1 or not m2:
        raise PresentationError("meridians must be nonempty")
    p1.check_word(m1, "first meridian")
    p2.check_word(m2, "second meridian")
    fp = free_product_with_renaming(p1, p2)
    identify = m1 * fp.right(m2).inverse()
    pres = fp.presentation
    return Presentation(pres.generators, pres.relators + (identify,)), m1


@dataclass(frozen=True)
class SpinInput:
    pair: KnotGroupPair
    m_group: Presentation
    tau_degrees: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        degs = dict(self.tau_degrees)
        missing = [x for x in self.m_group.generators if x not in degs]
        if missing:
            raise PresentationError(f"missing twist degree for generator(s) {', '.join(missing)}")
        extra = [x for x in degs if x not in self.m_group.generators]
        if extra:
            raise PresentationError(f"twist degree given for unknown generator(s) {', '.join(extra)}")
        object.__setattr__(self, "tau_degrees", {x: int(k) for x, k in degs.items()})


@dataclass(frozen=True)
class SpinResult:
    knot_group: Presentation
    boundary_group: Presentation
    inclusion: GroupMap
    meridian_knot: Word
    meridian_boundary: Word

    def pair(self) -> KnotGroupPair:
        return KnotGroupPair(
            self.boundary_group, self.knot_group, self.inclusion, self.meridian_boundary, self.meridian_knot
        )


def frame_twist_spin(spin: SpinInput) -> SpinResult:
    """Groups of the frame twist-spun knot.

    Knot group: ``(π₁(M) × Ḡ) / <x⁻¹ ḡ^deg τ(x)>``; boundary group ``π₁(M) × G``;
    inclusion ``id × φ`` followed by the projection.
    """
    pair, m = spin.pair, spin.m_group
    amb = direct_product_with_renaming(m, pair.ambient)
    gbar = amb.right(pair.meridian_ambient)
    twists = tuple(
        Word.generator(x).inverse() * gbar ** spin.tau_degrees[x] for x in m.generators
    )
    knot = Presentation(amb.presentation.generators, amb.presentation.relators + twists)

    bd = direct_product_with_renaming(m, pair.boundary)
    boundary = bd.presentation
    images = {x: Word.generator(x) for x in m.generators}
    for y in pair.boundary.generators:
        images[bd.renaming.get(y, y)] = amb.right(pair.inclusion.images[y])
    inclusion = GroupMap(boundary, knot, images)
    return SpinResult(knot, boundary, inclusion, gbar, bd.right(pair.meridian_boundary))


def multi_component_spin(inputs: Sequence[SpinInput]) -> tuple[Presentation, Word]:
    """Free product of the component spin groups, consecutive central meridians identified.

    Returns the presentation and the central meridian of the first component.
    """
    if not inputs:
        raise PresentationError("multi-component spin needs at least one component")
    first = frame_twist_spin(inputs[0])
    pres, meridians = first.knot_group, [first.meridian_knot]
    for spin in inputs[1:]:
        res = frame_twist_spin(spin)
        fp = free_product_with_renaming(pres, res.knot_group)
        meridians.append(fp.right(res.meridian_knot))
        prev = meridians[-2]
        pres = Presentation(
            fp.presentation.generators, fp.presentation.relators + (prev * meridians[-1].inverse(),)
        )
    return pres, meridians[0]


@dataclass(frozen=True)
class SuspensionResult:
    knot_group: Presentation
    boundary_group: Presentation
    inclusion: GroupMap
    meridian_knot: Word
    meridian_boundary: Word


def suspension(pair: KnotGroupPair, connected: bool = True) -> SuspensionResult:
    """Knot group unchanged; boundary group ``Ḡ *_G Ḡ``; inclusion folds both copies onto ``Ḡ``."""
    if not connected:
        raise PresentationError(
            "suspension is only computed for a connected singular set; split the input per component"
        )
    amb = pair.ambient
    fp = free_product_with_renaming(amb, amb)
    amalgam = tuple(
        pair.inclusion.images[y] * fp.right(pair.inclusion.images[y]).inverse()
        for y in pair.boundary.generators
    )
    boundary = Presentation(fp.presentation.generators, fp.presentation.relators + amalgam)
    fold = {g: Word.generator(g) for g in amb.generators}
    fold.update({fp.renaming.get(g, g): Word.generator(g) for g in amb.generators})
    inclusion = GroupMap(boundary, amb, fold)
    return SuspensionResult(amb, boundary, inclusion, pair.meridian_ambient, pair.meridian_ambient)


class Connectivity(str, Enum):
    SIMPLY_CONNECTED = "simply_connected"
    TWO_CONNECTED = "two_connected"
    GENERAL = "general"


@dataclass(frozen=True)
class StratumReport:
    kind: str
    boundary_group: Presentation | None = None
    kervaire: KervaireReport | None = None
    statement: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind, "statement": self.statement}
        if self.boundary_group is not None:
            data["boundary_group"] = presentation_to_json(self.boundary_group)
            data["boundary_group_text"] = str(self.boundary_group)
        if self.kervaire is not None:
            data["kervaire"] = self.kervaire.to_json()
        return data


def single_stratum_report(
    link_knot_group: Presentation,
    lam: Word,
    m_group: Presentation,
    connectivity: Connectivity | str,
    budget: int = DEFAULT_BUDGET,
) -> StratumReport:
    """What the link knot group determines about the boundary group of a one-stratum component."""
    link_knot_group.check_word(lam, "λ")
    connectivity = Connectivity(connectivity)
    lam_text = format_word(lam)
    ab = AbelianizationMap(link_knot_group)
    tors, free = ab.coordinates(lam)
    infinite_order = any(free)

    if connectivity is Connectivity.TWO_CONNECTED:
        report = kervaire_report(link_knot_group, lam, budget)
        return StratumReport(
            "isomorphism",
            link_knot_group,
            report,
            {
                "map": "π1(L - ℓ) → G is an isomorphism",
                "lambda": lam_text,
                "lambda_abelianized_infinite_order": infinite_order,
            },
        )
    if connectivity is Connectivity.SIMPLY_CONNECTED:
        return StratumReport(
            "surjection",
            None,
            None,
            {
                "map": "π1(L - ℓ) → G is surjective",
                "lambda": lam_text,
                "consequence": "G is the normal closure of the image of λ whenever λ has weight one",
                "lambda_abelianized_infinite_order": infinite_order,
            },
        )
    return StratumReport(
        "constraints",
        None,
        None,
        {
            "exact_sequence": ["π1(L - ℓ)", "G", "π1(M)", "1"],
            "link_knot_group": str(link_knot_group),
            "m_group": str(m_group),
            "lambda": lam_text,
            "lambda_image": "generates an infinite cyclic subgroup of G when λ has weight one",
        },
    )

