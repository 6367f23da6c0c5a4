"""Finite presentations, homomorphisms between them, and presentation algebra."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DuplicateGeneratorError, PresentationError, UndeclaredSymbolError
from .words import Word, commutator, cyclically_reduce, free_reduce

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _check_word(w: Word, declared: set[str], where: str) -> None:
    for g in w.symbols():
        if g not in declared:
            raise UndeclaredSymbolError(g, where)


@dataclass(frozen=True)
class Presentation:
    """``< generators | relators >`` with relators stored cyclically reduced."""

    generators: tuple[str, ...] = ()
    relators: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        seen: set[str] = set()
        for g in gens:
            if not isinstance(g, str) or not _NAME.match(g):
                raise PresentationError(f"invalid generator name {g!r}")
            if g in seen:
                raise DuplicateGeneratorError(g)
            seen.add(g)
        rels = []
        for i, r in enumerate(self.relators):
            _check_word(r, seen, f"relator {i}")
            rels.append(cyclically_reduce(r))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)

    def check_word(self, w: Word, where: str = "word") -> None:
        _check_word(w, set(self.generators), where)

    def rename(self, mapping: Mapping[str, str]) -> "Presentation":
        return Presentation(
            tuple(mapping.get(g, g) for g in self.generators),
            tuple(r.rename(dict(mapping)) for r in self.relators),
        )

    def __str__(self) -> str:
        from .parsing import format_presentation

        return format_presentation(self)


TRIVIAL = Presentation()


@dataclass(frozen=True)
class GroupMap:
    """A homomorphism given by the images of the source generators."""

    source: Presentation
    target: Presentation
    images: Mapping[str, Word] = field(default_factory=dict)

    def __post_init__(self) -> None:
        imgs = dict(self.images)
        missing = [g for g in self.source.generators if g not in imgs]
        if missing:
            raise PresentationError(f"no image given for generator(s) {', '.join(missing)}")
        extra = [g for g in imgs if g not in self.source.generators]
        if extra:
            raise UndeclaredSymbolError(extra[0], "map source")
        declared = set(self.target.generators)
        for g, w in imgs.items():
            _check_word(w, declared, f"image of {g}")
            imgs[g] = free_reduce(w)
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, p: Presentation) -> "GroupMap":
        return cls(p, p, {g: Word.generator(g) for g in p.generators})

    def __call__(self, w: Word) -> Word:
        return apply_map(self, w)

    def compose(self, after: "GroupMap") -> "GroupMap":
        """``after ∘ self``."""
        return GroupMap(self.source, after.target, {g: after(w) for g, w in self.images.items()})


def apply_map(f: GroupMap, w: Word) -> Word:
    letters = []
    for g, e in w:
        if g not in f.images:
            raise UndeclaredSymbolError(g, "argument of map")
        img = f.images[g]
        letters.extend(img.letters if e == 1 else img.inverse().letters)
    return free_reduce(Word(tuple(letters)))


@dataclass(frozen=True)
class Combined:
    """Result of a two-operand construction plus the renaming applied to the second operand."""

    presentation: Presentation
    renaming: dict[str, str]

    def left(self, w: Word) -> Word:
        return w

    def right(self, w: Word) -> Word:
        return w.rename(self.renaming)


def disjoint_renaming(taken: Iterable[str], names: Sequence[str]) -> dict[str, str]:
    """Rename clashing ``names`` away from ``taken`` with suffixes ``_2``, ``_3``, ..."""
    used = set(taken)
    own = set(names)
    mapping: dict[str, str] = {}
    for g in names:
        if g not in used:
            used.add(g)
            continue
        k = 2
        while f"{g}_{k}" in used or f"{g}_{k}" in own:
            k += 1
        mapping[g] = f"{g}_{k}"
        used.add(mapping[g])
    return mapping


def free_product_with_renaming(p: Presentation, q: Presentation) -> Combined:
    ren = disjoint_renaming(p.generators, q.generators)
    q2 = q.rename(ren)
    pres = Presentation(p.generators + q2.generators, p.relators + q2.relators)
    return Combined(pres, ren)


def free_product(p: Presentation, q: Presentation) -> Presentation:
    return free_product_with_renaming(p, q).presentation


def direct_product_with_renaming(p: Presentation, q: Presentation) -> Combined:
    fp = free_product_with_renaming(p, q)
    q_gens = [fp.renaming.get(g, g) for g in q.generators]
    comms = tuple(
        commutator(Word.generator(x), Word.generator(y)) for x in p.generators for y in q_gens
    )
    pres = fp.presentation
    return Combined(Presentation(pres.generators, pres.relators + comms), fp.renaming)


def direct_product(p: Presentation, q: Presentation) -> Presentation:
    return direct_product_with_renaming(p, q).presentation


def quotient_by_normal_closure(p: Presentation, ws: Iterable[Word]) -> Presentation:
    ws = list(ws)
    for i, w in enumerate(ws):
        p.check_word(w, f"quotient word {i}")
    if not ws:
        return p
    return Presentation(p.generators, p.relators + tuple(ws))
