"""Validated catalog of classical knot groups.

Torus-knot meridians are found by search rather than written down: the
shortest word whose abelianized image is ±1 and whose normal closure is
certified to be the whole group by coset enumeration. Regenerate the shipped
data with ``python -m knotpairs.catalog --write``.
"""

from __future__ import annotations

import argparse
import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import gcd
from pathlib import Path
from typing import Any, Iterator

from .coset import DEFAULT_BUDGET
from .kervaire import check_abelianization_Z, check_h2, check_weight_one
from .linalg import AbelianizationMap, abelianization
from .parsing import format_word, parse_presentation, parse_word, presentation_to_json
from .presentation import Presentation
from .words import Word

DATA_FILE = "catalog.json"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    presentation: Presentation
    meridian: Word
    validation: dict[str, Any]

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "presentation": str(self.presentation),
            "presentation_json": presentation_to_json(self.presentation),
            "meridian": format_word(self.meridian),
            "validation": self.validation,
        }


def torus_knot(p: int, q: int) -> Presentation:
    """``< a, b | a^p = b^q >``."""
    return Presentation(("a", "b"), (Word.from_powers([("a", p), ("b", -q)]),))


def torus_pairs(limit: int = 7) -> list[tuple[int, int]]:
    return [(p, q) for p in range(2, limit + 1) for q in range(p + 1, limit + 1) if gcd(p, q) == 1]


def reduced_words(generators: tuple[str, ...], max_length: int) -> Iterator[Word]:
    letters = [(g, e) for g in generators for e in (1, -1)]
    for n in range(1, max_length + 1):
        for seq in itertools.product(letters, repeat=n):
            w = Word(seq)
            if w.is_reduced():
                yield w


def find_meridian(p: Presentation, max_length: int = 8, budget: int = DEFAULT_BUDGET) -> Word | None:
    ab = AbelianizationMap(p)
    if not ab.invariants.is_infinite_cyclic:
        return None
    for w in reduced_words(p.generators, max_length):
        _, free = ab.coordinates(w)
        if free[0] in (1, -1) and check_weight_one(p, w, budget).is_satisfied:
            return w
    return None


def validate(p: Presentation, meridian: Word, budget: int = DEFAULT_BUDGET) -> dict[str, Any]:
    ab = AbelianizationMap(p)
    weight = check_weight_one(p, meridian, budget)
    return {
        "abelianization": abelianization(p).to_json(),
        "abelianization_Z": check_abelianization_Z(p).status.value,
        "meridian_image": list(ab.coordinates(meridian)[1]),
        "weight_one": weight.status.value,
        "weight_one_enumeration": weight.evidence.get("enumeration"),
        "h2_zero": check_h2(p).status.value,
    }


def build_entries(budget: int = DEFAULT_BUDGET) -> list[CatalogEntry]:
    fixed = [
        ("unknot", parse_presentation("< a | >"), "a"),
        ("trefoil", parse_presentation("< a, b | a b a = b a b >"), "a"),
    ]
    entries = [
        CatalogEntry(name, p, parse_word(m, p.generators), validate(p, parse_word(m, p.generators), budget))
        for name, p, m in fixed
    ]
    for p, q in torus_pairs():
        pres = torus_knot(p, q)
        m = find_meridian(pres, budget=budget)
        if m is None:
            raise RuntimeError(f"no meridian found for torus knot ({p},{q})")
        entries.append(CatalogEntry(f"torus({p},{q})", pres, m, validate(pres, m, budget)))
    return entries


@lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    raw = json.loads(resources.files("knotpairs").joinpath("data", DATA_FILE).read_text())
    out = []
    for item in raw:
        pres = parse_presentation(item["presentation"])
        out.append(CatalogEntry(item["name"], pres, parse_word(item["meridian"], pres.generators), item["validation"]))
    return tuple(out)


def lookup(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog entry {name!r}; known: {', '.join(e.name for e in catalog())}")


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--write", action="store_true", help="regenerate the packaged catalog data")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    args = ap.parse_args(argv)
    entries = [e.to_json() for e in build_entries(args.budget)]
    text = json.dumps(entries, indent=2, ensure_ascii=False) + "\n"
    if args.write:
        path = Path(__file__).parent / "data" / DATA_FILE
        path.write_text(text)
        print(f"wrote {len(entries)} entries to {path}")
    else:
        print(text)


if __name__ == "__main__":
    main()
