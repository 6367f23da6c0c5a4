"""Terminating Tietze simplification.

Only three moves are used: drop trivial relators, drop relators equal to an
earlier one up to rotation and inversion, and eliminate a generator that occurs
exactly once in some relator. Each elimination removes a generator, so the
procedure terminates even without a budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import GroupMap, Presentation, apply_map
from .words import Word, cyclically_reduce


@dataclass(frozen=True)
class SimplifyResult:
    presentation: Presentation
    complete: bool
    steps: int
    substitution: GroupMap
    """Isomorphism from the input presentation onto the simplified one."""

    @property
    def partially_simplified(self) -> bool:
        return not self.complete

    def translate(self, w: Word) -> Word:
        return apply_map(self.substitution, w)


def cyclic_key(r: Word, order: dict[str, int]) -> tuple:
    """Canonical key of a relator up to rotation and inversion."""
    r = cyclically_reduce(r)
    best = None
    for cand in (r, r.inverse()):
        seq = [(order[g], e) for g, e in cand]
        for i in range(max(len(seq), 1)):
            rot = tuple(seq[i:] + seq[:i])
            if best is None or rot < best:
                best = rot
    return best or ()


def _eliminable(rels: list[Word], gens: list[str]):
    """Shortest relator containing some generator exactly once."""
    best = None
    for ri, r in enumerate(rels):
        counts: dict[str, int] = {}
        for g, _ in r:
            counts[g] = counts.get(g, 0) + 1
        for g in gens:
            if counts.get(g) == 1:
                if best is None or len(r) < len(rels[best[0]]):
                    best = (ri, g)
                break
    return best


def tietze_simplify(p: Presentation, budget: int = 10_000) -> SimplifyResult:
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    gens = list(p.generators)
    rels = list(p.relators)
    images = {g: Word.generator(g) for g in gens}
    steps = 0
    complete = False

    while True:
        changed = False

        kept = [r for r in rels if len(r)]
        if len(kept) != len(rels):
            if steps >= budget:
                break
            steps += 1
            rels = kept
            changed = True

        order = {g: i for i, g in enumerate(gens)}
        seen: set[tuple] = set()
        kept = []
        for r in rels:
            key = cyclic_key(r, order)
            if key not in seen:
                seen.add(key)
                kept.append(r)
        if len(kept) != len(rels):
            if steps >= budget:
                break
            steps += 1
            rels = kept
            changed = True

        found = _eliminable(rels, gens)
        if found is not None:
            if steps >= budget:
                break
            steps += 1
            ri, x = found
            r = rels.pop(ri)
            k = next(i for i, (g, _) in enumerate(r.letters) if g == x)
            sign = r.letters[k][1]
            u = Word(r.letters[:k])
            v = Word(r.letters[k + 1 :])
            # u x v = 1  =>  x = u^-1 v^-1 ;  u x^-1 v = 1  =>  x = v u
            value = (u.inverse() * v.inverse()) if sign == 1 else (v * u)
            sub = {g: Word.generator(g) for g in gens}
            sub[x] = value
            gens.remove(x)

            def substitute(w: Word) -> Word:
                letters = []
                for g, e in w:
                    img = sub[g]
                    letters.extend(img.letters if e == 1 else img.inverse().letters)
                return Word(tuple(letters)).free_reduce()

            rels = [cyclically_reduce(substitute(q)) for q in rels]
            images = {g: substitute(w) for g, w in images.items()}
            changed = True

        if not changed:
            complete = True
            break

    out = Presentation(tuple(gens), tuple(rels))
    return SimplifyResult(out, complete, steps, GroupMap(p, out, images))
