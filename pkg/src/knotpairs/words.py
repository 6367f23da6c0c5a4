"""Words in free groups: signed letter sequences with free and cyclic reduction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Letter = tuple[str, int]


@dataclass(frozen=True)
class Word:
    """A finite sequence of ``(generator, ±1)`` letters.

    Construction does not reduce; call :meth:`free_reduce` for the reduced
    representative. The empty word is the identity.
    """

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple((str(g), int(e)) for g, e in self.letters)
        for g, e in letters:
            if e not in (1, -1):
                raise ValueError(f"letter exponent must be +1 or -1, got {e} on {g!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_powers(cls, powers: Iterable[tuple[str, int]]) -> "Word":
        """Build ``g1^k1 g2^k2 ...`` from ``(name, k)`` pairs."""
        letters: list[Letter] = []
        for g, k in powers:
            sign = 1 if k > 0 else -1
            letters.extend([(g, sign)] * abs(k))
        return cls(tuple(letters))

    @classmethod
    def generator(cls, name: str) -> "Word":
        return cls(((name, 1),))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters).free_reduce()

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k).free_reduce()

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def symbols(self) -> set[str]:
        return {g for g, _ in self.letters}

    def is_reduced(self) -> bool:
        return all(
            not (g1 == g2 and e1 == -e2)
            for (g1, e1), (g2, e2) in zip(self.letters, self.letters[1:])
        )

    def free_reduce(self) -> "Word":
        return free_reduce(self)

    def cyclically_reduce(self) -> "Word":
        return cyclically_reduce(self)

    def exponent_sum(self, name: str) -> int:
        return sum(e for g, e in self.letters if g == name)

    def exponent_sums(self, generators: Iterable[str]) -> list[int]:
        sums = dict.fromkeys(generators, 0)
        for g, e in self.letters:
            if g not in sums:
                raise KeyError(g)
            sums[g] += e
        return list(sums.values())

    def rename(self, mapping: dict[str, str]) -> "Word":
        return Word(tuple((mapping.get(g, g), e) for g, e in self.letters))

    def syllables(self) -> list[tuple[str, int]]:
        """Group runs of equal generators: ``a a b^-1`` -> ``[(a, 2), (b, -1)]``."""
        out: list[tuple[str, int]] = []
        for g, e in self.letters:
            if out and out[-1][0] == g and (out[-1][1] > 0) == (e > 0):
                out[-1] = (g, out[-1][1] + e)
            else:
                out.append((g, e))
        return out

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for g, k in self.syllables():
            parts.append(g if k == 1 else f"{g}^{k}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def to_json(self) -> list[list]:
        return [[g, e] for g, e in self.letters]

    @classmethod
    def from_json(cls, data: Iterable[Iterable]) -> "Word":
        return cls(tuple((g, e) for g, e in data))


IDENTITY = Word()


def free_reduce(w: Word) -> Word:
    stack: list[Letter] = []
    for g, e in w.letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return Word(tuple(stack))


def cyclically_reduce(w: Word) -> Word:
    letters = free_reduce(w).letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        i += 1
        j -= 1
    return Word(letters[i : j + 1])


def commutator(x: Word, y: Word) -> Word:
    """``x y x^-1 y^-1``."""
    return Word(x.letters + y.letters + x.inverse().letters + y.inverse().letters).free_reduce()
