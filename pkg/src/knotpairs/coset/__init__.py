"""Todd-Coxeter coset enumeration (Felsch strategy) with bounded effort.

The inner loop runs in a compiled kernel when the extension is built and falls
back to an equivalent pure-Python kernel otherwise. Set
``KNOTPAIRS_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..presentation import Presentation
from ..words import Word, cyclically_reduce
from . import _pycore

DEFAULT_BUDGET = 100_000

_KERNELS: dict[str, Callable] = {"python": _pycore.enumerate_flat}
try:
    from . import _ccore

    _KERNELS["compiled"] = _ccore.enumerate_flat
except ImportError:  # extension not built
    pass

if os.environ.get("KNOTPAIRS_PURE_PYTHON") or "compiled" not in _KERNELS:
    BACKEND = "python"
else:
    BACKEND = "compiled"


def available_backends() -> list[str]:
    return sorted(_KERNELS)


@dataclass(frozen=True)
class CosetTable:
    """Completed, compacted coset table.

    ``rows[c][2*i]`` is the coset ``c·g_i`` and ``rows[c][2*i+1]`` is ``c·g_i^-1``.
    Coset 0 is the subgroup itself.
    """

    generators: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, coset: int, w: Word) -> int:
        col = {g: i for i, g in enumerate(self.generators)}
        for g, e in w:
            coset = self.rows[coset][2 * col[g] + (0 if e == 1 else 1)]
        return coset

    def is_closed(self) -> bool:
        for c, row in enumerate(self.rows):
            for x, d in enumerate(row):
                if d < 0 or d >= len(self.rows) or self.rows[d][x ^ 1] != c:
                    return False
        return True

    def audit(self, relators: Sequence[Word], subgroup: Sequence[Word] = ()) -> bool:
        """Closed under inversion, every relator loops at every coset, subgroup words loop at 0.

        All cosets are traced at once, one syllable ``g^k`` at a time, by
        raising the permutation of ``g`` to the ``k``-th power.
        """
        if not self.is_closed():
            return False
        identity = list(range(self.index))
        for r in relators:
            if self._trace(identity, r) != identity:
                return False
        return all(self.act(0, w) == 0 for w in subgroup)

    def _trace(self, state: list[int], w: Word) -> list[int]:
        col = {g: i for i, g in enumerate(self.generators)}
        for g, k in w.syllables():
            x = 2 * col[g] + (0 if k > 0 else 1)
            perm = [row[x] for row in self.rows]
            k = abs(k)
            while k:
                if k & 1:
                    state = [perm[c] for c in state]
                k >>= 1
                if k:
                    perm = [perm[c] for c in perm]
        return state

    def to_json(self) -> dict:
        cols = [name for g in self.generators for name in (g, f"{g}^-1")]
        return {"columns": cols, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class EnumerationOutcome:
    completed: bool
    cosets_defined: int
    budget: int
    coincidences: int
    steps: int
    table: CosetTable | None = None
    backend: str = field(default=BACKEND, compare=False)

    @property
    def verdict(self) -> str:
        return "completed" if self.completed else "exhausted"

    @property
    def index(self) -> int | None:
        return self.table.index if self.table is not None else None

    def statistics(self) -> dict:
        return {
            "verdict": self.verdict,
            "index": self.index,
            "cosets_defined": self.cosets_defined,
            "budget": self.budget,
            "coincidences": self.coincidences,
            "steps": self.steps,
        }

    def to_json(self, include_table: bool = False) -> dict:
        data = self.statistics()
        if include_table and self.table is not None:
            data["table"] = self.table.to_json()
        return data


def _period(seq: list[int]) -> int:
    """Smallest ``d`` with ``seq`` a power of its length-``d`` prefix; only those rotations differ."""
    n = len(seq)
    for d in range(1, n + 1):
        if n % d == 0 and seq[d:] + seq[:d] == seq:
            return d
    return n


def _encode(p: Presentation, subgroup: Sequence[Word]):
    col = {g: i for i, g in enumerate(p.generators)}

    def cols(w: Word) -> list[int]:
        return [2 * col[g] + (0 if e == 1 else 1) for g, e in w]

    cycles: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for r in p.relators:
        r = cyclically_reduce(r)
        if not r:
            continue
        for w in (r, r.inverse()):
            seq = cols(w)
            for i in range(_period(seq)):
                rot = tuple(seq[i:] + seq[:i])
                if rot not in seen:
                    seen.add(rot)
                    cycles.append(rot)
    ncols = 2 * len(p.generators)
    by_col: list[list[int]] = [[] for _ in range(ncols)]
    for k, cyc in enumerate(cycles):
        by_col[cyc[0]].append(k)
    cyc_data, cyc_off = [], [0]
    for cyc in cycles:
        cyc_data.extend(cyc)
        cyc_off.append(len(cyc_data))
    col_cyc, col_off = [], [0]
    for ks in by_col:
        col_cyc.extend(ks)
        col_off.append(len(col_cyc))
    sub_data, sub_off = [], [0]
    for w in subgroup:
        sub_data.extend(cols(w.free_reduce()))
        sub_off.append(len(sub_data))
    return ncols, cyc_data, cyc_off, col_off, col_cyc, sub_data, sub_off


def enumerate_cosets(
    p: Presentation,
    subgroup: Sequence[Word] = (),
    budget: int = DEFAULT_BUDGET,
    backend: str | None = None,
) -> EnumerationOutcome:
    """Enumerate cosets of the subgroup generated by ``subgroup``.

    A completed outcome certifies the index. An exhausted one means only that
    ``budget`` cosets (live and dead) were not enough.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    subgroup = list(subgroup)
    for i, w in enumerate(subgroup):
        p.check_word(w, f"subgroup word {i}")
    backend = backend or BACKEND
    try:
        kernel = _KERNELS[backend]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {backend!r}") from None
    completed, rows, defined, coincidences, steps = kernel(*_encode(p, subgroup), budget)
    table = None
    if completed:
        table = CosetTable(p.generators, tuple(tuple(r) for r in rows))
        if not table.audit(p.relators, subgroup):
            raise RuntimeError("coset table failed its closure audit")
    return EnumerationOutcome(completed, defined, budget, coincidences, steps, table, backend)


@dataclass(frozen=True)
class Triviality:
    trivial: bool
    evidence: EnumerationOutcome

    @property
    def verdict(self) -> str:
        return "trivial" if self.trivial else "inconclusive"


def is_trivial_group(p: Presentation, budget: int = DEFAULT_BUDGET, backend: str | None = None) -> Triviality:
    out = enumerate_cosets(p, (), budget, backend)
    return Triviality(out.completed and out.index == 1, out)
