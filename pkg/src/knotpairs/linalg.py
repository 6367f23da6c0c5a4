"""Exact integer linear algebra: Smith normal form and abelian group invariants.

Entries are Python ints throughout, so intermediate swell never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .presentation import GroupMap, Presentation, apply_map
from .words import Word


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]
    nrows: int
    ncols: int

    def __init__(self, entries: Iterable[Iterable[int]] = (), ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)], n)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.entries)) if other.nrows else [()] * other.ncols
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries],
            other.ncols,
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix([list(c) for c in zip(*self.entries)], self.nrows) if self.ncols else IntMatrix.zeros(0, self.nrows)

    def det(self) -> int:
        """Bareiss fraction-free determinant."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.nrows, self.ncols))]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str | int]]) -> "IntMatrix":
        return cls([[int(x) for x in row] for row in data])


def _diagonalize(M: list[list[int]], m: int, n: int, U: list[list[int]] | None, V: list[list[int]] | None) -> None:
    """In-place Smith reduction of ``M``, mirroring row ops into ``U`` and column ops into ``V``."""

    def swap_rows(i: int, k: int) -> None:
        M[i], M[k] = M[k], M[i]
        if U is not None:
            U[i], U[k] = U[k], U[i]

    def swap_cols(j: int, k: int) -> None:
        for row in M:
            row[j], row[k] = row[k], row[j]
        if V is not None:
            for row in V:
                row[j], row[k] = row[k], row[j]

    def add_row(dst: int, src: int, q: int) -> None:
        # row dst += q * row src
        rs, rd = M[src], M[dst]
        for j in range(n):
            if rs[j]:
                rd[j] += q * rs[j]
        if U is not None:
            us, ud = U[src], U[dst]
            for j in range(m):
                if us[j]:
                    ud[j] += q * us[j]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in M:
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = M[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            return
        _, i, j = best
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)

        while True:
            p = M[t][t]
            clean = True
            for i in range(t + 1, m):
                if M[i][t]:
                    add_row(i, t, -(M[i][t] // p))
                    if M[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if M[t][j]:
                    add_col(j, t, -(M[t][j] // p))
                    if M[t][j]:
                        clean = False
            if not clean:
                best = (abs(p), t, t)
                for i in range(t + 1, m):
                    if M[i][t] and abs(M[i][t]) < best[0]:
                        best = (abs(M[i][t]), i, t)
                for j in range(t + 1, n):
                    if M[t][j] and abs(M[t][j]) < best[0]:
                        best = (abs(M[t][j]), t, j)
                _, i, j = best
                if i != t:
                    swap_rows(t, i)
                if j != t:
                    swap_cols(t, j)
                continue
            if abs(p) != 1:
                bad = next(
                    (i for i in range(t + 1, m) if any(x % p for x in M[i][t + 1 :])),
                    None,
                )
                if bad is not None:
                    add_row(t, bad, 1)
                    continue
            break

        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]


def smith_normal_form(A: IntMatrix | Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D``, ``U`` and ``V`` unimodular.

    ``D`` is diagonal with nonnegative entries ``d1 | d2 | ...`` (zeros last).
    """
    if not isinstance(A, IntMatrix):
        A = IntMatrix(A)
    m, n = A.shape
    M = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()
    _diagonalize(M, m, n, U, V)
    return IntMatrix(U, m), IntMatrix(M, n), IntMatrix(V, n)


def elementary_divisors(A: IntMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith form, without building the transforms."""
    rows = A.tolist() if isinstance(A, IntMatrix) else [list(map(int, r)) for r in A]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    _diagonalize(rows, m, n, None, None)
    return [rows[i][i] for i in range(min(m, n)) if rows[i][i]]


def matrix_rank(A: IntMatrix | Sequence[Sequence[int]]) -> int:
    return len(elementary_divisors(A))


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """``Z^free_rank ⊕ Z/d1 ⊕ Z/d2 ⊕ ...`` with ``d1 | d2 | ...`` and each ``di ≥ 2``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        tors = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in tors):
            raise ValueError(f"torsion coefficients must be >= 2, got {tors}")
        if any(b % a for a, b in zip(tors, tors[1:])):
            raise ValueError(f"torsion {tors} is not a divisibility chain")
        object.__setattr__(self, "torsion", tors)

    @classmethod
    def from_orders(cls, free_rank: int, orders: Iterable[int]) -> "AbelianGroupInvariants":
        """Normalize an arbitrary list of cyclic orders (0 meaning Z) into invariant factors."""
        orders = [abs(int(d)) for d in orders]
        free_rank += sum(1 for d in orders if d == 0)
        finite = [d for d in orders if d > 1]
        if not finite:
            return cls(free_rank, ())
        k = len(finite)
        diag = [[finite[i] if i == j else 0 for j in range(k)] for i in range(k)]
        return cls(free_rank, tuple(d for d in elementary_divisors(diag) if d > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_infinite_cyclic(self) -> bool:
        return self.free_rank == 1 and not self.torsion

    def __add__(self, other: "AbelianGroupInvariants") -> "AbelianGroupInvariants":
        return direct_sum(self, other)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> "AbelianGroupInvariants":
        return cls(int(data["free_rank"]), tuple(int(d) for d in data.get("torsion", ())))


def direct_sum(*groups: AbelianGroupInvariants) -> AbelianGroupInvariants:
    free = sum(g.free_rank for g in groups)
    return AbelianGroupInvariants.from_orders(free, [d for g in groups for d in g.torsion])


Z = AbelianGroupInvariants(1)
ZERO = AbelianGroupInvariants(0)


def invariants_from_matrix(A: IntMatrix | Sequence[Sequence[int]], ncols: int | None = None) -> AbelianGroupInvariants:
    """Cokernel ``Z^ncols / rowspace(A)``."""
    if not isinstance(A, IntMatrix):
        A = IntMatrix(A, ncols)
    divisors = elementary_divisors(A)
    return AbelianGroupInvariants(A.ncols - len(divisors), tuple(d for d in divisors if d > 1))


def relator_matrix(p: Presentation) -> IntMatrix:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    return IntMatrix([r.exponent_sums(p.generators) for r in p.relators], len(p.generators))


def abelianization(p: Presentation) -> AbelianGroupInvariants:
    return invariants_from_matrix(relator_matrix(p))


class AbelianizationMap:
    """Coordinates of words in the abelianization, read off the Smith form.

    For ``U R V = D`` the class of an exponent vector ``v`` is determined by
    ``v V`` reduced modulo the diagonal of ``D``.
    """

    def __init__(self, p: Presentation):
        self.presentation = p
        R = relator_matrix(p)
        _, D, V = smith_normal_form(R)
        n = len(p.generators)
        diag = D.diagonal() + [0] * (n - min(D.nrows, n))
        self.diagonal = diag[:n]
        self.V = V
        self.invariants = AbelianGroupInvariants(
            sum(1 for d in self.diagonal if d == 0), tuple(d for d in self.diagonal if d > 1)
        )

    def _transform(self, v: Sequence[int]) -> list[int]:
        n = len(self.diagonal)
        return [sum(v[k] * self.V[k, j] for k in range(n)) for j in range(n)]

    def vector(self, w: Word) -> list[int]:
        return w.exponent_sums(self.presentation.generators)

    def coordinates(self, v: Sequence[int] | Word) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``(torsion coordinates mod each d >= 2, free coordinates)`` of a word or vector."""
        if isinstance(v, Word):
            v = self.vector(v)
        w = self._transform(v)
        tors = tuple(x % d for x, d in zip(w, self.diagonal) if d > 1)
        free = tuple(x for x, d in zip(w, self.diagonal) if d == 0)
        return tors, free

    def is_zero(self, v: Sequence[int] | Word) -> bool:
        tors, free = self.coordinates(v)
        return not any(tors) and not any(free)

    def free_generator_images(self) -> dict[str, int]:
        """When the abelianization is ``Z``: each generator's image under an identification with ``Z``."""
        if not self.invariants.is_infinite_cyclic:
            raise ValueError(f"abelianization is {self.invariants}, not Z")
        out = {}
        for i, g in enumerate(self.presentation.generators):
            e = [0] * len(self.diagonal)
            e[i] = 1
            out[g] = self.coordinates(e)[1][0]
        return out


def abelianized_map(f: GroupMap) -> IntMatrix:
    """Rows indexed by source generators, columns by target generators."""
    return IntMatrix(
        [f.images[g].exponent_sums(f.target.generators) for g in f.source.generators],
        len(f.target.generators),
    )


@dataclass(frozen=True)
class MapCheck:
    consistent: bool
    relator_index: int | None = None
    image: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.consistent


def verify_map_abelianized(f: GroupMap) -> MapCheck:
    """Every source relator must map into the row space of the target relator matrix."""
    if not f.source.relators:
        return MapCheck(True)
    target = AbelianizationMap(f.target)
    for i, r in enumerate(f.source.relators):
        v = apply_map(f, r).exponent_sums(f.target.generators)
        if not target.is_zero(v):
            return MapCheck(False, i, tuple(v))
    return MapCheck(True)

