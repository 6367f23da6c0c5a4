"""Simplicial homology over Z, the boundary-knot homology formula, and a product-with-circle oracle."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Hashable, Iterable, Mapping, Sequence

from .errors import KnotPairsError
from .linalg import ZERO, AbelianGroupInvariants, direct_sum, elementary_divisors


class ComplexError(KnotPairsError, ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    """Face-closed set of simplices, each a sorted tuple of vertex ids."""

    simplices: frozenset[tuple]

    def __post_init__(self) -> None:
        simplices = frozenset(tuple(sorted(s)) for s in self.simplices)
        for s in simplices:
            if len(set(s)) != len(s) or not s:
                raise ComplexError(f"degenerate simplex {s}")
            for k in range(1, len(s)):
                for face in combinations(s, k):
                    if face not in simplices:
                        raise ComplexError(f"face {face} of {s} is missing")
        object.__setattr__(self, "simplices", simplices)

    @classmethod
    def from_maximal(cls, maximal: Iterable[Iterable[Hashable]]) -> "SimplicialComplex":
        faces: set[tuple] = set()
        for s in maximal:
            s = tuple(sorted(set(s)))
            for k in range(1, len(s) + 1):
                faces.update(combinations(s, k))
        return cls(frozenset(faces))

    @property
    def dimension(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    @property
    def vertices(self) -> list:
        return sorted(s[0] for s in self.simplices if len(s) == 1)

    def simplices_of_dim(self, k: int) -> list[tuple]:
        return sorted(s for s in self.simplices if len(s) == k + 1)

    def f_vector(self) -> list[int]:
        return [len(self.simplices_of_dim(k)) for k in range(self.dimension + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def maximal_simplices(self) -> list[tuple]:
        out = []
        for s in self.simplices:
            if not any(len(t) > len(s) and set(s) <= set(t) for t in self.simplices):
                out.append(s)
        return sorted(out, key=lambda s: (len(s), s))

    def relabel(self) -> "SimplicialComplex":
        """Replace vertices by ``0..n-1`` in sorted order (order-preserving)."""
        index = {v: i for i, v in enumerate(self.vertices)}
        return SimplicialComplex(frozenset(tuple(index[v] for v in s) for s in self.simplices))

    def disjoint_union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        a, b = self.relabel(), other.relabel()
        shift = len(a.vertices)
        return SimplicialComplex(a.simplices | {tuple(v + shift for v in s) for s in b.simplices})

    def to_json(self) -> list[list]:
        return [list(s) for s in self.maximal_simplices()]


def load_complex(data: str | Sequence[Sequence[Any]]) -> SimplicialComplex:
    """JSON list of maximal simplices (vertex-id arrays)."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list) or not all(isinstance(s, list) and s for s in data):
        raise ComplexError("complex JSON must be a nonempty array of nonempty vertex arrays")
    return SimplicialComplex.from_maximal(data)


@dataclass(frozen=True)
class GradedAbelian:
    """Finitely supported graded abelian group; absent degrees are zero."""

    groups: Mapping[int, AbelianGroupInvariants] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {int(k): v for k, v in self.groups.items() if not v.is_trivial}
        if any(k < 0 for k in clean):
            raise ValueError("negative degrees are not allowed")
        object.__setattr__(self, "groups", dict(sorted(clean.items())))

    @classmethod
    def from_sequence(cls, groups: Sequence[AbelianGroupInvariants]) -> "GradedAbelian":
        return cls(dict(enumerate(groups)))

    def __getitem__(self, k: int) -> AbelianGroupInvariants:
        return self.groups.get(k, ZERO)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GradedAbelian) and dict(self.groups) == dict(other.groups)

    def __hash__(self) -> int:
        return hash(tuple(self.groups.items()))

    @property
    def top(self) -> int:
        return max(self.groups, default=-1)

    def as_list(self, upto: int | None = None) -> list[AbelianGroupInvariants]:
        upto = self.top if upto is None else upto
        return [self[k] for k in range(upto + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * g.free_rank for k, g in self.groups.items())

    def __str__(self) -> str:
        return ", ".join(f"H{k}={g}" for k, g in enumerate(self.as_list())) or "0"

    def to_json(self) -> dict[str, Any]:
        return {str(k): g.to_json() for k, g in self.groups.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "GradedAbelian":
        return cls({int(k): AbelianGroupInvariants.from_json(v) for k, v in data.items()})


def boundary_matrix(K: SimplicialComplex, k: int) -> list[list[int]]:
    """∂_k : C_k → C_{k-1} with rows indexed by (k-1)-simplices, columns by k-simplices."""
    rows = K.simplices_of_dim(k - 1)
    cols = K.simplices_of_dim(k)
    index = {s: i for i, s in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for pos in range(len(s)):
            M[index[s[:pos] + s[pos + 1 :]]][j] += -1 if pos % 2 else 1
    return M


def simplicial_homology(K: SimplicialComplex) -> GradedAbelian:
    dim = K.dimension
    counts = [len(K.simplices_of_dim(k)) for k in range(dim + 1)]
    divisors = {k: elementary_divisors(boundary_matrix(K, k)) if counts[k] and counts[k - 1] else [] for k in range(1, dim + 1)}
    groups = {}
    for k in range(dim + 1):
        rank_out = len(divisors.get(k, []))
        into = divisors.get(k + 1, [])
        groups[k] = AbelianGroupInvariants(
            counts[k] - rank_out - len(into), tuple(d for d in into if d > 1)
        )
    return GradedAbelian(groups)


def predict_boundary_homology(h_sigma: GradedAbelian, n: int) -> GradedAbelian:
    """Homology of the boundary-knot complement from that of the singular set.

    ``H0(X) = H0(Σ)``, ``Hi(X) = H(i-1)(Σ) ⊕ Hi(Σ)`` for ``1 <= i <= n-3``, zero above.
    """
    if h_sigma.top > n - 4:
        raise ComplexError(
            f"singular set homology is nonzero in degree {h_sigma.top} > n-4 = {n - 4}"
        )
    groups = {0: h_sigma[0]}
    for i in range(1, n - 2):
        groups[i] = direct_sum(h_sigma[i - 1], h_sigma[i])
    return GradedAbelian(groups)


def _staircases(p: int, q: int) -> list[list[tuple[int, int]]]:
    """Maximal chains from (0,0) to (p,q) in the grid poset, i.e. the top simplices of Δp × Δq."""
    out: list[list[tuple[int, int]]] = []

    def walk(i: int, j: int, path: list[tuple[int, int]]) -> None:
        if i == p and j == q:
            out.append(list(path))
            return
        if i < p:
            path.append((i + 1, j))
            walk(i + 1, j, path)
            path.pop()
        if j < q:
            path.append((i, j + 1))
            walk(i, j + 1, path)
            path.pop()

    walk(0, 0, [(0, 0)])
    return out


def product(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of ``K × L`` using the vertex orders of both factors."""
    top: list[tuple] = []
    for s in K.maximal_simplices():
        for t in L.maximal_simplices():
            for chain in _staircases(len(s) - 1, len(t) - 1):
                top.append(tuple((s[i], t[j]) for i, j in chain))
    return SimplicialComplex.from_maximal(top).relabel()


CIRCLE = SimplicialComplex.from_maximal([(0, 1), (1, 2), (0, 2)])


def circle_product(K: SimplicialComplex, circle_edges: int = 3) -> SimplicialComplex:
    if circle_edges < 3:
        raise ComplexError("a simplicial circle needs at least 3 edges")
    circle = CIRCLE if circle_edges == 3 else SimplicialComplex.from_maximal(
        [(i, (i + 1) % circle_edges) for i in range(circle_edges)]
    )
    return product(K, circle)


def two_connected_homology_check(K: SimplicialComplex) -> bool:
    """Homological part of 2-connectivity: connected with H1 = H2 = 0 (π₂ itself is not checked)."""
    h = simplicial_homology(K)
    return h[0] == AbelianGroupInvariants(1) and h[1].is_trivial and h[2].is_trivial


def point() -> SimplicialComplex:
    return SimplicialComplex.from_maximal([(0,)])


def sphere(k: int) -> SimplicialComplex:
    """Boundary of the (k+1)-simplex."""
    return SimplicialComplex.from_maximal(combinations(range(k + 2), k + 1))


def torus() -> SimplicialComplex:
    """Seven-vertex torus."""
    tris = []
    for i in range(7):
        tris.append((i, (i + 1) % 7, (i + 3) % 7))
        tris.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex.from_maximal(tris)


STANDARD_COMPLEXES = {
    "point": point,
    "circle": lambda: sphere(1),
    "sphere2": lambda: sphere(2),
    "torus": torus,
    "circle+point": lambda: sphere(1).disjoint_union(point()),
}
