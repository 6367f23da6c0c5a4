"""Integer Laurent polynomials, the type-K test for cyclic Λ-modules, and the P-complex.

Λ = Z[t, t⁻¹]. The P-complex has one cell in each dimension 0..3; its infinite
cyclic cover has cellular chains Λ in each degree with boundaries
``·(t-1)``, ``0``, ``·p(t)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Mapping

from .errors import KnotPairsError
from .linalg import AbelianGroupInvariants, invariants_from_matrix


class PolynomialError(KnotPairsError, ValueError):
    pass


@dataclass(frozen=True)
class LaurentPoly:
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {int(k): int(c) for k, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_list(cls, coeffs: list[int], low: int = 0) -> "LaurentPoly":
        return cls({low + i: c for i, c in enumerate(coeffs)})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def _coerce(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return LaurentPoly.constant(other) if isinstance(other, int) else other

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = self._coerce(other)
        out: dict[int, int] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.coeffs) == 1:
                (k, c), = self.coeffs.items()
                if c in (1, -1):
                    return LaurentPoly({k * n: c ** n})
            raise PolynomialError("only units of Λ have negative powers")
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def evaluate_at_one(self) -> int:
        return sum(self.coeffs.values())

    @property
    def low(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    @property
    def high(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    @property
    def span(self) -> int:
        return self.high - self.low if self.coeffs else -1

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def divisible_by_t_minus_one(self) -> bool:
        return self.evaluate_at_one() == 0

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for k, c in sorted(self.coeffs.items(), key=lambda kv: -kv[0]):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*?\s*t(?:\s*\^\s*([+-]?\d+))?)?\s*")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse forms like ``t^-1 - 1 + t``, ``2t^3 - t``, ``-3``."""
    s = text.strip()
    if not s:
        raise PolynomialError("empty polynomial")
    pos = 0
    coeffs: dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise PolynomialError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, num, mono, exp = m.groups()
        if num is None and mono is None:
            raise PolynomialError(f"cannot parse polynomial at {s[pos:]!r}")
        if sign is None and not first:
            raise PolynomialError(f"missing operator before {s[pos:]!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        k = 0 if mono is None else (int(exp) if exp is not None else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(coeffs)


T = LaurentPoly.monomial(1)


@dataclass(frozen=True)
class TypeKCertificate:
    type_k: bool
    value_at_one: int
    sign: int

    def __bool__(self) -> bool:
        return self.type_k

    def to_json(self) -> dict[str, Any]:
        return {"type_k": self.type_k, "p(1)": self.value_at_one, "sign": self.sign}


def is_type_K_cyclic(p: LaurentPoly) -> TypeKCertificate:
    """``t - 1`` acts invertibly on ``Λ/(p)`` exactly when ``|p(1)| = 1``."""
    if not p:
        raise PolynomialError("the zero polynomial does not define a type-K module")
    v = p.evaluate_at_one()
    return TypeKCertificate(abs(v) == 1, v, (v > 0) - (v < 0))


@dataclass(frozen=True)
class CyclicModule:
    """``Λ/(relation)`` as a description; ``relation = 0`` means free of rank one."""

    relation: LaurentPoly

    @property
    def is_zero(self) -> bool:
        r = self.relation
        return len(r.coeffs) == 1 and abs(next(iter(r.coeffs.values()))) == 1

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if not self.relation:
            return "Λ"
        if self.relation == T - 1 or self.relation == 1 - T:
            return "Z"
        return f"Λ/({self.relation})"

    def t_minus_one_cokernel(self) -> AbelianGroupInvariants:
        """``Λ/(relation, t-1) ≅ Z/relation(1)`` (``Z`` when relation(1) = 0)."""
        v = self.relation.evaluate_at_one()
        return invariants_from_matrix([[v]], 1)

    def t_minus_one_kernel(self) -> AbelianGroupInvariants:
        """Zero unless ``t-1`` divides the relation, in which case ``(r/(t-1))/(r) ≅ Λ/(t-1) ≅ Z``."""
        if self.is_zero or not self.relation.divisible_by_t_minus_one():
            return AbelianGroupInvariants(0)
        return AbelianGroupInvariants(1)


@dataclass(frozen=True)
class PComplexReport:
    polynomial: LaurentPoly
    cover_homology: tuple[CyclicModule, ...]
    homology: tuple[AbelianGroupInvariants, ...]
    predicted_homology: tuple[AbelianGroupInvariants, ...]
    milnor_consistent: bool
    homology_circle: bool
    type_k: TypeKCertificate

    def to_json(self) -> dict[str, Any]:
        return {
            "polynomial": str(self.polynomial),
            "cover_homology": [str(m) for m in self.cover_homology],
            "homology": [h.to_json() for h in self.homology],
            "homology_text": [str(h) for h in self.homology],
            "milnor_predicted": [str(h) for h in self.predicted_homology],
            "milnor_consistent": self.milnor_consistent,
            "homology_circle": self.homology_circle,
            "type_k": self.type_k.to_json(),
        }


def p_complex_homology(p: LaurentPoly) -> PComplexReport:
    """Homology of the P-complex, of its infinite cyclic cover, and the Milnor-sequence cross-check."""
    if not p:
        raise PolynomialError("the zero polynomial does not define a P-complex")
    one = LaurentPoly.constant(1)
    # chains of the cover: C3 -p-> C2 -0-> C1 -(t-1)-> C0, all free of rank one over Λ
    cover_boundaries = {1: T - 1, 2: LaurentPoly(), 3: p}
    # Λ is a domain, so multiplication by a nonzero element is injective and the
    # homology is the cokernel of the incoming map where the outgoing one vanishes
    cover = (
        CyclicModule(cover_boundaries[1]),  # H0 = Λ/(t-1) = Z
        CyclicModule(one),  # H1: ker(t-1) = 0
        CyclicModule(cover_boundaries[3]),  # H2 = Λ/(p)
        CyclicModule(one),  # H3: ker(p) = 0
    )
    # quotient cells: push the Λ-boundaries down along t ↦ 1
    d = {k: q.evaluate_at_one() for k, q in cover_boundaries.items()}
    counts = [1, 1, 1, 1]
    homology = []
    for k in range(4):
        out_rank = 1 if k >= 1 and d[k] else 0
        incoming = d.get(k + 1, 0)
        into = [abs(incoming)] if incoming else []
        h = AbelianGroupInvariants(counts[k] - out_rank - len(into), tuple(x for x in into if x > 1))
        homology.append(h)
    # Milnor sequence splits into 0 → coker(t-1 on H_i) → H_i(P) → ker(t-1 on H_{i-1}) → 0;
    # every kernel here is free, so H_i(P) ≅ coker_i ⊕ ker_{i-1}.
    zero = AbelianGroupInvariants(0)
    predicted = []
    for i in range(4):
        coker = cover[i].t_minus_one_cokernel()
        ker_prev = cover[i - 1].t_minus_one_kernel() if i >= 1 else zero
        predicted.append(coker + ker_prev)
    circle = (AbelianGroupInvariants(1), AbelianGroupInvariants(1), zero, zero)
    return PComplexReport(
        p,
        cover,
        tuple(homology),
        tuple(predicted),
        tuple(homology) == tuple(predicted),
        tuple(homology) == circle,
        is_type_K_cyclic(p),
    )
