"""Exact arithmetic in the truncated polynomial ring

    R = Z[x_1, ..., x_m] / (x_1^(n_1+1), ..., x_m^(n_m+1)),

the integral cohomology ring of CP^(n_1) x ... x CP^(n_m).

Elements are sparse mappings from exponent vectors to nonzero Python ints.
Every monomial with some exponent above its bound lies in the ideal, so
reduction simply deletes it.  Truncation is applied after every product.

Generators sit in polynomial degree 1 here; their cohomological degree is 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatchError, DomainError, ParseError, SpecMismatchError

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class RingSpec:
    """Truncation exponents ``(n_1, ..., n_m)``; repeats are allowed."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(n) for n in self.exponents)
        if not exps:
            raise DomainError("a ring needs at least one generator")
        if any(n < 1 for n in exps):
            raise DomainError(f"truncation exponents must be positive, got {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, *exponents: int) -> "RingSpec":
        return cls(tuple(exponents))

    @classmethod
    def parse(cls, text: str) -> "RingSpec":
        """Parse ``"1,2,3"``."""
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise ParseError(f"bad spec {text!r}: {exc}") from None

    @property
    def m(self) -> int:
        return len(self.exponents)

    @property
    def rank(self) -> int:
        """Rank of R as a free abelian group, the size of the monomial box."""
        return math.prod(n + 1 for n in self.exponents)

    @property
    def top_degree(self) -> int:
        return sum(self.exponents)

    def admits(self, exps: Monomial) -> bool:
        return all(e <= n for e, n in zip(exps, self.exponents))

    def to_data(self) -> dict:
        return {"exponents": list(self.exponents)}

    @classmethod
    def from_data(cls, data: Mapping) -> "RingSpec":
        try:
            return cls(tuple(int(n) for n in data["exponents"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad spec record: {exc}") from None

    def __str__(self):
        return ",".join(map(str, self.exponents))


def grlex_key(exps: Monomial):
    """Sort key putting higher degree first, then lexicographically larger."""
    return (-sum(exps), tuple(-e for e in exps))


def _check_monomial(exps: Sequence[int], spec: RingSpec) -> Monomial:
    if len(exps) != spec.m:
        raise DimensionMismatchError(
            f"exponent vector {tuple(exps)} has length {len(exps)}, ring has {spec.m} generators"
        )
    exps = tuple(int(e) for e in exps)
    if any(e < 0 for e in exps):
        raise DomainError(f"negative exponent in {exps}")
    return exps


class RingElement:
    """Immutable element of R in canonical form.

    ``terms`` maps exponent vectors to nonzero coefficients and iterates in
    descending graded-lexicographic order.  The zero element has no terms.
    """

    __slots__ = ("spec", "_terms", "_hash")

    def __init__(self, spec: RingSpec, terms: Mapping[Monomial, int] | None = None):
        # Trusts its input; use reduce() for anything not already canonical.
        self.spec = spec
        items = sorted((terms or {}).items(), key=lambda kv: grlex_key(kv[0]))
        self._terms = dict(items)
        self._hash = None

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    @classmethod
    def zero(cls, spec: RingSpec) -> "RingElement":
        return cls(spec)

    @classmethod
    def one(cls, spec: RingSpec) -> "RingElement":
        return cls(spec, {(0,) * spec.m: 1})

    @classmethod
    def constant(cls, spec: RingSpec, c: int) -> "RingElement":
        return reduce({(0,) * spec.m: int(c)}, spec)

    @classmethod
    def generator(cls, spec: RingSpec, i: int) -> "RingElement":
        """The class ``x_{i+1}`` (``i`` is 0-based)."""
        if not 0 <= i < spec.m:
            raise DimensionMismatchError(f"generator index {i} out of range for {spec.m} generators")
        exps = [0] * spec.m
        exps[i] = 1
        return cls(spec, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.spec == other.spec and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, frozenset(self._terms.items())))
        return self._hash

    def degrees(self) -> set[int]:
        """Polynomial degrees present (cohomological degree is twice this)."""
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Polynomial degree of a nonzero homogeneous element, else None."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def cohomological_degree(self) -> int | None:
        d = self.degree()
        return None if d is None else 2 * d

    def linear_coefficients(self) -> tuple[int, ...] | None:
        """``(a_1, ..., a_m)`` if the element is ``sum a_j x_j``, else None."""
        coeffs = [0] * self.spec.m
        for exps, c in self._terms.items():
            if sum(exps) != 1:
                return None
            coeffs[exps.index(1)] = c
        return tuple(coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = RingElement.constant(self.spec, other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.spec, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = RingElement.constant(self.spec, other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def __pow__(self, k):
        return power(self, k)

    def __repr__(self):
        return f"RingElement({self.spec}, {format_element(self)!r})"

    def __str__(self):
        return format_element(self)

    def to_data(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self._terms.items()]

    @classmethod
    def from_data(cls, data: Iterable[Mapping], spec: RingSpec) -> "RingElement":
        raw: dict[Monomial, int] = {}
        try:
            for term in data:
                exps = tuple(int(e) for e in term["exponents"])
                coeff = term["coeff"]
                if not isinstance(coeff, str):
                    raise ParseError("coefficients are serialized as decimal strings")
                raw[exps] = raw.get(exps, 0) + int(coeff)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad element record: {exc}") from None
        return reduce(raw, spec)


def _same_spec(a: RingElement, b: RingElement) -> RingSpec:
    if a.spec != b.spec:
        raise SpecMismatchError(f"operands live in R({a.spec}) and R({b.spec})")
    return a.spec


def reduce(raw: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]], spec: RingSpec) -> RingElement:
    """Canonical residue of an arbitrary term mapping.

    ``raw`` may be a mapping or an iterable of ``(exponents, coeff)`` pairs;
    repeated monomials are merged.  Monomials outside the box and zero
    coefficients are dropped.
    """
    items = raw.items() if isinstance(raw, Mapping) else raw
    acc: dict[Monomial, int] = {}
    for exps, c in items:
        exps = _check_monomial(exps, spec)
        if not spec.admits(exps):
            continue
        acc[exps] = acc.get(exps, 0) + int(c)
    return RingElement(spec, {e: c for e, c in acc.items() if c})


def add(a: RingElement, b: RingElement) -> RingElement:
    spec = _same_spec(a, b)
    acc = dict(a._terms)
    for e, c in b._terms.items():
        s = acc.get(e, 0) + c
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)
    return RingElement(spec, acc)


def scale(a: RingElement, k: int) -> RingElement:
    if not k:
        return RingElement.zero(a.spec)
    return RingElement(a.spec, {e: k * c for e, c in a._terms.items()})


def mul(a: RingElement, b: RingElement) -> RingElement:
    spec = _same_spec(a, b)
    bounds = spec.exponents
    acc: dict[Monomial, int] = {}
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if any(x > n for x, n in zip(e, bounds)):
                continue
            acc[e] = acc.get(e, 0) + ca * cb
    return RingElement(spec, {e: c for e, c in acc.items() if c})


def power(a: RingElement, k: int) -> RingElement:
    """``a**k`` by iterated multiplication, truncating at every step."""
    if k < 0:
        raise DomainError("negative powers are not defined in R")
    result = RingElement.one(a.spec)
    for _ in range(k):
        if result.is_zero():
            break
        result = mul(result, a)
    return result


def degree_one_element(coeffs: Sequence[int], spec: RingSpec) -> RingElement:
    """The element ``sum_j a_j x_j``."""
    if len(coeffs) != spec.m:
        raise DimensionMismatchError(f"{len(coeffs)} coefficients for {spec.m} generators")
    terms = {}
    for j, a in enumerate(coeffs):
        if a:
            exps = [0] * spec.m
            exps[j] = 1
            terms[tuple(exps)] = int(a)
    return RingElement(spec, terms)


def verify_nonvanishing_powers(coeffs: Sequence[int], spec: RingSpec) -> dict[int, bool]:
    """For ``y = sum a_j x_j`` report, for each 0-based ``i`` with ``a_i != 0``,
    whether ``y**n_i`` is nonzero.

    Every entry is expected to be True; the powers are computed, not assumed.
    """
    y = degree_one_element(coeffs, spec)
    return {i: not power(y, spec.exponents[i]).is_zero() for i, a in enumerate(coeffs) if a}


def nilpotency_order(y: RingElement) -> int:
    """Smallest ``k >= 1`` with ``y**k == 0`` for a nonzero linear form ``y``."""
    if y.is_zero() or y.linear_coefficients() is None:
        raise DomainError("nilpotency_order needs a nonzero homogeneous element of degree one")
    limit = 1 + y.spec.top_degree
    p = y
    for k in range(2, limit + 1):
        p = mul(p, y)
        if p.is_zero():
            return k
    # y**(top_degree+1) lands above the top class, so this is unreachable.
    raise AssertionError(f"{y} survived past degree {limit}")


def format_element(a: RingElement) -> str:
    """Human-readable form such as ``x1^2 - 3*x1*x2 + 1``."""
    if a.is_zero():
        return "0"
    parts = []
    for exps, c in a._terms.items():
        factors = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exps) if e]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)
