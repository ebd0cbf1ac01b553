"""Degree-preserving linear substitutions of the generators of R.

A substitution is stored as an integer matrix ``B`` whose row ``i`` lists the
image of ``x_{i+1}``::

    psi(x_i) = sum_j B[i][j] * x_j

Composition follows from this convention: ``compose(outer, inner)`` has matrix
``inner.matrix @ outer.matrix`` so that applying it equals applying ``inner``
first and then ``outer`` to the result.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import kernels
from .errors import DimensionMismatchError, ParseError
from .ring import RingElement, RingSpec, degree_one_element, format_element, mul, power

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LinearSubstitution:
    matrix: Matrix
    spec: RingSpec

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        m = self.spec.m
        if len(rows) != m or any(len(r) != m for r in rows):
            raise DimensionMismatchError(
                f"substitution matrix must be {m}x{m} for R({self.spec}), got shape "
                f"{[len(r) for r in rows]}"
            )
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def identity(cls, spec: RingSpec) -> "LinearSubstitution":
        m = spec.m
        return cls(tuple(tuple(int(i == j) for j in range(m)) for i in range(m)), spec)

    @property
    def m(self) -> int:
        return self.spec.m

    def image(self, i: int) -> RingElement:
        """``psi(x_{i+1})`` as a ring element."""
        return degree_one_element(self.matrix[i], self.spec)

    def flat(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.matrix))

    def to_data(self) -> dict:
        return {
            "spec": self.spec.to_data(),
            "rows": [[str(x) for x in row] for row in self.matrix],
        }

    @classmethod
    def from_data(cls, data: Mapping) -> "LinearSubstitution":
        spec = RingSpec.from_data(data.get("spec", {}))
        try:
            rows = tuple(tuple(int(x) for x in row) for row in data["rows"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad matrix record: {exc}") from None
        return cls(rows, spec)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.matrix) + "]"


def apply(psi: LinearSubstitution, a: RingElement) -> RingElement:
    """Extend ``psi`` multiplicatively and apply it to ``a``."""
    if a.spec != psi.spec:
        raise DimensionMismatchError(f"substitution on R({psi.spec}) applied to element of R({a.spec})")
    spec = psi.spec
    images = [psi.image(i) for i in range(spec.m)]
    powers: dict[tuple[int, int], RingElement] = {}

    def image_power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = power(images[i], e)
        return powers[key]

    total: dict = {}
    for exps, c in a.terms.items():
        prod = RingElement.constant(spec, c)
        for i, e in enumerate(exps):
            if e:
                prod = mul(prod, image_power(i, e))
                if prod.is_zero():
                    break
        for mono, coeff in prod.terms.items():
            total[mono] = total.get(mono, 0) + coeff
    return RingElement(spec, {e: c for e, c in total.items() if c})


@dataclass(frozen=True)
class EndomorphismCheck:
    """Outcome of :func:`is_well_defined_endomorphism`.

    On failure ``index`` is the first (0-based) generator whose relation
    ``x_i^(n_i+1) = 0`` is not respected and ``residue`` is the nonzero value
    of ``psi(x_i)^(n_i+1)``.
    """

    ok: bool
    index: int | None = None
    residue: RingElement | None = None

    def __bool__(self):
        return self.ok

    def explain(self, psi: LinearSubstitution) -> str:
        if self.ok:
            return "every generator relation is preserved"
        n = psi.spec.exponents[self.index]
        return f"psi(x{self.index + 1})^{n + 1} = {format_element(self.residue)}"


def is_well_defined_endomorphism(psi: LinearSubstitution) -> EndomorphismCheck:
    for i, n in enumerate(psi.spec.exponents):
        residue = power(psi.image(i), n + 1)
        if not residue.is_zero():
            return EndomorphismCheck(False, i, residue)
    return EndomorphismCheck(True)


def determinant(psi: LinearSubstitution | Sequence[Sequence[int]]) -> int:
    """Exact determinant (fraction-free Bareiss elimination)."""
    rows = psi.matrix if isinstance(psi, LinearSubstitution) else psi
    return kernels.det_int(rows)


def cofactor_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Determinant by Laplace expansion along the first row.

    Exponential time; kept as an independent check of :func:`determinant`.
    """
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return int(rows[0][0])
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1:] for r in (tuple(row) for row in rows[1:])]
            total += (-1) ** j * a * cofactor_determinant(minor)
    return total


def is_graded_automorphism(psi: LinearSubstitution) -> bool:
    return abs(determinant(psi)) == 1 and bool(is_well_defined_endomorphism(psi))


def compose(outer: LinearSubstitution, inner: LinearSubstitution) -> LinearSubstitution:
    """The substitution ``outer o inner`` (apply ``inner`` first)."""
    if outer.spec != inner.spec:
        raise DimensionMismatchError(f"cannot compose maps of R({outer.spec}) and R({inner.spec})")
    m = outer.m
    a, b = inner.matrix, outer.matrix
    return LinearSubstitution(
        tuple(tuple(sum(a[i][k] * b[k][j] for k in range(m)) for j in range(m)) for i in range(m)),
        outer.spec,
    )
