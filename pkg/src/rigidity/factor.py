"""Realizing automorphisms by self-maps of a product of projective spaces, and
factoring a cohomology isomorphism through a given one.

Recipes are symbolic.  Permuting factors of equal dimension permutes the
generators; complex conjugation on a factor ``CP^n`` negates its degree-2
generator.  The induced substitution of a recipe is built from exactly these
two rules.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .classify import SignedPermutation, as_signed_permutation
from .errors import DomainError, InternalInconsistencyError, NotAnAutomorphismError, ParseError
from .morphism import LinearSubstitution, apply, compose, is_graded_automorphism
from .ring import RingElement, RingSpec


@dataclass(frozen=True)
class DiffeoRecipe:
    """Factor permutation (0-based, one-line) plus per-factor conjugation flags."""

    permutation: tuple[int, ...]
    conjugate: tuple[bool, ...]
    spec: RingSpec

    def __post_init__(self):
        m = self.spec.m
        if sorted(self.permutation) != list(range(m)) or len(self.conjugate) != m:
            raise DomainError(f"malformed recipe for {m} factors")
        n = self.spec.exponents
        if any(n[i] != n[s] for i, s in enumerate(self.permutation)):
            raise DomainError("a recipe may only permute factors of equal dimension")

    def induced(self) -> LinearSubstitution:
        """Pullback on generators: ``x_i -> (-1 if conjugated) * x_sigma(i)``."""
        signs = tuple(-1 if c else 1 for c in self.conjugate)
        return SignedPermutation(self.permutation, signs, self.spec).to_substitution()

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.permutation)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.permutation[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.permutation[nxt]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def describe(self) -> str:
        steps = []
        for cycle in self.cycles():
            labels = ",".join(str(i + 1) for i in cycle)
            steps.append(f"swap factors {labels}" if len(cycle) == 2 else f"cycle factors ({labels})")
        flagged = [str(i + 1) for i, c in enumerate(self.conjugate) if c]
        if flagged:
            noun = "factor" if len(flagged) == 1 else "factors"
            steps.append(f"conjugate {noun} {','.join(flagged)}")
        return "; ".join(steps) if steps else "identity"

    def to_data(self) -> dict:
        return {
            "permutation": [i + 1 for i in self.permutation],
            "conjugate": list(self.conjugate),
            "description": self.describe(),
        }

    @classmethod
    def from_data(cls, data: Mapping, spec: RingSpec) -> "DiffeoRecipe":
        try:
            perm = tuple(int(i) - 1 for i in data["permutation"])
            conj = tuple(data["conjugate"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad recipe record: {exc}") from None
        if not all(isinstance(c, bool) for c in conj):
            raise ParseError("conjugation flags must be booleans")
        return cls(perm, conj, spec)


def realize(psi: SignedPermutation) -> tuple[DiffeoRecipe, LinearSubstitution]:
    """Recipe whose induced map is ``psi``, and that induced map."""
    recipe = DiffeoRecipe(psi.sigma, tuple(s == -1 for s in psi.signs), psi.spec)
    return recipe, recipe.induced()


@dataclass(frozen=True)
class Factorization:
    """``g = phi o h_star`` is a signed permutation realized by ``recipe``, and
    ``f_star = g o h_star^-1`` reproduces ``phi``."""

    phi: LinearSubstitution
    h_star: LinearSubstitution
    g: LinearSubstitution
    recipe: DiffeoRecipe
    h_star_inverse: LinearSubstitution
    f_star: LinearSubstitution
    certified: bool

    def to_data(self) -> dict:
        def rows(sub):
            return [[str(x) for x in r] for r in sub.matrix]

        return {
            "spec": self.phi.spec.to_data(),
            "phi": rows(self.phi),
            "h_star": rows(self.h_star),
            "g": rows(self.g),
            "recipe": self.recipe.to_data(),
            "h_star_inverse": rows(self.h_star_inverse),
            "f_star": rows(self.f_star),
            "certificate": "verified" if self.certified else "failed",
        }


def factor_isomorphism(phi: LinearSubstitution, h_star: LinearSubstitution | None = None) -> Factorization:
    """Factor ``phi`` through ``h_star`` (identity when omitted).

    ``h_star`` stands for the map induced by an externally supplied
    diffeomorphism; it is input data, not something computed here.
    """
    if h_star is None:
        h_star = LinearSubstitution.identity(phi.spec)
    if phi.spec != h_star.spec:
        raise DomainError(f"phi acts on R({phi.spec}) but h_star on R({h_star.spec})")
    if not is_graded_automorphism(phi):
        raise NotAnAutomorphismError("phi is not an automorphism")
    if not is_graded_automorphism(h_star):
        raise NotAnAutomorphismError("h_star is not an automorphism")

    g = compose(phi, h_star)
    g_perm = as_signed_permutation(g)
    h_perm = as_signed_permutation(h_star)
    if g_perm is None or h_perm is None:
        raise InternalInconsistencyError(f"automorphism {g if g_perm is None else h_star} has no signed-permutation form")
    recipe, induced = realize(g_perm)
    if induced != g:
        raise InternalInconsistencyError(f"recipe {recipe.describe()} induces {induced}, expected {g}")

    h_inv = h_perm.inverse().to_substitution()
    f_star = compose(g, h_inv)
    spec = phi.spec
    certified = f_star == phi and all(
        apply(f_star, RingElement.generator(spec, i)) == apply(phi, RingElement.generator(spec, i))
        for i in range(spec.m)
    )
    if not certified:
        raise InternalInconsistencyError(f"(h^-1 o g)* = {f_star} differs from phi = {phi}")
    return Factorization(phi, h_star, g, recipe, h_inv, f_star, certified)
