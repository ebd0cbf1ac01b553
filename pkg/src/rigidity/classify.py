"""Graded automorphisms of R as signed permutations.

Every graded automorphism of R sends each ``x_i`` to ``+-x_sigma(i)`` with
``n_i = n_sigma(i)``.  This module makes that statement checkable: it computes
degree profiles, reads signed permutations off matrices, enumerates
automorphisms exhaustively inside a bounded box, and cross-checks the
enumeration against the normal form and the closed-form group order.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from . import kernels
from .errors import DomainError, RejectedInputError, SearchSpaceTooLargeError
from .morphism import LinearSubstitution, Matrix, is_graded_automorphism, is_well_defined_endomorphism
from .ring import RingSpec

DEFAULT_CEILING = 10**8

NOT_MONOMIAL = "not-monomial-matrix"
NOT_UNIT = "entry-not-unit"
PROFILE_VIOLATION = "profile-violation"


@dataclass(frozen=True)
class DegreeProfile:
    """Distinct exponents ``N_1 > ... > N_k`` and the index blocks
    ``J_l = {i : n_i = N_l}`` (0-based).  ``lower_union[l]`` collects the
    indices whose exponent is strictly below ``N_l``."""

    distinct: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    lower_union: tuple[frozenset[int], ...]

    def block_of(self, i: int) -> int:
        for l, block in enumerate(self.blocks):
            if i in block:
                return l
        raise IndexError(i)


def degree_profile(spec: RingSpec) -> DegreeProfile:
    distinct = tuple(sorted(set(spec.exponents), reverse=True))
    blocks = tuple(tuple(i for i, n in enumerate(spec.exponents) if n == big) for big in distinct)
    lower = tuple(
        frozenset(i for i, n in enumerate(spec.exponents) if n < big) for big in distinct
    )
    return DegreeProfile(distinct, blocks, lower)


@dataclass(frozen=True)
class SignedPermutation:
    """``psi(x_i) = signs[i] * x_{sigma[i]}`` with 0-based ``sigma``."""

    sigma: tuple[int, ...]
    signs: tuple[int, ...]
    spec: RingSpec

    def __post_init__(self):
        m = self.spec.m
        if sorted(self.sigma) != list(range(m)) or len(self.signs) != m:
            raise DomainError(f"{self.sigma} is not a permutation of {m} indices")
        if any(s not in (1, -1) for s in self.signs):
            raise DomainError(f"signs must be +-1, got {self.signs}")
        n = self.spec.exponents
        if any(n[i] != n[self.sigma[i]] for i in range(m)):
            raise DomainError(f"{self.sigma} mixes factors of different dimension in R({self.spec})")

    @classmethod
    def identity(cls, spec: RingSpec) -> "SignedPermutation":
        return cls(tuple(range(spec.m)), (1,) * spec.m, spec)

    def to_substitution(self) -> LinearSubstitution:
        m = self.spec.m
        rows = tuple(
            tuple(self.signs[i] if j == self.sigma[i] else 0 for j in range(m)) for i in range(m)
        )
        return LinearSubstitution(rows, self.spec)

    def inverse(self) -> "SignedPermutation":
        # psi(x_i) = e_i x_s(i)  =>  psi^-1(x_s(i)) = e_i x_i
        m = self.spec.m
        sigma = [0] * m
        signs = [0] * m
        for i, (s, e) in enumerate(zip(self.sigma, self.signs)):
            sigma[s] = i
            signs[s] = e
        return SignedPermutation(tuple(sigma), tuple(signs), self.spec)

    def then(self, outer: "SignedPermutation") -> "SignedPermutation":
        """``outer o self`` as a signed permutation."""
        sigma = tuple(outer.sigma[s] for s in self.sigma)
        signs = tuple(e * outer.signs[s] for s, e in zip(self.sigma, self.signs))
        return SignedPermutation(sigma, signs, self.spec)


def signed_permutation_or_reason(psi: LinearSubstitution) -> tuple[SignedPermutation | None, str | None]:
    """Read ``psi`` as a signed permutation, or say why it is not one.

    Reason codes are :data:`NOT_MONOMIAL`, :data:`NOT_UNIT` and
    :data:`PROFILE_VIOLATION`.
    """
    m = psi.m
    sigma = []
    signs = []
    for row in psi.matrix:
        nonzero = [j for j, x in enumerate(row) if x]
        if len(nonzero) != 1:
            return None, NOT_MONOMIAL
        j = nonzero[0]
        if row[j] not in (1, -1):
            return None, NOT_UNIT
        sigma.append(j)
        signs.append(row[j])
    if len(set(sigma)) != m:
        return None, NOT_MONOMIAL
    n = psi.spec.exponents
    if any(n[i] != n[sigma[i]] for i in range(m)):
        return None, PROFILE_VIOLATION
    return SignedPermutation(tuple(sigma), tuple(signs), psi.spec), None


def as_signed_permutation(psi: LinearSubstitution) -> SignedPermutation | None:
    return signed_permutation_or_reason(psi)[0]


def automorphism_group_order(spec: RingSpec) -> int:
    """``2^m * prod_l |J_l|!``: sign choices times block-preserving permutations."""
    return 2**spec.m * math.prod(math.factorial(len(b)) for b in degree_profile(spec).blocks)


def box_size(spec: RingSpec, bound: int) -> int:
    return (2 * bound + 1) ** (spec.m * spec.m)


def pruned_size(spec: RingSpec, bound: int) -> int:
    """Search space left after fixing the entries with ``n_i < n_j`` to zero."""
    n = spec.exponents
    free = sum(1 for i in range(spec.m) for j in range(spec.m) if n[i] >= n[j])
    return (2 * bound + 1) ** free


@dataclass(frozen=True)
class ScanResult:
    visited: int
    automorphisms: tuple[Matrix, ...]
    endomorphisms: tuple[Matrix, ...]


def _unflatten(flat, m) -> Matrix:
    return tuple(tuple(flat[i * m:(i + 1) * m]) for i in range(m))


def scan(spec: RingSpec, bound: int, pruning: bool = True, *, collect_endomorphisms: bool = False,
         ceiling: int = DEFAULT_CEILING) -> ScanResult:
    """Run the exhaustive box search and return canonically sorted matrices."""
    if bound < 0:
        raise DomainError("bound must be nonnegative")
    size = pruned_size(spec, bound) if pruning else box_size(spec, bound)
    if size > ceiling:
        raise SearchSpaceTooLargeError(size, ceiling)
    visited, autos, endos = kernels.scan_box(spec.exponents, bound, pruning, collect_endomorphisms)
    m = spec.m
    return ScanResult(
        visited,
        tuple(_unflatten(f, m) for f in sorted(autos)),
        tuple(_unflatten(f, m) for f in sorted(endos)),
    )


def enumerate_automorphisms(spec: RingSpec, bound: int = 1, pruning: bool = True,
                            ceiling: int = DEFAULT_CEILING) -> list[LinearSubstitution]:
    """All graded automorphisms with entries in ``[-bound, bound]``, sorted
    row-major lexicographically.  Pruning never changes the result."""
    result = scan(spec, bound, pruning, ceiling=ceiling)
    return [LinearSubstitution(mat, spec) for mat in result.automorphisms]


@dataclass(frozen=True)
class BlockWitness:
    """``permutation[a]`` is the original index placed at position ``a``;
    ``conjugate[a][b] = B[permutation[a]][permutation[b]]``."""

    permutation: tuple[int, ...]
    conjugate: Matrix
    diagonal_blocks: tuple[Matrix, ...]
    verdict: bool


def block_triangular_witness(psi: LinearSubstitution) -> BlockWitness:
    check = is_well_defined_endomorphism(psi)
    if not check:
        raise RejectedInputError(f"not a well-defined endomorphism: {check.explain(psi)}")
    n = psi.spec.exponents
    m = psi.m
    perm = tuple(sorted(range(m), key=lambda i: -n[i]))  # stable on ties
    b = psi.matrix
    conj = tuple(tuple(b[perm[r]][perm[c]] for c in range(m)) for r in range(m))
    verdict = all(
        conj[r][c] == 0 for r in range(m) for c in range(m) if n[perm[r]] < n[perm[c]]
    )
    diag = []
    for block in degree_profile(psi.spec).blocks:
        diag.append(tuple(tuple(b[i][j] for j in block) for i in block))
    return BlockWitness(perm, conj, tuple(diag), verdict)


@dataclass
class StructureReport:
    spec: RingSpec
    bound: int
    candidates_scanned: int
    automorphisms_found: int
    predicted_order: int
    biconditional_holds: bool
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def counts_agree(self) -> bool:
        return self.bound < 1 or self.automorphisms_found == self.predicted_order

    def to_data(self) -> dict:
        return {
            "spec": self.spec.to_data(),
            "bound": self.bound,
            "candidates_scanned": self.candidates_scanned,
            "automorphisms_found": self.automorphisms_found,
            "predicted_order": self.predicted_order,
            "biconditional_holds": self.biconditional_holds,
            "counterexamples": self.counterexamples,
        }

    @classmethod
    def from_data(cls, data: dict) -> "StructureReport":
        return cls(
            RingSpec.from_data(data["spec"]),
            int(data["bound"]),
            int(data["candidates_scanned"]),
            int(data["automorphisms_found"]),
            int(data["predicted_order"]),
            bool(data["biconditional_holds"]),
            list(data["counterexamples"]),
        )


def verify_structure_theorem(spec: RingSpec, bound: int = 1, pruning: bool = False,
                             ceiling: int = DEFAULT_CEILING) -> StructureReport:
    """Check ``automorphism <=> signed permutation`` on every matrix of the box.

    The automorphism side comes from the scan kernel.  Wherever either side
    is true, the generic ring-arithmetic predicate is evaluated as well, so a
    kernel bug shows up as a counterexample rather than silently agreeing.
    """
    size = box_size(spec, bound)
    if size > ceiling:
        raise SearchSpaceTooLargeError(size, ceiling)
    result = scan(spec, bound, pruning, ceiling=ceiling)
    autos = set(result.automorphisms)
    m = spec.m
    counterexamples = []
    for flat in itertools.product(range(-bound, bound + 1), repeat=m * m):
        mat = _unflatten(flat, m)
        in_scan = mat in autos
        sp, _ = signed_permutation_or_reason(LinearSubstitution(mat, spec))
        if not in_scan and sp is None:
            continue
        generic = is_graded_automorphism(LinearSubstitution(mat, spec))
        if not (in_scan == generic == (sp is not None)):
            counterexamples.append({
                "matrix": [list(r) for r in mat],
                "scan_automorphism": in_scan,
                "automorphism": generic,
                "signed_permutation": sp is not None,
            })
    return StructureReport(
        spec=spec,
        bound=bound,
        candidates_scanned=size,
        automorphisms_found=len(autos),
        predicted_order=automorphism_group_order(spec),
        biconditional_holds=not counterexamples,
        counterexamples=counterexamples,
    )
