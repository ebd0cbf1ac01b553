"""Seeded randomized property checks behind ``rigidity selfcheck``."""
from __future__ import annotations

import random

from .classify import as_signed_permutation, enumerate_automorphisms
from .factor import factor_isomorphism, realize
from .morphism import apply, compose
from .ring import RingElement, RingSpec, degree_one_element, nilpotency_order, reduce, verify_nonvanishing_powers


def random_element(spec: RingSpec, rng: random.Random, terms: int = 4, coeff: int = 9) -> RingElement:
    raw = []
    for _ in range(rng.randint(0, terms)):
        exps = tuple(rng.randint(0, n) for n in spec.exponents)
        raw.append((exps, rng.randint(-coeff, coeff)))
    return reduce(raw, spec)


def naive_product(a: RingElement, b: RingElement) -> dict:
    """Untruncated convolution of the term mappings."""
    out: dict = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


def run_selfcheck(spec: RingSpec, rng: random.Random, trials: int) -> list[tuple[str, bool]]:
    results = []

    ok = True
    for _ in range(trials):
        a, b, c = (random_element(spec, rng) for _ in range(3))
        ok &= a + b == b + a and a * b == b * a
        ok &= (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
        ok &= a * (b + c) == a * b + a * c
    results.append(("ring axioms", ok))

    ok = True
    for _ in range(trials):
        a, b = random_element(spec, rng), random_element(spec, rng)
        ok &= reduce(naive_product(a, b), spec) == a * b
    results.append(("product agrees with untruncated expansion", ok))

    ok = True
    for _ in range(trials):
        coeffs = [rng.randint(-9, 9) for _ in range(spec.m)]
        ok &= all(verify_nonvanishing_powers(coeffs, spec).values())
    results.append(("y^n_i nonzero whenever a_i nonzero", ok))

    ok = True
    for _ in range(trials):
        coeffs = [rng.choice([-1, 1]) * rng.randint(1, 9) for _ in range(spec.m)]
        ok &= nilpotency_order(degree_one_element(coeffs, spec)) == 1 + spec.top_degree
    results.append(("full-support nilpotency order is 1 + sum n_i", ok))

    autos = enumerate_automorphisms(spec, 1, pruning=True)
    ok = True
    for _ in range(trials):
        phi, h_star = rng.choice(autos), rng.choice(autos)
        a = random_element(spec, rng)
        ok &= apply(compose(phi, h_star), a) == apply(phi, apply(h_star, a))
        result = factor_isomorphism(phi, h_star)
        ok &= result.certified and realize(as_signed_permutation(result.g))[1] == result.g
    results.append(("factorization certificates and realizations", ok))
    return results
