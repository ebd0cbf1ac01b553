import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rigidity.classify import (
    NOT_MONOMIAL,
    NOT_UNIT,
    PROFILE_VIOLATION,
    SignedPermutation,
    StructureReport,
    as_signed_permutation,
    automorphism_group_order,
    block_triangular_witness,
    degree_profile,
    enumerate_automorphisms,
    scan,
    signed_permutation_or_reason,
    verify_structure_theorem,
)
from rigidity.errors import DomainError, RejectedInputError, SearchSpaceTooLargeError
from rigidity.morphism import LinearSubstitution, compose, is_graded_automorphism
from rigidity.ring import RingSpec

from conftest import brute_force_automorphisms, specs


def sub(rows, *exps):
    return LinearSubstitution(rows, RingSpec(exps))


class TestDegreeProfile:
    def test_single_block(self):
        p = degree_profile(RingSpec.of(1, 1))
        assert p.distinct == (1,) and p.blocks == ((0, 1),)

    def test_decreasing(self):
        p = degree_profile(RingSpec.of(1, 2))
        assert p.distinct == (2, 1) and p.blocks == ((1,), (0,))
        assert p.lower_union == (frozenset({0}), frozenset())

    def test_mixed(self):
        p = degree_profile(RingSpec.of(3, 1, 3, 2))
        assert p.distinct == (3, 2, 1)
        assert p.blocks == ((0, 2), (3,), (1,))
        assert p.lower_union[0] == {1, 3}

    @given(specs(max_m=5, max_n=4))
    def test_blocks_partition(self, spec):
        p = degree_profile(spec)
        flat = [i for b in p.blocks for i in b]
        assert sorted(flat) == list(range(spec.m))
        assert all(b for b in p.blocks)
        assert list(p.distinct) == sorted(set(p.distinct), reverse=True)
        for big, block, lower in zip(p.distinct, p.blocks, p.lower_union):
            assert all(spec.exponents[i] == big for i in block)
            assert lower == {i for i in range(spec.m) if spec.exponents[i] < big}


class TestSignedPermutation:
    def test_identity(self):
        sp = as_signed_permutation(LinearSubstitution.identity(RingSpec.of(2, 2, 1)))
        assert sp.sigma == (0, 1, 2) and sp.signs == (1, 1, 1)

    def test_signed_swap(self):
        sp = as_signed_permutation(sub(((0, -1), (1, 0)), 1, 1))
        assert sp.sigma == (1, 0) and sp.signs == (-1, 1)

    @pytest.mark.parametrize("rows, exps, reason", [
        (((0, 1), (1, 0)), (1, 2), PROFILE_VIOLATION),
        (((1, 1), (0, 1)), (1, 1), NOT_MONOMIAL),
        (((0, 0), (0, 1)), (1, 1), NOT_MONOMIAL),
        (((0, 1), (0, 1)), (1, 1), NOT_MONOMIAL),
        (((2, 0), (0, 1)), (1, 1), NOT_UNIT),
    ])
    def test_absent_with_reason(self, rows, exps, reason):
        assert signed_permutation_or_reason(sub(rows, *exps)) == (None, reason)

    def test_invariant_enforced(self):
        with pytest.raises(DomainError):
            SignedPermutation((1, 0), (1, 1), RingSpec.of(1, 2))

    @given(st.sampled_from([(1, 1, 1), (2, 1, 2), (1, 2, 3)]), st.data())
    def test_group_operations_match_matrices(self, exps, data):
        spec = RingSpec(exps)
        autos = enumerate_automorphisms(spec)
        p = as_signed_permutation(data.draw(st.sampled_from(autos)))
        q = as_signed_permutation(data.draw(st.sampled_from(autos)))
        assert p.then(q).to_substitution() == compose(q.to_substitution(), p.to_substitution())
        ident = LinearSubstitution.identity(spec)
        assert compose(p.inverse().to_substitution(), p.to_substitution()) == ident
        assert compose(p.to_substitution(), p.inverse().to_substitution()) == ident


class TestEnumeration:
    def test_two_points(self):
        autos = enumerate_automorphisms(RingSpec.of(1, 1), 1)
        assert len(autos) == 8
        assert all(as_signed_permutation(a) for a in autos)
        # oracle: brute force over all 81 candidates
        assert [a.matrix for a in autos] == sorted(brute_force_automorphisms(RingSpec.of(1, 1), 1))

    def test_unequal_dimensions(self):
        spec = RingSpec.of(1, 2)
        autos = enumerate_automorphisms(spec, 2, pruning=False)
        expected = sorted(brute_force_automorphisms(spec, 2))
        assert [a.matrix for a in autos] == expected
        assert expected == [((s, 0), (0, t)) for s in (-1, 1) for t in (-1, 1)]

    def test_single_generator(self):
        spec = RingSpec.of(2)
        assert [a.matrix for a in enumerate_automorphisms(spec, 3)] == [((-1,),), ((1,),)]
        assert sorted(brute_force_automorphisms(spec, 3)) == [((-1,),), ((1,),)]

    def test_canonical_order(self):
        autos = enumerate_automorphisms(RingSpec.of(1, 1, 1), 1)
        flats = [a.flat() for a in autos]
        assert flats == sorted(flats)

    @pytest.mark.parametrize("exps, bound", [
        (e, b) for m in (1, 2) for e in itertools.product((1, 2, 3), repeat=m) for b in (1, 2)
    ] + [(e, 1) for e in itertools.product((1, 2, 3), repeat=3)])
    def test_pruning_equivalence(self, exps, bound):
        spec = RingSpec(exps)
        assert enumerate_automorphisms(spec, bound, True) == enumerate_automorphisms(spec, bound, False)

    def test_ceiling(self):
        with pytest.raises(SearchSpaceTooLargeError) as info:
            enumerate_automorphisms(RingSpec.of(1, 1, 1, 1), 2, pruning=False)
        assert info.value.size == 5**16
        # pruning shrinks (1,2,3,4) to 5^10 free entries
        assert len(enumerate_automorphisms(RingSpec.of(1, 2, 3, 4), 2, pruning=True)) == 16

    def test_ceiling_is_configurable(self):
        with pytest.raises(SearchSpaceTooLargeError):
            enumerate_automorphisms(RingSpec.of(1, 1), 1, pruning=False, ceiling=80)

    @pytest.mark.parametrize("exps", [(1, 1), (1, 2), (2, 2), (1, 1, 1), (1, 1, 2), (1, 2, 3), (2, 1, 2)])
    def test_group_law(self, exps):
        spec = RingSpec(exps)
        autos = enumerate_automorphisms(spec)
        group = set(autos)
        assert len(group) == automorphism_group_order(spec)
        for a in autos:
            assert LinearSubstitution(as_signed_permutation(a).inverse().to_substitution().matrix, spec) in group
            for b in autos:
                assert compose(a, b) in group


class TestGroupOrder:
    @pytest.mark.parametrize("exps, order", [((1, 1), 8), ((1, 2), 4), ((1, 1, 2), 16), ((2, 2, 2), 48)])
    def test_values(self, exps, order):
        assert automorphism_group_order(RingSpec(exps)) == order

    def test_matches_brute_force(self):
        for exps in [(1, 1), (1, 2), (2,), (1, 1, 2)]:
            spec = RingSpec(exps)
            assert len(brute_force_automorphisms(spec, 1)) == automorphism_group_order(spec)


class TestBlockWitness:
    def test_sorted_spec(self):
        for psi in [LinearSubstitution.identity(RingSpec.of(2, 1)), sub(((1, 0), (0, -1)), 2, 1),
                    sub(((2, 0), (0, 0)), 2, 1)]:
            w = block_triangular_witness(psi)
            assert w.permutation == (0, 1) and w.verdict

    def test_unsorted_spec(self):
        w = block_triangular_witness(sub(((1, 0), (0, 1)), 1, 2))
        assert w.permutation == (1, 0)
        assert w.conjugate == ((1, 0), (0, 1)) and w.verdict
        w = block_triangular_witness(sub(((-1, 0), (0, 1)), 1, 2))
        assert w.permutation == (1, 0) and w.conjugate == ((1, 0), (0, -1)) and w.verdict

    def test_stable_on_ties(self):
        w = block_triangular_witness(LinearSubstitution.identity(RingSpec.of(1, 3, 1, 3)))
        assert w.permutation == (1, 3, 0, 2)

    def test_diagonal_blocks(self):
        psi = sub(((0, 1, 0), (1, 0, 0), (0, 0, -1)), 2, 2, 1)
        w = block_triangular_witness(psi)
        assert w.diagonal_blocks == (((0, 1), (1, 0)), ((-1,),))

    def test_rejects_ill_defined(self):
        with pytest.raises(RejectedInputError):
            block_triangular_witness(sub(((0, 1), (1, 0)), 1, 2))

    @pytest.mark.parametrize("exps", [(1, 2), (2, 1, 3), (1, 1, 2), (3, 1, 2)])
    def test_every_endomorphism(self, exps):
        spec = RingSpec(exps)
        for mat in scan(spec, 1, pruning=False, collect_endomorphisms=True).endomorphisms:
            assert block_triangular_witness(LinearSubstitution(mat, spec)).verdict


class TestStructureTheorem:
    def test_two_points(self):
        report = verify_structure_theorem(RingSpec.of(1, 1), 2)
        assert report.candidates_scanned == 625
        assert report.automorphisms_found == 8 == report.predicted_order
        assert report.biconditional_holds and report.counterexamples == []

    @pytest.mark.parametrize("exps, found", [((1, 1, 1), 48), ((1, 2, 3), 8)])
    def test_three_factors(self, exps, found):
        report = verify_structure_theorem(RingSpec(exps), 1)
        assert report.candidates_scanned == 3**9
        assert report.automorphisms_found == found == report.predicted_order
        assert report.biconditional_holds

    def test_pruning_does_not_change_report(self):
        spec = RingSpec.of(2, 1, 2)
        assert verify_structure_theorem(spec, 1, True) == verify_structure_theorem(spec, 1, False)

    def test_bound_zero(self):
        report = verify_structure_theorem(RingSpec.of(1, 1), 0)
        assert report.candidates_scanned == 1 and report.automorphisms_found == 0
        assert report.biconditional_holds and report.counts_agree

    def test_refuses_large_box(self):
        with pytest.raises(SearchSpaceTooLargeError):
            verify_structure_theorem(RingSpec.of(1, 1, 1, 1), 2)

    def test_detects_a_lying_kernel(self, monkeypatch):
        from rigidity import classify

        def bad_scan(exponents, bound, pruning, collect_endomorphisms=False):
            return 1, [(1, 1, 0, 1)], []

        monkeypatch.setattr(classify.kernels, "scan_box", bad_scan)
        report = verify_structure_theorem(RingSpec.of(1, 1), 1)
        assert not report.biconditional_holds
        assert {"matrix": [[1, 1], [0, 1]], "scan_automorphism": True, "automorphism": False,
                "signed_permutation": False} in report.counterexamples

    def test_report_round_trip(self):
        report = verify_structure_theorem(RingSpec.of(1, 2), 1)
        assert StructureReport.from_data(report.to_data()) == report


def test_normal_form_is_sound():
    # every signed permutation respecting the profile is an automorphism
    for exps in [(1, 1, 2), (2, 2, 2), (1, 3)]:
        spec = RingSpec(exps)
        for sigma in itertools.permutations(range(spec.m)):
            for signs in itertools.product((1, -1), repeat=spec.m):
                try:
                    sp = SignedPermutation(sigma, signs, spec)
                except DomainError:
                    continue
                assert is_graded_automorphism(sp.to_substitution())
