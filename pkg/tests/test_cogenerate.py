import pytest

from entwine.catalogue import coset_coideal, group_algebra, self_extension
from entwine.cogenerate import (
    COGENERATES,
    DOES_NOT_COGENERATE,
    INCONCLUSIVE,
    chain_projection_matrix,
    cogeneration_check,
    coinvariant_intersection_check,
)
from entwine.errors import DimensionMismatch, NotCoideal
from entwine.exactlin import Subspace, kernel
from entwine.fields import QQ


@pytest.fixture(scope="module")
def s3_coideals():
    return (
        coset_coideal({"group": "S3"}, "(12)"),
        coset_coideal({"group": "S3"}, "(123)"),
    )


@pytest.fixture(scope="module")
def z4_coideal():
    return coset_coideal({"group": "Z4"}, "g2")


class TestChainMatrix:
    def test_single_projection_zero_coideal(self, z2_hopf):
        zero = Subspace.zero_subspace(2, QQ)
        w = chain_projection_matrix(z2_hopf.coalgebra, zero, zero, [1])
        assert w.is_identity

    def test_single_projection_kernel(self, z2_hopf):
        sub = coset_coideal({"group": "Z2"}, "g")
        w = chain_projection_matrix(z2_hopf.coalgebra, sub, sub, [1])
        assert kernel(w) == sub

    def test_s3_mixed_chain_shrinks_kernel(self, s3_hopf, s3_coideals):
        i1, i2 = s3_coideals
        single_1 = chain_projection_matrix(s3_hopf.coalgebra, i1, i2, [1])
        single_2 = chain_projection_matrix(s3_hopf.coalgebra, i1, i2, [2])
        mixed = chain_projection_matrix(s3_hopf.coalgebra, i1, i2, [1, 2])
        k1, k2, km = kernel(single_1), kernel(single_2), kernel(mixed)
        assert km.dim < k1.dim and km.dim < k2.dim

    def test_rejects_bad_chain(self, z2_hopf):
        zero = Subspace.zero_subspace(2, QQ)
        with pytest.raises(DimensionMismatch):
            chain_projection_matrix(z2_hopf.coalgebra, zero, zero, [])
        with pytest.raises(DimensionMismatch):
            chain_projection_matrix(z2_hopf.coalgebra, zero, zero, [3])

    def test_rejects_non_coideal(self, z2_hopf):
        bad = Subspace.from_spanning([[1, 0]], 2, QQ)
        with pytest.raises(NotCoideal):
            chain_projection_matrix(z2_hopf.coalgebra, bad, bad, [1])


class TestCogeneration:
    def test_s3_generating_subgroups(self, s3_hopf, s3_coideals):
        report = cogeneration_check(s3_hopf.coalgebra, *s3_coideals, cutoff=7)
        assert report.verdict == COGENERATES
        assert report.stabilized_at == 2
        assert report.final_kernel.dim == 0

    def test_z4_non_generating_subgroup(self, z4_coideal):
        h = group_algebra({"group": "Z4"})
        report = cogeneration_check(h.coalgebra, z4_coideal, z4_coideal)
        assert report.verdict == DOES_NOT_COGENERATE
        assert report.invariance_certified
        assert report.final_kernel.dim == 2

    def test_zero_coideals_cogenerate_at_length_one(self, z2_hopf):
        zero = Subspace.zero_subspace(2, QQ)
        report = cogeneration_check(z2_hopf.coalgebra, zero, zero)
        assert report.verdict == COGENERATES
        assert report.stabilized_at == 1

    def test_kernels_weakly_decreasing(self, s3_hopf, s3_coideals):
        report = cogeneration_check(s3_hopf.coalgebra, *s3_coideals, cutoff=3)
        dims = [k.dim for k in report.kernels_by_length]
        assert all(a >= b for a, b in zip(dims, dims[1:]))

    def test_cutoff_one_inconclusive_when_kernel_nonzero(self, s3_hopf, s3_coideals):
        report = cogeneration_check(s3_hopf.coalgebra, *s3_coideals, cutoff=1)
        assert report.verdict == INCONCLUSIVE
        assert report.final_kernel.dim > 0


class TestCoinvariantIntersection:
    def test_s3_equality(self, s3_hopf, s3_coideals):
        x = self_extension(s3_hopf)
        report = coinvariant_intersection_check(x, *s3_coideals, cutoff=7)
        assert report.inclusion_holds and report.equality_holds
        assert report.consistent
        assert report.full_coinvariants.dim == 1
        # the quotient by the normal subgroup keeps its three cosets invariant
        assert {s.dim for s in report.quotient_coinvariants} == {1, 3}

    def test_z4_strict_inclusion(self, z4_coideal):
        h = group_algebra({"group": "Z4"})
        x = self_extension(h)
        report = coinvariant_intersection_check(x, z4_coideal, z4_coideal)
        assert report.inclusion_holds
        assert not report.equality_holds
        assert report.consistent
        assert "hypothesis absent" in report.note
        assert report.full_coinvariants.dim == 1
        assert report.intersection.dim == 2

    def test_zero_coideal_collapses(self, z2_hopf, z2_self_extension):
        zero = Subspace.zero_subspace(2, QQ)
        report = coinvariant_intersection_check(z2_self_extension, zero, zero)
        assert report.equality_holds and report.inclusion_holds
        assert report.full_coinvariants == report.intersection
