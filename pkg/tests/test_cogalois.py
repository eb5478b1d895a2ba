from fractions import Fraction

import pytest

from entwine.catalogue import (
    coset_coideal,
    group_algebra,
    group_self_coextension,
    self_extension,
)
from entwine.cogalois import (
    canonical_coideal,
    coextension_check,
    coideal_checks,
    cotensor,
    dual_bundle_action_equivalence,
    dual_bundle_check,
    dual_uniqueness,
    hopf_coideal,
    is_coideal,
    quotient_coalgebra,
)
from entwine.entwining import validate_entwining
from entwine.errors import NotCharacter, NotCoideal
from entwine.exactlin import Matrix, Subspace, kron
from entwine.fields import GF, QQ
from entwine.structures import Character, ModuleCoalgebra, dualize, field_algebra

GF7 = GF(7)


def trivial_module_coalgebra(coalgebra):
    """A = k acting by scalars."""
    a = field_algebra(coalgebra.field)
    return ModuleCoalgebra(coalgebra, a, coalgebra.identity_matrix)


class TestCanonicalCoideal:
    def test_scalar_action_gives_zero(self, z2_hopf):
        x = trivial_module_coalgebra(z2_hopf.coalgebra)
        assert canonical_coideal(x).dim == 0

    def test_z2_self_action(self, z2_coextension):
        sub = canonical_coideal(z2_coextension)
        assert sub.dim == 1
        assert sub.basis == ((Fraction(1), Fraction(-1)),)  # spans g - 1

    def test_agrees_with_module_form_on_z2(self, z2_hopf, z2_coextension):
        assert canonical_coideal(z2_coextension) == hopf_coideal(
            z2_coextension, z2_hopf.algebra, z2_hopf.coalgebra
        )

    def test_sweedler_module_coideal(self, sweedler):
        x = group_self_coextension(sweedler)
        sub = hopf_coideal(x, sweedler.algebra, sweedler.coalgebra)
        assert sub.dim == 3  # spanned by g - 1, x, gx
        ok_counit, _ = coideal_checks(sweedler.coalgebra, sub)
        assert ok_counit.ok
        assert canonical_coideal(x) == sub

    def test_trivial_action_through_counit(self, z2_hopf):
        # act(c, h) = counit(h) c gives the zero coideal
        c = z2_hopf.coalgebra
        action = kron(c.identity_matrix, c.counit_matrix)
        x = ModuleCoalgebra(c, z2_hopf.algebra, action)
        assert hopf_coideal(x, z2_hopf.algebra, z2_hopf.coalgebra).dim == 0
        assert canonical_coideal(x).dim == 0


class TestQuotientCoalgebra:
    def test_zero_coideal_identity(self, z2_hopf):
        base, pi = quotient_coalgebra(z2_hopf.coalgebra, Subspace.zero_subspace(2, QQ))
        assert base.dim == 2 and pi.is_identity

    def test_z2_collapse(self, z2_hopf):
        sub = Subspace.from_spanning([[1, -1]], 2, QQ)
        base, pi = quotient_coalgebra(z2_hopf.coalgebra, sub)
        assert base.dim == 1
        # the image of a group-like is group-like
        assert base.comult[0][0][0] == QQ.one and base.counit[0] == QQ.one

    def test_s3_cosets(self, s3_hopf):
        sub = coset_coideal({"group": "S3"}, "(12)")
        base, pi = quotient_coalgebra(s3_hopf.coalgebra, sub)
        assert base.dim == 3

    def test_rejects_non_coideal(self, z2_hopf):
        with pytest.raises(NotCoideal):
            quotient_coalgebra(z2_hopf.coalgebra, Subspace.from_spanning([[0, 1]], 2, QQ))

    def test_coideal_checks_reject_bad_counit(self, z2_hopf):
        assert not is_coideal(z2_hopf.coalgebra, Subspace.from_spanning([[1, 0]], 2, QQ))


class TestCotensor:
    def test_trivial_base_full_space(self, z2_hopf):
        c = z2_hopf.coalgebra
        sub = Subspace.from_spanning([[1, -1]], 2, QQ)
        base, pi = quotient_coalgebra(c, sub)
        rc = kron(c.identity_matrix, pi) @ c.comult_matrix
        lc = kron(pi, c.identity_matrix) @ c.comult_matrix
        assert cotensor(rc, lc).dim == 4  # base is one-dimensional here

    def test_self_cotensor_of_group_coalgebra(self, z2_hopf):
        c = z2_hopf.coalgebra
        rc = c.comult_matrix
        lc = c.comult_matrix
        web = cotensor(rc, lc)
        assert web.dim == 2
        assert web.basis == (
            (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
        )  # spanned by 1 (x) 1 and g (x) g

    def test_z4_over_index_two_subgroup(self):
        h = group_algebra({"group": "Z4"})
        sub = coset_coideal({"group": "Z4"}, "g2")
        base, pi = quotient_coalgebra(h.coalgebra, sub)
        c = h.coalgebra
        rc = kron(c.identity_matrix, pi) @ c.comult_matrix
        lc = kron(pi, c.identity_matrix) @ c.comult_matrix
        assert cotensor(rc, lc).dim == 8


class TestCoextensionCheck:
    def test_z2_certificate(self, z2_coextension):
        cert = coextension_check(z2_coextension)
        assert cert.is_coextension and cert.checks.ok
        assert cert.base.dim == 1
        assert cert.cotensor.dim == 4  # all of C (x) C
        # cocan(g_i (x) g_j) = g_i (x) g_{i+j}, a permutation
        for row in cert.cocan.entries:
            assert sorted(row) == [0, 0, 0, 1]

    def test_z2_cotranslation_values(self, z2_coextension):
        cert = coextension_check(z2_coextension)
        tau = cert.cotranslation
        # cotensor here is all of C (x) C in basis order 1x1, 1xg, gx1, gxg;
        # cotranslation(g_i (x) g_j) = g_i^{-1} g_j = g_{i+j}
        assert tau.column(0) == (1, 0)
        assert tau.column(1) == (0, 1)
        assert tau.column(2) == (0, 1)
        assert tau.column(3) == (1, 0)

    def test_z2_dual_psi_formula(self, z2_coextension):
        cert = coextension_check(z2_coextension)
        psi = cert.psi.psi
        # psi(g_i (x) g_j) = g_j (x) g_{i+j}
        for i in range(2):
            for j in range(2):
                col = psi.column(i * 2 + j)
                expected = [Fraction(0)] * 4
                expected[j * 2 + (i + j) % 2] = Fraction(1)
                assert list(col) == expected

    def test_trivial_algebra_instance(self, z2_hopf):
        x = trivial_module_coalgebra(z2_hopf.coalgebra)
        cert = coextension_check(x)
        assert cert.is_coextension and cert.checks.ok
        assert cert.coideal.dim == 0
        # cocan: C -> C box_C C is the coproduct onto its image
        assert cert.cotensor.dim == 2
        assert cert.psi.psi.is_identity  # flip on C (x) k

    def test_sweedler_coextension(self, sweedler):
        x = group_self_coextension(sweedler)
        cert = coextension_check(x)
        assert cert.base.dim == 1
        assert cert.is_coextension and cert.checks.ok
        assert validate_entwining(cert.psi).ok

    def test_non_coextension_witness(self, z2_hopf):
        # C = k acted on by A = k[Z2] through the trivial character:
        # cocan: C (x) A (dim 2) -> C box C (dim 1) cannot be injective
        from entwine.structures import field_coalgebra

        c = field_coalgebra(QQ)
        action = Matrix.from_rows([[1, 1]], QQ)
        x = ModuleCoalgebra(c, z2_hopf.algebra, action)
        cert = coextension_check(x)
        assert not cert.is_coextension
        assert cert.rank == 1
        assert cert.witness is not None
        assert cert.psi is None

    def test_dual_uniqueness_gated(self, z2_hopf):
        from entwine.structures import field_coalgebra

        c = field_coalgebra(QQ)
        action = Matrix.from_rows([[1, 1]], QQ)
        cert = coextension_check(ModuleCoalgebra(c, z2_hopf.algebra, action))
        report = dual_uniqueness(cert)
        assert not report.applicable and report.unique is None


class TestDualUniqueness:
    def test_z2(self, z2_coextension):
        report = dual_uniqueness(coextension_check(z2_coextension))
        assert report.applicable and report.unique
        assert report.solution_space_dim == 0

    def test_trivial_algebra(self, z2_hopf):
        x = trivial_module_coalgebra(z2_hopf.coalgebra)
        report = dual_uniqueness(coextension_check(x))
        assert report.unique and report.solution_space_dim == 0


class TestDualBundle:
    def test_z2_with_counit_character(self, z2_hopf, z2_coextension):
        cert = coextension_check(z2_coextension)
        kappa = Character(z2_hopf.algebra, (1, 1))
        report = dual_bundle_check(cert.psi, kappa)
        assert report.is_bundle
        assert report.coideal.basis == ((Fraction(1), Fraction(-1)),)

    def test_flip_dimension_count(self, z2_hopf):
        from entwine.entwining import flip_entwining

        e = flip_entwining(z2_hopf.algebra, z2_hopf.coalgebra)
        kappa = Character(z2_hopf.algebra, (1, 1))
        report = dual_bundle_check(e, kappa)
        # induced action c.a = kappa(a) c gives I = 0, so the cotensor is
        # C box_C C of dim 2 while C (x) A has dim 4
        assert report.coideal.dim == 0
        assert not report.is_bundle

    def test_sweedler_with_counit_character(self, sweedler):
        x = group_self_coextension(sweedler)
        cert = coextension_check(x)
        kappa = Character(sweedler.algebra, tuple(sweedler.coalgebra.counit))
        report = dual_bundle_check(cert.psi, kappa)
        assert report.is_bundle
        assert report.coideal == cert.coideal

    def test_rejects_non_character(self, z2_hopf, z2_coextension):
        cert = coextension_check(z2_coextension)
        with pytest.raises(NotCharacter):
            dual_bundle_check(cert.psi, Character(z2_hopf.algebra, (1, 2)))


class TestDualBundleEquivalence:
    def test_z2_round_trip(self, z2_hopf, z2_coextension):
        cert = coextension_check(z2_coextension)
        kappa = Character(z2_hopf.algebra, (1, 1))
        report = dual_bundle_action_equivalence(cert.psi, kappa)
        assert report.applicable and report.ok
        assert report.action == z2_coextension.action  # recovered bit-exactly
        assert report.certificate.coideal == cert.coideal

    def test_trivial_instance(self, z2_hopf):
        x = trivial_module_coalgebra(z2_hopf.coalgebra)
        cert = coextension_check(x)
        kappa = Character(field_algebra(QQ), (1,))
        report = dual_bundle_action_equivalence(cert.psi, kappa)
        assert report.applicable and report.ok

    def test_gated_when_not_bundle(self, z2_hopf):
        from entwine.entwining import flip_entwining

        e = flip_entwining(z2_hopf.algebra, z2_hopf.coalgebra)
        report = dual_bundle_action_equivalence(e, Character(z2_hopf.algebra, (1, 1)))
        assert not report.applicable


class TestDualityCrossCheck:
    def test_dualized_extension_is_coextension(self, z2_hopf, z2_self_extension):
        from entwine.galois import galois_check

        primal = galois_check(z2_self_extension)
        assert primal.is_galois
        dual_c = dualize(z2_self_extension.algebra)
        dual_a = dualize(z2_self_extension.coalgebra)
        dual_action = z2_self_extension.coaction.transpose()
        dual_x = ModuleCoalgebra(dual_c, dual_a, dual_action)
        cert = coextension_check(dual_x)
        assert cert.is_coextension and cert.checks.ok
        # the dual canonical entwining map is the transpose of the primal one
        assert cert.psi.psi == primal.psi.psi.transpose()

    def test_dualized_gf7_extension(self):
        from entwine.galois import galois_check

        h = group_algebra({"group": "Z3"}, GF7)
        x = self_extension(h)
        primal = galois_check(x)
        dual_x = ModuleCoalgebra(dualize(x.algebra), dualize(x.coalgebra), x.coaction.transpose())
        cert = coextension_check(dual_x)
        assert cert.is_coextension
        assert cert.psi.psi == primal.psi.psi.transpose()
