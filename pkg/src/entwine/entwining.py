"""Entwining structures: the four compatibility identities, the bijection with
module/comodule structure-map pairs on A (x) C and C (x) A, the Hopf-case
formulas, and the entwined-module condition.

Sweedler-notation identities are compiled to matrix composites here, once, on
the library's fixed row-major tensor bases; every other module reuses these
composites instead of re-deriving index arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AxiomViolation, DimensionMismatch, NotInvertibleError
from .exactlin import Matrix, flip_map, kron, tensor_permutation
from .structures import (
    AxiomCheck,
    ComoduleAlgebra,
    FiniteAlgebra,
    FiniteCoalgebra,
    HopfAlgebra,
    RightComodule,
    RightModule,
    ValidationReport,
    residual_check,
    coaction_algebra_map_checks,
    validate_comodule,
    validate_module,
)


@dataclass(frozen=True)
class EntwiningStructure:
    """(A, C, psi) with psi: C (x) A -> A (x) C stored over the tensor basis."""

    algebra: FiniteAlgebra
    coalgebra: FiniteCoalgebra
    psi: Matrix

    def __post_init__(self):
        a, c = self.algebra.dim, self.coalgebra.dim
        if self.psi.rows != a * c or self.psi.cols != c * a:
            raise DimensionMismatch("psi is not (|A||C|) x (|C||A|)")


@dataclass(frozen=True)
class StructureMapPair:
    """Right action on A (x) C and right coaction on C (x) A, jointly encoding psi."""

    algebra: FiniteAlgebra
    coalgebra: FiniteCoalgebra
    mu: Matrix      # A (x) C (x) A -> A (x) C
    delta: Matrix   # C (x) A -> C (x) A (x) C


def validate_entwining(e: EntwiningStructure) -> ValidationReport:
    """The four defining identities, each with its exact residual matrix."""
    a, c = e.algebra, e.coalgebra
    m, u = a.mult_matrix, a.unit_matrix
    d, eps = c.comult_matrix, c.counit_matrix
    ia, ic = a.identity_matrix, c.identity_matrix
    psi = e.psi
    checks = (
        residual_check(
            "multiplication-compat",
            "psi(C (x) m) = (m (x) C)(A (x) psi)(psi (x) A)",
            psi @ kron(ic, m),
            kron(m, ic) @ kron(ia, psi) @ kron(psi, ia),
        ),
        residual_check(
            "unit-compat",
            "psi(C (x) unit) = unit (x) C",
            psi @ kron(ic, u),
            kron(u, ic),
        ),
        residual_check(
            "comultiplication-compat",
            "(A (x) coproduct)psi = (psi (x) C)(C (x) psi)(coproduct (x) A)",
            kron(ia, d) @ psi,
            kron(psi, ic) @ kron(ic, psi) @ kron(d, ia),
        ),
        residual_check(
            "counit-compat",
            "(A (x) counit)psi = counit (x) A",
            kron(ia, eps) @ psi,
            kron(eps, ia),
        ),
    )
    return ValidationReport("entwining structure", checks)


def flip_entwining(algebra: FiniteAlgebra, coalgebra: FiniteCoalgebra) -> EntwiningStructure:
    """The always-valid entwining psi(c (x) a) = a (x) c."""
    if algebra.field != coalgebra.field:
        raise DimensionMismatch("algebra and coalgebra over different fields")
    return EntwiningStructure(algebra, coalgebra, flip_map(coalgebra.dim, algebra.dim, algebra.field))


def hopf_entwining(h: HopfAlgebra, x: ComoduleAlgebra) -> EntwiningStructure:
    """psi(h (x) a) = a_(0) (x) h a_(1) for a comodule algebra over a Hopf algebra.

    Requires the coaction to be a unital algebra map; raises AxiomViolation
    otherwise.
    """
    if x.coalgebra != h.coalgebra:
        raise DimensionMismatch("comodule algebra does not coact through the Hopf coalgebra")
    bad = [chk for chk in coaction_algebra_map_checks(x, h.algebra) if not chk.ok]
    if bad:
        raise AxiomViolation(f"coaction is not an algebra map ({bad[0].name})", report=bad)
    a = x.algebra
    na, nh = a.dim, h.dim
    field = a.field
    ia = a.identity_matrix
    ih = h.algebra.identity_matrix
    mh = h.algebra.mult_matrix
    psi = kron(ia, mh) @ kron(flip_map(nh, na, field), ih) @ kron(ih, x.coaction)
    return EntwiningStructure(a, h.coalgebra, psi)


def invert_hopf_entwining(h: HopfAlgebra, x: ComoduleAlgebra) -> Matrix:
    """The exact inverse psi^{-1}(a (x) h) = h S^{-1}(a_(1)) (x) a_(0)."""
    sinv = h.antipode_inverse
    if sinv is None:
        raise NotInvertibleError("antipode is not invertible")
    a = x.algebra
    na, nh = a.dim, h.dim
    field = a.field
    ia = a.identity_matrix
    ih = h.algebra.identity_matrix
    reverse = tensor_permutation((na, nh, nh), (2, 1, 0), field)
    return kron(h.algebra.mult_matrix, ia) @ reverse @ kron(ia, kron(sinv, ih)) @ kron(x.coaction, ih)


def psi_to_structure_maps(e: EntwiningStructure) -> StructureMapPair:
    """mu = (m (x) C)(A (x) psi) and delta = (C (x) psi)(coproduct (x) A)."""
    report = validate_entwining(e)
    if not report.ok:
        raise AxiomViolation("input does not satisfy the entwining identities", report=report)
    a, c = e.algebra, e.coalgebra
    mu = kron(a.mult_matrix, c.identity_matrix) @ kron(a.identity_matrix, e.psi)
    delta = kron(c.identity_matrix, e.psi) @ kron(c.comult_matrix, a.identity_matrix)
    return StructureMapPair(a, c, mu, delta)


def validate_structure_maps(p: StructureMapPair) -> ValidationReport:
    """Bimodule/bicomodule axioms on A (x) C and C (x) A plus the compatibility glue."""
    a, c = p.algebra, p.coalgebra
    na, nc = a.dim, c.dim
    field = a.field
    m, u = a.mult_matrix, a.unit_matrix
    d, eps = c.comult_matrix, c.counit_matrix
    ia, ic = a.identity_matrix, c.identity_matrix
    iac = Matrix.identity(na * nc, field)
    ica = Matrix.identity(nc * na, field)
    checks = (
        residual_check(
            "right-action-associative",
            "mu(mu (x) A) = mu(A (x) C (x) m)",
            p.mu @ kron(p.mu, ia),
            p.mu @ kron(iac, m),
        ),
        residual_check("right-action-unital", "mu(A (x) C (x) unit) = id", p.mu @ kron(iac, u), iac),
        residual_check(
            "left-linear-over-m",
            "mu(m (x) C (x) A) = (m (x) C)(A (x) mu)",
            p.mu @ kron(m, kron(ic, ia)),
            kron(m, ic) @ kron(ia, p.mu),
        ),
        residual_check(
            "right-coaction-coassociative",
            "(delta (x) C)delta = (C (x) A (x) coproduct)delta",
            kron(p.delta, ic) @ p.delta,
            kron(ica, d) @ p.delta,
        ),
        residual_check("right-coaction-counital", "(C (x) A (x) counit)delta = id", kron(ica, eps) @ p.delta, ica),
        residual_check(
            "left-colinear-over-coproduct",
            "(coproduct (x) A (x) C)delta = (C (x) delta)(coproduct (x) A)",
            kron(d, kron(ia, ic)) @ p.delta,
            kron(ic, p.delta) @ kron(d, ia),
        ),
        residual_check(
            "pair-compatibility",
            "(counit (x) A (x) C)delta = mu(unit (x) C (x) A)",
            kron(eps, iac) @ p.delta,
            p.mu @ kron(u, ica),
        ),
    )
    return ValidationReport("structure-map pair", checks)


def structure_maps_to_psi(p: StructureMapPair) -> EntwiningStructure:
    """Recover psi two ways and insist they agree; the result is a valid entwining."""
    report = validate_structure_maps(p)
    if not report.ok:
        raise AxiomViolation("structure-map pair fails its axioms", report=report)
    a, c = p.algebra, p.coalgebra
    from_delta = kron(c.counit_matrix, Matrix.identity(a.dim * c.dim, a.field)) @ p.delta
    from_mu = p.mu @ kron(a.unit_matrix, Matrix.identity(c.dim * a.dim, a.field))
    difference = from_delta - from_mu
    if not difference.is_zero:
        raise AxiomViolation(
            "the two candidate entwining maps disagree",
            report=(AxiomCheck("psi-agreement", "(counit (x) A (x) C)delta = mu(unit (x) C (x) A)", difference, False),),
        )
    e = EntwiningStructure(a, c, from_delta)
    validation = validate_entwining(e)
    if not validation.ok:
        raise AxiomViolation("recovered map is not an entwining", report=validation)
    return e


def entwined_module_check(module: RightModule, comodule: RightComodule, e: EntwiningStructure) -> AxiomCheck:
    """Residual of coaction(v.a) = v_(0) psi(v_(1) (x) a) for one carrier."""
    if module.dim != comodule.dim:
        raise DimensionMismatch("module and comodule carriers differ")
    if module.over != e.algebra or comodule.over != e.coalgebra:
        raise DimensionMismatch("carrier structures do not match the entwining")
    nv = module.dim
    iv = Matrix.identity(nv, e.algebra.field)
    lhs = comodule.coaction @ module.action
    rhs = (
        kron(module.action, e.coalgebra.identity_matrix)
        @ kron(iv, e.psi)
        @ kron(comodule.coaction, e.algebra.identity_matrix)
    )
    return residual_check(
        "entwined-module",
        "coaction . action = (action (x) C)(V (x) psi)(coaction (x) A)",
        lhs,
        rhs,
    )


def validate_entwined_module(module: RightModule, comodule: RightComodule, e: EntwiningStructure) -> ValidationReport:
    """Module, comodule, and entwined-compatibility axioms for one carrier."""
    checks = (
        validate_module(module).checks
        + validate_comodule(comodule).checks
        + (entwined_module_check(module, comodule, e),)
    )
    return ValidationReport("entwined module", checks)
