"""Structure-constant models of algebras, coalgebras, Hopf algebras, modules
and comodules, with validators for every defining axiom.

Multiplication is stored as the tensor m[i][j][k] with
e_i . e_j = sum_k m[i][j][k] e_k, comultiplication as d[i][j][k] with
coproduct(e_i) = sum_{j,k} d[i][j][k] e_j (x) e_k.  Validators return residual
reports rather than failing fast, so a violated axiom comes back with the
exact witness matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import AxiomViolation, DimensionMismatch
from .exactlin import (
    Matrix,
    NotInvertible,
    column_matrix,
    kron,
    row_matrix,
    tensor_permutation,
    try_invert,
)
from .fields import FieldSpec, Scalar


@dataclass(frozen=True)
class AxiomCheck:
    """One verified identity: its name, the statement tested, and the residual."""

    name: str
    statement: str
    residual: Matrix | None
    ok: bool


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def residual_check(name: str, statement: str, lhs: Matrix, rhs: Matrix) -> AxiomCheck:
    residual = lhs - rhs
    return AxiomCheck(name, statement, residual, residual.is_zero)


@dataclass(frozen=True)
class FiniteAlgebra:
    """Associative unital algebra given by structure constants on a named basis."""

    dim: int
    basis_names: tuple[str, ...]
    mult: tuple[tuple[tuple[Scalar, ...], ...], ...]
    unit: tuple[Scalar, ...]
    field: FieldSpec

    def __post_init__(self):
        d = self.dim
        if len(self.basis_names) != d or len(self.unit) != d:
            raise DimensionMismatch("algebra basis/unit length disagrees with dim")
        if len(self.mult) != d or any(len(r) != d or any(len(c) != d for c in r) for r in self.mult):
            raise DimensionMismatch("multiplication tensor is not dim^3")

    @staticmethod
    def build(basis_names, mult, unit, field) -> "FiniteAlgebra":
        names = tuple(basis_names)
        d = len(names)
        tensor = tuple(
            tuple(tuple(field.coerce(mult[i][j][k]) for k in range(d)) for j in range(d)) for i in range(d)
        )
        return FiniteAlgebra(d, names, tensor, tuple(field.coerce(x) for x in unit), field)

    @cached_property
    def mult_matrix(self) -> Matrix:
        """m: A (x) A -> A on the row-major tensor basis."""
        d = self.dim
        ent = tuple(tuple(self.mult[i][j][k] for i in range(d) for j in range(d)) for k in range(d))
        return Matrix(d, d * d, ent, self.field)

    @cached_property
    def unit_matrix(self) -> Matrix:
        """eta: k -> A as a dim x 1 column."""
        return column_matrix(self.unit, self.field)

    @cached_property
    def identity_matrix(self) -> Matrix:
        return Matrix.identity(self.dim, self.field)

    def multiply(self, x, y) -> tuple[Scalar, ...]:
        """Product of two coordinate vectors."""
        return self.mult_matrix.apply(tuple(kron(column_matrix(x, self.field), column_matrix(y, self.field)).column(0)))

    def left_multiplication(self, x) -> Matrix:
        """The operator a |-> x . a."""
        return self.mult_matrix @ kron(column_matrix(x, self.field), self.identity_matrix)

    def right_multiplication(self, x) -> Matrix:
        """The operator a |-> a . x."""
        return self.mult_matrix @ kron(self.identity_matrix, column_matrix(x, self.field))


@dataclass(frozen=True)
class FiniteCoalgebra:
    """Coassociative counital coalgebra given by structure constants."""

    dim: int
    basis_names: tuple[str, ...]
    comult: tuple[tuple[tuple[Scalar, ...], ...], ...]
    counit: tuple[Scalar, ...]
    field: FieldSpec

    def __post_init__(self):
        d = self.dim
        if len(self.basis_names) != d or len(self.counit) != d:
            raise DimensionMismatch("coalgebra basis/counit length disagrees with dim")
        if len(self.comult) != d or any(len(r) != d or any(len(c) != d for c in r) for r in self.comult):
            raise DimensionMismatch("comultiplication tensor is not dim^3")

    @staticmethod
    def build(basis_names, comult, counit, field) -> "FiniteCoalgebra":
        names = tuple(basis_names)
        d = len(names)
        tensor = tuple(
            tuple(tuple(field.coerce(comult[i][j][k]) for k in range(d)) for j in range(d)) for i in range(d)
        )
        return FiniteCoalgebra(d, names, tensor, tuple(field.coerce(x) for x in counit), field)

    @cached_property
    def comult_matrix(self) -> Matrix:
        """coproduct: C -> C (x) C on the row-major tensor basis."""
        d = self.dim
        ent = tuple(tuple(self.comult[i][j][k] for i in range(d)) for j in range(d) for k in range(d))
        return Matrix(d * d, d, ent, self.field)

    @cached_property
    def counit_matrix(self) -> Matrix:
        """counit: C -> k as a 1 x dim row."""
        return row_matrix(self.counit, self.field)

    @cached_property
    def identity_matrix(self) -> Matrix:
        return Matrix.identity(self.dim, self.field)


@dataclass(frozen=True)
class HopfAlgebra:
    """A bialgebra on one carrier with an antipode."""

    algebra: FiniteAlgebra
    coalgebra: FiniteCoalgebra
    antipode: Matrix

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise DimensionMismatch("algebra and coalgebra dims differ")
        if self.antipode.rows != self.algebra.dim or self.antipode.cols != self.algebra.dim:
            raise DimensionMismatch("antipode is not dim x dim")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @cached_property
    def antipode_inverse(self) -> Matrix | None:
        res = try_invert(self.antipode)
        return None if isinstance(res, NotInvertible) else res


@dataclass(frozen=True)
class RightComodule:
    """V with a right coaction V -> V (x) C."""

    dim: int
    over: FiniteCoalgebra
    coaction: Matrix

    def __post_init__(self):
        if self.coaction.rows != self.dim * self.over.dim or self.coaction.cols != self.dim:
            raise DimensionMismatch("coaction is not (dim*|C|) x dim")


@dataclass(frozen=True)
class RightModule:
    """V with a right action V (x) A -> V."""

    dim: int
    over: FiniteAlgebra
    action: Matrix

    def __post_init__(self):
        if self.action.rows != self.dim or self.action.cols != self.dim * self.over.dim:
            raise DimensionMismatch("action is not dim x (dim*|A|)")


@dataclass(frozen=True)
class GroupLike:
    """A vector e with coproduct(e) = e (x) e and counit(e) = 1."""

    coalgebra: FiniteCoalgebra
    coords: tuple[Scalar, ...]


@dataclass(frozen=True)
class Character:
    """A unital multiplicative functional on an algebra."""

    algebra: FiniteAlgebra
    coords: tuple[Scalar, ...]


@dataclass(frozen=True)
class ComoduleAlgebra:
    """An algebra with a right coaction; the coaction need not be an algebra map."""

    algebra: FiniteAlgebra
    coalgebra: FiniteCoalgebra
    coaction: Matrix

    def __post_init__(self):
        a, c = self.algebra.dim, self.coalgebra.dim
        if self.coaction.rows != a * c or self.coaction.cols != a:
            raise DimensionMismatch("coaction is not (|A|*|C|) x |A|")

    @property
    def comodule(self) -> RightComodule:
        return RightComodule(self.algebra.dim, self.coalgebra, self.coaction)


@dataclass(frozen=True)
class ModuleCoalgebra:
    """A coalgebra with a right action; the action need not be a coalgebra map."""

    coalgebra: FiniteCoalgebra
    algebra: FiniteAlgebra
    action: Matrix

    def __post_init__(self):
        c, a = self.coalgebra.dim, self.algebra.dim
        if self.action.rows != c or self.action.cols != c * a:
            raise DimensionMismatch("action is not |C| x (|C|*|A|)")

    @property
    def module(self) -> RightModule:
        return RightModule(self.coalgebra.dim, self.algebra, self.action)


def validate_algebra(a: FiniteAlgebra) -> ValidationReport:
    m, u, ident = a.mult_matrix, a.unit_matrix, a.identity_matrix
    checks = (
        residual_check(
            "associativity",
            "m(m (x) id) = m(id (x) m)",
            m @ kron(m, ident),
            m @ kron(ident, m),
        ),
        residual_check("left-unit", "m(unit (x) id) = id", m @ kron(u, ident), ident),
        residual_check("right-unit", "m(id (x) unit) = id", m @ kron(ident, u), ident),
    )
    return ValidationReport("algebra", checks)


def validate_coalgebra(c: FiniteCoalgebra) -> ValidationReport:
    d, e, ident = c.comult_matrix, c.counit_matrix, c.identity_matrix
    checks = (
        residual_check(
            "coassociativity",
            "(coproduct (x) id)coproduct = (id (x) coproduct)coproduct",
            kron(d, ident) @ d,
            kron(ident, d) @ d,
        ),
        residual_check("left-counit", "(counit (x) id)coproduct = id", kron(e, ident) @ d, ident),
        residual_check("right-counit", "(id (x) counit)coproduct = id", kron(ident, e) @ d, ident),
    )
    return ValidationReport("coalgebra", checks)


def validate_comodule(v: RightComodule) -> ValidationReport:
    c = v.over
    rho = v.coaction
    iv = Matrix.identity(v.dim, c.field)
    checks = (
        residual_check(
            "coaction-coassociativity",
            "(coaction (x) C)coaction = (V (x) coproduct)coaction",
            kron(rho, c.identity_matrix) @ rho,
            kron(iv, c.comult_matrix) @ rho,
        ),
        residual_check(
            "coaction-counit",
            "(V (x) counit)coaction = id",
            kron(iv, c.counit_matrix) @ rho,
            iv,
        ),
    )
    return ValidationReport("right comodule", checks)


def validate_module(v: RightModule) -> ValidationReport:
    a = v.over
    act = v.action
    iv = Matrix.identity(v.dim, a.field)
    checks = (
        residual_check(
            "action-associativity",
            "act(act (x) A) = act(V (x) m)",
            act @ kron(act, a.identity_matrix),
            act @ kron(iv, a.mult_matrix),
        ),
        residual_check(
            "action-unit",
            "act(V (x) unit) = id",
            act @ kron(iv, a.unit_matrix),
            iv,
        ),
    )
    return ValidationReport("right module", checks)


def bialgebra_checks(algebra: FiniteAlgebra, coalgebra: FiniteCoalgebra) -> tuple[AxiomCheck, ...]:
    """Compatibility making (m, unit, coproduct, counit) a bialgebra."""
    m, u = algebra.mult_matrix, algebra.unit_matrix
    d, e = coalgebra.comult_matrix, coalgebra.counit_matrix
    field = algebra.field
    n = algebra.dim
    mid_swap = tensor_permutation((n, n, n, n), (0, 2, 1, 3), field)
    return (
        residual_check(
            "coproduct-multiplicative",
            "coproduct(ab) = coproduct(a)coproduct(b)",
            d @ m,
            kron(m, m) @ mid_swap @ kron(d, d),
        ),
        residual_check("coproduct-unital", "coproduct(1) = 1 (x) 1", d @ u, kron(u, u)),
        residual_check("counit-multiplicative", "counit(ab) = counit(a)counit(b)", e @ m, kron(e, e)),
        residual_check("counit-unital", "counit(1) = 1", e @ u, Matrix.identity(1, field)),
    )


def validate_hopf(h: HopfAlgebra) -> ValidationReport:
    alg = validate_algebra(h.algebra)
    coa = validate_coalgebra(h.coalgebra)
    m, u = h.algebra.mult_matrix, h.algebra.unit_matrix
    d, e = h.coalgebra.comult_matrix, h.coalgebra.counit_matrix
    s = h.antipode
    ident = h.algebra.identity_matrix
    unit_counit = u @ e
    antipode_checks = (
        residual_check(
            "antipode-left",
            "m(S (x) id)coproduct = unit counit",
            m @ kron(s, ident) @ d,
            unit_counit,
        ),
        residual_check(
            "antipode-right",
            "m(id (x) S)coproduct = unit counit",
            m @ kron(ident, s) @ d,
            unit_counit,
        ),
        AxiomCheck(
            "antipode-invertible",
            "S has an exact two-sided inverse",
            None,
            h.antipode_inverse is not None,
        ),
    )
    return ValidationReport(
        "hopf algebra",
        alg.checks + coa.checks + bialgebra_checks(h.algebra, h.coalgebra) + antipode_checks,
    )


def coaction_algebra_map_checks(x: ComoduleAlgebra, coacting_algebra: FiniteAlgebra) -> tuple[AxiomCheck, ...]:
    """Whether the coaction is a unital algebra map into A (x) H.

    Needs a multiplication on the coacting space (available whenever it
    underlies a bialgebra); A (x) H carries the componentwise product through
    the middle swap.
    """
    a = x.algebra
    if coacting_algebra.dim != x.coalgebra.dim:
        raise DimensionMismatch("coacting algebra must live on the coaction's coalgebra space")
    m, u = a.mult_matrix, a.unit_matrix
    mh, uh = coacting_algebra.mult_matrix, coacting_algebra.unit_matrix
    rho = x.coaction
    na, nh = a.dim, coacting_algebra.dim
    mid_swap = tensor_permutation((na, nh, na, nh), (0, 2, 1, 3), a.field)
    return (
        residual_check(
            "coaction-multiplicative",
            "coaction(ab) = coaction(a)coaction(b) in A (x) H",
            rho @ m,
            kron(m, mh) @ mid_swap @ kron(rho, rho),
        ),
        residual_check("coaction-unital", "coaction(1) = 1 (x) 1", rho @ u, kron(u, uh)),
    )


def coaction_is_algebra_map(x: ComoduleAlgebra, coacting_algebra: FiniteAlgebra) -> bool:
    return all(c.ok for c in coaction_algebra_map_checks(x, coacting_algebra))


def verify_grouplike(c: FiniteCoalgebra, coords) -> bool:
    """coproduct(e) = e (x) e and counit(e) = 1, checked exactly."""
    field = c.field
    e = column_matrix([field.coerce(x) for x in coords], field)
    return (c.comult_matrix @ e == kron(e, e)) and (c.counit_matrix @ e) == Matrix.identity(1, field)


def verify_character(a: FiniteAlgebra, coords) -> bool:
    """kappa(xy) = kappa(x)kappa(y) on all basis pairs and kappa(1) = 1."""
    field = a.field
    k = row_matrix([field.coerce(x) for x in coords], field)
    return (k @ a.mult_matrix == kron(k, k)) and (k @ a.unit_matrix) == Matrix.identity(1, field)


_SEARCH_MAX_FIELD = 7
_SEARCH_MAX_DIM = 4


def find_grouplikes(c: FiniteCoalgebra) -> tuple[tuple[Scalar, ...], ...]:
    """Exhaustive group-like search, offered only over small prime fields."""
    field = c.field
    if not field.is_prime_field or field.p > _SEARCH_MAX_FIELD or c.dim > _SEARCH_MAX_DIM:
        raise AxiomViolation("exhaustive search is limited to GF(p<=7) and dim <= 4")
    found = []
    for coords in itertools.product(range(field.p), repeat=c.dim):
        if any(coords) and verify_grouplike(c, coords):
            found.append(tuple(field.coerce(x) for x in coords))
    return tuple(found)


def find_characters(a: FiniteAlgebra) -> tuple[tuple[Scalar, ...], ...]:
    """Exhaustive character search, offered only over small prime fields."""
    field = a.field
    if not field.is_prime_field or field.p > _SEARCH_MAX_FIELD or a.dim > _SEARCH_MAX_DIM:
        raise AxiomViolation("exhaustive search is limited to GF(p<=7) and dim <= 4")
    found = []
    for coords in itertools.product(range(field.p), repeat=a.dim):
        if any(coords) and verify_character(a, coords):
            found.append(tuple(field.coerce(x) for x in coords))
    return tuple(found)


def dualize(x):
    """Transpose structure constants: coalgebras <-> algebras.

    dualize(dualize(x)) has the same structure constants as x.
    """
    if isinstance(x, FiniteCoalgebra):
        d = x.dim
        mult = tuple(tuple(tuple(x.comult[k][i][j] for k in range(d)) for j in range(d)) for i in range(d))
        names = tuple(f"{n}*" for n in x.basis_names)
        return FiniteAlgebra(d, names, mult, x.counit, x.field)
    if isinstance(x, FiniteAlgebra):
        d = x.dim
        comult = tuple(tuple(tuple(x.mult[j][k][i] for k in range(d)) for j in range(d)) for i in range(d))
        names = tuple(f"{n}*" for n in x.basis_names)
        return FiniteCoalgebra(d, names, comult, x.unit, x.field)
    raise TypeError(f"cannot dualize {type(x).__name__}")


def convolution(f: Matrix, g: Matrix, source: FiniteCoalgebra, target: FiniteAlgebra) -> Matrix:
    """Convolution product m(f (x) g)coproduct of maps source -> target."""
    if f.cols != source.dim or g.cols != source.dim:
        raise DimensionMismatch("convolution factors must be maps out of the coalgebra")
    if f.rows != target.dim or g.rows != target.dim:
        raise DimensionMismatch("convolution factors must be maps into the algebra")
    return target.mult_matrix @ kron(f, g) @ source.comult_matrix


def convolution_unit(source: FiniteCoalgebra, target: FiniteAlgebra) -> Matrix:
    return target.unit_matrix @ source.counit_matrix


def field_algebra(field: FieldSpec) -> FiniteAlgebra:
    """The ground field as a one-dimensional algebra."""
    one = field.one
    return FiniteAlgebra(1, ("1",), (((one,),),), (one,), field)


def field_coalgebra(field: FieldSpec) -> FiniteCoalgebra:
    """The ground field as a one-dimensional coalgebra."""
    one = field.one
    return FiniteCoalgebra(1, ("1",), (((one,),),), (one,), field)


def transport_algebra(a: FiniteAlgebra, t: Matrix) -> FiniteAlgebra:
    """Conjugate the structure constants by an invertible change of basis."""
    tinv = try_invert(t)
    if isinstance(tinv, NotInvertible):
        raise AxiomViolation("change of basis must be invertible")
    m = tinv @ a.mult_matrix @ kron(t, t)
    u = tinv @ a.unit_matrix
    d = a.dim
    mult = tuple(
        tuple(tuple(m.entries[k][i * d + j] for k in range(d)) for j in range(d)) for i in range(d)
    )
    return FiniteAlgebra(d, a.basis_names, mult, u.column(0), a.field)


def transport_coalgebra(c: FiniteCoalgebra, t: Matrix) -> FiniteCoalgebra:
    tinv = try_invert(t)
    if isinstance(tinv, NotInvertible):
        raise AxiomViolation("change of basis must be invertible")
    dm = kron(tinv, tinv) @ c.comult_matrix @ t
    e = c.counit_matrix @ t
    d = c.dim
    comult = tuple(
        tuple(tuple(dm.entries[j * d + k][i] for k in range(d)) for j in range(d)) for i in range(d)
    )
    return FiniteCoalgebra(d, c.basis_names, comult, e.entries[0], c.field)
