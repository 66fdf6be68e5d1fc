"""Lie algebras, representations, morphism pairs, and Rota-Baxter data.

All objects are specified on an ordered basis over Q: a Lie algebra is its
structure-constant table c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k,
a representation is a list of action matrices, and a morphism Lie algebra
(g, h, phi) is a pair of algebras with a homomorphism given as a matrix.
Antisymmetry is enforced at construction; the Jacobi identity is a separate
queryable check so that broken data can still be represented and diagnosed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotAHomomorphism, RotaBaxterViolation, ShapeError, ValidationError
from .linalg import Matrix, Scalar, ZERO, rat

Vector = list[Fraction]


class CheckResult:
    """Boolean verdict plus a human-readable report of the first violation."""

    __slots__ = ("ok", "detail")

    def __init__(self, ok: bool, detail: str | None = None):
        self.ok = ok
        self.detail = detail

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return "ok" if self.ok else f"failed: {self.detail}"


class LieAlgebra:
    """A finite-dimensional algebra given by structure constants.

    Antisymmetry c[i][j][k] = -c[j][i][k] is required at construction;
    whether the data satisfies Jacobi is a separate question answered by
    check_jacobi, so near-Lie data can be built and examined.
    """

    def __init__(self, dim: int, structure: Sequence[Sequence[Sequence[Scalar]]]):
        if dim < 0:
            raise ShapeError("negative dimension")
        if len(structure) != dim or any(len(row) != dim for row in structure):
            raise ShapeError(f"structure table must be {dim}x{dim} vectors")
        self.dim = dim
        self.c: list[list[Vector]] = [
            [[rat(x) for x in structure[i][j]] for j in range(dim)] for i in range(dim)
        ]
        for i in range(dim):
            for j in range(dim):
                if len(self.c[i][j]) != dim:
                    raise ShapeError("bracket vectors must have length dim")
                for k in range(dim):
                    if self.c[i][j][k] != -self.c[j][i][k]:
                        raise ShapeError(
                            f"structure constants not antisymmetric at (e{i+1}, e{j+1})"
                        )

    @classmethod
    def abelian(cls, dim: int) -> LieAlgebra:
        zero = [[([ZERO] * dim) for _ in range(dim)] for _ in range(dim)]
        return cls(dim, zero)

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict[tuple[int, int], Sequence[Scalar]]) -> LieAlgebra:
        """Build from the nonzero brackets [e_i, e_j] with i < j."""
        table = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in brackets.items():
            if i == j:
                raise ShapeError("bracket of a basis vector with itself must be omitted")
            vals = [rat(x) for x in vec]
            table[i][j] = vals
            table[j][i] = [-x for x in vals]
        return cls(dim, table)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return list(self.c[i][j])

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        """Bilinear extension of the basis brackets to coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ShapeError("vectors must have length dim")
        out: Vector = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cij = self.c[i][j]
                coeff = rat(xi) * rat(yj)
                for k in range(self.dim):
                    if cij[k]:
                        out[k] += coeff * cij[k]
        return out

    def ad_matrix(self, x: Sequence[Scalar]) -> Matrix:
        """Matrix of ad(x) = [x, -] in the given basis."""
        cols = [self.bracket(x, _unit(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_rows(
            [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)], cols=self.dim
        )

    def adjoint_rep(self) -> Representation:
        mats = [self.ad_matrix(_unit(self.dim, i)) for i in range(self.dim)]
        return Representation(self, self.dim, mats)

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim})"


def _unit(dim: int, i: int) -> Vector:
    v = [ZERO] * dim
    v[i] = Fraction(1)
    return v


def check_jacobi(a: LieAlgebra) -> CheckResult:
    """[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on all basis triples."""
    for i in range(a.dim):
        ei = _unit(a.dim, i)
        for j in range(i + 1, a.dim):
            ej = _unit(a.dim, j)
            for k in range(j + 1, a.dim):
                ek = _unit(a.dim, k)
                total = a.bracket(a.bracket(ei, ej), ek)
                for t, term in enumerate(a.bracket(a.bracket(ej, ek), ei)):
                    total[t] += term
                for t, term in enumerate(a.bracket(a.bracket(ek, ei), ej)):
                    total[t] += term
                if any(total):
                    return CheckResult(
                        False,
                        f"Jacobi identity fails on basis triple (e{i+1}, e{j+1}, e{k+1})",
                    )
    return CheckResult(True)


class Representation:
    """A Lie algebra action on Q^dim_v by matrices rho(e_i)."""

    def __init__(self, algebra: LieAlgebra, dim_v: int, action: Sequence[Matrix],
                 validate: bool = True):
        if len(action) != algebra.dim:
            raise ShapeError("need one action matrix per basis vector")
        for m in action:
            if m.rows != dim_v or m.cols != dim_v:
                raise ShapeError(f"action matrices must be {dim_v}x{dim_v}")
        self.algebra = algebra
        self.dim_v = dim_v
        self.action = list(action)
        if validate:
            res = self.check()
            if not res:
                raise ValidationError(res.detail)

    def check(self) -> CheckResult:
        """rho([e_i,e_j]) = rho(e_i)rho(e_j) - rho(e_j)rho(e_i) on basis pairs."""
        a = self.algebra
        for i in range(a.dim):
            for j in range(i + 1, a.dim):
                lhs = self.act(a.c[i][j])
                rhs = self.action[i] * self.action[j] - self.action[j] * self.action[i]
                if lhs != rhs:
                    return CheckResult(
                        False, f"representation axiom fails on basis pair (e{i+1}, e{j+1})"
                    )
        return CheckResult(True)

    def act(self, x: Sequence[Scalar]) -> Matrix:
        """Matrix of rho(x) for a coordinate vector x."""
        if len(x) != self.algebra.dim:
            raise ShapeError("vector must have length dim g")
        out = Matrix.zeros(self.dim_v, self.dim_v)
        for i, xi in enumerate(x):
            if xi:
                out = out + self.action[i].scale(xi)
        return out

    @classmethod
    def trivial(cls, algebra: LieAlgebra, dim_v: int) -> Representation:
        return cls(algebra, dim_v, [Matrix.zeros(dim_v, dim_v)] * algebra.dim)

    def __repr__(self) -> str:
        return f"Representation(dim_g={self.algebra.dim}, dim_v={self.dim_v})"


def is_lie_homomorphism(g: LieAlgebra, h: LieAlgebra, phi: Matrix) -> CheckResult:
    """phi([x,y]_g) = [phi x, phi y]_h on all basis pairs."""
    if phi.rows != h.dim or phi.cols != g.dim:
        raise ShapeError(f"phi must be {h.dim}x{g.dim}, got {phi.rows}x{phi.cols}")
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = phi.apply(g.c[i][j])
            rhs = h.bracket(phi.col(i), phi.col(j))
            if lhs != rhs:
                return CheckResult(
                    False, f"homomorphism equation fails on basis pair (e{i+1}, e{j+1})"
                )
    return CheckResult(True)


class MorphismLieAlgebra:
    """Two Lie algebras joined by a homomorphism phi: g -> h."""

    def __init__(self, g: LieAlgebra, h: LieAlgebra, phi: Matrix, validate: bool = True):
        if phi.rows != h.dim or phi.cols != g.dim:
            raise ShapeError(f"phi must be {h.dim}x{g.dim}, got {phi.rows}x{phi.cols}")
        self.g = g
        self.h = h
        self.phi = phi
        if validate:
            res = is_lie_homomorphism(g, h, phi)
            if not res:
                raise NotAHomomorphism(res.detail)

    @classmethod
    def identity(cls, g: LieAlgebra) -> MorphismLieAlgebra:
        return cls(g, g, Matrix.identity(g.dim))

    def __repr__(self) -> str:
        return f"MorphismLieAlgebra(dim_g={self.g.dim}, dim_h={self.h.dim})"


class MorphismRep:
    """A representation (V, W, psi) of a morphism Lie algebra (g, h, phi).

    V is a g-representation, W an h-representation, and the linear map
    psi: V -> W intertwines them across phi:  psi rho_V(x) = rho_W(phi x) psi.
    """

    def __init__(self, base: MorphismLieAlgebra, v: Representation, w: Representation,
                 psi: Matrix, validate: bool = True):
        if v.algebra is not base.g and v.algebra.dim != base.g.dim:
            raise ShapeError("V must be a representation of g")
        if w.algebra is not base.h and w.algebra.dim != base.h.dim:
            raise ShapeError("W must be a representation of h")
        if psi.rows != w.dim_v or psi.cols != v.dim_v:
            raise ShapeError(f"psi must be {w.dim_v}x{v.dim_v}, got {psi.rows}x{psi.cols}")
        self.base = base
        self.v = v
        self.w = w
        self.psi = psi
        if validate:
            res = check_morphism_rep(self)
            if not res:
                raise ValidationError(res.detail)

    @property
    def dim_v(self) -> int:
        return self.v.dim_v

    @property
    def dim_w(self) -> int:
        return self.w.dim_v

    def __repr__(self) -> str:
        b = self.base
        return (f"MorphismRep(g={b.g.dim}, h={b.h.dim}, "
                f"v={self.dim_v}, w={self.dim_w})")


def check_morphism_rep(m: MorphismRep) -> CheckResult:
    """Rep axioms for V and W plus the intertwining of psi, on bases."""
    res = m.v.check()
    if not res:
        return CheckResult(False, f"V: {res.detail}")
    res = m.w.check()
    if not res:
        return CheckResult(False, f"W: {res.detail}")
    base = m.base
    for i in range(base.g.dim):
        lhs = m.psi * m.v.action[i]
        rhs = m.w.act(base.phi.col(i)) * m.psi
        if lhs != rhs:
            return CheckResult(
                False, f"psi fails to intertwine the actions at basis vector e{i+1}"
            )
    return CheckResult(True)


def check_morphism_homomorphism(source: MorphismLieAlgebra, target: MorphismLieAlgebra,
                                alpha: Matrix, beta: Matrix) -> CheckResult:
    """(alpha, beta) is a homomorphism of morphism Lie algebras."""
    if alpha.rows != target.g.dim or alpha.cols != source.g.dim:
        raise ShapeError("alpha has the wrong shape")
    if beta.rows != target.h.dim or beta.cols != source.h.dim:
        raise ShapeError("beta has the wrong shape")
    res = is_lie_homomorphism(source.g, target.g, alpha)
    if not res:
        return CheckResult(False, f"alpha: {res.detail}")
    res = is_lie_homomorphism(source.h, target.h, beta)
    if not res:
        return CheckResult(False, f"beta: {res.detail}")
    if target.phi * alpha != beta * source.phi:
        return CheckResult(False, "square phi' . alpha = beta . phi does not commute")
    return CheckResult(True)


def adjoint_morphism_rep(m: MorphismLieAlgebra) -> MorphismRep:
    """The morphism Lie algebra acting on itself: (g, h, phi) with psi = phi."""
    return MorphismRep(m, m.g.adjoint_rep(), m.h.adjoint_rep(), m.phi)


class RotaBaxterDatum:
    """An operator R with [Rx, Ry] = R([Rx,y] + [x,Ry] + weight [x,y]).

    The optional module part (rep, r_v) must satisfy the companion identity
    rho(Rx) R_V v = R_V (rho(Rx) v + rho(x) R_V v + weight rho(x) v).
    """

    def __init__(self, algebra: LieAlgebra, r: Matrix, weight: Scalar,
                 rep: Representation | None = None, r_v: Matrix | None = None):
        if r.rows != algebra.dim or r.cols != algebra.dim:
            raise ShapeError("R must be a square matrix of size dim g")
        if (rep is None) != (r_v is None):
            raise ShapeError("module part needs both rep and r_v")
        self.algebra = algebra
        self.r = r
        self.weight = rat(weight)
        self.rep = rep
        self.r_v = r_v
        self._validate()

    def twisted_bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        """[x,y]_R = [Rx,y] + [x,Ry] + weight [x,y]."""
        a = self.algebra
        rx, ry = self.r.apply(x), self.r.apply(y)
        out = a.bracket(rx, y)
        for k, t in enumerate(a.bracket(x, ry)):
            out[k] += t
        for k, t in enumerate(a.bracket(x, y)):
            out[k] += self.weight * t
        return out

    def _validate(self) -> None:
        a = self.algebra
        for i in range(a.dim):
            ei = _unit(a.dim, i)
            for j in range(i + 1, a.dim):
                ej = _unit(a.dim, j)
                lhs = a.bracket(self.r.apply(ei), self.r.apply(ej))
                rhs = self.r.apply(self.twisted_bracket(ei, ej))
                if lhs != rhs:
                    raise RotaBaxterViolation(
                        f"operator identity fails on basis pair (e{i+1}, e{j+1})"
                    )
        if self.rep is None or self.r_v is None:
            return
        rep, rv = self.rep, self.r_v
        if rv.rows != rep.dim_v or rv.cols != rep.dim_v:
            raise ShapeError("r_v must be square of size dim V")
        for i in range(a.dim):
            ei = _unit(a.dim, i)
            rho_rei = rep.act(self.r.apply(ei))
            lhs = rho_rei * rv
            rhs = rv * (rho_rei + rep.action[i] * rv + rep.action[i].scale(self.weight))
            if lhs != rhs:
                raise RotaBaxterViolation(
                    f"module identity fails at basis vector e{i+1}"
                )


def rota_baxter_morphism(d: RotaBaxterDatum) -> tuple[MorphismLieAlgebra, MorphismRep | None]:
    """The morphism Lie algebra (g_R, g, R) induced by a Rota-Baxter operator.

    g_R carries the twisted bracket; R becomes a homomorphism g_R -> g.  When
    module data is present, (V with the twisted action, V, R_V) is returned as
    a representation of (g_R, g, R).  All output invariants are re-verified.
    """
    a = d.algebra
    table = [
        [d.twisted_bracket(_unit(a.dim, i), _unit(a.dim, j)) for j in range(a.dim)]
        for i in range(a.dim)
    ]
    g_r = LieAlgebra(a.dim, table)
    res = check_jacobi(g_r)
    if not res:
        raise RotaBaxterViolation(f"twisted bracket is not Lie: {res.detail}")
    morphism = MorphismLieAlgebra(g_r, a, d.r)
    if d.rep is None or d.r_v is None:
        return morphism, None
    rep, rv = d.rep, d.r_v
    twisted_action = [
        rep.act(d.r.col(i)) + rep.action[i] * rv + rep.action[i].scale(d.weight)
        for i in range(a.dim)
    ]
    v_twisted = Representation(g_r, rep.dim_v, twisted_action)
    return morphism, MorphismRep(morphism, v_twisted, rep, rv)
