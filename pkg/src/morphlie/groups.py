"""Finite groups, bar-complex cochains, and morphism-group cohomology.

A group n-cochain with values in a module of dimension m is coordinatized
as an m x (number of n-tuples) array over lexicographically ordered tuples
of element indices, flattened tuple-major exactly like the Lie-side
cochains.  The normalized subcomplex keeps only cochains vanishing when
some argument is the identity; its tuples simply omit the identity index.

The morphism complex in degree n is C^n(G, V) + C^n(H, W) + C^{n-1}(G, W_Phi)
with blocks (Theta, Gamma, Lambda) and differential

    (delta' Theta, delta'' Gamma,
     psi . Theta - Gamma . Phi^n - delta''' Lambda),

delta''' taken in the pullback module W_Phi; degree 0 is V alone.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .algebras import CheckResult
from .errors import (
    NotAHomomorphism,
    ShapeError,
    SizeCeilingExceeded,
    ValidationError,
)
from .linalg import Matrix, ZERO, rank


class FiniteGroup:
    """A finite group given by its multiplication table of element indices."""

    def __init__(self, mul: Sequence[Sequence[int]], identity: int | None = None):
        order = len(mul)
        if order == 0:
            raise ValidationError("a group has at least the identity element")
        table = [list(row) for row in mul]
        if any(len(row) != order for row in table):
            raise ShapeError(f"multiplication table must be {order}x{order}")
        for row in table:
            for x in row:
                if not isinstance(x, int) or not 0 <= x < order:
                    raise ValidationError(f"table entry {x!r} is not an element index")
        if identity is None:
            identity = next(
                (e for e in range(order)
                 if all(table[e][x] == x and table[x][e] == x for x in range(order))),
                None,
            )
            if identity is None:
                raise ValidationError("no identity element in the table")
        else:
            if not all(table[identity][x] == x and table[x][identity] == x
                       for x in range(order)):
                raise ValidationError(f"element {identity} is not an identity")
        for a in range(order):
            for b in range(order):
                for c in range(order):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise ValidationError(
                            f"associativity fails at ({a}, {b}, {c})"
                        )
        for a in range(order):
            if not any(table[a][b] == identity and table[b][a] == identity
                       for b in range(order)):
                raise ValidationError(f"element {a} has no inverse")
        self.order = order
        self.mul = tuple(tuple(row) for row in table)
        self.identity = identity

    @classmethod
    def trivial(cls) -> FiniteGroup:
        return cls([[0]])

    @classmethod
    def cyclic(cls, n: int) -> FiniteGroup:
        if n < 1:
            raise ShapeError("cyclic group order must be positive")
        return cls([[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def klein_four(cls) -> FiniteGroup:
        return cls([[i ^ j for j in range(4)] for i in range(4)])

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return next(b for b in range(self.order) if self.mul[a][b] == self.identity)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


class GroupModule:
    """A representation of a finite group by invertible matrices."""

    def __init__(self, group: FiniteGroup, dim: int, action: Sequence[Matrix],
                 validate: bool = True):
        if len(action) != group.order:
            raise ShapeError("need one action matrix per group element")
        for m in action:
            if (m.rows, m.cols) != (dim, dim):
                raise ShapeError(f"action matrices must be {dim}x{dim}")
        self.group = group
        self.dim = dim
        self.action = list(action)
        if validate:
            res = self.check()
            if not res:
                raise ValidationError(res.detail)

    def check(self) -> CheckResult:
        if self.action[self.group.identity] != Matrix.identity(self.dim):
            return CheckResult(False, "identity must act as the identity matrix")
        for a in range(self.group.order):
            for b in range(self.group.order):
                if self.action[self.group.mul[a][b]] != self.action[a] * self.action[b]:
                    return CheckResult(
                        False, f"action of product fails at elements ({a}, {b})"
                    )
        return CheckResult(True)

    @classmethod
    def trivial(cls, group: FiniteGroup, dim: int) -> GroupModule:
        return cls(group, dim, [Matrix.identity(dim)] * group.order)

    def __repr__(self) -> str:
        return f"GroupModule(order={self.group.order}, dim={self.dim})"


def group_cochain_tuples(group: FiniteGroup, n: int,
                         normalized: bool = False) -> list[tuple[int, ...]]:
    """Lexicographic n-tuples of element indices; normalized omits the identity."""
    if n < 0:
        raise ShapeError("degree must be nonnegative")
    if normalized:
        pool = [g for g in range(group.order) if g != group.identity]
    else:
        pool = list(range(group.order))
    return list(itertools.product(pool, repeat=n))


def group_cochain_dim(group: FiniteGroup, dim: int, n: int,
                      normalized: bool = False) -> int:
    pool = group.order - 1 if normalized else group.order
    return dim * pool ** n


def group_differential(module: GroupModule, n: int,
                       normalized: bool = False) -> Matrix:
    """Matrix of the inhomogeneous bar differential C^n -> C^{n+1}.

    (df)(g_1, ..., g_{n+1}) = rho(g_1) f(g_2, ..., g_{n+1})
        + sum_{i=1}^{n} (-1)^i f(g_1, ..., g_i g_{i+1}, ..., g_{n+1})
        + (-1)^{n+1} f(g_1, ..., g_n).

    Normalized cochains evaluate to zero on tuples containing the identity,
    so merged tuples that hit the identity simply drop out.
    """
    group, dim = module.group, module.dim
    src = group_cochain_tuples(group, n, normalized)
    dst = group_cochain_tuples(group, n + 1, normalized)
    src_index = {t: i for i, t in enumerate(src)}
    out = [[ZERO] * (len(src) * dim) for _ in range(len(dst) * dim)]

    def add_identity(row_tuple: int, col_tuple: int | None, sign: int) -> None:
        if col_tuple is None:
            return
        for a in range(dim):
            out[row_tuple * dim + a][col_tuple * dim + a] += sign

    for r, tup in enumerate(dst):
        action = module.action[tup[0]]
        s = src_index.get(tup[1:])
        if s is not None:
            for a in range(dim):
                row = out[r * dim + a]
                for b in range(dim):
                    if action[a, b]:
                        row[s * dim + b] += action[a, b]
        for i in range(1, n + 1):
            merged = tup[:i - 1] + (group.mul[tup[i - 1]][tup[i]],) + tup[i + 1:]
            add_identity(r, src_index.get(merged), -1 if i % 2 else 1)
        add_identity(r, src_index.get(tup[:n]), -1 if (n + 1) % 2 else 1)
    return Matrix.from_rows(out, cols=len(src) * dim)


def group_cohomology_dim(module: GroupModule, n: int, normalized: bool = False,
                         size_ceiling: int | None = None) -> int:
    """dim H^n of the bar complex (normalized subcomplex if requested)."""
    if n < 0:
        raise ShapeError("degree must be nonnegative")
    _check_ceiling(
        size_ceiling,
        max(group_cochain_dim(module.group, module.dim, k, normalized)
            for k in range(max(0, n - 1), n + 2)),
    )
    delta_n = group_differential(module, n, normalized)
    kernel = delta_n.cols - rank(delta_n)
    if n == 0:
        return kernel
    delta_prev = group_differential(module, n - 1, normalized)
    if not (delta_n * delta_prev).is_zero():
        raise AssertionError("bar differential does not square to zero")
    return kernel - rank(delta_prev)


def _check_ceiling(size_ceiling: int | None, needed: int) -> None:
    if size_ceiling is not None and needed > size_ceiling:
        raise SizeCeilingExceeded(
            f"cochain space needs {needed} coordinates, ceiling is {size_ceiling}"
        )


class GroupModuleTriple:
    """Modules (V, W, psi) over a group homomorphism Phi: G -> H.

    psi intertwines the actions through Phi: psi rho_V(g) = rho_W(Phi g) psi.
    """

    def __init__(self, g: FiniteGroup, h: FiniteGroup, phi: Sequence[int],
                 v: GroupModule, w: GroupModule, psi: Matrix,
                 validate: bool = True):
        if v.group is not g and v.group.mul != g.mul:
            raise ShapeError("V must be a module over the source group")
        if w.group is not h and w.group.mul != h.mul:
            raise ShapeError("W must be a module over the target group")
        if len(phi) != g.order:
            raise ShapeError("phi must assign an image to every source element")
        if any(not isinstance(x, int) or not 0 <= x < h.order for x in phi):
            raise ValidationError("phi values must be target element indices")
        if (psi.rows, psi.cols) != (w.dim, v.dim):
            raise ShapeError(f"psi must be {w.dim}x{v.dim}")
        self.g = g
        self.h = h
        self.phi = tuple(phi)
        self.v = v
        self.w = w
        self.psi = psi
        if validate:
            for a in range(g.order):
                for b in range(g.order):
                    if phi[g.mul[a][b]] != h.mul[phi[a]][phi[b]]:
                        raise NotAHomomorphism(
                            f"phi is not a homomorphism at elements ({a}, {b})"
                        )
            for a in range(g.order):
                if psi * v.action[a] != w.action[phi[a]] * psi:
                    raise ValidationError(
                        f"psi does not intertwine the actions at element {a}"
                    )

    @property
    def dim_v(self) -> int:
        return self.v.dim

    @property
    def dim_w(self) -> int:
        return self.w.dim

    @classmethod
    def identity(cls, module: GroupModule) -> GroupModuleTriple:
        """The triple (G, G, id) acting on (V, V, id)."""
        return cls(module.group, module.group, list(range(module.group.order)),
                   module, module, Matrix.identity(module.dim))

    def __repr__(self) -> str:
        return (f"GroupModuleTriple(|G|={self.g.order}, |H|={self.h.order}, "
                f"dim_v={self.dim_v}, dim_w={self.dim_w})")


def pullback_module(t: GroupModuleTriple) -> GroupModule:
    """W as a G-module through Phi: g acts by rho_W(Phi g)."""
    return GroupModule(t.g, t.dim_w, [t.w.action[t.phi[a]] for a in range(t.g.order)],
                       validate=False)


def mlg_block_dims(t: GroupModuleTriple, n: int,
                   normalized: bool = False) -> tuple[int, int, int]:
    """(Theta, Gamma, Lambda) coordinate counts in degree n; degree 0 is V."""
    if n < 0:
        raise ShapeError("degree must be nonnegative")
    if n == 0:
        return (t.dim_v, 0, 0)
    return (
        group_cochain_dim(t.g, t.dim_v, n, normalized),
        group_cochain_dim(t.h, t.dim_w, n, normalized),
        group_cochain_dim(t.g, t.dim_w, n - 1, normalized),
    )


def mlg_cochain_dim(t: GroupModuleTriple, n: int, normalized: bool = False) -> int:
    return sum(mlg_block_dims(t, n, normalized))


def mlg_differential(t: GroupModuleTriple, n: int,
                     normalized: bool = False) -> Matrix:
    """Matrix of the morphism-group differential C^n_mLG -> C^{n+1}_mLG."""
    if n < 0:
        raise ShapeError("degree must be nonnegative")
    if n == 0:
        dv = group_differential(t.v, 0, normalized)
        dw = group_differential(t.w, 0, normalized)
        return Matrix.vstack([dv, dw * t.psi, Matrix.zeros(t.dim_w, t.dim_v)])
    dv = group_differential(t.v, n, normalized)
    dw = group_differential(t.w, n, normalized)
    d_pull = group_differential(pullback_module(t), n - 1, normalized)
    g_tuples = group_cochain_tuples(t.g, n, normalized)
    h_index = {tup: i for i, tup in enumerate(group_cochain_tuples(t.h, n, normalized))}

    post = [[ZERO] * (len(g_tuples) * t.dim_v) for _ in range(len(g_tuples) * t.dim_w)]
    for s in range(len(g_tuples)):
        for r in range(t.dim_w):
            for c in range(t.dim_v):
                if t.psi[r, c]:
                    post[s * t.dim_w + r][s * t.dim_v + c] = t.psi[r, c]
    post_psi = Matrix.from_rows(post, cols=len(g_tuples) * t.dim_v)

    pre = [[ZERO] * (len(h_index) * t.dim_w) for _ in range(len(g_tuples) * t.dim_w)]
    for s, tup in enumerate(g_tuples):
        mapped = tuple(t.phi[x] for x in tup)
        m_idx = h_index.get(mapped)
        if m_idx is not None:
            for r in range(t.dim_w):
                pre[s * t.dim_w + r][m_idx * t.dim_w + r] = Fraction(1)
    pre_phi = Matrix.from_rows(pre, cols=len(h_index) * t.dim_w)

    th, ga, la = mlg_block_dims(t, n, normalized)
    return Matrix.block([
        [dv, Matrix.zeros(dv.rows, ga), Matrix.zeros(dv.rows, la)],
        [Matrix.zeros(dw.rows, th), dw, Matrix.zeros(dw.rows, la)],
        [post_psi, -pre_phi, -d_pull],
    ])


def mlg_cohomology_dim(t: GroupModuleTriple, n: int, normalized: bool = False,
                       size_ceiling: int | None = None) -> int:
    """dim H^n_mLG, verifying that consecutive differentials compose to zero."""
    if n < 0:
        raise ShapeError("degree must be nonnegative")
    _check_ceiling(
        size_ceiling,
        max(mlg_cochain_dim(t, k, normalized) for k in range(max(0, n - 1), n + 2)),
    )
    delta_n = mlg_differential(t, n, normalized)
    kernel = delta_n.cols - rank(delta_n)
    if n == 0:
        return kernel
    delta_prev = mlg_differential(t, n - 1, normalized)
    if not (delta_n * delta_prev).is_zero():
        raise AssertionError("morphism-group differential does not square to zero")
    return kernel - rank(delta_prev)
