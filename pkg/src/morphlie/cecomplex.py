"""Exterior-power bases and the Chevalley-Eilenberg differential as matrices.

A cochain f in Hom(wedge^n g, V) is coordinatized as the dim_v x binom(dim_g, n)
array f[.][t] = f(e_{t1} ^ ... ^ e_{tn}) over lexicographically ordered strictly
increasing tuples, flattened column-major: flat index = tuple_index * dim_v + coord.
That layout fixes the matrix form of every differential in the package.
"""

from __future__ import annotations

import itertools
from math import comb

from .algebras import Representation, MorphismLieAlgebra
from .errors import ShapeError
from .linalg import Matrix, ZERO, determinant, rank


class ExteriorBasis:
    """Lexicographically ordered strictly increasing n-tuples from range(dim)."""

    def __init__(self, dim: int, n: int):
        self.dim = dim
        self.n = n
        self.tuples: list[tuple[int, ...]] = list(itertools.combinations(range(dim), n))
        self.index: dict[tuple[int, ...], int] = {t: i for i, t in enumerate(self.tuples)}

    def __len__(self) -> int:
        return len(self.tuples)


def sort_with_sign(indices: tuple[int, ...]) -> tuple[tuple[int, ...], int] | None:
    """Sort into strictly increasing order with the permutation sign.

    Returns None when an index repeats (the alternating evaluation is zero).
    """
    seq = list(indices)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and seq[j - 1] == seq[j]:
            return None
    return tuple(seq), sign


def cochain_dim(dim_g: int, dim_v: int, n: int) -> int:
    """dim Hom(wedge^n g, V) = dim_v * binom(dim_g, n)."""
    if n < 0:
        return 0
    return dim_v * comb(dim_g, n)


def ce_differential(rep: Representation, n: int) -> Matrix:
    """Matrix of the Chevalley-Eilenberg differential C^n(g, V) -> C^{n+1}(g, V).

    (delta f)(x_1, ..., x_{n+1})
        = sum_i (-1)^{i+1} rho(x_i) f(..., x_i omitted, ...)
        + sum_{i<j} (-1)^{i+j} f([x_i, x_j], ..., x_i, x_j omitted, ...),
    evaluated on increasing basis tuples, with bracket insertions re-sorted
    into increasing order under the permutation sign.
    """
    if n < 0:
        raise ShapeError("degree must be nonnegative")
    g = rep.algebra
    dim_v = rep.dim_v
    src = ExteriorBasis(g.dim, n)
    dst = ExteriorBasis(g.dim, n + 1)
    mat = [[ZERO] * (len(src) * dim_v) for _ in range(len(dst) * dim_v)]

    for t_idx, tup in enumerate(dst.tuples):
        for i in range(n + 1):
            # Action term: (-1)^{i+1} rho(e_{tup[i]}) applied to f at the omitted tuple.
            omitted = tup[:i] + tup[i + 1:]
            s_idx = src.index[omitted]
            sign = 1 if i % 2 == 0 else -1
            rho = rep.action[tup[i]]
            for r in range(dim_v):
                row = mat[t_idx * dim_v + r]
                rho_row = rho._rows[r]
                for c in range(dim_v):
                    if rho_row[c]:
                        row[s_idx * dim_v + c] += sign * rho_row[c]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                # Bracket-insertion term with sign (-1)^{i+j} for 1-based i < j.
                pair_sign = 1 if (i + j) % 2 == 0 else -1
                rest = tuple(tup[t] for t in range(n + 1) if t != i and t != j)
                bracket = g.c[tup[i]][tup[j]]
                for k in range(g.dim):
                    coeff = bracket[k]
                    if not coeff:
                        continue
                    sorted_sign = sort_with_sign((k,) + rest)
                    if sorted_sign is None:
                        continue
                    stup, ssign = sorted_sign
                    s_idx = src.index[stup]
                    total = coeff * pair_sign * ssign
                    for r in range(dim_v):
                        mat[t_idx * dim_v + r][s_idx * dim_v + r] += total
    return Matrix.from_rows(mat, cols=len(src) * dim_v)


class CEComplex:
    """The cochain complex of a representation, with differentials by degree.

    delta_{n+1} . delta_n = 0 is verified exactly for every stored pair at
    construction.
    """

    def __init__(self, rep: Representation, max_degree: int | None = None):
        self.rep = rep
        top = rep.algebra.dim if max_degree is None else max_degree
        self.max_degree = top
        self.differentials: dict[int, Matrix] = {
            n: ce_differential(rep, n) for n in range(top + 1)
        }
        for n in range(top):
            prod = self.differentials[n + 1] * self.differentials[n]
            if not prod.is_zero():
                raise ShapeError(f"differential composition at degree {n} is nonzero")

    def cochain_dim(self, n: int) -> int:
        return cochain_dim(self.rep.algebra.dim, self.rep.dim_v, n)

    def cohomology_dim(self, n: int) -> int:
        return ce_cohomology_dim(self.rep, n)


def ce_cohomology_dim(rep: Representation, n: int) -> int:
    """dim ker delta_n minus rank delta_{n-1}."""
    if n < 0:
        return 0
    dim_n = cochain_dim(rep.algebra.dim, rep.dim_v, n)
    if dim_n == 0:
        return 0
    delta_n = ce_differential(rep, n)
    cycles = dim_n - rank(delta_n)
    boundaries = 0 if n == 0 else rank(ce_differential(rep, n - 1))
    return cycles - boundaries


def pullback_rep(m: MorphismLieAlgebra, w: Representation) -> Representation:
    """The g-action on W obtained through phi: rho(x) w = rho_W(phi x) w."""
    if w.algebra.dim != m.h.dim:
        raise ShapeError("w must be a representation of the target algebra")
    action = [w.act(m.phi.col(i)) for i in range(m.g.dim)]
    return Representation(m.g, w.dim_v, action)


def wedge_minor_matrix(phi: Matrix, n: int) -> Matrix:
    """Matrix of wedge^n phi on lex-ordered tuple bases.

    Entry [T, S] is the determinant of phi's submatrix on rows T, columns S,
    so (wedge^n phi)(e_S) = sum_T det(phi[T, S]) f_T.
    """
    src = ExteriorBasis(phi.cols, n)
    dst = ExteriorBasis(phi.rows, n)
    rows = [
        [determinant(phi.submatrix(t, s)) for s in src.tuples]
        for t in dst.tuples
    ]
    return Matrix.from_rows(rows, cols=len(src))


def postcompose_matrix(psi: Matrix, num_tuples: int) -> Matrix:
    """Matrix of f -> psi . f on flattened cochains over a fixed tuple basis."""
    out = [[ZERO] * (num_tuples * psi.cols) for _ in range(num_tuples * psi.rows)]
    for s in range(num_tuples):
        for r in range(psi.rows):
            orow = out[s * psi.rows + r]
            for c in range(psi.cols):
                if psi._rows[r][c]:
                    orow[s * psi.cols + c] = psi._rows[r][c]
    return Matrix.from_rows(out, cols=num_tuples * psi.cols)


def precompose_matrix(minors: Matrix, dim_w: int) -> Matrix:
    """Matrix of gamma -> gamma . (wedge^n phi) on flattened cochains.

    minors is wedge_minor_matrix(phi, n) with rows over target tuples T and
    columns over source tuples S; the output sends the T-block of gamma to
    the S-block weighted by minors[T, S].
    """
    n_src = minors.cols  # tuples over g
    n_dst = minors.rows  # tuples over h
    out = [[ZERO] * (n_dst * dim_w) for _ in range(n_src * dim_w)]
    for t in range(n_dst):
        for s in range(n_src):
            coeff = minors._rows[t][s]
            if not coeff:
                continue
            for r in range(dim_w):
                out[s * dim_w + r][t * dim_w + r] = coeff
    return Matrix.from_rows(out, cols=n_dst * dim_w)
