"""Core algebra layer: brackets, representations, morphisms, Rota-Baxter."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morphlie.algebras import (
    LieAlgebra,
    MorphismLieAlgebra,
    MorphismRep,
    Representation,
    RotaBaxterDatum,
    adjoint_morphism_rep,
    check_jacobi,
    check_morphism_homomorphism,
    check_morphism_rep,
    is_lie_homomorphism,
    rota_baxter_morphism,
)
from morphlie.errors import (
    NotAHomomorphism,
    RotaBaxterViolation,
    ShapeError,
    ValidationError,
)
from morphlie.fixtures import a1, a2, heis, sl2, sl2_v1_triple, v0, v1
from morphlie.linalg import Matrix


def test_sl2_satisfies_jacobi():
    assert check_jacobi(sl2()).ok


def test_heis_satisfies_jacobi():
    assert check_jacobi(heis()).ok


def test_broken_bracket_reports_first_triple():
    # [e1,e2] = e1, [e2,e3] = e2, [e3,e1] = e3: cyclic sum is -(e1+e2+e3).
    bad = LieAlgebra.from_brackets(
        3, {(0, 1): [1, 0, 0], (1, 2): [0, 1, 0], (2, 0): [0, 0, 1]}
    )
    res = check_jacobi(bad)
    assert not res.ok
    assert "(e1, e2, e3)" in res.detail


def test_antisymmetry_enforced_at_construction():
    with pytest.raises(ShapeError):
        LieAlgebra(2, [[[0, 0], [1, 0]], [[1, 0], [0, 0]]])


def test_bracket_is_bilinear():
    g = sl2()
    x = [Fraction(1), Fraction(2), Fraction(0)]
    y = [Fraction(0), Fraction(1), Fraction(-1)]
    doubled = g.bracket([2 * c for c in x], y)
    assert doubled == [2 * c for c in g.bracket(x, y)]


def test_v1_is_a_representation():
    assert v1().check().ok


def test_adjoint_rep_satisfies_axiom():
    for g in (a1(), a2(), heis(), sl2()):
        assert g.adjoint_rep().check().ok


def test_invalid_representation_rejected():
    g = sl2()
    action = [Matrix.identity(2), Matrix.zeros(2, 2), Matrix.zeros(2, 2)]
    with pytest.raises(ValidationError):
        Representation(g, 2, action)
    rep = Representation(g, 2, action, validate=False)
    assert not rep.check().ok


def test_identity_is_homomorphism():
    g = sl2()
    assert is_lie_homomorphism(g, g, Matrix.identity(3)).ok


def test_scaling_sl2_identity_not_homomorphism():
    g = sl2()
    res = is_lie_homomorphism(g, g, Matrix.identity(3).scale(2))
    assert not res.ok


def test_morphism_constructor_validates():
    g = sl2()
    with pytest.raises(NotAHomomorphism):
        MorphismLieAlgebra(g, g, Matrix.identity(3).scale(2))


def test_non_intertwining_psi_rejected():
    # psi = [[0,1],[0,0]] does not commute with the V1 action along id.
    g = sl2()
    m = MorphismLieAlgebra.identity(g)
    rep = v1(g)
    psi = Matrix.from_rows([[0, 1], [0, 0]])
    broken = MorphismRep(m, rep, rep, psi, validate=False)
    res = check_morphism_rep(broken)
    assert not res.ok
    assert "intertwine" in res.detail
    with pytest.raises(ValidationError):
        MorphismRep(m, rep, rep, psi)


def test_morphism_rep_shape_errors():
    g = sl2()
    m = MorphismLieAlgebra.identity(g)
    with pytest.raises(ShapeError):
        MorphismRep(m, v1(g), v0(g), Matrix.identity(2))


def test_intertwining_holds_on_fixture():
    assert check_morphism_rep(sl2_v1_triple()).ok


def test_morphism_homomorphism_square():
    g = sl2()
    src = MorphismLieAlgebra.identity(g)
    alpha = Matrix.identity(3)
    assert check_morphism_homomorphism(src, src, alpha, alpha).ok
    res = check_morphism_homomorphism(src, src, alpha, alpha.scale(2))
    assert not res.ok


def test_zero_rota_baxter_scales_bracket():
    # R = 0: the twisted bracket is weight * [x, y].
    g = sl2()
    lam = Fraction(3)
    d = RotaBaxterDatum(g, Matrix.zeros(3, 3), lam)
    morphism, module = rota_baxter_morphism(d)
    assert module is None
    for i in range(3):
        for j in range(3):
            expected = [lam * c for c in g.c[i][j]]
            assert morphism.g.c[i][j] == expected
    assert morphism.phi.is_zero()


def test_identity_rota_baxter_weight_minus_one():
    # R = id, weight -1: [Rx,y] + [x,Ry] - [x,y] = [x,y], so g_R = g and phi = id.
    g = sl2()
    d = RotaBaxterDatum(g, Matrix.identity(3), -1)
    morphism, _ = rota_baxter_morphism(d)
    assert morphism.g.c == g.c
    assert morphism.phi == Matrix.identity(3)


def test_any_operator_on_abelian_is_rota_baxter():
    g = a2()
    r = Matrix.from_rows([[1, 2], [3, 4]])
    d = RotaBaxterDatum(g, r, Fraction(5))
    morphism, _ = rota_baxter_morphism(d)
    assert morphism.g.c == g.c  # still abelian


def test_invalid_rota_baxter_rejected():
    g = sl2()
    r = Matrix.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(RotaBaxterViolation):
        RotaBaxterDatum(g, r, 0)


def test_rota_baxter_module_identity():
    # R = id, weight -1 with R_V = id: module identity reads rho(x) = rho(x).
    g = sl2()
    rep = v1(g)
    d = RotaBaxterDatum(g, Matrix.identity(3), -1, rep=rep, r_v=Matrix.identity(2))
    morphism, module = rota_baxter_morphism(d)
    assert module is not None
    assert check_morphism_rep(module).ok


def test_rota_baxter_module_violation():
    g = sl2()
    rep = v1(g)
    bad_rv = Matrix.from_rows([[1, 0], [0, 0]])
    with pytest.raises(RotaBaxterViolation):
        RotaBaxterDatum(g, Matrix.identity(3), -1, rep=rep, r_v=bad_rv)


def test_adjoint_morphism_rep_valid():
    m = adjoint_morphism_rep(MorphismLieAlgebra.identity(heis()))
    assert check_morphism_rep(m).ok


_small = st.integers(min_value=-3, max_value=3)


@settings(max_examples=25, deadline=None)
@given(st.lists(_small, min_size=9, max_size=9), st.lists(_small, min_size=9, max_size=9))
def test_homomorphism_composition_closed(flat_a, flat_b):
    """If alpha and beta are endomorphism homs of HEIS, so is beta . alpha."""
    g = heis()
    alpha = Matrix.from_rows([flat_a[0:3], flat_a[3:6], flat_a[6:9]])
    beta = Matrix.from_rows([flat_b[0:3], flat_b[3:6], flat_b[6:9]])
    if not (is_lie_homomorphism(g, g, alpha).ok and is_lie_homomorphism(g, g, beta).ok):
        return
    assert is_lie_homomorphism(g, g, beta * alpha).ok


@settings(max_examples=25, deadline=None)
@given(st.lists(_small, min_size=3, max_size=3))
def test_ad_matrix_matches_bracket(coords):
    g = sl2()
    x = [Fraction(c) for c in coords]
    ad = g.ad_matrix(x)
    for j in range(3):
        e_j = [Fraction(1) if t == j else Fraction(0) for t in range(3)]
        assert ad.col(j) == g.bracket(x, e_j)
