"""The squaring map: evaluation, axiom verification, and the split into
semisimple and 2-nilpotent parts.

gl(2) expectations come from squaring actual 2x2 matrices in-test; the
split is cross-checked against a test-local brute-force search over the
envelope, independent of both package code paths.
"""

import pytest

from lie2.algebra import LieAlgebra
from lie2.errors import PreconditionError
from lie2.field import gf
from lie2.fixtures import f6, gl, torus
from lie2.linalg import all_vectors, coeffs, unit, vector
from lie2.restricted import (
    TwoMap,
    extend_scalars,
    is_semisimple,
    is_two_nilpotent,
    iterate_square,
    jcs_decompose,
    jcs_decompose_brute,
    square,
    two_envelope,
    verify_two_map,
)

F2 = gf(1)


def mat_sq(v):
    c = coeffs(F2, 4, v)
    m = ((c[0], c[1]), (c[2], c[3]))
    mm = tuple(
        tuple(sum(m[i][t] * m[t][j] for t in range(2)) % 2 for j in range(2))
        for i in range(2)
    )
    return vector(F2, (mm[0][0], mm[0][1], mm[1][0], mm[1][1]))


# -- square ------------------------------------------------------------------

def test_square_zero():
    g, tm = f6()
    assert square(g, tm, 0) == 0


def test_square_toral_basis():
    g, tm = torus(3)
    for i in range(3):
        assert square(g, tm, unit(F2, i)) == unit(F2, i)


def test_square_f6_mixed_vector():
    g, tm = f6()
    t1, x_alpha = unit(F2, 0), unit(F2, 3)
    # (t1 + x_a)^[2] = t1 + [t1, x_a] = t1 + x_a
    assert square(g, tm, t1 ^ x_alpha) == t1 ^ x_alpha
    # adjoint axiom holds for the result on every basis vector
    for j in range(6):
        ej = unit(F2, j)
        lhs = g.bracket(t1 ^ x_alpha, g.bracket(t1 ^ x_alpha, ej))
        rhs = g.bracket(square(g, tm, t1 ^ x_alpha), ej)
        assert lhs == rhs


def test_square_matches_matrix_squaring():
    g, tm = gl(2)
    for v in range(16):
        assert square(g, tm, v) == mat_sq(v)


def test_square_frobenius_scaling_exhaustive_small_fields():
    from lie2.linalg import vscale

    for k in (2, 3, 4):
        f = gf(k)
        g, tm = torus(2, k=k)
        for lam in f.elements():
            for v in all_vectors(f, 2):
                assert square(g, tm, vscale(f, v, lam)) == vscale(
                    f, square(g, tm, v), f.square(lam)
                )


# -- verify_two_map -------------------------------------------------------------

def test_verify_abelian_zero_images():
    g = LieAlgebra(F2, 3, [[0] * 3 for _ in range(3)])
    assert verify_two_map(g, TwoMap([0, 0, 0])).ok


def test_verify_gl2_matrix_squaring():
    g, tm = gl(2)
    assert verify_two_map(g, tm).ok
    # oracle: the images really are the matrix squares
    for i in range(4):
        assert tm.images[i] == mat_sq(unit(F2, i))


def test_verify_catches_bad_square():
    g, tm = f6()
    bad = list(tm.images)
    bad[3] = unit(F2, 0)  # declare x_alpha^[2] = t1
    rep = verify_two_map(g, TwoMap(bad))
    assert not rep.ok
    assert any(v == unit(F2, 3) for v, _ in rep.adjoint_violations)


def test_adjoint_axiom_on_basis_implies_everywhere():
    # with the Jacobi identity verified, the defect of the adjoint axiom is
    # additive, so basis checks are sufficient; confirmed by enumeration here
    for build in (f6, lambda: gl(2)):
        g, tm = build()
        assert verify_two_map(g, tm).ok
        for x in range(1 << g.dim):
            sq = square(g, tm, x)
            for j in range(g.dim):
                ej = unit(F2, j)
                assert g.bracket(sq, ej) == g.bracket(x, g.bracket(x, ej))


# -- iterated squares and classifications -----------------------------------------

def test_iterate_square():
    g, tm = gl(2)
    e12 = unit(F2, 1)
    assert iterate_square(g, tm, e12, 1) == 0
    assert iterate_square(g, tm, unit(F2, 0), 5) == unit(F2, 0)


def test_two_nilpotent_examples():
    g, tm = f6()
    assert is_two_nilpotent(g, tm, 0)
    assert not is_two_nilpotent(g, tm, unit(F2, 0))  # toral
    g2, tm2 = gl(2)
    assert is_two_nilpotent(g2, tm2, unit(F2, 1))  # E12^2 = 0
    assert mat_sq(unit(F2, 1)) == 0


def test_semisimple_examples():
    g, tm = f6()
    assert is_semisimple(g, tm, 0)
    assert is_semisimple(g, tm, unit(F2, 0))
    assert not is_semisimple(g, tm, unit(F2, 3))  # nonzero 2-nilpotent


def test_two_envelope():
    g, tm = gl(2)
    e12 = unit(F2, 1)
    env = two_envelope(g, tm, e12)
    assert env == g.subspace([e12])
    x = unit(F2, 0) ^ unit(F2, 1)  # E11 + E12, squares to itself
    assert mat_sq(x) == x
    assert two_envelope(g, tm, x) == g.subspace([x])


# -- the semisimple/2-nilpotent split ----------------------------------------------

def brute_split(g, tm, x):
    """Test-local oracle: search the whole envelope for the unique split."""
    env = two_envelope(g, tm, x)
    hits = []
    for xs in env.vectors():
        xn = x ^ xs
        if (
            g.bracket(xs, xn) == 0
            and is_semisimple(g, tm, xs)
            and is_two_nilpotent(g, tm, xn)
        ):
            hits.append((xs, xn))
    assert len(hits) == 1, f"expected unique split, got {hits}"
    return hits[0]


def test_split_trivial_cases():
    g, tm = f6()
    t1, x_a = unit(F2, 0), unit(F2, 3)
    assert jcs_decompose(g, tm, t1) == (t1, 0)
    assert jcs_decompose(g, tm, x_a) == (0, x_a)


def test_split_f6_documented_example():
    g, tm = f6()
    t1, x_b = unit(F2, 0), unit(F2, 4)
    xs, xn = jcs_decompose(g, tm, t1 ^ x_b)
    assert (xs, xn) == (t1, x_b)
    assert brute_split(g, tm, t1 ^ x_b) == (t1, x_b)


@pytest.mark.parametrize("build", [f6, lambda: gl(2)])
def test_split_exhaustive_against_oracle(build):
    g, tm = build()
    for x in range(1 << g.dim):
        xs, xn = jcs_decompose(g, tm, x)
        assert xs ^ xn == x
        assert g.bracket(xs, xn) == 0
        assert is_semisimple(g, tm, xs)
        assert is_two_nilpotent(g, tm, xn)
        assert (xs, xn) == brute_split(g, tm, x)
        assert (xs, xn) == jcs_decompose_brute(g, tm, x)


def test_split_unique_on_small_algebras():
    # uniqueness is part of brute_split's assertion; cover a rank-2 algebra too
    g, tm = torus(2)
    for x in range(4):
        brute_split(g, tm, x)


# -- scalar extension ----------------------------------------------------------------

def test_extend_scalars_roundtrip_structure():
    g, tm = f6()
    g4, tm4 = extend_scalars(g, tm, 2)
    assert g4.dim == g.dim and g4.field.k == 2
    f4 = gf(2)
    # brackets of basis vectors agree after the embedding
    for i in range(6):
        for j in range(6):
            old = coeffs(F2, 6, g.table[i][j])
            new = coeffs(f4, 6, g4.table[i][j])
            assert old == new
    assert verify_two_map(g4, tm4).ok


def test_extend_scalars_refuses_non_prime_field():
    g, tm = torus(2, k=2)
    with pytest.raises(PreconditionError):
        extend_scalars(g, tm, 4)
