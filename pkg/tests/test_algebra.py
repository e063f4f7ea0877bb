"""Structure-constant algebras: bracket, axioms, centralizers, ideals.

The gl(2) expectations are cross-checked against an independent in-test
oracle that multiplies 2x2 matrices over GF(2) directly.
"""

import pytest
from hypothesis import given, settings, strategies as st

from lie2.algebra import (
    LieAlgebra,
    abelian,
    acts_nilpotently,
    bracket_span,
    center,
    centralizer,
    derived_subalgebra,
    ideal_closure,
    is_ideal,
    verify_lie,
)
from lie2.errors import AmbientMismatchError
from lie2.field import gf
from lie2.fixtures import f6, gl
from lie2.linalg import Subspace, coeffs, unit, vector

F2 = gf(1)


# -- independent 2x2 matrix oracle -----------------------------------------

def mat_mul(a, b):
    """2x2 matrices over GF(2) as ((a,b),(c,d)) tuples."""
    return tuple(
        tuple((sum(a[i][t] * b[t][j] for t in range(2)) % 2) for j in range(2))
        for i in range(2)
    )


def mat_add(a, b):
    return tuple(tuple((a[i][j] + b[i][j]) % 2 for j in range(2)) for i in range(2))


GL2_BASIS = [  # E11, E12, E21, E22 in fixture order
    ((1, 0), (0, 0)),
    ((0, 1), (0, 0)),
    ((0, 0), (1, 0)),
    ((0, 0), (0, 1)),
]


def mat_to_vec(m):
    return vector(F2, (m[0][0], m[0][1], m[1][0], m[1][1]))


def vec_to_mat(v):
    c = coeffs(F2, 4, v)
    return ((c[0], c[1]), (c[2], c[3]))


@pytest.fixture(scope="module")
def gl2():
    return gl(2)


def test_gl2_bracket_matches_matrix_commutator(gl2):
    g, _ = gl2
    for x in range(16):
        for y in range(16):
            mx, my = vec_to_mat(x), vec_to_mat(y)
            comm = mat_add(mat_mul(mx, my), mat_mul(my, mx))
            assert g.bracket(x, y) == mat_to_vec(comm)


def test_gl2_e12_e21_bracket(gl2):
    g, _ = gl2
    e11, e12, e21, e22 = (unit(F2, i) for i in range(4))
    assert g.bracket(e12, e21) == e11 ^ e22


def test_bracket_alternating_and_bilinear(gl2):
    g, _ = gl2
    for x in range(16):
        assert g.bracket(x, x) == 0
        for y in range(16):
            assert g.bracket(x, y) == g.bracket(y, x)  # characteristic 2


def test_abelian_brackets_vanish():
    g = abelian(3)
    for x in range(8):
        for y in range(8):
            assert g.bracket(x, y) == 0


def test_verify_lie_reports():
    assert verify_lie(abelian(4)).ok
    g, _ = gl(2)
    assert verify_lie(g).ok


def test_verify_lie_catches_asymmetric_entry():
    # c_12^1 = 1 but c_21^1 = 0: symmetry violation at (0, 1)
    table = [[0, 1, 0], [0, 0, 0], [0, 0, 0]]
    g = LieAlgebra.from_entry_table(F2, 3, table)
    rep = verify_lie(g)
    assert not rep.ok
    assert (0, 1) in rep.symmetry_violations


def test_verify_lie_catches_diagonal_entry():
    table = [[1, 0], [0, 0]]
    g = LieAlgebra.from_entry_table(F2, 2, table)
    rep = verify_lie(g)
    assert rep.alternating_violations == [(0,)]


def test_verify_lie_catches_jacobi_failure():
    # [e0,e1]=e3, [e0,e2]=0, [e1,e2]=e0: [[e0,e1],e2]+[[e1,e2],e0]+[[e2,e0],e1] = [e3,e2]
    f = F2
    pairs = {(0, 1): unit(f, 3), (1, 2): unit(f, 0), (2, 3): unit(f, 1)}
    g = LieAlgebra.from_pairs(f, 4, pairs)
    rep = verify_lie(g)
    assert not rep.ok and rep.jacobi_violations


# -- centralizer / center -----------------------------------------------------

def centralizer_oracle(g, u):
    """Enumerate all vectors commuting with every basis row of u."""
    hits = [v for v in range(1 << g.dim) if all(g.bracket(v, r) == 0 for r in u.rows)]
    return set(hits)


def test_centralizer_of_zero_is_everything(gl2):
    g, _ = gl2
    assert centralizer(g, g.zero_space()) == g.full_space()


def test_centralizer_abelian_is_everything():
    g = abelian(3)
    u = g.subspace([unit(F2, 0)])
    assert centralizer(g, u) == g.full_space()


def test_centralizer_gl2_diagonal(gl2):
    g, _ = gl2
    diag = g.subspace([unit(F2, 0), unit(F2, 3)])
    got = centralizer(g, diag)
    assert got == diag  # the diagonal subalgebra, dim 2
    assert set(got.vectors()) == centralizer_oracle(g, diag)


def test_center_examples(gl2):
    assert center(abelian(3)) == Subspace.full(F2, 3)
    g, _ = gl2
    assert center(g) == g.subspace([unit(F2, 0) ^ unit(F2, 3)])  # scalar matrices
    gf6, _ = f6()
    # oracle: enumerate all 64 vectors
    assert center(gf6).dim == 0
    assert centralizer_oracle(gf6, gf6.full_space()) == {0}


def test_centralizer_antitone(gl2):
    g, _ = gl2
    small = g.subspace([unit(F2, 0)])
    big = g.subspace([unit(F2, 0), unit(F2, 1)])
    assert centralizer(g, small).contains_space(centralizer(g, big))


# -- ideal machinery -----------------------------------------------------------

def test_ideal_closure_trivial_cases():
    g = abelian(3)
    u = g.subspace([unit(F2, 1)])
    assert ideal_closure(g, u) == u
    gf6, _ = f6()
    assert ideal_closure(gf6, gf6.full_space()) == gf6.full_space()


def test_f6_root_vector_closure_is_line():
    g, _ = f6()
    x_alpha = unit(F2, 3)  # basis order: t1 t2 t3 x_a x_b x_c
    cl = ideal_closure(g, g.subspace([x_alpha]))
    assert cl == g.subspace([x_alpha])
    assert is_ideal(g, cl)


def test_closure_idempotent_monotone(gl2):
    g, _ = gl2
    for bits in range(1, 16):
        u = g.subspace([bits])
        cl = ideal_closure(g, u)
        assert is_ideal(g, cl)
        assert cl.contains_space(u)
        assert ideal_closure(g, cl) == cl
        bigger = ideal_closure(g, u.sum(g.subspace([unit(F2, 1)])))
        assert bigger.contains_space(cl)


def test_is_ideal_iff_closure_fixed(gl2):
    g, _ = gl2
    for bits in range(1, 16):
        u = g.subspace([bits, unit(F2, 0)])
        assert is_ideal(g, u) == (ideal_closure(g, u) == u)


def test_bracket_span_symmetric(gl2):
    g, _ = gl2
    u = g.subspace([unit(F2, 1), unit(F2, 0)])
    v = g.subspace([unit(F2, 2)])
    assert bracket_span(g, u, v) == bracket_span(g, v, u)


def test_acts_nilpotently(gl2):
    g, _ = gl2
    assert acts_nilpotently(g, g.zero_space())
    assert acts_nilpotently(g, g.subspace([unit(F2, 1)]))       # E12
    assert not acts_nilpotently(g, g.subspace([unit(F2, 0)]))   # E11
    ab = abelian(2)
    assert acts_nilpotently(ab, ab.full_space())


def test_acts_nilpotently_when_bracket_vanishes(gl2):
    g, _ = gl2
    z = center(g)
    assert acts_nilpotently(g, z)


def test_derived_subalgebra(gl2):
    g, _ = gl2
    d = derived_subalgebra(g, g.full_space())
    # [gl2, gl2] = sl2: E12, E21, E11+E22
    assert d == g.subspace([unit(F2, 1), unit(F2, 2), unit(F2, 0) ^ unit(F2, 3)])


def test_bracket_length_mismatch():
    g = abelian(2)
    with pytest.raises(AmbientMismatchError):
        g.bracket(1 << 5, 1)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 63), st.integers(1, 63))
def test_f6_closure_monotone_property(a, b):
    g, _ = f6()
    u = g.subspace([a])
    v = g.subspace([a, b])
    assert ideal_closure(g, v).contains_space(ideal_closure(g, u))
