"""The rank-3 screening machinery end to end.

Every constructed ideal is double-checked here through the spinning oracle
(ideal_closure) and, where the dimension budget allows, through the
brute-force simplicity oracle; the two routes must never disagree.
"""

import random

import pytest

from lie2.algebra import abelian, center, ideal_closure, is_ideal
from lie2.errors import BudgetExceededError, PreconditionError
from lie2.field import gf
from lie2.fixtures import (
    delta0,
    delta2,
    f6,
    f6n,
    f7,
    gl,
    gltor,
    graded,
    permute_basis,
    rank2sq,
    torus,
    u1,
    u2,
    vacuity_family,
    witt,
)
from lie2.linalg import unit
from lie2.restricted import TwoMap
from lie2.roots import RootFunctional, Torus, grading_check, root_decomposition
from lie2.screening import (
    LEMMA_AB_GT_AG,
    LEMMA_ABG_GT_AG,
    LEMMA_AG_GT_BG,
    LEMMA_AG_GT_EQ,
    LEMMA_ALPHA_GT_BETA,
    LEMMA_BETA_GT_XI,
    LEMMA_BG_GT_ABG,
    LEMMA_DIM1,
    LEMMA_GAMMA_GT_XI,
    VERDICT_OUT_OF_SCOPE,
    VERDICT_PASSES,
    VERDICT_WITNESS,
    check_dim_bound,
    construct_ideal_rank3,
    dimension_transfer,
    is_simple,
    kernel_confinement,
    missing_roots_ideal,
    missing_roots_obstruction,
    n_subspace,
    named_construction,
    one_dim_rootspace_ideal,
    self_bracket_bound,
    simplicity_screen,
)
from lie2.tori import maximal_torus

F2 = gf(1)


def decomposition(build):
    g, tm = build() if callable(build) else build
    t = maximal_torus(g, tm, "exhaustive")
    return g, tm, root_decomposition(g, tm, t)


def assert_sound(g, rep):
    """The soundness contract of every ideal report."""
    assert rep.verified_ideal and rep.proper and rep.nonzero
    assert is_ideal(g, rep.subspace)
    assert ideal_closure(g, rep.subspace) == rep.subspace
    assert 0 < rep.subspace.dim < g.dim


# -- dimension bound -------------------------------------------------------------

def test_dim_bound_f6_tight():
    g, tm, d = decomposition(f6)
    rep = check_dim_bound(g, tm, d)
    assert rep.ok and rep.dim == 2 * rep.rank == 6
    assert rep.independent_roots == 3


def test_dim_bound_needs_centerless():
    g, tm, d = decomposition(lambda: torus(3))
    with pytest.raises(PreconditionError):
        check_dim_bound(g, tm, d)


def test_dim_bound_f7():
    g, tm, d = decomposition(f7)
    rep = check_dim_bound(g, tm, d)
    assert rep.ok and rep.dim == 10 >= 2 * rep.rank


# -- one-dimensional root spaces ---------------------------------------------------

def test_one_dim_ideal_f6():
    g, tm, d = decomposition(f6)
    rep = one_dim_rootspace_ideal(g, tm, d)
    assert rep.lemma == LEMMA_DIM1
    assert rep.subspace == g.subspace([unit(F2, 3), unit(F2, 4), unit(F2, 5)])
    assert_sound(g, rep)


def test_one_dim_ideal_f7():
    g, tm, d = decomposition(f7)
    rep = one_dim_rootspace_ideal(g, tm, d)
    assert rep.subspace.dim == 7
    assert_sound(g, rep)


def test_one_dim_ideal_rejects_fat_root_spaces():
    g, tm, d = decomposition(lambda: gl(2))
    with pytest.raises(PreconditionError):
        one_dim_rootspace_ideal(g, tm, d)


def test_one_dim_ideal_rejects_center():
    g, tm, d = decomposition(f6n)
    with pytest.raises(PreconditionError):
        one_dim_rootspace_ideal(g, tm, d)


# -- dimension transfer ----------------------------------------------------------------

def test_transfer_hypothesis_not_met_on_f6():
    g, tm, d = decomposition(f6)
    roots = d.root_list()
    for xi in roots:
        for eta in roots:
            if xi != eta:
                assert dimension_transfer(g, tm, d, xi, eta).status == "HypothesisNotMet"


def test_transfer_fires_on_squares_reaching_torus():
    g, tm, d = decomposition(rank2sq)
    xi, eta = RootFunctional((1, 0)), RootFunctional((0, 1))
    res = dimension_transfer(g, tm, d, xi, eta)
    assert res.status == "DimsEqual"
    assert res.dim_eta == res.dim_xi_eta == 1
    assert res.rank_into == res.rank_back == 1
    assert res.witness == unit(F2, 2)  # the vector squaring onto t2


def test_transfer_requires_roots():
    g, tm, d = decomposition(f6)
    with pytest.raises(PreconditionError):
        dimension_transfer(g, tm, d, RootFunctional((1, 1, 0)), RootFunctional((1, 0, 0)))


def test_corrupted_tensor_caught_by_grading_first():
    # breaking the grading is detected before any dimension conclusion is drawn
    g, tm = f6()
    table = [list(r) for r in g.table]
    table[3][4] = table[4][3] = unit(F2, 0)  # [x_a, x_b] := t1, off-grade
    from lie2.algebra import LieAlgebra

    bad = LieAlgebra(F2, 6, table, "f6corrupt")
    t = maximal_torus(bad, tm, "exhaustive")
    d = root_decomposition(bad, tm, t)
    assert not grading_check(bad, d).ok


# -- confinement -----------------------------------------------------------------------

def test_kernel_confinement_u1():
    g, tm, d = decomposition(u1)
    alpha, beta = RootFunctional((1, 0, 0)), RootFunctional((0, 1, 0))
    # dim g_alpha = 2 differs from dim g_{beta+alpha} = 1, so squares of
    # g_beta are confined to ker(alpha) & ker(beta) plus the nil part
    rep = kernel_confinement(g, tm, d, beta, [alpha])
    assert rep.ok and rep.slice_dim <= 1


def test_kernel_confinement_requires_unequal_dims():
    g, tm, d = decomposition(f7)
    with pytest.raises(PreconditionError):
        kernel_confinement(g, tm, d, RootFunctional((1, 0, 0)), [RootFunctional((0, 1, 0))])


def test_kernel_confinement_requires_independence():
    g, tm, d = decomposition(u1)
    a = RootFunctional((1, 0, 0))
    with pytest.raises(PreconditionError):
        kernel_confinement(g, tm, d, a, [a])


def test_self_bracket_bounds_hold():
    for build in (f6, f6n, delta2, f7, u1, u2):
        g, tm, d = decomposition(build)
        for xi in d.root_list():
            assert self_bracket_bound(g, tm, d, xi).confined, (g.name, xi)


# -- N(sigma, delta) ----------------------------------------------------------------------

def test_n_subspace_trivial_brackets_is_whole_root_space():
    g, tm, d = decomposition(f7)
    sigma, delta = RootFunctional((1, 0, 0)), RootFunctional((0, 1, 0))
    assert n_subspace(g, tm, d, sigma, delta) == d.roots[sigma]


def test_n_subspace_excludes_vectors_bracketing_onto_torus():
    # in gl(2) + outer toral line, [E12, E21] = E11 + E22 is toral, so no
    # nonzero element of the matrix root space satisfies the nil condition
    g, tm = gltor()
    t = maximal_torus(g, tm, "exhaustive")
    assert t.dim == 3
    d = root_decomposition(g, tm, t)
    sigma = RootFunctional((1, 1, 0))
    delta = RootFunctional((0, 0, 1))
    assert d.roots[sigma].dim == 2
    assert n_subspace(g, tm, d, sigma, delta).dim == 0


def test_n_subspace_u2_values():
    g, tm, d = decomposition(u2)
    alpha, beta = RootFunctional((1, 0, 0)), RootFunctional((0, 1, 0))
    # self-brackets of g_alpha land in the nil part, cross brackets vanish
    assert n_subspace(g, tm, d, alpha, beta) == d.roots[alpha]
    assert n_subspace(g, tm, d, beta, alpha) == d.roots[beta]


def test_n_subspace_shift_identity_randomized():
    rng = random.Random(20240)
    pool = [decomposition(b) for b in (f7, u1, u2, lambda: delta0((1, 2, 1, 2, 1, 1, 2)))]
    checked = 0
    while checked < 100:
        g, tm, d = pool[rng.randrange(len(pool))]
        roots = d.root_list()
        sigma = roots[rng.randrange(len(roots))]
        delta = roots[rng.randrange(len(roots))]
        if sigma == delta:
            continue
        assert n_subspace(g, tm, d, sigma, delta) == n_subspace(g, tm, d, sigma, sigma + delta)
        checked += 1


def test_n_subspace_rejects_equal_roots():
    g, tm, d = decomposition(f7)
    a = RootFunctional((1, 0, 0))
    with pytest.raises(PreconditionError):
        n_subspace(g, tm, d, a, a)


# -- the eight constructions -----------------------------------------------------------------

DISPATCH_CASES = [
    ((2, 1, 1, 1, 1, 1, 1), LEMMA_ALPHA_GT_BETA, 10),
    ((2, 2, 1, 1, 1, 1, 1), LEMMA_BETA_GT_XI, 11),
    ((2, 2, 2, 1, 1, 1, 1), LEMMA_AB_GT_AG, 10),
    ((2, 2, 2, 2, 2, 2, 1), LEMMA_BG_GT_ABG, 15),
    ((2, 2, 2, 2, 2, 1, 1), LEMMA_AG_GT_EQ, 14),
    ((2, 2, 1, 2, 1, 1, 1), LEMMA_GAMMA_GT_XI, 12),
    ((2, 2, 1, 2, 1, 1, 2), LEMMA_ABG_GT_AG, 11),
]


@pytest.mark.parametrize("dims,lemma,ideal_dim", DISPATCH_CASES)
def test_construction_dispatch(dims, lemma, ideal_dim):
    g, tm, d = decomposition(lambda: delta0(dims))
    rep = construct_ideal_rank3(g, tm, d)
    assert rep.lemma == lemma
    assert rep.subspace.dim == ideal_dim
    assert_sound(g, rep)


def test_construction_equal_dims_returns_none():
    g, tm, d = decomposition(f7)
    rep = construct_ideal_rank3(g, tm, d)
    assert rep.lemma is None and not rep.nonzero


def test_construction_u1_documented_example():
    g, tm, d = decomposition(u1)
    rep = construct_ideal_rank3(g, tm, d)
    assert rep.lemma == LEMMA_ALPHA_GT_BETA
    assert rep.subspace.dim == 10  # torus slice (2) + all root spaces (8)
    assert_sound(g, rep)


def test_construction_u2_fires_n_construction():
    g, tm, d = decomposition(u2)
    rep = construct_ideal_rank3(g, tm, d)
    assert rep.lemma == LEMMA_AB_GT_AG
    assert rep.subspace.dim == 12
    assert_sound(g, rep)
    # the building blocks are nontrivial
    alpha = RootFunctional((1, 0, 0))
    beta = RootFunctional((0, 1, 0))
    assert n_subspace(g, tm, d, alpha, beta).dim == 2


def test_construction_requires_seven_roots():
    g, tm, d = decomposition(f6)
    with pytest.raises(PreconditionError):
        construct_ideal_rank3(g, tm, d)


def test_construction_requires_centerless():
    g, tm, d = decomposition(f6n)
    with pytest.raises(PreconditionError):
        construct_ideal_rank3(g, tm, d)


def test_named_construction_last_pattern_direct():
    # the dispatch resolves the (M,M,M,M,M,M,<M) pattern through an earlier
    # stage, so drive the remaining construction directly: relabelled so the
    # short root is beta+gamma, the slice span{s1, s2+s3} + n + roots is an
    # ideal
    g, tm, d = decomposition(lambda: delta0((2, 2, 2, 2, 2, 2, 1)))
    identity = (1, 2, 4)
    rep = named_construction(g, tm, d, LEMMA_AG_GT_BG, identity)
    assert rep.lemma == LEMMA_AG_GT_BG
    assert rep.subspace.dim == 15
    assert_sound(g, rep)


def test_dispatch_covers_random_patterns():
    # any pattern with two unequal entries must fire some construction,
    # and the fired ideal must re-verify; seeded sample across {1,2,3}^7
    rng = random.Random(31)
    seen_lemmas = set()
    trials = 0
    while trials < 40:
        dims = tuple(rng.choice((1, 2, 3)) for _ in range(7))
        if len(set(dims)) == 1 or sum(dims) > 13:
            continue
        trials += 1
        g, tm, d = decomposition(lambda dd=dims: delta0(dd))
        rep = construct_ideal_rank3(g, tm, d)
        assert rep.lemma is not None, dims
        assert_sound(g, rep)
        seen_lemmas.add(rep.lemma)
    assert len(seen_lemmas) >= 4  # the sample exercises several stages


def test_dispatch_determinism_under_relabelling():
    mats = [(1, 2, 4), (2, 1, 4), (4, 2, 1), (2, 4, 1), (3, 1, 4), (1, 6, 4)]
    for build in (u1, u2, lambda: delta0((2, 2, 1, 2, 1, 1, 2))):
        g, tm, d = decomposition(build)
        base = construct_ideal_rank3(g, tm, d)
        for mat in mats:
            s = [0, 0, 0]
            for j, row in enumerate(mat):
                for i in range(3):
                    if (row >> i) & 1:
                        s[j] ^= d.torus.toral_basis[i]
            d2 = root_decomposition(g, tm, Torus(d.torus.subspace, tuple(s)))
            rep = construct_ideal_rank3(g, tm, d2)
            assert rep.subspace.dim == base.subspace.dim
            assert (rep.verified_ideal, rep.proper, rep.nonzero) == (
                base.verified_ideal, base.proper, base.nonzero,
            )


# -- missing-roots obstruction ------------------------------------------------------------------

def test_obstruction_f6():
    g, tm, d = decomposition(f6)
    obs = missing_roots_obstruction(g, tm, d)
    assert obs.configuration == "Delta1"
    assert obs.ok and obs.projection_dim == 0 and obs.slice_dim == 0
    rep = missing_roots_ideal(g, tm, d)
    assert rep.subspace.dim == 3
    assert_sound(g, rep)


def test_obstruction_delta2():
    g, tm, d = decomposition(delta2)
    obs = missing_roots_obstruction(g, tm, d)
    assert obs.configuration == "Delta2"
    assert obs.ok and obs.slice_dim == 2 < 3
    rep = missing_roots_ideal(g, tm, d)
    assert_sound(g, rep)


def delta2fat():
    """Four-root configuration where [g_a, g_a] reaches t_2.

    A self-bracket of the two-dimensional g_alpha landing on a toral
    element forces the compensating cross brackets [x_a2, y] = w and
    [x_a1, w] = y through g_{alpha+beta} (otherwise the Jacobi identity
    fails), which is exactly the dimension-transfer mechanism at work.
    Basis order: t1 t2 t3 | x_a1 x_a2 | y | x_c | w.
    """
    from lie2.algebra import LieAlgebra
    from lie2.restricted import verify_two_map

    e = [unit(F2, i) for i in range(8)]
    pairs = {
        (0, 3): e[3], (0, 4): e[4],            # alpha(t1) = 1
        (1, 5): e[5],                          # beta(t2) = 1
        (2, 6): e[6],                          # gamma(t3) = 1
        (0, 7): e[7], (1, 7): e[7],            # (alpha+beta) on t1, t2
        (3, 4): e[1],                          # [x_a1, x_a2] = t2
        (4, 5): e[7],                          # [x_a2, y] = w
        (3, 7): e[5],                          # [x_a1, w] = y
    }
    g = LieAlgebra.from_pairs(F2, 8, pairs, "delta2fat")
    tm = TwoMap([e[0], e[1], e[2], 0, 0, 0, 0, 0])
    assert g.verify().ok
    assert verify_two_map(g, tm).ok
    return g, tm


def test_obstruction_nontrivial_projection():
    g, tm, d = decomposition(delta2fat)
    assert center(g).dim == 0
    obs = missing_roots_obstruction(g, tm, d)
    assert obs.configuration == "Delta2"
    assert obs.contained and obs.projection_dim == 1
    rep = missing_roots_ideal(g, tm, d)
    assert_sound(g, rep)
    assert rep.subspace.dim == 6  # t2 plus four root spaces of total dim 5


def test_obstruction_rejects_delta0():
    g, tm, d = decomposition(f7)
    with pytest.raises(PreconditionError):
        missing_roots_obstruction(g, tm, d)


def test_obstruction_across_configurations():
    # one fixture per reachable configuration index; the slice dimension
    # stays below the rank everywhere, which is the obstruction
    cases = [
        (lambda: graded({1: 1, 2: 1, 4: 1, 7: 1}, name="frame4"), "Delta3", 0),
        (lambda: graded({1: 1, 2: 1, 3: 1, 4: 1, 6: 2}, name="five"), "Delta4", 2),
        (lambda: graded({m: 1 for m in range(1, 7)}, name="six"), "Delta6", 2),
    ]
    for build, label, slice_dim in cases:
        g, tm, d = decomposition(build)
        obs = missing_roots_obstruction(g, tm, d)
        assert obs.configuration == label
        assert obs.slice_dim == slice_dim < d.rank
        assert obs.ok
        rep = missing_roots_ideal(g, tm, d)
        assert_sound(g, rep)


# -- the screen -----------------------------------------------------------------------------------

def test_screen_witness_fixtures():
    for build, expected_reason in [
        (f6, "configuration Delta1"),
        (delta2, "configuration Delta2"),
        (f7, "all root spaces one-dimensional"),
        (u1, "construction AlphaGtBeta"),
        (u2, "construction AlphaBetaGtAlphaGamma"),
    ]:
        g, tm = build()
        res = simplicity_screen(g, tm)
        assert res.verdict == VERDICT_WITNESS, g.name
        assert res.reason == expected_reason
        assert_sound(g, res.ideal)


def test_screen_unequal_pair_recorded():
    g, tm = u1()
    res = simplicity_screen(g, tm)
    assert res.unequal_pair is not None
    a, b = res.unequal_pair
    assert a.values != b.values


def test_screen_center_witness():
    for build in (lambda: gl(2), lambda: gl(3), gltor):
        g, tm = build()
        res = simplicity_screen(g, tm)
        assert res.verdict == VERDICT_WITNESS
        assert res.reason == "nonzero center"
        assert_sound(g, res.ideal)


def test_screen_out_of_scope():
    g, tm = torus(3)
    assert simplicity_screen(g, tm).verdict == VERDICT_OUT_OF_SCOPE
    g, tm = witt(2)
    res = simplicity_screen(g, tm)
    assert res.verdict == VERDICT_OUT_OF_SCOPE and "rank 1" in res.reason
    g, tm = rank2sq()
    assert simplicity_screen(g, tm).verdict == VERDICT_OUT_OF_SCOPE


def test_screen_budget_refusal():
    # abelian: refused before any enumeration
    g = abelian(30)
    tm = TwoMap([unit(F2, i) for i in range(30)])
    res = simplicity_screen(g, tm)
    assert res.verdict == VERDICT_OUT_OF_SCOPE and "abelian" in res.reason
    # non-abelian, centerless, dim 26: the exhaustive rank stage refuses
    g, tm = delta0((4, 3, 3, 3, 3, 4, 3))
    assert g.dim == 26
    res = simplicity_screen(g, tm)
    assert res.verdict == VERDICT_OUT_OF_SCOPE and "budget" in res.reason


def test_screen_passes_on_equal_dims():
    g, tm = delta0((2,) * 7)
    res = simplicity_screen(g, tm)
    assert res.verdict == VERDICT_PASSES
    assert res.ideal is None


# -- the oracle -----------------------------------------------------------------------------------

def test_oracle_dim_one_and_abelian():
    g = abelian(1)
    assert not is_simple(g, TwoMap([0])).simple
    g = abelian(3)
    v = is_simple(g, TwoMap([0, 0, 0]))
    assert not v.simple and v.counterexample is not None


def test_oracle_counterexample_generates_proper_ideal():
    for build in (f6, f7, u1, lambda: gl(2)):
        g, tm = build()
        v = is_simple(g, tm)
        assert not v.simple
        cl = ideal_closure(g, g.subspace([v.counterexample]))
        assert 0 < cl.dim < g.dim and is_ideal(g, cl)


def test_oracle_budget():
    g = abelian(21)
    with pytest.raises(BudgetExceededError):
        is_simple(g, TwoMap([0] * 21))


def test_oracle_projective_representatives_over_gf4():
    g, tm = torus(2, k=2)
    v = is_simple(g, tm)
    assert not v.simple
    assert v.closures_run <= 5  # (16 - 1) / 3 lines


def test_screen_and_oracle_agree():
    # every witness the screen produces must be confirmed non-simple
    for build in (f6, f6n, f7, delta2, u1, lambda: gl(2), lambda: gl(3),
                  lambda: witt(2), gltor, rank2sq, lambda: torus(3)):
        g, tm = build()
        res = simplicity_screen(g, tm)
        if g.dim <= 12:
            verdict = is_simple(g, tm)
            if res.verdict == VERDICT_WITNESS:
                assert not verdict.simple, g.name
            assert not (res.verdict == VERDICT_WITNESS and verdict.simple)
