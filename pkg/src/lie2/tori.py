"""Toral elements, torus recognition, and relative toral rank.

A toral element satisfies t^[2] = t.  Over GF(2) every nonzero element of
a span of pairwise-commuting toral elements is again toral, so the tori
this module finds are exactly the subspaces spanned by commuting toral
sets, and the exhaustive rank search enumerates such subspaces through
their canonical bases: a canonical basis row with a fresh, larger pivot is
itself toral, so each subspace is generated exactly once from the subspace
spanned by its lower-pivot rows.  No visited-set is needed over GF(2); for
k > 1 the search falls back to a memoized variant because canonical rows
need not be toral there.

Rank values are relative to the coefficient field: over a small field a
2-map can be invertible on an abelian subalgebra that contains no toral
element at all, and such subspaces are invisible to a toral-basis search.
Callers who care should compare ranks across field degrees (the command
line surface reports this per degree).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LieAlgebra, centralizer
from .errors import BudgetExceededError, FieldTooSmallError, PreconditionError
from .linalg import (
    Subspace,
    kernel_of_map,
    reduce_vector,
    rref_rows,
    solve,
    unit,
    vget,
    vscale,
)
from .restricted import TwoMap, square

TORAL_ENUM_BITS = 24        # ceiling on k*n for exhaustive toral enumeration
TORAL_BASIS_ENUM_BITS = 20  # ceiling on k*dim(u) for k>1 toral-basis search


@dataclass(frozen=True)
class Torus:
    """A torus together with a basis of toral elements."""

    subspace: Subspace
    toral_basis: tuple

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def __repr__(self):
        return f"Torus(dim {self.dim})"


@dataclass(frozen=True)
class RankResult:
    rank: int
    certificate: Torus
    mode: str  # "exhaustive" (true maximum) or "greedy" (lower bound)

    @property
    def is_lower_bound_only(self) -> bool:
        return self.mode == "greedy"


def toral_elements(g: LieAlgebra, tm: TwoMap, budget_bits: int = TORAL_ENUM_BITS):
    """All nonzero t with t^[2] = t, by exhaustive enumeration.

    For k = 1 the enumeration walks vectors in Gray-code order so each
    square is maintained incrementally from the previous one; results are
    returned sorted ascending regardless.
    """
    f, n = g.field, g.dim
    bits = f.k * n
    if bits > budget_bits:
        raise BudgetExceededError(
            f"toral enumeration needs 2^{bits} candidates, budget is 2^{budget_bits}; "
            "shrink the field or use the greedy search"
        )
    out = []
    if f.k == 1:
        table, images = g.table, tm.images
        cur = 0
        sq = 0
        for c in range(1, 1 << n):
            b = (c & -c).bit_length() - 1
            # square(cur ^ e_b) = square(cur) + square(e_b) + [cur, e_b]
            delta = images[b]
            xs = cur
            while xs:
                low = xs & -xs
                delta ^= table[low.bit_length() - 1][b]
                xs ^= low
            cur ^= 1 << b
            sq ^= delta
            if sq == cur:
                out.append(cur)
        out.sort()
        return out
    # k > 1: same Gray walk over the raw bit space; flipping one bit of
    # coordinate j adds c = 2^m there, and
    # square(x + c e_j) = square(x) + c^2 e_j^[2] + c [x, e_j]
    images = tm.images
    cur = 0
    sq = 0
    for c in range(1, 1 << (n * f.k)):
        b = (c & -c).bit_length() - 1
        j, m = divmod(b, f.k)
        coeff = 1 << m
        delta = vscale(f, images[j], f.square(coeff))
        delta ^= vscale(f, g.bracket(cur, unit(f, j)), coeff)
        cur ^= 1 << b
        sq ^= delta
        if sq == cur:
            out.append(cur)
    out.sort()
    return out


def is_torus(g: LieAlgebra, tm: TwoMap, u: Subspace) -> bool:
    """Abelian, closed under squaring, and squaring invertible on u.

    Invertibility is equivalent to the basis squares being independent,
    and to u containing no nonzero 2-nilpotent element.
    """
    rows = u.rows
    for i, r in enumerate(rows):
        for s in rows[i + 1:]:
            if g.bracket(r, s):
                return False
    squares = [square(g, tm, r) for r in rows]
    if not all(u.contains(s) for s in squares):
        return False
    return len(rref_rows(g.field, squares)[0]) == u.dim


def toral_basis(g: LieAlgebra, tm: TwoMap, u: Subspace):
    """A basis of u consisting of toral elements.

    Over GF(2) the squaring map restricted to a torus is linear, so the
    fixed space is one kernel computation; a toral basis exists iff every
    element of u is fixed.  Over proper extensions the fixed points are
    found by enumeration, and may fail to span u even though u is a torus;
    that failure is reported as FieldTooSmallError because the missing
    basis lives in a larger field.
    """
    if not is_torus(g, tm, u):
        raise PreconditionError("toral_basis requires a torus")
    f = g.field
    if u.dim == 0:
        return []
    if f.k == 1:
        # coordinates of square(r_i) in the basis of u
        d = u.dim
        cols = []
        for i, r in enumerate(u.rows):
            c = solve(f, list(u.rows), square(g, tm, r))
            cols.append(c ^ unit(f, i))  # column i of (S + I) in u-coordinates
        fixed = kernel_of_map(f, d, cols)
        if fixed.dim != d:
            raise FieldTooSmallError(
                "torus has no basis of toral elements over GF(2); extend the field"
            )
        basis = []
        for coeff_row in fixed.rows:
            v = 0
            for j in range(d):
                if vget(f, coeff_row, j):
                    v ^= u.rows[j]
            basis.append(v)
        return basis
    if f.k * u.dim > TORAL_BASIS_ENUM_BITS:
        raise BudgetExceededError("toral basis search over extension field exceeds budget")
    fixed = [v for v in u.vectors() if v and square(g, tm, v) == v]
    rows, _ = rref_rows(f, fixed)
    if len(rows) != u.dim:
        raise FieldTooSmallError(
            "torus has no basis of toral elements over this field; extend the field"
        )
    # pick actual toral elements forming an independent set
    basis, span = [], []
    for v in fixed:
        if reduce_vector(f, span, v):
            basis.append(v)
            span, _ = rref_rows(f, span + [v])
            if len(basis) == u.dim:
                break
    return basis


# ---------------------------------------------------------------------------
# maximal torus search
# ---------------------------------------------------------------------------

def _max_toral_span_gf2(g: LieAlgebra, torals):
    """Maximum-dimension span of pairwise-commuting torals over GF(2).

    Orderly generation over canonical bases (see the module docstring): a
    state is extended only by torals that are reduced against its rows and
    carry a strictly larger pivot, so every commuting toral subspace is
    generated exactly once and no visited-set is needed.  Since canonical
    rows have pairwise-distinct pivots, the number of distinct candidate
    pivots above the current one bounds all further growth; that prune
    collapses the search as soon as one maximum-dimension span is found.
    Returns (rows, generators).
    """
    f, n = g.field, g.dim
    tau = len(torals)
    piv = [(t & -t).bit_length() - 1 for t in torals]
    adcols = {}

    def commutes(i, j):
        cols = adcols.get(i)
        if cols is None:
            ti = torals[i]
            cols = [g.bracket(ti, 1 << q) for q in range(n)]
            adcols[i] = cols
        acc = 0
        v = torals[j]
        while v:
            low = v & -v
            acc ^= cols[low.bit_length() - 1]
            v ^= low
        return acc == 0

    best_rows: tuple = ()
    best_gens: tuple = ()

    def visit(rows, gens, cand):
        nonlocal best_rows, best_gens
        if len(rows) > len(best_rows):
            best_rows, best_gens = rows, gens
        if not cand:
            return
        pivset = sorted({piv[j] for j in cand})
        if len(rows) + len(pivset) <= len(best_rows):
            return
        for idx in cand:
            p = piv[idx]
            above = sum(1 for q in pivset if q > p)
            if len(rows) + 1 + above <= len(best_rows):
                continue
            v = torals[idx]
            new_cand = [
                j
                for j in cand
                if piv[j] > p and not ((torals[j] >> p) & 1) and commutes(idx, j)
            ]
            new_rows, _ = rref_rows(f, list(rows) + [v])
            visit(tuple(new_rows), gens + (torals[idx],), new_cand)

    visit((), (), list(range(tau)))
    return best_rows, best_gens


def _max_toral_span_generic(g: LieAlgebra, tm: TwoMap, torals):
    """Memoized search for k > 1, where canonical rows need not be toral."""
    f, n = g.field, g.dim
    seen = set()
    best = ((), ())

    def visit(rows, gens, cands):
        nonlocal best
        key = tuple(rows)
        if key in seen:
            return
        seen.add(key)
        if len(rows) > len(best[0]):
            best = (tuple(rows), tuple(gens))
        for v in cands:
            if reduce_vector(f, rows, v) == 0:
                continue
            new_rows, _ = rref_rows(f, rows + [v])
            new_cands = [w for w in cands if g.bracket(v, w) == 0]
            visit(new_rows, gens + [v], new_cands)

    visit([], [], list(torals))
    return best


def maximal_torus(g: LieAlgebra, tm: TwoMap, mode: str = "exhaustive") -> Torus:
    """A maximal torus: true maximum in exhaustive mode, greedy otherwise.

    Greedy extends by the lexicographically smallest toral element of the
    centralizer of the current torus until none exists; over GF(2) the
    result is maximal (not necessarily maximum).
    """
    f, n = g.field, g.dim
    if mode == "exhaustive":
        torals = toral_elements(g, tm)
        if not torals:
            return Torus(Subspace.zero(f, n), ())
        if f.k == 1:
            rows, gens = _max_toral_span_gf2(g, torals)
        else:
            rows, gens = _max_toral_span_generic(g, tm, torals)
        return Torus(Subspace(f, n, rows), tuple(gens))
    if mode != "greedy":
        raise ValueError(f"unknown search mode {mode!r}")

    rows: list = []
    gens: list = []
    while True:
        current = Subspace(f, n, tuple(rows))
        z = centralizer(g, current) if rows else Subspace.full(f, n)
        if f.k * z.dim > TORAL_ENUM_BITS:
            raise BudgetExceededError("greedy step exceeds the enumeration budget")
        # ambient-lexicographic candidate order keeps runs deterministic
        candidates = sorted(z.vectors()) if f.k * z.dim <= 20 else z.vectors()
        found = None
        for v in candidates:
            if v == 0 or reduce_vector(f, rows, v) == 0:
                continue
            if square(g, tm, v) == v:
                found = v
                break
        if found is None:
            break
        gens.append(found)
        rows, _ = rref_rows(f, rows + [found])
    return Torus(Subspace(f, n, tuple(rows)), tuple(gens))


def toral_rank(g: LieAlgebra, tm: TwoMap, mode: str = "exhaustive") -> RankResult:
    """Relative toral rank with a witness torus.

    Exhaustive mode returns the maximum torus dimension over the current
    coefficient field; greedy mode returns a lower bound flagged as such.
    """
    t = maximal_torus(g, tm, mode)
    return RankResult(t.dim, t, mode)
