"""The squaring operation of a restricted Lie algebra in characteristic 2.

A 2-map is determined by the images of the basis vectors: for
``x = sum c_i b_i`` the squaring axioms force

    x^[2] = sum c_i^2 b_i^[2]  +  sum_{i<j} c_i c_j [b_i, b_j],

so :func:`square` evaluates that extension rule and automatically satisfies
the scalar axiom ``(c x)^[2] = c^2 x^[2]`` and the sum axiom
``(x+y)^[2] = x^[2] + y^[2] + [x, y]`` identically.  What genuinely needs
checking is the adjoint axiom ``ad(x^[2]) = ad(x)^2``; by additivity of its
defect (the Jacobi identity cancels the cross terms) it suffices to check
it on basis vectors, which :func:`verify_two_map` does, plus pairwise sums
and an enumeration pass at small sizes for defence in depth.

Semisimple and 2-nilpotent parts are computed from the orbit of iterated
squaring: on the span of the iterates of ``x`` squaring is an additive
(Frobenius-semilinear) map, so the orbit is eventually periodic, the
nilpotent part dies within dim-many steps, and iterating to a multiple of
the period past that point lands exactly on the semisimple part.
"""

from __future__ import annotations

from .algebra import LieAlgebra
from .errors import PreconditionError
from .linalg import Subspace, all_vectors, rref_rows, reduce_vector, support, unit, vget, vscale

# Enumeration ceilings, in total bits k*n.  The sum axiom is an identity
# of the extension-rule evaluator, so these passes are drift guards and are
# kept cheap; the adjoint axiom is the check that carries real content.
EXHAUSTIVE_SUM_AXIOM_BITS = 8   # all (x, y) pairs
VECTOR_SUM_AXIOM_BITS = 12      # all x against basis vectors


class TwoMap:
    """A candidate 2-map, given by the images of the basis vectors."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)

    def __repr__(self):
        return f"TwoMap({len(self.images)} basis images)"

    def __eq__(self, other):
        return isinstance(other, TwoMap) and self.images == other.images

    def __hash__(self):
        return hash(self.images)


class TwoMapReport:
    """Violations found by :func:`verify_two_map`."""

    def __init__(self, adjoint, scalar, sums):
        # adjoint: [(vector, witness basis index)] where ad(x^[2]) != ad(x)^2
        # scalar:  [(vector, coefficient)] where (c x)^[2] != c^2 x^[2]
        # sums:    [(x, y)] where (x+y)^[2] != x^[2] + y^[2] + [x, y]
        self.adjoint_violations = adjoint
        self.scalar_violations = scalar
        self.sum_violations = sums

    @property
    def ok(self) -> bool:
        return not (self.adjoint_violations or self.scalar_violations or self.sum_violations)

    def __repr__(self):
        if self.ok:
            return "TwoMapReport(ok)"
        return (
            f"TwoMapReport(adjoint={self.adjoint_violations[:4]}, "
            f"scalar={self.scalar_violations[:4]}, sums={self.sum_violations[:4]})"
        )


def square(g: LieAlgebra, tm: TwoMap, x: int) -> int:
    """x^[2] by the extension rule."""
    f, table, images = g.field, g.table, tm.images
    acc = 0
    if f.k == 1:
        idx = []
        xs = x
        while xs:
            low = xs & -xs
            idx.append(low.bit_length() - 1)
            xs ^= low
        for t, i in enumerate(idx):
            acc ^= images[i]
            row = table[i]
            for j in idx[t + 1:]:
                acc ^= row[j]
        return acc
    idx = [(i, vget(f, x, i)) for i in support(f, x)]
    for t, (i, ci) in enumerate(idx):
        acc ^= vscale(f, images[i], f.square(ci))
        row = table[i]
        for (j, cj) in idx[t + 1:]:
            acc ^= vscale(f, row[j], f.mul(ci, cj))
    return acc


def iterate_square(g: LieAlgebra, tm: TwoMap, x: int, m: int) -> int:
    """m-fold application of the squaring map."""
    for _ in range(m):
        x = square(g, tm, x)
    return x


def _ad_defect_witness(g: LieAlgebra, tm: TwoMap, x: int):
    """First basis index where ad(x^[2]) and ad(x)^2 disagree, or None."""
    f = g.field
    sq = square(g, tm, x)
    for j in range(g.dim):
        ej = unit(f, j)
        if g.bracket(sq, ej) != g.bracket(x, g.bracket(x, ej)):
            return j
    return None


def verify_two_map(g: LieAlgebra, tm: TwoMap) -> TwoMapReport:
    """Check the three squaring axioms.

    The adjoint axiom is checked on every basis vector and every sum of two
    basis vectors (sufficient by additivity of the defect once the Jacobi
    identity holds).  The scalar and sum axioms are identities of the
    extension rule; they are re-checked by enumeration at small sizes as a
    guard against implementation drift, and on basis pairs beyond that.
    """
    if len(tm.images) != g.dim:
        raise PreconditionError("two-map image count differs from algebra dimension")
    f, n = g.field, g.dim
    bits = f.k * n

    adjoint = []
    for i in range(n):
        w = _ad_defect_witness(g, tm, unit(f, i))
        if w is not None:
            adjoint.append((unit(f, i), w))
    for i in range(n):
        for j in range(i + 1, n):
            v = unit(f, i) ^ unit(f, j)
            w = _ad_defect_witness(g, tm, v)
            if w is not None:
                adjoint.append((v, w))

    scalar = []
    if f.k > 1:
        for i in range(n):
            for c in range(2, f.order):
                v = unit(f, i)
                if square(g, tm, vscale(f, v, c)) != vscale(f, square(g, tm, v), f.square(c)):
                    scalar.append((v, c))

    sums = []
    if bits <= EXHAUSTIVE_SUM_AXIOM_BITS:
        candidates = [(x, y) for x in all_vectors(f, n) for y in all_vectors(f, n)]
    elif bits <= VECTOR_SUM_AXIOM_BITS:
        candidates = [(x, unit(f, j)) for x in all_vectors(f, n) for j in range(n)]
    else:
        candidates = [(unit(f, i), unit(f, j)) for i in range(n) for j in range(n)]
    for x, y in candidates:
        if square(g, tm, x ^ y) != square(g, tm, x) ^ square(g, tm, y) ^ g.bracket(x, y):
            sums.append((x, y))

    return TwoMapReport(adjoint, scalar, sums)


# ---------------------------------------------------------------------------
# orbit of iterated squaring
# ---------------------------------------------------------------------------

def _orbit(g: LieAlgebra, tm: TwoMap, x: int):
    """Iterates x, x^[2], x^[4], ... until the first repeat.

    Returns (sequence, preperiod, period): sequence[preperiod + period]
    would equal sequence[preperiod].
    """
    seen = {}
    seq = []
    cur = x
    while cur not in seen:
        seen[cur] = len(seq)
        seq.append(cur)
        cur = square(g, tm, cur)
    first = seen[cur]
    return seq, first, len(seq) - first


def is_two_nilpotent(g: LieAlgebra, tm: TwoMap, x: int) -> bool:
    """True iff some iterated square of x is zero.

    The iterates are eventually periodic, so zero appears within the orbit
    or never; no a-priori iteration bound is needed.
    """
    seq, _first, _period = _orbit(g, tm, x)
    return 0 in seq


def is_semisimple(g: LieAlgebra, tm: TwoMap, x: int) -> bool:
    """True iff x lies in the span of its own iterated squares x^[2], x^[4], ..."""
    f = g.field
    rows = []
    cur = square(g, tm, x)
    while True:
        red = reduce_vector(f, rows, cur)
        if red == 0:
            break
        rows, _ = rref_rows(f, rows + [red])
        cur = square(g, tm, cur)
    return reduce_vector(f, rows, x) == 0


def two_envelope(g: LieAlgebra, tm: TwoMap, x: int) -> Subspace:
    """span{x, x^[2], x^[4], ...} up to stabilization."""
    f = g.field
    rows = []
    cur = x
    while True:
        red = reduce_vector(f, rows, cur)
        if red == 0:
            break
        rows, _ = rref_rows(f, rows + [red])
        cur = square(g, tm, cur)
    return Subspace(f, g.dim, tuple(rows))


def jcs_decompose(g: LieAlgebra, tm: TwoMap, x: int):
    """Split x = x_s + x_n into commuting semisimple and 2-nilpotent parts.

    The nilpotent part of x dies after at most k*dim squarings, and on the
    periodic part squaring has the detected period p, so iterating squaring
    M times for the least multiple M of p with M >= k*dim maps x exactly to
    its semisimple part.  Postconditions are re-verified before returning.
    """
    seq, first, period = _orbit(g, tm, x)
    floor = max(g.field.k * g.dim, 1)
    m = ((floor + period - 1) // period) * period
    if m < first:
        m = ((first + period - 1) // period) * period
    if m < len(seq):
        xs = seq[m]
    else:
        xs = seq[first + ((m - first) % period)]
    xn = x ^ xs
    if not (
        is_semisimple(g, tm, xs)
        and is_two_nilpotent(g, tm, xn)
        and g.bracket(xs, xn) == 0
    ):
        raise PreconditionError(
            "no commuting semisimple/2-nilpotent split found; "
            "input is not a verified restricted algebra"
        )
    return xs, xn


def extend_scalars(g: LieAlgebra, tm: TwoMap, k: int):
    """View a GF(2) algebra over GF(2^k) (same structure constants).

    Only prime-field inputs are supported: 0/1 coefficients embed into
    every extension, whereas embedding a proper extension into another
    would depend on a choice of field homomorphism.
    """
    from .field import gf  # local to avoid import cycles in tooling

    if g.field.k != 1:
        raise PreconditionError("scalar extension is implemented from GF(2) only")
    f2 = gf(k)
    if k == 1:
        return g, tm

    def spread(v: int) -> int:
        out, i = 0, 0
        while v:
            if v & 1:
                out |= 1 << (i * k)
            v >>= 1
            i += 1
        return out

    table = [[spread(e) for e in row] for row in g.table]
    g2 = LieAlgebra(f2, g.dim, table, g.name)
    return g2, TwoMap([spread(x) for x in tm.images])


def jcs_decompose_brute(g: LieAlgebra, tm: TwoMap, x: int):
    """Brute-force fallback: search the envelope of x for the unique split.

    Exponential in the envelope dimension; intended as an independent
    cross-check at desk scale.
    """
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
    if len(hits) != 1:
        raise PreconditionError(
            f"expected exactly one decomposition inside the envelope, found {len(hits)}"
        )
    return hits[0]
