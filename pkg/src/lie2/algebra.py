"""Lie algebras over GF(2^k) given by structure constants.

The bracket of an n-dimensional algebra is stored as an n x n table of
packed vectors: ``table[i][j]`` is [b_i, b_j] expressed in the basis.  In
characteristic 2 the bracket is alternating with ``[x, y] = [y, x]``, so a
valid table has zero diagonal and is symmetric; :func:`verify_lie` reports
every violation of that shape and of the Jacobi identity instead of
assuming it, which lets deliberately corrupted tensors be inspected.

All operations are pure; a LieAlgebra is immutable after construction.
"""

from __future__ import annotations

from .errors import AmbientMismatchError
from .field import GF2k, gf
from .linalg import (
    Matrix,
    Subspace,
    kernel_of_map,
    reduce_vector,
    rref_rows,
    support,
    unit,
    vget,
    vscale,
)


class LieReport:
    """Outcome of :func:`verify_lie`: empty lists mean a valid Lie algebra."""

    def __init__(self, alternating, symmetry, jacobi):
        self.alternating_violations = alternating  # [(i,)] with c_ii != 0
        self.symmetry_violations = symmetry        # [(i, j)] with c_ij != c_ji
        self.jacobi_violations = jacobi            # [(i, j, l)]

    @property
    def ok(self) -> bool:
        return not (
            self.alternating_violations or self.symmetry_violations or self.jacobi_violations
        )

    def __repr__(self):
        if self.ok:
            return "LieReport(ok)"
        return (
            f"LieReport(alternating={self.alternating_violations}, "
            f"symmetry={self.symmetry_violations}, jacobi={self.jacobi_violations})"
        )


class LieAlgebra:
    """An algebra with a bilinear bracket, fixed by its structure table."""

    __slots__ = ("field", "dim", "name", "table", "_cols")

    def __init__(self, field: GF2k, dim: int, table, name: str | None = None):
        self.field = field
        self.dim = dim
        self.name = name
        self.table = tuple(tuple(row) for row in table)
        if len(self.table) != dim or any(len(r) != dim for r in self.table):
            raise ValueError("structure table must be dim x dim")
        # column view: _cols[j][i] = [b_i, b_j], used for fast ad actions
        self._cols = tuple(
            tuple(self.table[i][j] for i in range(dim)) for j in range(dim)
        )

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_pairs(cls, field, dim, pairs, name=None) -> "LieAlgebra":
        """Build from sparse upper-triangular data {(i, j): packed vector}.

        Only i < j entries are accepted; the mirror entries are filled in
        (characteristic 2: c_ij = c_ji) and the diagonal is zero.
        """
        table = [[0] * dim for _ in range(dim)]
        for (i, j), v in pairs.items():
            if not 0 <= i < j < dim:
                raise ValueError(f"need 0 <= i < j < dim, got ({i}, {j})")
            table[i][j] = v
            table[j][i] = v
        return cls(field, dim, table, name)

    @classmethod
    def from_entry_table(cls, field, dim, raw, name=None) -> "LieAlgebra":
        """Build from a full (possibly invalid) table of packed vectors."""
        return cls(field, dim, raw, name)

    def __repr__(self):
        return f"LieAlgebra({self.name or 'unnamed'}, dim {self.dim} over {self.field})"

    # -- bracket ------------------------------------------------------------

    def _check_len(self, x: int):
        if x >> (self.dim * self.field.k):
            raise AmbientMismatchError("vector has coordinates beyond the algebra dimension")

    def bracket(self, x: int, y: int) -> int:
        """[x, y], bilinear extension of the table."""
        self._check_len(x)
        self._check_len(y)
        f, table = self.field, self.table
        acc = 0
        if f.k == 1:
            xs = x
            while xs:
                low = xs & -xs
                i = low.bit_length() - 1
                xs ^= low
                row = table[i]
                ys = y
                while ys:
                    lo2 = ys & -ys
                    acc ^= row[lo2.bit_length() - 1]
                    ys ^= lo2
            return acc
        for i in support(f, x):
            ci = vget(f, x, i)
            row = table[i]
            for j in support(f, y):
                c = f.mul(ci, vget(f, y, j))
                if c:
                    acc ^= vscale(f, row[j], c)
        return acc

    def ad_apply(self, x: int, v: int) -> int:
        return self.bracket(x, v)

    def ad_matrix(self, x: int) -> Matrix:
        """The matrix of ad(x); column j is [x, b_j]."""
        f, n = self.field, self.dim
        cols = [self.bracket(x, unit(f, j)) for j in range(n)]
        rows = []
        for i in range(n):
            row = 0
            for j, col in enumerate(cols):
                c = vget(f, col, i)
                if c:
                    row |= c << (j * f.k)
            rows.append(row)
        return Matrix(f, n, n, rows)

    # -- whole-space helpers -------------------------------------------------

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def subspace(self, vectors_) -> Subspace:
        return Subspace.from_vectors(self.field, self.dim, vectors_)

    # -- verification --------------------------------------------------------

    def verify(self) -> LieReport:
        """Exhaustively check the alternating shape and Jacobi on all triples."""
        n, table = self.dim, self.table
        alternating = [(i,) for i in range(n) if table[i][i] != 0]
        symmetry = [
            (i, j) for i in range(n) for j in range(i + 1, n) if table[i][j] != table[j][i]
        ]
        jacobi = []
        for i in range(n):
            for j in range(i + 1, n):
                bij = table[i][j]
                for l in range(j + 1, n):
                    s = (
                        self.bracket(bij, unit(self.field, l))
                        ^ self.bracket(table[j][l], unit(self.field, i))
                        ^ self.bracket(table[l][i], unit(self.field, j))
                    )
                    if s:
                        jacobi.append((i, j, l))
        return LieReport(alternating, symmetry, jacobi)


def verify_lie(g: LieAlgebra) -> LieReport:
    return g.verify()


def bracket(g: LieAlgebra, x: int, y: int) -> int:
    return g.bracket(x, y)


# ---------------------------------------------------------------------------
# subspace-level operations
# ---------------------------------------------------------------------------

def bracket_span(g: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """span{[x, y] : x in u, y in v}; equals the span of basis brackets."""
    vecs = [g.bracket(r, s) for r in u.rows for s in v.rows]
    return g.subspace(vecs)


def centralizer(g: LieAlgebra, u: Subspace) -> Subspace:
    """{x : [x, y] = 0 for all y in u}, computed as one nullspace."""
    f, n = g.field, g.dim
    if u.dim == 0:
        return g.full_space()
    # stack the maps x -> [x, y_r] over the basis of u into one codomain
    images = []
    for i in range(n):
        ei = unit(f, i)
        stacked = 0
        for t, y in enumerate(u.rows):
            stacked |= g.bracket(ei, y) << (t * n * f.k)
        images.append(stacked)
    return kernel_of_map(f, n, images)


def center(g: LieAlgebra) -> Subspace:
    return centralizer(g, g.full_space())


def derived_subalgebra(g: LieAlgebra, u: Subspace) -> Subspace:
    return bracket_span(g, u, u)


def is_ideal(g: LieAlgebra, u: Subspace) -> bool:
    """True iff [g, u] is contained in u."""
    f = g.field
    return all(
        u.contains(g.bracket(r, unit(f, j))) for r in u.rows for j in range(g.dim)
    )


def ideal_closure(g: LieAlgebra, u: Subspace) -> Subspace:
    """Smallest ideal containing u (spinning).

    Repeatedly brackets the current basis against the ambient basis; by
    bilinearity that reaches the same closure as bracketing against every
    element.  Terminates within dim(g) growth steps.
    """
    f, n = g.field, g.dim
    rows = list(u.rows)
    work = list(u.rows)
    while work:
        r = work.pop()
        for j in range(n):
            w = reduce_vector(f, rows, g.bracket(r, unit(f, j)))
            if w:
                rows, _ = rref_rows(f, rows + [w])
                work.append(w)
    return Subspace(f, n, tuple(rows))


def acts_nilpotently(g: LieAlgebra, s: Subspace) -> bool:
    """True iff the chain V_0 = g, V_{i+1} = [s, V_i] hits 0 within dim steps."""
    v = g.full_space()
    for _ in range(g.dim):
        nxt = bracket_span(g, s, v)
        if nxt.dim == 0:
            return True
        if nxt == v:
            return False
        v = nxt
    return v.dim == 0


# ---------------------------------------------------------------------------
# convenience constructors used across fixtures and tests
# ---------------------------------------------------------------------------

def abelian(n: int, k: int = 1, name: str | None = None) -> LieAlgebra:
    """The abelian algebra of dimension n."""
    f = gf(k)
    return LieAlgebra(f, n, [[0] * n for _ in range(n)], name or f"abelian{n}")
