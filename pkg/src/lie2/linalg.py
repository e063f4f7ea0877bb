"""Exact linear algebra over GF(2^k) on bit-packed vectors.

A length-``n`` vector over GF(2^k) is packed into a single Python int:
coordinate ``i`` occupies bits ``[i*k, (i+1)*k)``, low coordinate first.
Because field addition is coefficient-wise xor, *vector addition is plain
integer xor for every k*, equality is int equality, and enumerating all
vectors of GF(2^k)^n is ``range(1 << (n*k))``.  For k = 1 this degenerates
to the classic bit-packed-row representation where a row operation is one
word-wise xor.

Everything here is immutable after construction and safe to share between
threads; operations are pure functions of their inputs.
"""

from __future__ import annotations

from itertools import product

from .errors import AmbientMismatchError
from .field import GF2k


# ---------------------------------------------------------------------------
# packed-vector helpers
# ---------------------------------------------------------------------------

def vget(field: GF2k, v: int, i: int) -> int:
    """Coordinate ``i`` of packed vector ``v``."""
    return (v >> (i * field.k)) & field.mask


def vector(field: GF2k, coeffs) -> int:
    """Pack a coefficient sequence into a vector."""
    v = 0
    for i, c in enumerate(coeffs):
        if c & ~field.mask:
            raise ValueError(f"coefficient {c} out of range for {field}")
        v |= c << (i * field.k)
    return v


def coeffs(field: GF2k, n: int, v: int):
    """Unpack ``v`` into a tuple of ``n`` coefficients."""
    k, mask = field.k, field.mask
    return tuple((v >> (i * k)) & mask for i in range(n))


def unit(field: GF2k, i: int) -> int:
    """The basis vector e_i."""
    return 1 << (i * field.k)


def support(field: GF2k, v: int):
    """Indices of nonzero coordinates, ascending."""
    if field.k == 1:
        while v:
            low = v & -v
            yield low.bit_length() - 1
            v ^= low
    else:
        k, mask = field.k, field.mask
        i = 0
        while v:
            if v & mask:
                yield i
            v >>= k
            i += 1

def vscale(field: GF2k, v: int, c: int) -> int:
    """Scalar multiple ``c * v``."""
    if c == 0:
        return 0
    if c == 1:
        return v
    k, mask, mul = field.k, field.mask, field.mul
    r, i = 0, 0
    while v:
        chunk = v & mask
        if chunk:
            r |= mul(chunk, c) << i
        v >>= k
        i += k
    return r


def pivot_index(field: GF2k, v: int) -> int:
    """Index of the lowest nonzero coordinate (v must be nonzero)."""
    return ((v & -v).bit_length() - 1) // field.k


def all_vectors(field: GF2k, n: int):
    """Every packed vector of GF(2^k)^n, ascending as integers."""
    return range(1 << (n * field.k))


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------

def _pivot(field, v):
    # lowest nonzero coordinate index; assumes v != 0
    low = (v & -v).bit_length() - 1
    return low // field.k


def rref_rows(field: GF2k, rows):
    """Reduced row echelon form of a list of packed rows.

    Returns ``(rows, pivots)`` where rows are nonzero, pivot-normalized,
    cleared above and below, and sorted by ascending pivot index.  The
    output is the canonical representative of the row space.
    """
    k, mask = field.k, field.mask
    basis = {}  # pivot index -> row
    for row in rows:
        while row:
            p = _pivot(field, row)
            if p in basis:
                if k == 1:
                    row ^= basis[p]
                else:
                    c = (row >> (p * k)) & mask
                    row ^= vscale(field, basis[p], c)
            else:
                if k > 1:
                    c = (row >> (p * k)) & mask
                    if c != 1:
                        row = vscale(field, row, field.inv(c))
                # clear this pivot column in existing rows
                for q, other in basis.items():
                    c2 = (other >> (p * k)) & mask
                    if c2:
                        basis[q] = other ^ (row if c2 == 1 else vscale(field, row, c2))
                basis[p] = row
                break
    pivots = sorted(basis)
    return [basis[p] for p in pivots], pivots


def reduce_vector(field: GF2k, rows, v: int) -> int:
    """Residual of ``v`` after eliminating against canonical ``rows``."""
    k, mask = field.k, field.mask
    for row in rows:
        p = _pivot(field, row)
        c = (v >> (p * k)) & mask
        if c:
            v ^= row if c == 1 else vscale(field, row, c)
    return v


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------

class Matrix:
    """A dense matrix over GF(2^k) stored as packed rows."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: GF2k, nrows: int, ncols: int, rows):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(rows)
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")

    @classmethod
    def from_entries(cls, field: GF2k, entries) -> "Matrix":
        entries = [list(r) for r in entries]
        nrows = len(entries)
        ncols = len(entries[0]) if entries else 0
        if any(len(r) != ncols for r in entries):
            raise ValueError("ragged rows")
        return cls(field, nrows, ncols, (vector(field, r) for r in entries))

    @classmethod
    def identity(cls, field: GF2k, n: int) -> "Matrix":
        return cls(field, n, n, (unit(field, i) for i in range(n)))

    @classmethod
    def zero(cls, field: GF2k, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols, (0,) * nrows)

    def entries(self):
        return [list(coeffs(self.field, self.ncols, r)) for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, {self.entries()})"

    def entry(self, i: int, j: int) -> int:
        return vget(self.field, self.rows[i], j)

    def column(self, j: int) -> int:
        """Column ``j`` packed as a length-nrows vector."""
        f = self.field
        return vector(f, (self.entry(i, j) for i in range(self.nrows)))

    def transpose(self) -> "Matrix":
        f = self.field
        return Matrix(f, self.ncols, self.nrows, (self.column(j) for j in range(self.ncols)))

    def apply(self, v: int) -> int:
        """Matrix-vector product M*v for a packed length-ncols vector."""
        f = self.field
        acc = 0
        for j in support(f, v):
            c = vget(f, v, j)
            col = self.column(j)
            acc ^= col if c == 1 else vscale(f, col, c)
        return acc

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise AmbientMismatchError("matmul shape mismatch")
        f = self.field
        ocols = [other.column(j) for j in range(other.ncols)]
        rows = []
        for r in self.rows:
            out = 0
            for j, col in enumerate(ocols):
                # dot(r, col) without unpacking everything twice
                acc = 0
                for t in support(f, r):
                    acc ^= f.mul(vget(f, r, t), vget(f, col, t)) if f.k > 1 else (
                        vget(f, col, t)
                    )
                if acc:
                    out |= acc << (j * f.k)
            rows.append(out)
        return Matrix(f, self.nrows, other.ncols, rows)

    def __matmul__(self, other):
        return self.matmul(other)

    def rank(self) -> int:
        return len(rref_rows(self.field, self.rows)[0])


def rref(m: Matrix) -> Matrix:
    """The unique reduced row-echelon form; zero rows dropped to the bottom."""
    rows, _ = rref_rows(m.field, m.rows)
    rows = rows + [0] * (m.nrows - len(rows))
    return Matrix(m.field, m.nrows, m.ncols, rows)


def nullspace(m: Matrix) -> "Subspace":
    """Solution space of M*x = 0."""
    f = m.field
    return kernel_of_map(f, m.ncols, [m.column(j) for j in range(m.ncols)])


def kernel_of_map(field: GF2k, domain_dim: int, images) -> "Subspace":
    """Kernel of the linear map sending e_i to ``images[i]``.

    ``images`` are packed vectors in any codomain; the kernel lives in the
    domain.  Uses tag-augmented elimination: each row carries its domain
    coordinates in the high bits, and rows whose image part cancels to zero
    surrender a kernel vector.
    """
    k = field.k
    width = max((im.bit_length() for im in images), default=0)
    shift = ((width + k - 1) // k) * k  # tag block starts above the image block
    img_mask = (1 << shift) - 1
    basis = {}  # pivot (image coordinate) -> augmented row
    kernel_rows = []
    for i, im in enumerate(images):
        row = im | (unit(field, i) << shift)
        while row & img_mask:
            p = _pivot(field, row & img_mask)
            if p in basis:
                c = vget(field, row, p)
                row ^= basis[p] if c == 1 else vscale(field, basis[p], c)
            else:
                c = vget(field, row, p)
                if c != 1:
                    row = vscale(field, row, field.inv(c))
                basis[p] = row
                break
        else:
            kernel_rows.append(row >> shift)
    return Subspace.from_vectors(field, domain_dim, kernel_rows)


def solve(field: GF2k, images, target: int):
    """One solution x of ``sum x_i * images[i] = target`` or None."""
    k = field.k
    width = max([im.bit_length() for im in images] + [target.bit_length()], default=0)
    shift = ((width + k - 1) // k) * k
    img_mask = (1 << shift) - 1
    rows = []
    for i, im in enumerate(images):
        rows.append(im | (unit(field, i) << shift))
    reduced = {}
    for row in rows:
        while row & img_mask:
            p = _pivot(field, row & img_mask)
            if p in reduced:
                c = vget(field, row, p)
                row ^= reduced[p] if c == 1 else vscale(field, reduced[p], c)
            else:
                c = vget(field, row, p)
                if c != 1:
                    row = vscale(field, row, field.inv(c))
                reduced[p] = row
                break
    acc = target
    combo = 0
    while acc:
        p = _pivot(field, acc)
        if p not in reduced:
            return None
        c = vget(field, acc, p)
        row = reduced[p] if c == 1 else vscale(field, reduced[p], c)
        acc ^= row & img_mask
        combo ^= row >> shift
    return combo


# ---------------------------------------------------------------------------
# Subspace
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace of GF(2^k)^n in canonical (RREF) form.

    Two equal subspaces have identical basis tuples, so ``==`` and ``hash``
    are structural.
    """

    __slots__ = ("field", "ambient", "rows")

    def __init__(self, field: GF2k, ambient: int, rows):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(rows)  # trusted canonical; use from_vectors otherwise

    @classmethod
    def from_vectors(cls, field: GF2k, ambient: int, vectors_) -> "Subspace":
        rows, _ = rref_rows(field, vectors_)
        return cls(field, ambient, rows)

    @classmethod
    def zero(cls, field: GF2k, ambient: int) -> "Subspace":
        return cls(field, ambient, ())

    @classmethod
    def full(cls, field: GF2k, ambient: int) -> "Subspace":
        return cls(field, ambient, (unit(field, i) for i in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.rows))

    def __repr__(self):
        vecs = [coeffs(self.field, self.ambient, r) for r in self.rows]
        return f"Subspace(dim {self.dim} of {self.field}^{self.ambient}: {vecs})"

    def _check_ambient(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise AmbientMismatchError(
                f"ambient mismatch: {self.field}^{self.ambient} vs {other.field}^{other.ambient}"
            )

    def reduce(self, v: int) -> int:
        return reduce_vector(self.field, self.rows, v)

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def contains_space(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains(r) for r in other.rows)

    def __le__(self, other):
        return other.contains_space(self)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_vectors(self.field, self.ambient, self.rows + other.rows)

    def __add__(self, other):
        return self.sum(other)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus intersection; asserts the dimension formula."""
        self._check_ambient(other)
        f, n = self.field, self.ambient
        shift = n * f.k
        left_mask = (1 << shift) - 1
        stacked = [r | (r << shift) for r in self.rows] + list(other.rows)
        reduced = {}
        inter_rows = []
        for row in stacked:
            while row & left_mask:
                p = _pivot(f, row & left_mask)
                if p in reduced:
                    c = vget(f, row, p)
                    row ^= reduced[p] if c == 1 else vscale(f, reduced[p], c)
                else:
                    c = vget(f, row, p)
                    if c != 1:
                        row = vscale(f, row, f.inv(c))
                    reduced[p] = row
                    break
            else:
                if row:
                    inter_rows.append(row >> shift)
        result = Subspace.from_vectors(f, n, inter_rows)
        # dim(U) + dim(V) = dim(U+V) + dim(U^V), always
        assert self.dim + other.dim == self.sum(other).dim + result.dim
        return result

    def vectors(self):
        """Every element of the subspace (2^(k*dim) of them)."""
        f = self.field
        if f.k == 1:
            for bits in range(1 << self.dim):
                v, b = 0, bits
                i = 0
                while b:
                    if b & 1:
                        v ^= self.rows[i]
                    b >>= 1
                    i += 1
                yield v
        else:
            for cs in product(range(f.order), repeat=self.dim):
                v = 0
                for c, r in zip(cs, self.rows):
                    v ^= vscale(f, r, c)
                yield v

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient, self.rows)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u.sum(v)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    return u.intersect(v)


def contains(u: Subspace, x: int) -> bool:
    return u.contains(x)
