"""Bit-exact text format for algebras and their 2-maps.

A file is line-oriented and human-diffable:

    lie2algebra 1
    name f6
    dim 6
    field_degree 1
    bracket 0 3 0,0,0,1,0,0
    twomap 0 1,0,0,0,0,0
    ...

``bracket i j <vector>`` stores [b_i, b_j] for i < j only; the mirror
entries are reconstructed (characteristic 2) and the diagonal is forced to
zero, so a file containing an (i, i) entry or an i > j entry is rejected.
``twomap i <vector>`` lines give the image of every basis vector, zero
images included.  A coefficient vector is a comma-separated list of n
field elements, each a little-endian bit string of exactly k polynomial
coefficients ("1" or "0" for GF(2), e.g. "110" for 1 + x over GF(8)).

Saving writes brackets sorted by (i, j) and all twomap lines in order, so
save -> load -> save is byte-identical.
"""

from __future__ import annotations

import io

from .algebra import LieAlgebra
from .errors import FileFormatError
from .field import gf
from .restricted import TwoMap

FORMAT_NAME = "lie2algebra"
FORMAT_VERSION = 1


def _element_to_bits(field, value: int) -> str:
    return "".join(str((value >> i) & 1) for i in range(field.k))


def _bits_to_element(field, text: str, lineno: int) -> int:
    if len(text) != field.k or any(c not in "01" for c in text):
        raise FileFormatError(
            lineno, "MalformedField",
            f"field element {text!r} must be {field.k} bits of 0/1"
        )
    return sum((1 << i) for i, c in enumerate(text) if c == "1")


def _vector_to_text(field, n: int, v: int) -> str:
    return ",".join(_element_to_bits(field, (v >> (i * field.k)) & field.mask) for i in range(n))


def _text_to_vector(field, n: int, text: str, lineno: int) -> int:
    parts = text.split(",")
    if len(parts) != n:
        raise FileFormatError(
            lineno, "DimensionMismatch",
            f"coefficient vector has {len(parts)} entries, expected {n}"
        )
    v = 0
    for i, part in enumerate(parts):
        v |= _bits_to_element(field, part, lineno) << (i * field.k)
    return v


def dumps(g: LieAlgebra, tm: TwoMap) -> str:
    f, n = g.field, g.dim
    out = io.StringIO()
    out.write(f"{FORMAT_NAME} {FORMAT_VERSION}\n")
    out.write(f"name {g.name or 'unnamed'}\n")
    out.write(f"dim {n}\n")
    out.write(f"field_degree {f.k}\n")
    for i in range(n):
        for j in range(i + 1, n):
            if g.table[i][j]:
                out.write(f"bracket {i} {j} {_vector_to_text(f, n, g.table[i][j])}\n")
    for i in range(n):
        out.write(f"twomap {i} {_vector_to_text(f, n, tm.images[i])}\n")
    return out.getvalue()


def save(g: LieAlgebra, tm: TwoMap, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps(g, tm))


def loads(text: str):
    """Parse the format; returns (LieAlgebra, TwoMap).

    Raises FileFormatError with the offending line number on any defect:
    unsupported version, diagonal bracket entries (AlternatingViolation),
    lower-triangular entries (NonSymmetricEntry), duplicates, bad counts.
    """
    lines = text.splitlines()
    header = None
    name = None
    dim = None
    degree = None
    brackets = {}
    twomap = {}

    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if header is None:
            if tag != FORMAT_NAME or len(parts) != 2:
                raise FileFormatError(lineno, "MissingHeader",
                                      f"expected '{FORMAT_NAME} <version>' first")
            if not parts[1].isdigit() or int(parts[1]) != FORMAT_VERSION:
                raise FileFormatError(lineno, "UnsupportedVersion",
                                      f"format version {parts[1]} not supported")
            header = int(parts[1])
            continue
        if tag == "name":
            name = line.split(None, 1)[1] if len(parts) > 1 else ""
        elif tag == "dim":
            if len(parts) != 2 or not parts[1].isdigit():
                raise FileFormatError(lineno, "Malformed", "dim wants one integer")
            dim = int(parts[1])
        elif tag == "field_degree":
            if len(parts) != 2 or not parts[1].isdigit():
                raise FileFormatError(lineno, "Malformed", "field_degree wants one integer")
            degree = int(parts[1])
            if not 1 <= degree <= 16:
                raise FileFormatError(lineno, "Malformed", "field_degree must be 1..16")
        elif tag == "bracket":
            if dim is None or degree is None:
                raise FileFormatError(lineno, "Malformed", "bracket before dim/field_degree")
            if len(parts) != 4:
                raise FileFormatError(lineno, "Malformed", "bracket wants: i j vector")
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise FileFormatError(lineno, "Malformed", "bracket indices must be integers")
            if not (0 <= i < dim and 0 <= j < dim):
                raise FileFormatError(lineno, "DimensionMismatch",
                                      f"bracket index out of range 0..{dim - 1}")
            if i == j:
                raise FileFormatError(lineno, "AlternatingViolation",
                                      f"diagonal bracket ({i},{i}) must be zero and is not stored")
            if i > j:
                raise FileFormatError(lineno, "NonSymmetricEntry",
                                      f"store only i < j; ({i},{j}) is redundant in characteristic 2")
            if (i, j) in brackets:
                raise FileFormatError(lineno, "DuplicateEntry", f"bracket ({i},{j}) repeated")
            brackets[(i, j)] = _text_to_vector(gf(degree), dim, parts[3], lineno)
        elif tag == "twomap":
            if dim is None or degree is None:
                raise FileFormatError(lineno, "Malformed", "twomap before dim/field_degree")
            if len(parts) != 3:
                raise FileFormatError(lineno, "Malformed", "twomap wants: i vector")
            try:
                i = int(parts[1])
            except ValueError:
                raise FileFormatError(lineno, "Malformed", "twomap index must be an integer")
            if not 0 <= i < dim:
                raise FileFormatError(lineno, "DimensionMismatch", "twomap index out of range")
            if i in twomap:
                raise FileFormatError(lineno, "DuplicateEntry", f"twomap {i} repeated")
            twomap[i] = _text_to_vector(gf(degree), dim, parts[2], lineno)
        else:
            raise FileFormatError(lineno, "Malformed", f"unknown directive {tag!r}")

    last = len(lines)
    if header is None:
        raise FileFormatError(1, "MissingHeader", "empty file")
    if dim is None or degree is None:
        raise FileFormatError(last, "Malformed", "missing dim or field_degree")
    missing = [i for i in range(dim) if i not in twomap]
    if missing:
        raise FileFormatError(last, "Malformed", f"twomap lines missing for indices {missing}")
    g = LieAlgebra.from_pairs(gf(degree), dim, brackets, name)
    return g, TwoMap([twomap[i] for i in range(dim)])


def load(path):
    with open(path, "r", encoding="ascii") as fh:
        return loads(fh.read())
