"""Dense exact matrices over a Field, with the elimination kernels used everywhere.

Matrices are immutable row-major tuples of canonical field elements; vectors are
just 1-row or 1-column matrices (or plain sequences at function boundaries).
Pivoting is always "first nonzero", never by magnitude, so every result is
deterministic and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .fields import Field, field_from_json, field_to_json


@dataclass(frozen=True)
class Matrix:
    field: Field
    entries: tuple[tuple, ...]

    def __post_init__(self):
        entries = self.entries
        if not isinstance(entries, tuple) or not entries:
            raise errors.ShapeError("matrix needs at least one row")
        cols = len(entries[0])
        if cols == 0:
            raise errors.ShapeError("matrix needs at least one column")
        validate = self.field.validate
        for row in entries:
            if not isinstance(row, tuple) or len(row) != cols:
                raise errors.ShapeError("ragged matrix rows")
            for e in row:
                validate(e)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        return cls(field, tuple(tuple(field.element(e) for e in row) for row in rows))

    @classmethod
    def from_columns(cls, field: Field, cols) -> "Matrix":
        cols = [tuple(field.element(e) for e in col) for col in cols]
        if not cols:
            raise errors.ShapeError("matrix needs at least one column")
        return cls(field, tuple(zip(*cols)))

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, field: Field, values) -> "Matrix":
        return cls(field, tuple((field.element(v),) for v in values))

    @classmethod
    def row(cls, field: Field, values) -> "Matrix":
        return cls(field, (tuple(field.element(v) for v in values),))

    def _check_same_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise errors.FieldMismatchError(f"{self.field!r} vs {other.field!r}")

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def row_tuple(self, i: int) -> tuple:
        return self.entries[i]

    def column_tuple(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(e == z for row in self.entries for e in row)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise errors.ShapeError(f"{self.rows}x{self.cols} + {other.rows}x{other.cols}")
        add = self.field.add
        return Matrix(
            self.field,
            tuple(tuple(add(a, b) for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, tuple(tuple(neg(e) for e in row) for row in self.entries))

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_field(other)
        if self.cols != other.rows:
            raise errors.ShapeError(f"{self.rows}x{self.cols} * {other.rows}x{other.cols}")
        f = self.field
        add, mul, z = f.add, f.mul, f.zero
        bent = other.entries
        out = []
        for arow in self.entries:
            row = []
            for j in range(other.cols):
                acc = z
                for t, a in enumerate(arow):
                    if a != z:
                        acc = add(acc, mul(a, bent[t][j]))
                row.append(acc)
            out.append(tuple(row))
        return Matrix(f, tuple(out))

    def scale(self, c) -> "Matrix":
        f = self.field
        f.validate(c)
        mul = f.mul
        return Matrix(f, tuple(tuple(mul(c, e) for e in row) for row in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.entries)))

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(repr(e) for e in row) + "]" for row in self.entries)
        return f"Matrix({self.field!r}, [{rows}])"


def matrix_unit(field: Field, rows: int, cols: int, i: int, j: int) -> Matrix:
    """The matrix with a single 1 at position (i, j)."""
    z, o = field.zero, field.one
    return Matrix(field, tuple(tuple(o if (r, c) == (i, j) else z for c in range(cols)) for r in range(rows)))


@dataclass(frozen=True)
class RrefResult:
    rref: Matrix
    pivot_cols: tuple[int, ...]
    rank: int


def rref_with_ops(matrix: Matrix) -> tuple[RrefResult, tuple]:
    """Reduced row echelon form plus the row operations that produce it.

    Each op is ("swap", i, j), ("scale", i, c), or ("addmul", dst, src, c)
    meaning row[dst] += c * row[src].  Replaying the ops on an identity matrix
    yields an invertible E with E * matrix == rref.
    """
    f = matrix.field
    z, o = f.zero, f.one
    work = [list(row) for row in matrix.entries]
    nrows, ncols = len(work), len(work[0])
    ops = []
    pivot_cols = []
    pr = 0
    for col in range(ncols):
        pivot = None
        for r in range(pr, nrows):
            if work[r][col] != z:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != pr:
            work[pr], work[pivot] = work[pivot], work[pr]
            ops.append(("swap", pr, pivot))
        pv = work[pr][col]
        if pv != o:
            factor = f.inv(pv)
            work[pr] = [f.mul(factor, e) for e in work[pr]]
            ops.append(("scale", pr, factor))
        for r in range(nrows):
            if r != pr and work[r][col] != z:
                c = f.neg(work[r][col])
                src = work[pr]
                work[r] = [f.add(e, f.mul(c, s)) for e, s in zip(work[r], src)]
                ops.append(("addmul", r, pr, c))
        pivot_cols.append(col)
        pr += 1
        if pr == nrows:
            break
    reduced = Matrix(f, tuple(tuple(row) for row in work))
    return RrefResult(reduced, tuple(pivot_cols), pr), tuple(ops)


def rref(matrix: Matrix) -> RrefResult:
    return rref_with_ops(matrix)[0]


def apply_row_ops(matrix: Matrix, ops) -> Matrix:
    """Replay recorded row operations on another matrix of the same height."""
    f = matrix.field
    work = [list(row) for row in matrix.entries]
    for op in ops:
        if op[0] == "swap":
            _, i, j = op
            work[i], work[j] = work[j], work[i]
        elif op[0] == "scale":
            _, i, c = op
            work[i] = [f.mul(c, e) for e in work[i]]
        elif op[0] == "addmul":
            _, dst, src, c = op
            work[dst] = [f.add(e, f.mul(c, s)) for e, s in zip(work[dst], work[src])]
        else:
            raise ValueError(f"unknown row op {op!r}")
    return Matrix(f, tuple(tuple(row) for row in work))


def rank(matrix: Matrix) -> int:
    return rref(matrix).rank


def kernel_basis(matrix: Matrix) -> list[Matrix]:
    """Canonical basis of the right kernel, one column vector per free column.

    The vector for free column j has a 1 there, 0 at the other free columns,
    and the negated reduced entries at the pivot columns.  Empty list iff the
    matrix is injective.
    """
    f = matrix.field
    res = rref(matrix)
    pivot_set = set(res.pivot_cols)
    reduced = res.rref.entries
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vec = [f.zero] * matrix.cols
        vec[free] = f.one
        for t, pc in enumerate(res.pivot_cols):
            vec[pc] = f.neg(reduced[t][free])
        basis.append(Matrix.column(f, vec))
    return basis


def det(matrix: Matrix):
    """Exact determinant by elimination with recorded row swaps."""
    if not matrix.is_square:
        raise errors.ShapeError(f"determinant of a {matrix.rows}x{matrix.cols} matrix")
    f = matrix.field
    z = f.zero
    n = matrix.rows
    work = [list(row) for row in matrix.entries]
    result = f.one
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if work[r][col] != z:
                pivot = r
                break
        if pivot is None:
            return z
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            result = f.neg(result)
        pv = work[col][col]
        result = f.mul(result, pv)
        for r in range(col + 1, n):
            if work[r][col] != z:
                factor = f.div(work[r][col], pv)
                work[r] = [f.sub(e, f.mul(factor, s)) for e, s in zip(work[r], work[col])]
    return result


def inverse(matrix: Matrix) -> Matrix:
    if not matrix.is_square:
        raise errors.ShapeError(f"inverse of a {matrix.rows}x{matrix.cols} matrix")
    f = matrix.field
    n = matrix.rows
    ident = Matrix.identity(f, n)
    aug = Matrix(f, tuple(r + i for r, i in zip(matrix.entries, ident.entries)))
    res = rref(aug)
    if res.pivot_cols[:n] != tuple(range(n)) or res.rank != n:
        raise ValueError("matrix is singular")
    return Matrix(f, tuple(row[n:] for row in res.rref.entries))


def _flatten_vector(v) -> tuple:
    if isinstance(v, Matrix):
        if v.rows == 1:
            return v.entries[0]
        if v.cols == 1:
            return v.column_tuple(0)
        raise errors.ShapeError(f"{v.rows}x{v.cols} matrix is not a vector")
    return tuple(v)


def span_solve(field: Field, target, generators):
    """Express target as a combination of the generators, or None.

    Returns the canonical coefficient list (free variables set to zero in the
    reduced system), so repeated calls with the same input give identical
    expansions.
    """
    tgt = _flatten_vector(target)
    gens = [_flatten_vector(g) for g in generators]
    for g in gens:
        if len(g) != len(tgt):
            raise errors.ShapeError("span_solve vectors have mixed lengths")
    if not gens:
        return [] if all(e == field.zero for e in tgt) else None
    aug = Matrix.from_columns(field, gens + [tgt])
    res = rref(aug)
    s = len(gens)
    if s in res.pivot_cols:
        return None
    coeffs = [field.zero] * s
    for t, pc in enumerate(res.pivot_cols):
        coeffs[pc] = res.rref.entries[t][s]
    return coeffs


def complete_to_invertible(field: Field, n: int, vectors) -> Matrix:
    """Extend independent height-n columns to an invertible n x n matrix.

    The inputs stay as the leading columns; the remaining columns are the
    standard basis vectors with the smallest indices that keep independence.
    """
    cols = [_flatten_vector(v) for v in vectors]
    for c in cols:
        if len(c) != n:
            raise errors.ShapeError(f"expected height-{n} vectors")
    if cols and rank(Matrix.from_columns(field, cols)) != len(cols):
        raise errors.DependentInputError("input vectors are linearly dependent")
    for idx in range(n):
        if len(cols) == n:
            break
        e = tuple(field.one if t == idx else field.zero for t in range(n))
        if rank(Matrix.from_columns(field, cols + [e])) > len(cols):
            cols.append(e)
    if len(cols) != n:
        raise errors.DependentInputError("could not complete to an invertible matrix")
    return Matrix.from_columns(field, cols)


def matrix_to_json(matrix: Matrix) -> dict:
    enc = matrix.field.element_to_json
    return {
        "field": field_to_json(matrix.field),
        "rows": matrix.rows,
        "cols": matrix.cols,
        "entries": [[enc(e) for e in row] for row in matrix.entries],
    }


def matrix_from_json(obj) -> Matrix:
    if not isinstance(obj, dict):
        raise errors.ParseError(f"matrix must be an object, got {obj!r}")
    for key in ("field", "rows", "cols", "entries"):
        if key not in obj:
            raise errors.ParseError(f"matrix is missing {key!r}")
    field = field_from_json(obj["field"])
    rows, cols = obj["rows"], obj["cols"]
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != rows:
        raise errors.ParseError(f"matrix 'entries' must be a list of {rows} rows")
    dec = field.element_from_json
    parsed = []
    for row in entries:
        if not isinstance(row, list) or len(row) != cols:
            raise errors.ParseError(f"matrix row must be a list of {cols} entries")
        parsed.append(tuple(dec(e) for e in row))
    return Matrix(field, tuple(parsed))
