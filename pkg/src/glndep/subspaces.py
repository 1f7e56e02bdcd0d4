"""Row spaces and GL(n)-dependence of subspaces.

Two n x m matrices differ by an invertible left factor exactly when they have
the same row space, so GL(n)-dependence only sees the family of row spaces.
The subspace form of a witness is a family of vectors x_j^(i) in L_i, one per
multiplier row, whose columnwise sums vanish and whose per-subspace span is
either L_i (flag "full") or zero (flag "zero"), not all zero.  This module
canonicalizes subspaces, converts between the two views, and verifies
subspace witnesses independently of the solvers.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .certificate import TAG_ZERO
from .fields import Field, field_from_json, field_to_json
from .matrix import Matrix, complete_to_invertible, det, inverse, rref, span_solve
from .oracle import brute_force_witness
from .finite_solver import solve_finite
from .rational_solver import solve_rational

FLAG_FULL = "full"
FLAG_ZERO = "zero"


class SubspaceVerificationError(errors.Error):
    """Raised when a subspace witness fails verification."""

    def __init__(self, reason: str, subspace=None, vector=None, row=None, detail: str = ""):
        self.reason = reason
        self.subspace = subspace
        self.vector = vector
        self.row = row
        where = ""
        if subspace is not None and vector is not None:
            where = f" at subspace {subspace}, vector {vector}"
        elif subspace is not None:
            where = f" at subspace {subspace}"
        elif row is not None:
            where = f" at row {row}"
        super().__init__(f"{reason}{where}" + (f": {detail}" if detail else ""))


@dataclass(frozen=True)
class Subspace:
    """A subspace of K^m in canonical form: the nonzero rows of an RREF basis."""

    field: Field
    ambient: int
    basis: tuple[tuple, ...]

    def __post_init__(self):
        if self.ambient < 1:
            raise errors.ShapeError("ambient dimension must be >= 1")
        for row in self.basis:
            if len(row) != self.ambient:
                raise errors.ShapeError("basis row of the wrong length")
            for e in row:
                self.field.validate(e)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_vectors(cls, field: Field, ambient: int, vectors) -> "Subspace":
        vectors = [tuple(field.element(e) for e in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise errors.ShapeError("spanning vector of the wrong length")
        if not vectors:
            return cls(field, ambient, ())
        reduced = rref(Matrix(field, tuple(vectors)))
        return cls(field, ambient, tuple(reduced.rref.entries[t] for t in range(reduced.rank)))

    def contains(self, vector) -> bool:
        return span_solve(self.field, vector, list(self.basis)) is not None


def row_space(matrix: Matrix) -> Subspace:
    return Subspace.from_vectors(matrix.field, matrix.cols, matrix.entries)


def representative_matrix(subspace: Subspace, n: int) -> Matrix:
    """The canonical n x m matrix with the given row space: basis rows on top,
    zero rows below."""
    if subspace.dim > n:
        raise errors.DimensionTooLargeError(f"subspace of dimension {subspace.dim} with n = {n}")
    field = subspace.field
    zero_row = (field.zero,) * subspace.ambient
    rows = list(subspace.basis) + [zero_row] * (n - subspace.dim)
    return Matrix(field, tuple(rows))


def find_gl_transform(m1: Matrix, m2: Matrix) -> Matrix | None:
    """An invertible g with g * m1 == m2, or None when the row spaces differ.

    Both matrices are written as coordinate matrices over the shared canonical
    row basis; completing those coordinate columns to invertible matrices and
    composing gives g.  Equal inputs produce the identity.  The result is
    re-verified before returning.
    """
    if m1.rows != m2.rows or m1.cols != m2.cols:
        raise errors.ShapeError("matrices of mixed shapes")
    if m1.field != m2.field:
        raise errors.FieldMismatchError("matrices over mixed fields")
    space = row_space(m1)
    if space != row_space(m2):
        return None
    field = m1.field
    n = m1.rows
    basis_rows = list(space.basis)

    def coordinate_columns(matrix: Matrix) -> list[tuple]:
        rows = []
        for row in matrix.entries:
            coords = span_solve(field, row, basis_rows)
            if coords is None:
                raise errors.InternalSpanError("matrix row escaped its own row space")
            rows.append(coords)
        return [tuple(r[t] for r in rows) for t in range(space.dim)]

    p1 = complete_to_invertible(field, n, coordinate_columns(m1))
    p2 = complete_to_invertible(field, n, coordinate_columns(m2))
    g = p2 * inverse(p1)
    assert det(g) != field.zero and g * m1 == m2
    return g


@dataclass(frozen=True)
class SubspaceWitness:
    field: Field
    ambient: int
    n: int
    vectors: tuple[tuple[tuple, ...], ...]
    flags: tuple[str, ...]

    def __post_init__(self):
        if len(self.vectors) != len(self.flags) or not self.vectors:
            raise ValueError("witness needs one flag per subspace and at least one subspace")
        for flag in self.flags:
            if flag not in (FLAG_FULL, FLAG_ZERO):
                raise ValueError(f"unknown subspace witness flag {flag!r}")
        for group in self.vectors:
            if len(group) != self.n:
                raise errors.ShapeError(f"each subspace needs {self.n} vectors")
            for v in group:
                if len(v) != self.ambient:
                    raise errors.ShapeError("witness vector of the wrong length")
                for e in v:
                    self.field.validate(e)


def solve_subspace_dependence(subspaces, n: int, cap: int = 10 ** 7) -> SubspaceWitness | None:
    """Witness that the subspaces are GL(n)-dependent, or None.

    With k >= m+1 subspaces the field-appropriate matrix solver always
    succeeds on the canonical representative matrices.  With fewer subspaces
    the answer can go either way; over a finite field the brute-force oracle
    decides it, while over the rationals fewer than m+1 subspaces raise
    TooFewMatricesError.
    """
    subspaces = list(subspaces)
    if not subspaces:
        raise errors.ShapeError("need at least one subspace")
    field = subspaces[0].field
    m = subspaces[0].ambient
    for i, L in enumerate(subspaces):
        if L.field != field:
            raise errors.FieldMismatchError("subspaces over mixed fields")
        if L.ambient != m:
            raise errors.ShapeError("subspaces of mixed ambient dimension")
        if L.dim > n:
            raise errors.DimensionTooLargeError(f"subspace {i} has dimension {L.dim} > n = {n}")
    reps = [representative_matrix(L, n) for L in subspaces]
    if len(subspaces) >= m + 1:
        witness = solve_finite(reps) if field.is_finite else solve_rational(reps)
    elif field.is_finite:
        witness = brute_force_witness(reps, cap=cap)
        if witness is None:
            return None
    else:
        raise errors.TooFewMatricesError(
            f"cannot decide {len(subspaces)} subspaces of K^{m} over an infinite field"
        )
    groups = []
    flags = []
    for g, tag, rep in zip(witness.entries, witness.tags, reps):
        product = g * rep
        groups.append(tuple(product.entries))
        flags.append(FLAG_ZERO if tag == TAG_ZERO else FLAG_FULL)
    result = SubspaceWitness(field, m, n, tuple(groups), tuple(flags))
    verify_subspace_witness(subspaces, result)
    return result


def verify_subspace_witness(subspaces, witness: SubspaceWitness) -> None:
    """Check a subspace witness; raise SubspaceVerificationError on failure.

    Conditions: every vector lies in its subspace; the vectors in each row
    position sum to zero; each group spans exactly its subspace ("full") or is
    entirely zero ("zero"); and not every flag is "zero".
    """
    subspaces = list(subspaces)
    if len(subspaces) != len(witness.vectors):
        raise SubspaceVerificationError(
            "shape-mismatch", detail=f"{len(subspaces)} subspaces vs {len(witness.vectors)} groups"
        )
    field = witness.field
    for L in subspaces:
        if L.field != field:
            raise SubspaceVerificationError("field-mismatch")
        if L.ambient != witness.ambient:
            raise SubspaceVerificationError("shape-mismatch", detail="ambient dimension differs")
    if all(flag == FLAG_ZERO for flag in witness.flags):
        raise SubspaceVerificationError("all-zero")
    for i, (L, group) in enumerate(zip(subspaces, witness.vectors)):
        for j, v in enumerate(group):
            if not L.contains(v):
                raise SubspaceVerificationError("membership", subspace=i, vector=j)
    zero = field.zero
    for j in range(witness.n):
        total = [zero] * witness.ambient
        for group in witness.vectors:
            total = [field.add(a, b) for a, b in zip(total, group[j])]
        if any(e != zero for e in total):
            raise SubspaceVerificationError("sum-nonzero", row=j)
    for i, (L, group, flag) in enumerate(zip(subspaces, witness.vectors, witness.flags)):
        if flag == FLAG_ZERO:
            if any(e != zero for v in group for e in v):
                raise SubspaceVerificationError("span", subspace=i, detail="zero flag on nonzero vectors")
        else:
            if Subspace.from_vectors(field, witness.ambient, group) != L:
                raise SubspaceVerificationError("span", subspace=i, detail="span differs from the subspace")


def subspace_to_json(subspace: Subspace) -> dict:
    enc = subspace.field.element_to_json
    return {
        "field": field_to_json(subspace.field),
        "ambient": subspace.ambient,
        "basis": [[enc(e) for e in row] for row in subspace.basis],
    }


def subspace_from_json(obj) -> Subspace:
    if not isinstance(obj, dict):
        raise errors.ParseError(f"subspace must be an object, got {obj!r}")
    for key in ("field", "ambient", "basis"):
        if key not in obj:
            raise errors.ParseError(f"subspace is missing {key!r}")
    field = field_from_json(obj["field"])
    ambient = obj["ambient"]
    rows = obj["basis"]
    if not isinstance(rows, list):
        raise errors.ParseError("subspace 'basis' must be a list of rows")
    dec = field.element_from_json
    try:
        vectors = [tuple(dec(e) for e in row) for row in rows]
    except TypeError:
        raise errors.ParseError("subspace basis rows must be lists") from None
    return Subspace.from_vectors(field, ambient, vectors)


def subspace_witness_to_json(witness: SubspaceWitness) -> dict:
    enc = witness.field.element_to_json
    return {
        "field": field_to_json(witness.field),
        "ambient": witness.ambient,
        "n": witness.n,
        "flags": list(witness.flags),
        "vectors": [[[enc(e) for e in v] for v in group] for group in witness.vectors],
    }


def subspace_witness_from_json(obj) -> SubspaceWitness:
    if not isinstance(obj, dict):
        raise errors.ParseError(f"subspace witness must be an object, got {obj!r}")
    for key in ("field", "ambient", "n", "flags", "vectors"):
        if key not in obj:
            raise errors.ParseError(f"subspace witness is missing {key!r}")
    field = field_from_json(obj["field"])
    dec = field.element_from_json
    try:
        vectors = tuple(
            tuple(tuple(dec(e) for e in v) for v in group) for group in obj["vectors"]
        )
        flags = tuple(obj["flags"])
    except TypeError:
        raise errors.ParseError("subspace witness 'vectors' must be nested lists") from None
    try:
        return SubspaceWitness(field, obj["ambient"], obj["n"], vectors, flags)
    except (ValueError, errors.ShapeError) as exc:
        raise errors.ParseError(f"bad subspace witness: {exc}") from None
