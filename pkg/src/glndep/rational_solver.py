"""Recursive GL(n)-dependence solver for matrices over the rationals.

Outline, for k >= m+1 matrices of shape n x m (a zero input matrix immediately
yields a witness with the identity on it and zeros elsewhere; extra matrices
beyond the first m+1 receive the zero multiplier):

* n == 1: matrices are row vectors, so the canonical kernel vector of the
  stacked columns is a scalar dependence.
* m == 1: matrices are nonzero columns, and some invertible g maps the first
  onto the second, giving the witness (g, -I).
* otherwise, solve each row slice by the n == 1 case and assemble diagonal
  multipliers g_i with sum(g_i M_i) == 0.  If they are all invertible, done.
  If some matrix j owns a row outside the span of every other matrix's rows,
  drop it (g_j = 0), rewrite the other matrices in coordinates of that span
  (strictly fewer columns) and recurse; per-row coordinate change commutes
  with left multiplication, so the recursive witness lifts verbatim.
  Otherwise each singular g_j is repaired in turn: g_j gains x*I and every
  other g_i pays x times the matrix of coefficients expressing the rows of
  M_j over its own rows, which preserves the sum.  Each determinant that must
  stay nonzero is a nonzero polynomial of degree at most n in x, so scanning
  x = 1, 2, ... finds a good value within n*(number of conditions) + 1 steps.

All choices (kernel vectors, span expansions, scan order, smallest bad index
first) are canonical, so witnesses are reproducible byte for byte.

The same recursion runs over a finite field via solve_recursive, where the
scalar scan walks the field's nonzero elements instead and can genuinely
exhaust them (ExhaustedBoundError).  solve_unsafe_finite wraps that mode
behind the cardinality guard |K| > n*(m+2) and falls back to the kernel-method
solver if the scan ever exhausts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import errors
from .certificate import Witness, witness_from_matrices
from .fields import Field, RationalField
from .matrix import Matrix, complete_to_invertible, det, inverse, kernel_basis, rref, span_solve
from .finite_solver import solve_finite


@dataclass(frozen=True)
class RowDependence:
    """Scalar dependence among the row-k slices of the input matrices."""
    row: int
    coeffs: tuple


@dataclass(frozen=True)
class CorrectionRecord:
    """Snapshot of one repair of a singular multiplier, for instrumentation."""
    bad_index: int
    x: object
    n_conditions: int
    good_before: frozenset
    good_after: frozenset
    gs_after: tuple[Matrix, ...]


Observer = Optional[Callable[[CorrectionRecord], None]]


def solve_rational(matrices, observer: Observer = None) -> Witness:
    """Witness for k >= m+1 rational n x m matrices."""
    matrices = list(matrices)
    if matrices and not isinstance(matrices[0].field, RationalField):
        raise ValueError("solve_rational expects rational matrices; see solve_finite / solve_unsafe_finite")
    return _solve_entry(matrices, observer)


def solve_recursive(matrices, observer: Observer = None) -> Witness:
    """The recursive algorithm over any exact field.

    Experimental for finite fields: the correction-scalar scan can exhaust a
    small field (ExhaustedBoundError).  Prefer solve_unsafe_finite, which
    guards the cardinality and falls back to solve_finite.
    """
    return _solve_entry(list(matrices), observer)


def solve_unsafe_finite(matrices, observer: Observer = None) -> Witness:
    """Run the recursive algorithm over a finite field, guarded and with fallback."""
    matrices = list(matrices)
    if not matrices:
        raise errors.ShapeError("need at least one matrix")
    field = matrices[0].field
    if not field.is_finite:
        raise ValueError("solve_unsafe_finite expects a finite field; use solve_rational")
    n, m = matrices[0].rows, matrices[0].cols
    if field.cardinality <= n * (m + 2):
        raise ValueError(
            f"field of size {field.cardinality} is too small for the recursive mode "
            f"(need > {n * (m + 2)}); use solve_finite"
        )
    try:
        return _solve_entry(matrices, observer)
    except errors.ExhaustedBoundError:
        return solve_finite(matrices)


def _solve_entry(matrices: list[Matrix], observer: Observer) -> Witness:
    if not matrices:
        raise errors.ShapeError("need at least one matrix")
    field = matrices[0].field
    n, m = matrices[0].rows, matrices[0].cols
    for M in matrices:
        if M.field != field:
            raise errors.FieldMismatchError("matrices over mixed fields")
        if M.rows != n or M.cols != m:
            raise errors.ShapeError("matrices of mixed shapes")
    k = len(matrices)
    if k < m + 1:
        raise errors.TooFewMatricesError(f"need at least {m + 1} matrices of width {m}, got {k}")
    zero_g = Matrix.zero(field, n, n)
    for j, M in enumerate(matrices):
        if M.is_zero():
            gs = [zero_g] * k
            gs[j] = Matrix.identity(field, n)
            return witness_from_matrices(field, gs)
    gs = _solve_core(matrices[: m + 1], observer)
    gs += [zero_g] * (k - m - 1)
    witness = witness_from_matrices(field, gs)
    assert _weighted_sum(witness.entries, matrices).is_zero()
    return witness


def _weighted_sum(gs, matrices) -> Matrix:
    total = None
    for g, M in zip(gs, matrices):
        term = g * M
        total = term if total is None else total + term
    return total


def _solve_core(matrices: list[Matrix], observer: Observer) -> list[Matrix]:
    """Multipliers for exactly m+1 nonzero matrices."""
    field = matrices[0].field
    n, m = matrices[0].rows, matrices[0].cols
    if n == 1:
        columns = Matrix.from_rows(field, [[M.entries[0][c] for M in matrices] for c in range(m)])
        kernel = kernel_basis(columns)
        if not kernel:
            raise errors.InternalRankError(f"{m + 1} columns of height {m} left no kernel vector")
        coeffs = kernel[0].column_tuple(0)
        return [Matrix(field, ((c,),)) for c in coeffs]
    if m == 1:
        return list(solve_column_pair(matrices[0], matrices[1]).entries)

    zero = field.zero
    deps = row_dependences(matrices)
    gs = [
        Matrix.from_rows(field, [[deps[r].coeffs[i] if r == c else zero for c in range(n)] for r in range(n)])
        for i in range(m + 1)
    ]
    assert _weighted_sum(gs, matrices).is_zero()
    if all(det(g) != zero for g in gs):
        return gs

    hit = find_row_outside_span(matrices)
    if hit is not None:
        return project_and_recurse(matrices, hit[0], observer)

    while True:
        bad = [i for i, g in enumerate(gs) if det(g) == zero]
        if not bad:
            return gs
        j = bad[0]
        gs, record = correct_bad_index(matrices, gs, j)
        assert _weighted_sum(gs, matrices).is_zero()
        assert record.good_before < record.good_after
        if observer is not None:
            observer(record)


def solve_column_pair(w1: Matrix, w2: Matrix) -> Witness:
    """Witness for two column vectors: if both are nonzero, some invertible g
    maps w1 onto w2 and (g, -I) works; a zero column gets the identity."""
    if w1.cols != 1 or w2.cols != 1 or w1.rows != w2.rows:
        raise errors.ShapeError("solve_column_pair expects two columns of equal height")
    if w1.field != w2.field:
        raise errors.FieldMismatchError("columns over mixed fields")
    field = w1.field
    n = w1.rows
    ident = Matrix.identity(field, n)
    zero = Matrix.zero(field, n, n)
    if w1.is_zero():
        return witness_from_matrices(field, [ident, zero])
    if w2.is_zero():
        return witness_from_matrices(field, [zero, ident])
    onto_w1 = complete_to_invertible(field, n, [w1])
    onto_w2 = complete_to_invertible(field, n, [w2])
    g = onto_w2 * inverse(onto_w1)
    assert g * w1 == w2
    return witness_from_matrices(field, [g, -ident])


def row_dependences(matrices) -> list[RowDependence]:
    """Canonical scalar dependence of the row-r slices, for each r.

    The m+1 rows of width m are always dependent, so each kernel is nonzero;
    the diagonal matrices built from these coefficients sum against the input
    matrices to zero.
    """
    matrices = list(matrices)
    field = matrices[0].field
    n, m = matrices[0].rows, matrices[0].cols
    out = []
    for r in range(n):
        stacked = Matrix.from_rows(field, [[M.entries[r][c] for M in matrices] for c in range(m)])
        kernel = kernel_basis(stacked)
        if not kernel:
            raise errors.InternalRankError(f"row slice {r}: {m + 1} vectors of length {m} are independent")
        out.append(RowDependence(r, kernel[0].column_tuple(0)))
    return out


def find_row_outside_span(matrices) -> tuple[int, int] | None:
    """Smallest (j, ell) with row ell of matrix j outside the span of every row
    of the other matrices, or None when no such pair exists."""
    matrices = list(matrices)
    field = matrices[0].field
    n = matrices[0].rows
    for j in range(len(matrices)):
        generators = [M.entries[r] for i, M in enumerate(matrices) if i != j for r in range(n)]
        for ell in range(n):
            if span_solve(field, matrices[j].entries[ell], generators) is None:
                return j, ell
    return None


def project_and_recurse(matrices, j: int, observer: Observer = None) -> list[Matrix]:
    """Drop matrix j, rewrite the rest in coordinates of their row span, recurse.

    Requires that some row of matrix j lies outside that span, so the span has
    dimension r <= m-1 and the recursive instance is strictly narrower.  The
    lifted multipliers (recursive ones for i != j, zero for j) inherit
    sum(g_i M_i) == 0 because the coordinate map is injective on the span and
    applies row by row.
    """
    matrices = list(matrices)
    field = matrices[0].field
    n, m = matrices[0].rows, matrices[0].cols
    others = [M for i, M in enumerate(matrices) if i != j]
    stacked = Matrix.from_rows(field, [row for M in others for row in M.entries])
    reduced = rref(stacked)
    basis_rows = [reduced.rref.entries[t] for t in range(reduced.rank)]
    r = len(basis_rows)
    if r > m - 1:
        raise errors.InternalSpanError(f"span of the other rows has dimension {r}, expected <= {m - 1}")
    projected = []
    for M in others:
        coord_rows = []
        for row in M.entries:
            coords = span_solve(field, row, basis_rows)
            if coords is None:
                raise errors.InternalSpanError("row of a kept matrix fell outside its own span")
            coord_rows.append(coords)
        projected.append(Matrix.from_rows(field, coord_rows))
    recursive = _solve_entry(projected, observer)
    lifted = []
    it = iter(recursive.entries)
    for i in range(m + 1):
        lifted.append(Matrix.zero(field, n, n) if i == j else next(it))
    assert _weighted_sum(lifted, matrices).is_zero()
    return lifted


def correct_bad_index(matrices, gs, j: int) -> tuple[list[Matrix], CorrectionRecord]:
    """Repair the singular multiplier g_j while preserving the witness equation.

    Every row of M_j must be expressible over the other matrices' rows.  With
    alpha the per-row expansion coefficients, g_j += x*I and
    g_i -= x * A_i (A_i collecting the coefficients on M_i's rows) keep the
    weighted sum at zero for any x; x is chosen so g_j becomes invertible and
    no previously invertible g_i degenerates.
    """
    matrices = list(matrices)
    gs = list(gs)
    field = matrices[0].field
    n = matrices[0].rows
    zero = field.zero
    good_before = frozenset(i for i, g in enumerate(gs) if det(g) != zero)
    if j in good_before:
        raise ValueError(f"index {j} is not singular")

    others = [i for i in range(len(matrices)) if i != j]
    generators = [matrices[i].entries[r] for i in others for r in range(n)]
    alpha_rows = []
    for ell in range(n):
        coeffs = span_solve(field, matrices[j].entries[ell], generators)
        if coeffs is None:
            raise errors.SpanExpansionError(
                f"row {ell} of matrix {j} is not in the span of the other matrices' rows"
            )
        alpha_rows.append(coeffs)
    corrections = {}
    for pos, i in enumerate(others):
        corrections[i] = Matrix.from_rows(
            field, [[alpha_rows[ell][pos * n + t] for t in range(n)] for ell in range(n)]
        )

    ident = Matrix.identity(field, n)
    conditions = [(gs[j], ident)]
    for i in others:
        if i in good_before:
            conditions.append((gs[i], -corrections[i]))
    x = choose_correction_scalar(field, conditions)

    new_gs = list(gs)
    new_gs[j] = gs[j] + ident.scale(x)
    for i in others:
        new_gs[i] = gs[i] - corrections[i].scale(x)
    good_after = frozenset(i for i, g in enumerate(new_gs) if det(g) != zero)
    assert j in good_after and good_before <= good_after
    record = CorrectionRecord(j, x, len(conditions), good_before, good_after, tuple(new_gs))
    return new_gs, record


def choose_correction_scalar(field: Field, conditions):
    """Smallest usable nonzero scalar x with det(base + x * direction) != 0 for
    every condition.

    Over the rationals the scan runs x = 1, 2, ...; each condition is a nonzero
    polynomial of degree at most n in x, so a valid x exists among the first
    n * len(conditions) + 1 candidates.  Over a finite field the scan walks the
    nonzero elements in canonical order and raises ExhaustedBoundError if none
    works.
    """
    if not conditions:
        return field.one
    n = conditions[0][0].rows
    zero = field.zero
    if field.is_finite:
        candidates = (e for e in field.elements() if e != zero)
    else:
        bound = n * len(conditions) + 1
        candidates = (field.from_int(v) for v in range(1, bound + 1))
    for x in candidates:
        if all(det(base + direction.scale(x)) != zero for base, direction in conditions):
            return x
    raise errors.ExhaustedBoundError(
        f"no valid scalar among the candidates for {len(conditions)} conditions of degree <= {n}"
    )
