"""GL(n)-dependence solver for finite fields.

Each multiplier g_i is constrained to a full-rank subspace H (so nonzero means
invertible) and written as sum_t c_{i,t} B_t over the basis of H.  The witness
equation sum_i g_i M_i == 0 then becomes a homogeneous linear system with
(m+1)n unknowns and only mn equations, so a nonzero kernel vector always
exists; the canonical first kernel vector makes the output deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .certificate import Witness, witness_from_matrices
from .fullrank import FullRankBasis, build_fullrank_basis
from .matrix import Matrix, kernel_basis


@dataclass(frozen=True)
class FiniteSolveInstance:
    field: object
    n: int
    m: int
    matrices: tuple[Matrix, ...]
    basis: FullRankBasis

    @classmethod
    def build(cls, matrices, basis: FullRankBasis | None = None) -> "FiniteSolveInstance":
        matrices = tuple(matrices)
        if not matrices:
            raise errors.ShapeError("need at least one matrix")
        field = matrices[0].field
        if not field.is_finite:
            raise errors.InfiniteFieldError("the kernel-method solver needs a finite field")
        n, m = matrices[0].rows, matrices[0].cols
        for M in matrices:
            if M.field != field:
                raise errors.FieldMismatchError("matrices over mixed fields")
            if M.rows != n or M.cols != m:
                raise errors.ShapeError("matrices of mixed shapes")
        if len(matrices) != m + 1:
            raise errors.ShapeError(f"instance needs exactly {m + 1} matrices, got {len(matrices)}")
        if basis is None:
            basis = build_fullrank_basis(field, n)
        if basis.field != field or basis.n != n:
            raise ValueError("full-rank basis does not match the instance")
        return cls(field, n, m, matrices, basis)


def solve_instance(inst: FiniteSolveInstance) -> Witness:
    """Witness for exactly m+1 matrices, multipliers drawn from the full-rank subspace."""
    field, n, m = inst.field, inst.n, inst.m
    products = [[b * M for b in inst.basis.basis] for M in inst.matrices]
    rows = []
    for ell in range(n):
        for c in range(m):
            row = []
            for i in range(m + 1):
                prods_i = products[i]
                for t in range(n):
                    row.append(prods_i[t].entries[ell][c])
            rows.append(tuple(row))
    system = Matrix(field, tuple(rows))
    kernel = kernel_basis(system)
    if not kernel:
        raise errors.InternalRankError(
            f"({m + 1})*{n} unknowns vs {m * n} equations left no kernel vector"
        )
    coeffs = kernel[0].column_tuple(0)
    zero = field.zero
    gs = []
    for i in range(m + 1):
        g = Matrix.zero(field, n, n)
        for t in range(n):
            c = coeffs[i * n + t]
            if c != zero:
                g = g + inst.basis.basis[t].scale(c)
        gs.append(g)
    return witness_from_matrices(field, gs)


def solve_finite(matrices, basis: FullRankBasis | None = None) -> Witness:
    """Witness for k >= m+1 matrices over a finite field.

    The first m+1 matrices carry the dependence; any further matrices receive
    the zero multiplier.
    """
    matrices = list(matrices)
    if not matrices:
        raise errors.ShapeError("need at least one matrix")
    m = matrices[0].cols
    if len(matrices) < m + 1:
        raise errors.TooFewMatricesError(f"need at least {m + 1} matrices of width {m}, got {len(matrices)}")
    inst = FiniteSolveInstance.build(matrices[: m + 1], basis)
    head = solve_instance(inst)
    if len(matrices) == m + 1:
        return head
    zero = Matrix.zero(inst.field, inst.n, inst.n)
    gs = list(head.entries) + [zero] * (len(matrices) - m - 1)
    return witness_from_matrices(inst.field, gs)
