"""Brute-force ground truth over small finite fields.

Enumerates GL(n, q) outright, searches (GL union {0})^k exhaustively for
witnesses, and sweeps every instance of a given shape to certify that each one
is dependent and that the solver's certificate verifies.  Hard caps raise
TooLargeError; the oracle never samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import errors
from .certificate import Witness, verify_witness, witness_from_matrices
from .fields import Field, field_to_json
from .fullrank import build_fullrank_basis
from .matrix import Matrix, det
from .finite_solver import solve_finite

DEFAULT_CAP = 10 ** 7


@dataclass(frozen=True)
class GlEnumeration:
    field: Field
    n: int
    matrices: tuple[Matrix, ...]

    @property
    def count(self) -> int:
        return len(self.matrices)


@lru_cache(maxsize=None)
def _gl_matrices(field: Field, n: int) -> tuple[Matrix, ...]:
    zero = field.zero
    elements = tuple(field.elements())
    found = []
    for flat in product(elements, repeat=n * n):
        m = Matrix(field, tuple(flat[r * n : (r + 1) * n] for r in range(n)))
        if det(m) != zero:
            found.append(m)
    return tuple(found)


def enumerate_gl(field: Field, n: int, cap: int = DEFAULT_CAP) -> GlEnumeration:
    """All invertible n x n matrices, in lexicographic order of their entries."""
    if not field.is_finite:
        raise errors.InfiniteFieldError("GL enumeration needs a finite field")
    candidates = field.cardinality ** (n * n)
    if candidates > cap:
        raise errors.TooLargeError(f"{candidates} candidate matrices exceed the cap of {cap}")
    return GlEnumeration(field, n, _gl_matrices(field, n))


def _flat(matrix: Matrix) -> tuple:
    return tuple(e for row in matrix.entries for e in row)


def brute_force_witness(matrices, cap: int = DEFAULT_CAP, gl: GlEnumeration | None = None) -> Witness | None:
    """First witness tuple over (GL union {0})^k in lexicographic order, or None.

    The pool is ordered zero first, then the GL enumeration.  The last slot is
    resolved by lookup: for every prefix, the required final product is the
    negated partial sum, so the scan is linear in pool^(k-1) instead of pool^k
    without changing which tuple is found first.
    """
    matrices = list(matrices)
    if not matrices:
        raise errors.ShapeError("need at least one matrix")
    field = matrices[0].field
    if not field.is_finite:
        raise errors.InfiniteFieldError("the brute-force oracle needs a finite field")
    n, m = matrices[0].rows, matrices[0].cols
    for M in matrices:
        if M.field != field or M.rows != n or M.cols != m:
            raise errors.ShapeError("matrices of mixed shapes or fields")
    if gl is None:
        gl = enumerate_gl(field, n, cap)
    elif gl.field != field or gl.n != n:
        raise ValueError("GL enumeration does not match the instance")
    k = len(matrices)
    pool = (Matrix.zero(field, n, n),) + gl.matrices
    if (len(pool)) ** k > cap:
        raise errors.TooLargeError(f"{len(pool) ** k} candidate tuples exceed the cap of {cap}")

    products = [[_flat(g * M) for g in pool] for M in matrices]
    last_index: dict[tuple, list[int]] = {}
    for idx, value in enumerate(products[-1]):
        last_index.setdefault(value, []).append(idx)

    fadd, fneg = field.add, field.neg
    zero_flat = (field.zero,) * (n * m)
    for prefix in product(range(len(pool)), repeat=k - 1):
        acc = zero_flat
        for slot, idx in enumerate(prefix):
            if idx:
                acc = tuple(fadd(a, b) for a, b in zip(acc, products[slot][idx]))
        target = tuple(fneg(a) for a in acc)
        for idx in last_index.get(target, ()):
            if idx == 0 and all(p == 0 for p in prefix):
                continue
            chosen = prefix + (idx,)
            return witness_from_matrices(field, [pool[i] for i in chosen])
    return None


@dataclass(frozen=True)
class TheoremReport:
    field: Field
    n: int
    m: int
    instances: int
    all_have_witness: bool
    solver_agrees: bool
    failures: tuple


def exhaustive_theorem_check(field: Field, n: int, m: int, cap: int = DEFAULT_CAP) -> TheoremReport:
    """Sweep every (m+1)-tuple of n x m matrices over the field.

    For each instance the brute-force search must find a witness and the
    kernel-method solver's witness must verify.  The per-instance check is a
    pure function and failures are merged by counting, so the report does not
    depend on sweep order.
    """
    if not field.is_finite:
        raise errors.InfiniteFieldError("the exhaustive sweep needs a finite field")
    q = field.cardinality
    total = q ** (n * m * (m + 1))
    if total > cap:
        raise errors.TooLargeError(f"{total} instances exceed the cap of {cap}")
    gl = enumerate_gl(field, n, cap)
    basis = build_fullrank_basis(field, n)
    elements = tuple(field.elements())
    shapes = [
        Matrix(field, tuple(flat[r * m : (r + 1) * m] for r in range(n)))
        for flat in product(elements, repeat=n * m)
    ]
    instances = 0
    all_have = True
    agrees = True
    failures = []
    for combo in product(shapes, repeat=m + 1):
        instances += 1
        mats = list(combo)
        if brute_force_witness(mats, cap=cap, gl=gl) is None:
            all_have = False
            failures.append({"instance": instances - 1, "kind": "no-witness"})
        try:
            verify_witness(mats, solve_finite(mats, basis=basis))
        except errors.Error as exc:
            agrees = False
            failures.append({"instance": instances - 1, "kind": f"solver: {exc}"})
    return TheoremReport(field, n, m, instances, all_have, agrees, tuple(failures))


def report_to_json(report: TheoremReport) -> dict:
    return {
        "field": field_to_json(report.field),
        "n": report.n,
        "m": report.m,
        "instances": report.instances,
        "all_have_witness": report.all_have_witness,
        "solver_agrees": report.solver_agrees,
        "failures": list(report.failures),
    }
