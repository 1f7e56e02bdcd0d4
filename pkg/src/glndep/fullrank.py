"""Full-rank matrix subspaces: n-dimensional spaces of n x n matrices over a
finite field in which every nonzero member is invertible.

The construction is the regular representation of the degree-n extension field:
take the companion matrix C of the first irreducible monic polynomial of degree
n (in counting order) and span {I, C, C^2, ..., C^(n-1)}.  A nonzero combination
is the image of a nonzero field element, hence invertible.  check_fullrank_basis
re-verifies that claim exhaustively instead of trusting it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import errors
from .fields import Field, field_from_json, field_to_json, find_irreducible
from .matrix import Matrix, det, matrix_from_json, matrix_to_json


@dataclass(frozen=True)
class FullRankBasis:
    field: Field
    n: int
    modulus: tuple
    basis: tuple[Matrix, ...]


def companion_matrix(field: Field, modulus) -> Matrix:
    """Companion matrix of a monic polynomial: 1s on the subdiagonal, negated
    coefficients (constant term first) down the last column."""
    modulus = list(modulus)
    n = len(modulus) - 1
    if n < 1 or modulus[-1] != field.one:
        raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
    z, o = field.zero, field.one
    rows = []
    for i in range(n):
        row = [z] * n
        if i > 0:
            row[i - 1] = o
        row[n - 1] = field.neg(modulus[i])
        rows.append(tuple(row))
    return Matrix(field, tuple(rows))


@lru_cache(maxsize=None)
def _build(field: Field, n: int) -> FullRankBasis:
    modulus = find_irreducible(field, n)
    c = companion_matrix(field, modulus)
    basis = [Matrix.identity(field, n)]
    for _ in range(n - 1):
        basis.append(basis[-1] * c)
    return FullRankBasis(field, n, modulus, tuple(basis))


def build_fullrank_basis(field: Field, n: int) -> FullRankBasis:
    """Deterministic full-rank basis for (field, n); cached, since it is a pure
    function of its arguments."""
    if not field.is_finite:
        raise errors.InfiniteFieldError("full-rank subspaces are built over finite fields")
    if type(n) is not int or n < 1:
        raise ValueError(f"n must be an int >= 1, got {n}")
    return _build(field, n)


def check_fullrank_basis(basis: FullRankBasis, cap: int = 10 ** 6) -> bool:
    """True iff every nonzero combination of the basis has nonzero determinant.

    Exhausts all q^n - 1 combinations; raises TooLargeError above the cap
    rather than sampling.
    """
    field = basis.field
    n = basis.n
    if len(basis.basis) != n:
        raise ValueError(f"basis has {len(basis.basis)} elements, expected {n}")
    for b in basis.basis:
        if b.rows != n or b.cols != n or b.field != field:
            raise ValueError("basis matrices must be n x n over the basis field")
    combos = field.cardinality ** n
    if combos > cap:
        raise errors.TooLargeError(f"{combos} combinations exceed the cap of {cap}")
    elements = tuple(field.elements())
    zero = field.zero
    for coeffs in product(elements, repeat=n):
        if all(c == zero for c in coeffs):
            continue
        combo = Matrix.zero(field, n, n)
        for c, b in zip(coeffs, basis.basis):
            if c != zero:
                combo = combo + b.scale(c)
        if det(combo) == zero:
            return False
    return True


def fullrank_to_json(basis: FullRankBasis) -> dict:
    enc = basis.field.element_to_json
    return {
        "field": field_to_json(basis.field),
        "n": basis.n,
        "modulus": [enc(c) for c in basis.modulus],
        "basis": [matrix_to_json(b) for b in basis.basis],
    }


def fullrank_from_json(obj) -> FullRankBasis:
    if not isinstance(obj, dict):
        raise errors.ParseError(f"full-rank basis must be an object, got {obj!r}")
    for key in ("field", "n", "modulus", "basis"):
        if key not in obj:
            raise errors.ParseError(f"full-rank basis is missing {key!r}")
    field = field_from_json(obj["field"])
    n = obj["n"]
    dec = field.element_from_json
    modulus = tuple(dec(c) for c in obj["modulus"])
    mats = obj["basis"]
    if not isinstance(mats, list) or len(mats) != n:
        raise errors.ParseError(f"full-rank basis needs {n} matrices")
    basis = tuple(matrix_from_json(m) for m in mats)
    for b in basis:
        if b.field != field or b.rows != n or b.cols != n:
            raise errors.ParseError("basis matrix has the wrong field or shape")
    return FullRankBasis(field, n, modulus, basis)
