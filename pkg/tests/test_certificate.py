"""Witness model, the independent verifier, and JSON round trips."""

import random
import re
from pathlib import Path

import pytest

from conftest import random_invertible, random_matrix
from glndep import errors
from glndep.certificate import (
    TAG_INVERTIBLE,
    TAG_ZERO,
    VerificationError,
    Witness,
    instance_from_json,
    instance_to_json,
    verify_witness,
    witness_from_json,
    witness_from_matrices,
    witness_to_json,
)
from glndep.fields import ExtensionField, PrimeField, RationalField
from glndep.matrix import Matrix, inverse
from glndep.finite_solver import solve_finite

GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF4 = ExtensionField(2, 2)
QQ = RationalField()


def _identity_minus_identity(field, n, m, rng):
    matrix = random_matrix(rng, field, n, m)
    ident = Matrix.identity(field, n)
    witness = witness_from_matrices(field, [ident, -ident])
    return [matrix, matrix], witness


def test_verify_accepts_identity_pair():
    rng = random.Random(1)
    for field in (GF3, QQ):
        matrices, witness = _identity_minus_identity(field, 2, 3, rng)
        verify_witness(matrices, witness)  # no exception


def test_verify_rejects_all_zero():
    m = Matrix.identity(GF2, 2)
    witness = witness_from_matrices(GF2, [Matrix.zero(GF2, 2, 2), Matrix.zero(GF2, 2, 2)])
    with pytest.raises(VerificationError) as exc:
        verify_witness([m, m], witness)
    assert exc.value.reason == "all-zero"


def test_verify_rejects_singular_claimed_invertible():
    m = Matrix.zero(GF2, 2, 2)
    singular = Matrix.from_rows(GF2, [[1, 1], [1, 1]])
    witness = Witness(GF2, 2, (singular,), (TAG_INVERTIBLE,))
    with pytest.raises(VerificationError) as exc:
        verify_witness([m], witness)
    assert exc.value.reason == "singular"
    assert exc.value.index == 0


def test_verify_rejects_zero_tag_on_nonzero_entry():
    m = Matrix.zero(QQ, 2, 2)
    witness = Witness(QQ, 2, (Matrix.identity(QQ, 2),), (TAG_ZERO,))
    with pytest.raises(VerificationError) as exc:
        verify_witness([m], witness)
    assert exc.value.reason == "tag-mismatch"


def test_verify_rejects_nonzero_sum():
    m = Matrix.from_rows(GF3, [[1]])
    ident = Matrix.identity(GF3, 1)
    witness = witness_from_matrices(GF3, [ident, ident])
    with pytest.raises(VerificationError) as exc:
        verify_witness([m, m], witness)
    assert exc.value.reason == "sum-nonzero"
    assert (exc.value.row, exc.value.col) == (0, 0)


def test_verify_rejects_count_and_field_mismatches():
    m = Matrix.identity(GF3, 2)
    witness = witness_from_matrices(GF3, [Matrix.identity(GF3, 2), -Matrix.identity(GF3, 2)])
    with pytest.raises(VerificationError) as exc:
        verify_witness([m], witness)
    assert exc.value.reason == "shape-mismatch"
    with pytest.raises(VerificationError) as exc:
        verify_witness([Matrix.identity(GF2, 2), Matrix.identity(GF2, 2)], witness)
    assert exc.value.reason == "field-mismatch"


def test_permutation_equivariance():
    rng = random.Random(2)
    for _ in range(20):
        mats = [random_matrix(rng, GF2, 2, 1) for _ in range(2)]
        witness = solve_finite(mats)
        verify_witness(mats, witness)
        perm = [1, 0]
        permuted = Witness(
            witness.field,
            witness.n,
            tuple(witness.entries[i] for i in perm),
            tuple(witness.tags[i] for i in perm),
        )
        verify_witness([mats[i] for i in perm], permuted)


def test_right_action_equivariance():
    rng = random.Random(3)
    for field in (GF3, QQ):
        for _ in range(10):
            mats, witness = _identity_minus_identity(field, 2, 2, rng)
            hs = [random_invertible(rng, field, 2) for _ in mats]
            new_mats = [h * m for h, m in zip(hs, mats)]
            new_entries = tuple(g * inverse(h) for g, h in zip(witness.entries, hs))
            transformed = Witness(field, witness.n, new_entries, witness.tags)
            verify_witness(new_mats, transformed)


def test_verifier_has_no_solver_imports():
    source = Path(__file__).resolve().parents[1] / "src" / "glndep" / "certificate.py"
    text = source.read_text()
    imports = re.findall(r"^(?:from|import)\s+\S+", text, flags=re.MULTILINE)
    assert imports, "expected import statements"
    for line in imports:
        assert "solve" not in line and "oracle" not in line and "subspace" not in line


# JSON

@pytest.mark.parametrize("field", [GF2, GF4, QQ])
def test_witness_json_round_trip(field):
    rng = random.Random(4)
    for _ in range(10):
        gs = [random_invertible(rng, field, 2), Matrix.zero(field, 2, 2), random_invertible(rng, field, 2)]
        witness = witness_from_matrices(field, gs)
        assert witness_from_json(witness_to_json(witness)) == witness


def test_witness_json_rejects_missing_entries():
    obj = witness_to_json(witness_from_matrices(GF2, [Matrix.identity(GF2, 2)]))
    del obj["entries"]
    with pytest.raises(errors.ParseError):
        witness_from_json(obj)


def test_witness_json_rejects_unknown_tag():
    obj = witness_to_json(witness_from_matrices(GF2, [Matrix.identity(GF2, 2)]))
    obj["entries"][0]["tag"] = "unit"
    with pytest.raises(errors.ParseError):
        witness_from_json(obj)


def test_witness_json_rejects_wrong_shape_entry():
    obj = witness_to_json(witness_from_matrices(GF2, [Matrix.identity(GF2, 2)]))
    obj["n"] = 3
    with pytest.raises(errors.ParseError):
        witness_from_json(obj)


def test_witness_serialization_refuses_tag_mismatch():
    broken = Witness(GF2, 1, (Matrix.identity(GF2, 1),), (TAG_ZERO,))
    with pytest.raises(ValueError):
        witness_to_json(broken)


def test_instance_json_round_trip():
    rng = random.Random(5)
    mats = [random_matrix(rng, GF4, 2, 3) for _ in range(3)]
    field, parsed = instance_from_json(instance_to_json(GF4, mats))
    assert field == GF4
    assert parsed == mats


def test_instance_json_rejects_field_mismatch():
    obj = instance_to_json(GF2, [Matrix.identity(GF2, 2)])
    obj["field"] = {"kind": "prime", "p": 3}
    with pytest.raises(errors.ParseError):
        instance_from_json(obj)


def test_tampered_witness_fails_end_to_end():
    rng = random.Random(6)
    mats = [random_matrix(rng, GF2, 2, 1) for _ in range(2)]
    witness = solve_finite(mats)
    obj = witness_to_json(witness)
    tampered = dict(obj, entries=[{"tag": "zero"} for _ in obj["entries"]])
    with pytest.raises(VerificationError):
        verify_witness(mats, witness_from_json(tampered))
