"""Shared randomized-construction helpers for the test suite."""

from fractions import Fraction

from glndep.matrix import Matrix, det


def random_element(rng, field):
    if field.is_finite:
        return field.element_from_index(rng.randrange(field.cardinality))
    return Fraction(rng.randint(-3, 3))


def random_matrix(rng, field, rows, cols):
    return Matrix(
        field,
        tuple(tuple(random_element(rng, field) for _ in range(cols)) for _ in range(rows)),
    )


def random_invertible(rng, field, n):
    while True:
        m = random_matrix(rng, field, n, n)
        if det(m) != field.zero:
            return m
