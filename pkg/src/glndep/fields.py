"""Exact arithmetic over prime fields GF(p), extension fields GF(p^k), and the rationals.

Elements are plain Python values: residues (int) for GF(p), length-k coefficient
tuples over GF(p) for GF(p^k) (lowest degree first), and Fraction for the
rationals.  Field objects carry the operations and are immutable and hashable,
so matrices and witnesses can share them freely.  All results are produced in
canonical form; structure constructors re-check canonicity and fail fast.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from . import errors

# Keeps products of residues inside comfortable native-int territory.
MAX_PRIME = 2 ** 31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface of PrimeField, ExtensionField, and RationalField."""

    kind = "?"
    cardinality: int | None = None
    zero: object
    one: object

    @property
    def is_finite(self) -> bool:
        return self.cardinality is not None

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self) -> Iterator:
        raise errors.InfiniteFieldError(f"{self!r} has infinitely many elements")

    def element_from_index(self, i: int):
        raise errors.InfiniteFieldError(f"{self!r} has no element indexing")


class PrimeField(Field):
    """GF(p) with elements the residues 0..p-1."""

    kind = "prime"

    def __init__(self, p: int):
        if type(p) is not int:
            raise TypeError(f"prime modulus must be an int, got {type(p).__name__}")
        if p >= MAX_PRIME:
            raise ValueError(f"prime modulus must be < 2^31, got {p}")
        if not is_prime(p):
            raise errors.NotPrimeError(f"{p} is not prime")
        self.p = p
        self.cardinality = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return type(other) is PrimeField and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def validate(self, a) -> None:
        if type(a) is not int:
            raise TypeError(f"GF({self.p}) element must be an int, got {type(a).__name__}")
        if not 0 <= a < self.p:
            raise ValueError(f"non-canonical GF({self.p}) element: {a}")

    def element(self, a):
        self.validate(a)
        return a

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n: int):
        return n % self.p

    def elements(self):
        return iter(range(self.p))

    def element_from_index(self, i: int):
        return i

    def element_to_json(self, a) -> str:
        return str(a)

    def element_from_json(self, obj):
        if not isinstance(obj, str):
            raise errors.ParseError(f"GF({self.p}) element must be a decimal string, got {obj!r}")
        try:
            a = int(obj)
        except ValueError:
            raise errors.ParseError(f"bad GF({self.p}) element string: {obj!r}") from None
        if not 0 <= a < self.p:
            raise errors.ParseError(f"non-canonical GF({self.p}) element: {obj!r}")
        return a


class ExtensionField(Field):
    """GF(p^k) as polynomial residues modulo a monic irreducible of degree k.

    An element is a length-k tuple of GF(p) residues, constant coefficient
    first.  If no modulus is given, the search takes the first irreducible in
    the counting order of coefficient vectors, so GF(p^k) is reproducible from
    (p, k) alone.
    """

    kind = "ext"

    def __init__(self, p: int, k: int, modulus=None):
        base = PrimeField(p)
        if type(k) is not int or k < 2:
            raise ValueError(f"extension degree must be an int >= 2, got {k}")
        if modulus is None:
            modulus = find_irreducible(base, k)
        else:
            modulus = tuple(base.element(c) for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {k}")
            if not is_irreducible(base, list(modulus)):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.base = base
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.cardinality = p ** k
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return (
            type(other) is ExtensionField
            and other.p == self.p
            and other.k == self.k
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ext", self.p, self.k, self.modulus))

    def validate(self, a) -> None:
        if type(a) is not tuple or len(a) != self.k:
            raise TypeError(f"{self!r} element must be a {self.k}-tuple, got {a!r}")
        for c in a:
            if type(c) is not int or not 0 <= c < self.p:
                raise ValueError(f"non-canonical {self!r} element: {a!r}")

    def element(self, a):
        if isinstance(a, (tuple, list)) and len(a) == self.k:
            a = tuple(a)
            self.validate(a)
            return a
        raise TypeError(f"{self!r} element must be a {self.k}-sequence of residues, got {a!r}")

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, k, mod = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] = (prod[i + j] + ai * bj) % p
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            if c:
                prod[top] = 0
                lo = top - k
                for j in range(k):
                    if mod[j]:
                        prod[lo + j] = (prod[lo + j] - c * mod[j]) % p
        return tuple(prod[:k])

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        base = self.base
        r0, s0 = list(self.modulus), []
        r1, s1 = poly_trim(base, list(a)), [1]
        while r1:
            q, r = poly_divmod(base, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(base, s0, poly_mul(base, q, s1))
        if len(r0) != 1:
            raise errors.Error(f"gcd with irreducible modulus has degree > 0: {r0}")
        c = base.inv(r0[0])
        out = [base.mul(c, cf) for cf in s0]
        assert len(out) <= self.k  # xgcd keeps deg(s) below deg(modulus)
        out += [0] * (self.k - len(out))
        return tuple(out)

    def from_int(self, n: int):
        return (n % self.p,) + (0,) * (self.k - 1)

    def elements(self):
        for v in range(self.cardinality):
            yield self.element_from_index(v)

    def element_from_index(self, v: int):
        p = self.p
        coeffs = []
        for _ in range(self.k):
            coeffs.append(v % p)
            v //= p
        return tuple(coeffs)

    def element_to_json(self, a) -> list:
        return [str(c) for c in a]

    def element_from_json(self, obj):
        if not isinstance(obj, list) or len(obj) != self.k:
            raise errors.ParseError(f"{self!r} element must be a list of {self.k} strings, got {obj!r}")
        coeffs = []
        for c in obj:
            if not isinstance(c, str):
                raise errors.ParseError(f"bad {self!r} coefficient: {c!r}")
            try:
                v = int(c)
            except ValueError:
                raise errors.ParseError(f"bad {self!r} coefficient string: {c!r}") from None
            if not 0 <= v < self.p:
                raise errors.ParseError(f"non-canonical {self!r} coefficient: {c!r}")
            coeffs.append(v)
        return tuple(coeffs)


class RationalField(Field):
    """The rational numbers with Fraction elements (always reduced, denominator > 0)."""

    kind = "rational"

    def __init__(self):
        self.cardinality = None
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return type(other) is RationalField

    def __hash__(self):
        return hash("rational")

    def validate(self, a) -> None:
        if type(a) is not Fraction:
            raise TypeError(f"rational element must be a Fraction, got {type(a).__name__}")

    def element(self, a):
        if type(a) is Fraction:
            return a
        if type(a) is int:
            return Fraction(a)
        raise TypeError(f"rational element must be an int or Fraction, got {a!r}")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def element_to_json(self, a) -> str:
        return str(a)

    def element_from_json(self, obj):
        if not isinstance(obj, str):
            raise errors.ParseError(f"rational element must be a string, got {obj!r}")
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError):
            raise errors.ParseError(f"bad rational element string: {obj!r}") from None


def parse_field(text: str) -> Field:
    """Parse a field selector: "prime:p", "ext:p:k", or "rational"."""
    parts = text.split(":")
    try:
        if parts[0] == "prime" and len(parts) == 2:
            return PrimeField(int(parts[1]))
        if parts[0] == "ext" and len(parts) == 3:
            return ExtensionField(int(parts[1]), int(parts[2]))
        if parts[0] == "rational" and len(parts) == 1:
            return RationalField()
    except ValueError as exc:
        raise errors.ParseError(f"bad field selector {text!r}: {exc}") from None
    raise errors.ParseError(f"bad field selector {text!r}")


def field_from_order(q: int) -> Field:
    """Return GF(q) for a prime power q (the default modulus for true prime powers)."""
    if type(q) is not int or q < 2:
        raise ValueError(f"field order must be an int >= 2, got {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return PrimeField(q)
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return PrimeField(p) if k == 1 else ExtensionField(p, k)


def field_to_json(field: Field) -> dict:
    if isinstance(field, PrimeField):
        return {"kind": "prime", "p": field.p}
    if isinstance(field, ExtensionField):
        return {"kind": "ext", "p": field.p, "k": field.k, "modulus": [str(c) for c in field.modulus]}
    if isinstance(field, RationalField):
        return {"kind": "rational"}
    raise TypeError(f"unknown field {field!r}")


def field_from_json(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise errors.ParseError(f"field descriptor must be an object with a 'kind': {obj!r}")
    kind = obj["kind"]
    try:
        if kind == "prime":
            return PrimeField(int(obj["p"]))
        if kind == "ext":
            modulus = obj.get("modulus")
            if not isinstance(modulus, list):
                raise errors.ParseError(f"extension field needs a 'modulus' list: {obj!r}")
            return ExtensionField(int(obj["p"]), int(obj["k"]), [int(c) for c in modulus])
        if kind == "rational":
            return RationalField()
    except KeyError as exc:
        raise errors.ParseError(f"field descriptor missing {exc}") from None
    except (TypeError, ValueError, errors.NotPrimeError) as exc:
        raise errors.ParseError(f"bad field descriptor {obj!r}: {exc}") from None
    raise errors.ParseError(f"unknown field kind {kind!r}")


# ---------------------------------------------------------------------------
# Polynomials over a finite field: coefficient lists, lowest degree first.
# The zero polynomial is the empty list.

def poly_trim(field: Field, coeffs) -> list:
    cs = list(coeffs)
    while cs and cs[-1] == field.zero:
        cs.pop()
    return cs


def poly_add(field: Field, a, b) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.add(x, y))
    return poly_trim(field, out)


def poly_sub(field: Field, a, b) -> list:
    return poly_add(field, a, [field.neg(c) for c in b])


def poly_mul(field: Field, a, b) -> list:
    a = poly_trim(field, a)
    b = poly_trim(field, b)
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == field.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return poly_trim(field, out)


def poly_divmod(field: Field, a, b) -> tuple[list, list]:
    b = poly_trim(field, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = poly_trim(field, a)
    if len(rem) < len(b):
        return [], rem
    inv_lead = field.inv(b[-1])
    quot = [field.zero] * (len(rem) - len(b) + 1)
    for shift in range(len(rem) - len(b), -1, -1):
        c = rem[shift + len(b) - 1]
        if c == field.zero:
            continue
        factor = field.mul(c, inv_lead)
        quot[shift] = factor
        for i, bc in enumerate(b):
            rem[shift + i] = field.sub(rem[shift + i], field.mul(factor, bc))
    return poly_trim(field, quot), poly_trim(field, rem)


def poly_mod(field: Field, a, b) -> list:
    return poly_divmod(field, a, b)[1]


def monic_polynomials(field: Field, degree: int) -> Iterator[list]:
    """All monic polynomials of the given degree, in counting order.

    Lower coefficients vary fastest, so the order agrees with reading the
    non-leading coefficient vector (highest degree first) as a base-q number.
    """
    if not field.is_finite:
        raise errors.InfiniteFieldError("polynomial enumeration needs a finite field")
    q = field.cardinality
    for v in range(q ** degree):
        coeffs = []
        t = v
        for _ in range(degree):
            coeffs.append(field.element_from_index(t % q))
            t //= q
        coeffs.append(field.one)
        yield coeffs


def is_irreducible(field: Field, coeffs) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    cs = poly_trim(field, coeffs)
    if len(cs) < 2 or cs[-1] != field.one:
        raise ValueError("irreducibility test needs a monic polynomial of degree >= 1")
    deg = len(cs) - 1
    for e in range(1, deg // 2 + 1):
        for g in monic_polynomials(field, e):
            if not poly_mod(field, cs, g):
                return False
    return True


def find_irreducible(field: Field, degree: int) -> tuple:
    """First irreducible monic polynomial of the given degree, in counting order."""
    if not field.is_finite:
        raise errors.InfiniteFieldError("irreducible search needs a finite field")
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    for cand in monic_polynomials(field, degree):
        if is_irreducible(field, cand):
            return tuple(cand)
    raise errors.NoIrreducibleError(
        f"no irreducible of degree {degree} over {field!r}; the search is buggy"
    )
