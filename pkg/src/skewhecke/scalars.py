"""Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

Scalar values are plain Python objects in canonical form: ``fractions.Fraction``
for the rationals, ``int`` in ``[0, p)`` for a prime field.  Field objects
supply the arithmetic so that the rest of the library is generic over the
coefficient field.
"""

from __future__ import annotations

from fractions import Fraction

MAX_PRIME_BITS = 64


class NotAUnitError(ArithmeticError):
    """Raised when inverting a scalar that is zero or not a unit."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    # deterministic Miller-Rabin, valid for n < 3.3e24 (covers 64-bit range)
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field of rational numbers, values stored as ``Fraction``."""

    characteristic = 0
    kind = "rationals"

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise NotAUnitError("0 is not a unit")
        return 1 / Fraction(a)

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a == 0

    def parse(self, s: str) -> Fraction:
        return Fraction(s.strip())

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """The field Z/p for a prime p, values stored as ints in [0, p)."""

    kind = "prime_field"

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        if p.bit_length() > MAX_PRIME_BITS:
            raise ValueError(f"prime moduli are capped at {MAX_PRIME_BITS} bits")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise NotAUnitError(f"{a} is not a unit mod {self.p}")
        return pow(a, -1, self.p)

    def eq(self, a, b) -> bool:
        return (a - b) % self.p == 0

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def parse(self, s: str) -> int:
        return int(s.strip()) % self.p

    def format(self, a) -> str:
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime_field", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def field_make(spec):
    """Build a field from a descriptor: ``"rationals"`` or ``"prime_field(p)"``.

    Also accepts the tuple forms ``("rationals",)`` and ``("prime_field", p)``.
    """
    if isinstance(spec, (Rationals, PrimeField)):
        return spec
    if isinstance(spec, tuple):
        if spec[0] == "rationals":
            return Rationals()
        if spec[0] == "prime_field":
            return PrimeField(spec[1])
        raise ValueError(f"unknown field descriptor {spec!r}")
    s = str(spec).strip().lower()
    if s in ("rationals", "q", "qq"):
        return Rationals()
    if s.startswith("prime_field(") and s.endswith(")"):
        return PrimeField(int(s[len("prime_field(") : -1]))
    if s.startswith("gf(") and s.endswith(")"):
        return PrimeField(int(s[3:-1]))
    raise ValueError(f"unknown field descriptor {spec!r}")


def scalar_inverse(x, field):
    """Inverse of x in the field; raises NotAUnitError for non-units."""
    return field.inv(x)
