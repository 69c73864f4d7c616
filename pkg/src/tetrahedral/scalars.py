"""Exact coefficient fields: prime fields F_p and the rationals.

Inner loops elsewhere in the package work on *raw* values (``int`` residues
for F_p, :class:`fractions.Fraction` for Q) through the methods of
:class:`Field`; :class:`Scalar` is the user-facing wrapper.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import integer_nthroot, isprime
from sympy.ntheory.residue_ntheory import nthroot_mod

DEFAULT_PRIME = 1_000_003


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


class FieldError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Field:
    """Either F_p (``kind == "prime"``) or Q (``kind == "rational"``)."""

    kind: str
    p: int = 0
    # plain attributes (not properties): they sit on hot paths
    is_prime: bool = field(init=False, repr=False, compare=False)
    zero: object = field(init=False, repr=False, compare=False)
    one: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        prime = self.kind == "prime"
        object.__setattr__(self, "is_prime", prime)
        object.__setattr__(self, "zero", 0 if prime else Fraction(0))
        object.__setattr__(self, "one", 1 if prime else Fraction(1))
        if self.kind == "prime":
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        elif self.kind == "rational":
            if self.p != 0:
                raise ValueError("the rational field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # construction -------------------------------------------------------

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> "Field":
        return cls("prime", p)

    @classmethod
    def rational(cls) -> "Field":
        return cls("rational")

    @classmethod
    def parse(cls, spec: str) -> "Field":
        """Parse ``"fp:<p>"``, ``"fp"`` or ``"q"``."""
        spec = spec.strip().lower()
        if spec in ("q", "qq", "rational", "rationals"):
            return cls.rational()
        if spec == "fp":
            return cls.prime()
        m = re.fullmatch(r"fp:(\d+)", spec)
        if not m:
            raise ValueError(f"bad field spec {spec!r}; expected fp:<p> or q")
        return cls.prime(int(m.group(1)))

    def __str__(self) -> str:
        return f"fp:{self.p}" if self.is_prime else "q"

    # raw arithmetic -----------------------------------------------------

    def canon(self, x):
        """Canonical representative of an int, Fraction or raw value."""
        if self.is_prime:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        return Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.is_prime else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.is_prime else a - b

    def mul(self, a, b):
        return a * b % self.p if self.is_prime else a * b

    def neg(self, a):
        return -a % self.p if self.is_prime else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(a), -1, self.p) if self.is_prime else 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        return pow(a, n, self.p) if self.is_prime else a**n

    def random(self, rng: random.Random, nonzero: bool = False):
        """A random element; over Q a small integer, which is enough for
        generic-point sampling."""
        while True:
            if self.is_prime:
                x = rng.randrange(self.p)
            else:
                x = Fraction(rng.randint(-1000, 1000))
            if x or not nonzero:
                return x

    def to_str(self, a) -> str:
        if self.is_prime:
            return str(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def parse_value(self, text: str):
        """Parse an integer or ``a/b`` literal into a raw value."""
        text = text.strip()
        m = re.fullmatch(r"([+-]?\d+)(?:/(\d+))?", text)
        if not m:
            raise ValueError(f"bad scalar literal {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        if self.is_prime:
            if den % self.p == 0:
                raise ZeroDivisionError(f"denominator of {text!r} vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return Fraction(num, den)

    # roots --------------------------------------------------------------

    def nth_root(self, a, n: int):
        """Some x with x**n == a, or None when the field has no such x.

        Over F_p the smallest such residue is returned, so the result is
        deterministic.
        """
        if n < 1:
            raise ValueError("root order must be positive")
        a = self.canon(a)
        if n == 1 or a == 0:
            return a
        if self.is_prime:
            roots = nthroot_mod(a, n, self.p, all_roots=True)
            if not roots:
                return None
            return min(int(r) for r in roots)
        sign = 1
        num, den = a.numerator, a.denominator
        if num < 0:
            if n % 2 == 0:
                return None
            sign, num = -1, -num
        rn, exact_n = integer_nthroot(num, n)
        rd, exact_d = integer_nthroot(den, n)
        if not (exact_n and exact_d):
            return None
        return Fraction(sign * int(rn), int(rd))


@dataclass(frozen=True)
class Scalar:
    """An element of a :class:`Field`, always stored canonically."""

    field: Field
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.canon(self.value))

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"mixing {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(self.field, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.mul(self.value, o.value))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, n: int):
        return Scalar(self.field, self.field.pow(self.value, n))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.canon(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self.field.to_str(self.value)})"

    def __str__(self):
        return self.field.to_str(self.value)


def field_arithmetic(a: Scalar, b: Scalar | None, op: str) -> Scalar:
    """Apply one of ``add``, ``mul``, ``neg``, ``inv``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {op!r}")


def nth_root(a: Scalar, n: int) -> Scalar | None:
    r = a.field.nth_root(a.value, n)
    return None if r is None else Scalar(a.field, r)


def gcd_order(n: int, p: int) -> int:
    """Number of n-th roots of a nonzero n-th power in F_p."""
    return math.gcd(n, p - 1)
