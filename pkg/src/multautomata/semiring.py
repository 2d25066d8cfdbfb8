"""Coefficient semirings.

Every construction in the package is generic over a :class:`Semiring`
descriptor.  A descriptor bundles the constants and operations of one
commutative semiring together with a few capability flags (``is_field``,
``has_subtraction``).  Values are plain Python objects:

=============  =============================================
tag            value type
=============  =============================================
``boolean``    :class:`bool`
``natural``    :class:`int` (non-negative)
``integer``    :class:`int`
``rational``   :class:`fractions.Fraction`
``zmod:<p>``   :class:`int` residue in ``[0, p)``
``tropical``   :class:`int` (non-negative) or :data:`MINUS_INF`
=============  =============================================

Arithmetic is exact throughout; no floating point is involved.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import reduce
from typing import Any, Iterable

from .errors import CapabilityError

__all__ = [
    "Semiring",
    "BOOLEAN",
    "NATURAL",
    "INTEGER",
    "RATIONAL",
    "TROPICAL",
    "MINUS_INF",
    "zmod",
    "semiring_from_tag",
    "additive_monoid_parameters",
    "one_plus_one_equals_one",
]


class Semiring:
    """Descriptor of a commutative semiring with exact arithmetic."""

    tag: str = ""
    zero: Any = None
    one: Any = None
    is_field: bool = False
    has_subtraction: bool = False

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def neg(self, a):
        raise CapabilityError(f"{self.tag} has no additive inverses")

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        raise CapabilityError(f"{self.tag} is not a field")

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sum(self, values: Iterable) -> Any:
        return reduce(self.add, values, self.zero)

    def prod(self, values: Iterable) -> Any:
        return reduce(self.mul, values, self.one)

    def nat_embed(self, n: int):
        """Image of the natural number ``n`` (the ``n``-fold sum of one)."""
        if n < 0:
            raise ValueError("nat_embed expects a natural number")
        # double-and-add; valid because addition is associative
        result, power = self.zero, self.one
        while n:
            if n & 1:
                result = self.add(result, power)
            power = self.add(power, power)
            n >>= 1
        return result

    def coerce(self, value):
        """Turn a literal (int, Fraction, str or native value) into a scalar."""
        if isinstance(value, str):
            return self.parse(value)
        return self._coerce(value)

    def _coerce(self, value):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, value) -> str:
        return str(value)

    def sample(self, rng: random.Random, bound: int = 5):
        """A random scalar, used by property tests and random automata."""
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Semiring) and other.tag == self.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"<Semiring {self.tag}>"


class _Boolean(Semiring):
    tag = "boolean"
    zero = False
    one = True

    def add(self, a, b):
        return a or b

    def mul(self, a, b):
        return a and b

    def _coerce(self, value):
        if value in (0, 1):
            return bool(value)
        raise ValueError(f"not a boolean scalar: {value!r}")

    def parse(self, text):
        text = text.strip()
        if text in ("0", "false", "False"):
            return False
        if text in ("1", "true", "True"):
            return True
        raise ValueError(f"malformed boolean scalar {text!r}")

    def format(self, value):
        return "1" if value else "0"

    def sample(self, rng, bound=5):
        return rng.random() < 0.5


class _Natural(Semiring):
    tag = "natural"
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def nat_embed(self, n):
        if n < 0:
            raise ValueError("nat_embed expects a natural number")
        return n

    def _coerce(self, value):
        if isinstance(value, bool) or int(value) != value or value < 0:
            raise ValueError(f"not a natural scalar: {value!r}")
        return int(value)

    def parse(self, text):
        try:
            value = int(text.strip())
        except ValueError:
            raise ValueError(f"malformed natural scalar {text!r}") from None
        return self._coerce(value)

    def sample(self, rng, bound=5):
        return rng.randint(0, bound)


class _Integer(_Natural):
    tag = "integer"
    has_subtraction = True

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def _coerce(self, value):
        if isinstance(value, bool) or int(value) != value:
            raise ValueError(f"not an integer scalar: {value!r}")
        return int(value)

    def parse(self, text):
        try:
            return int(text.strip())
        except ValueError:
            raise ValueError(f"malformed integer scalar {text!r}") from None

    def sample(self, rng, bound=5):
        return rng.randint(-bound, bound)


class _Rational(Semiring):
    tag = "rational"
    zero = Fraction(0)
    one = Fraction(1)
    is_field = True
    has_subtraction = True

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / a

    def div(self, a, b):
        return a / b

    def nat_embed(self, n):
        if n < 0:
            raise ValueError("nat_embed expects a natural number")
        return Fraction(n)

    def _coerce(self, value):
        if isinstance(value, bool):
            raise ValueError(f"not a rational scalar: {value!r}")
        return Fraction(value)

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed rational scalar {text!r}") from None

    def format(self, value):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def sample(self, rng, bound=5):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


class ZMod(Semiring):
    """Integers modulo ``p``; a field exactly when ``p`` is prime."""

    zero = 0
    one = 1
    has_subtraction = True

    def __init__(self, p: int):
        if p < 2:
            raise ValueError("modulus must be at least 2")
        self.p = p
        self.tag = f"zmod:{p}"
        self.is_field = _is_prime(p)

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def inv(self, a):
        if not self.is_field:
            raise CapabilityError(f"{self.tag} is not a field")
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def nat_embed(self, n):
        if n < 0:
            raise ValueError("nat_embed expects a natural number")
        return n % self.p

    def _coerce(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                return self.mul(value.numerator % self.p, self.inv(value.denominator))
            value = value.numerator
        if isinstance(value, bool) or int(value) != value:
            raise ValueError(f"not a residue: {value!r}")
        return int(value) % self.p

    def parse(self, text):
        try:
            return self._coerce(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed residue {text!r}") from None

    def sample(self, rng, bound=5):
        return rng.randrange(self.p)


class _MinusInfinity:
    """The additive identity of the tropical semiring."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "MINUS_INF"

    def __reduce__(self):
        return (_MinusInfinity, ())


MINUS_INF = _MinusInfinity()


class _Tropical(Semiring):
    """``(N ∪ {-inf}, max, +)``: zero is ``-inf`` and one is ``0``."""

    tag = "tropical"
    zero = MINUS_INF
    one = 0

    def add(self, a, b):
        if a is MINUS_INF:
            return b
        if b is MINUS_INF:
            return a
        return max(a, b)

    def mul(self, a, b):
        if a is MINUS_INF or b is MINUS_INF:
            return MINUS_INF
        return a + b

    def eq(self, a, b):
        if a is MINUS_INF or b is MINUS_INF:
            return a is b
        return a == b

    def nat_embed(self, n):
        if n < 0:
            raise ValueError("nat_embed expects a natural number")
        return MINUS_INF if n == 0 else 0

    def _coerce(self, value):
        if value is MINUS_INF:
            return value
        if isinstance(value, bool) or int(value) != value or value < 0:
            raise ValueError(f"not a tropical scalar: {value!r}")
        return int(value)

    def parse(self, text):
        text = text.strip()
        if text == "-inf":
            return MINUS_INF
        try:
            return self._coerce(int(text))
        except ValueError:
            raise ValueError(f"malformed tropical scalar {text!r}") from None

    def format(self, value):
        return "-inf" if value is MINUS_INF else str(value)

    def sample(self, rng, bound=5):
        if rng.random() < 0.25:
            return MINUS_INF
        return rng.randint(0, bound)


BOOLEAN = _Boolean()
NATURAL = _Natural()
INTEGER = _Integer()
RATIONAL = _Rational()
TROPICAL = _Tropical()

_FIXED = {sr.tag: sr for sr in (BOOLEAN, NATURAL, INTEGER, RATIONAL, TROPICAL)}


def zmod(p: int) -> ZMod:
    return ZMod(p)


def semiring_from_tag(tag: str) -> Semiring:
    """Look up a semiring by its serialized tag (``"zmod:5"``, ``"tropical"``...)."""
    tag = tag.strip()
    if tag in _FIXED:
        return _FIXED[tag]
    if tag.startswith("zmod:"):
        try:
            return ZMod(int(tag[5:]))
        except ValueError:
            pass
    raise ValueError(f"unknown semiring tag {tag!r}")


def additive_monoid_parameters(sr: Semiring, probe_bound: int = 64):
    """Index and period of the additive monoid generated by one.

    Returns ``(m, l)`` with ``m`` the least ``e`` such that
    ``e·1 = (e+r)·1`` for some ``r >= 1`` and ``l`` the least such ``r``.
    Both are searched up to ``probe_bound``; when nothing is found the result
    is ``(math.inf, None)``.
    """
    if probe_bound < 1:
        raise ValueError("probe_bound must be at least 1")
    multiples = [sr.nat_embed(k) for k in range(2 * probe_bound + 1)]
    for e in range(probe_bound + 1):
        for r in range(1, probe_bound + 1):
            if sr.eq(multiples[e], multiples[e + r]):
                return e, r
    return math.inf, None


def one_plus_one_equals_one(sr: Semiring) -> bool:
    return sr.eq(sr.add(sr.one, sr.one), sr.one)
