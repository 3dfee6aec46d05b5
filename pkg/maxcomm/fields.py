"""fields.py
This file is part of maxcomm
Licensed under MIT License

Exact ground fields: the rationals and prime fields F_p
"""

# imports
import re
from dataclasses import dataclass
from fractions import Fraction

from maxcomm.errors import IncompatibleFieldError, MalformedInputError

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

DEFAULT_PRIME = 101

_FIELD_TAG = re.compile(r'^\s*(?:(?P<q>[Qq]{1,2})|[Ff][_]?[Pp]?\s*:?\s*(?P<p>\d+))\s*$')


def is_prime(p):
    """Checks primality by trial division.

    Args:
        p (int): candidate

    Returns:
        prime (bool): 'True' if p is prime
    """

    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class ModP:
    """Element of the prime field F_p.

    Invariant: 'value' is the canonical representative in [0, p).
    """

    __slots__ = ('value', 'p')

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise IncompatibleFieldError(
                    f"cannot combine elements of F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return ModP(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return ModP(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return ModP(v - self.value, self.p)

    def __mul__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return ModP(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        if v % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModP(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModP(v * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def _parse_scalar(x):
    """Turns an int, Fraction or rational string into a Fraction."""

    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise MalformedInputError(f"'{x}' is not an exact rational scalar")
    if isinstance(x, float):
        raise MalformedInputError(
            f"floating point value {x!r} is not accepted, use an integer or a 'p/q' string")
    raise MalformedInputError(f"cannot read {x!r} as an exact scalar")


@dataclass(frozen=True)
class Rationals:
    """The field of rational numbers; elements are fractions.Fraction."""

    characteristic = 0

    @property
    def tag(self):
        return 'Q'

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, ModP):
            raise IncompatibleFieldError(f"element {x!r} of F_{x.p} used over Q")
        if isinstance(x, Fraction):
            return x
        return _parse_scalar(x)

    def random_element(self, rng):
        """Uniform draw from {-2, ..., 2}."""
        return Fraction(int(rng.integers(-2, 3)))

    def __str__(self):
        return 'Q'


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p; elements are ModP.

    Args:
        p (int): the characteristic, must be prime
    """

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise MalformedInputError(f"{self.p!r} is not a prime")

    @property
    def characteristic(self):
        return self.p

    @property
    def tag(self):
        return f'Fp:{self.p}'

    @property
    def zero(self):
        return ModP(0, self.p)

    @property
    def one(self):
        return ModP(1, self.p)

    def coerce(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise IncompatibleFieldError(f"element {x!r} of F_{x.p} used over F_{self.p}")
            return x
        q = _parse_scalar(x)
        if q.denominator % self.p == 0:
            raise MalformedInputError(f"{q} has a denominator divisible by {self.p}")
        return ModP(q.numerator * pow(q.denominator, -1, self.p), self.p)

    def random_element(self, rng):
        """Uniform draw from F_p."""
        return ModP(int(rng.integers(0, self.p)), self.p)

    def __str__(self):
        return self.tag


def parse_field(tag):
    """Parses a field tag such as 'Q', 'fp:101' or 'Fp:7'.

    Args:
        tag (str or field): tag to parse; field objects are returned unchanged

    Returns:
        field (Rationals or PrimeField): the field

    Raises:
        MalformedInputError: if the tag is not recognised or p is not prime
    """

    if isinstance(tag, (Rationals, PrimeField)):
        return tag
    m = _FIELD_TAG.match(str(tag))
    if m is None:
        raise MalformedInputError(f"unknown field tag '{tag}', expected 'Q' or 'fp:<prime>'")
    if m.group('q'):
        return Rationals()
    return PrimeField(int(m.group('p')))
