"""catalog.py
This file is part of maxcomm
Licensed under MIT License

Representatives of the dimension-5 local algebras, the classification
table they come from, and Laffey's lower bound
"""

# imports
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from maxcomm.algebra import Presentation, algebra_from_presentation, hilbert_samuel, is_local
from maxcomm.errors import InconsistentPresentationError, PreconditionViolationError
from maxcomm.fields import Rationals, parse_field

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

logger = logging.getLogger(__name__)


def _zero_rules(monomials):
    return {m: '0' for m in monomials}


PRESENTATIONS = {
    # monogenic
    9: Presentation(('x',), ('1', 'x', 'x^2', 'x^3', 'x^4'),
                    _zero_rules(['x^5'])),
    # the two (1,2,1,1) algebras; in 10 the annihilator of J is (y, x^3), larger than J^3
    10: Presentation(('x', 'y'), ('1', 'x', 'y', 'x^2', 'x^3'),
                     _zero_rules(['x*y', 'y^2', 'x^4'])),
    12: Presentation(('x', 'y'), ('1', 'x', 'y', 'x^2', 'x^3'),
                     {'x*y': '0', 'y^2': 'x^3', 'x^4': '0'}),
    # stand-in for the (1,2,2) classes
    11: Presentation(('x', 'y'), ('1', 'x', 'y', 'x^2', 'y^2'),
                     _zero_rules(['x*y', 'x^3', 'y^3'])),
    # stand-in for the (1,3,1) classes other than 16
    14: Presentation(('x', 'y', 'z'), ('1', 'x', 'y', 'z', 'x^2'),
                     {'x*y': '0', 'x*z': '0', 'y*z': '0', 'y^2': 'x^2', 'z^2': 'x^2',
                      'x^3': '0'}),
    16: Presentation(('x', 'y', 'z'), ('1', 'x', 'y', 'z', 'x^2'),
                     _zero_rules(['x^3', 'y^2', 'z^2', 'x*y', 'x*z', 'y*z'])),
    17: Presentation(('x', 'y', 'z', 'w'), ('1', 'x', 'y', 'z', 'w'),
                     _zero_rules(['x^2', 'y^2', 'z^2', 'w^2', 'x*y', 'x*z', 'x*w',
                                  'y*z', 'y*w', 'z*w'])),
}


@dataclass(frozen=True)
class TableRow:
    """One row of the classification of dimension-5 local algebras.

    Args:
        classes (tuple): isomorphism class ids sharing the type
        hs_type (tuple): Hilbert-Samuel type
        strategy (str): how the row is handled
        representative (int): catalog key used for the row
    """

    classes: tuple
    hs_type: tuple
    strategy: str
    representative: int


TABLE_1 = (
    TableRow((9,), (1, 1, 1, 1, 1), "monogenic; Jordan centralizer", 9),
    TableRow((10, 12), (1, 2, 1, 1), "use dim(J/J^2)=2, dim(J^2/J^3)=1", 10),
    TableRow((11, 13), (1, 2, 2), "use dim(J/J^2)=2, dim J^2=2", 11),
    TableRow((14, 15, 16), (1, 3, 1), "use dim(J/J^2)=3, dim J^2=1", 16),
    TableRow((17,), (1, 4), "J^2=0; direct argument", 17),
)


def expected_type(class_id):
    for row in TABLE_1:
        if class_id in row.classes:
            return row.hs_type
    raise KeyError(class_id)


@lru_cache(maxsize=None)
def _build(field):
    entries = {}
    for class_id, p in PRESENTATIONS.items():
        a = algebra_from_presentation(p, field)
        if a.dim != 5 or not is_local(a):
            raise InconsistentPresentationError(
                f"catalog entry {class_id} is not a 5-dimensional local algebra")
        hs = hilbert_samuel(a)
        if hs != expected_type(class_id):
            raise InconsistentPresentationError(
                f"catalog entry {class_id} has type {hs}, table lists {expected_type(class_id)}")
        entries[class_id] = a
    logger.debug("built catalog over %s: %s", field, sorted(entries))
    return entries


def catalog(field=None):
    """Validated catalog algebras keyed by class id.

    Args:
        field (Rationals or PrimeField or str): ground field, Q by default

    Returns:
        entries (dict): class id -> AlgebraData
    """

    return dict(_build(parse_field(field) if field is not None else Rationals()))


def catalog_algebra(class_id, field=None):
    entries = catalog(field)
    if class_id not in entries:
        raise KeyError(f"no catalog algebra for class {class_id}; "
                       f"available: {', '.join(map(str, sorted(entries)))}")
    return entries[class_id]


##########################################################################
# Laffey's bound dim A > (2n)^(2/3) - 1
##########################################################################

# the value printed next to the n=6 evaluation, equal to 14^(2/3) - 1
PRINTED_LAFFEY = {6: "4.8088"}

_BISECTION_STEPS = 64


def _icbrt(m):
    """Largest integer r with r^3 <= m."""
    r = 0
    while (r + 1) ** 3 <= m:
        r += 1
    return r


def _cbrt_bracket(m, steps=_BISECTION_STEPS):
    """Rational interval [lo, hi] containing the real cube root of m."""
    r = _icbrt(m)
    lo, hi = Fraction(r), Fraction(r + 1)
    if r ** 3 == m:
        return lo, lo
    for _ in range(steps):
        mid = (lo + hi) / 2
        if mid ** 3 <= m:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _decimal(x, places=4):
    q = round(x * 10 ** places)
    sign = '-' if q < 0 else ''
    q = abs(q)
    return f"{sign}{q // 10 ** places}.{q % 10 ** places:0{places}d}"


@dataclass(frozen=True)
class LaffeyBound:
    """Evaluation of (2n)^(2/3) - 1.

    Args:
        n (int): matrix size
        expression (str): exact closed form
        lower (Fraction): rational lower bracket of the bound
        upper (Fraction): rational upper bracket of the bound
        approximation (str): the bound to four decimals
        implied (int): smallest dimension the strict inequality allows
        note (str): remark when a differing printed value is known
    """

    n: int
    expression: str
    lower: Fraction
    upper: Fraction
    approximation: str
    implied: int
    note: str = ''

    def to_dict(self):
        return {'n': self.n, 'expression': self.expression,
                'lower': str(self.lower), 'upper': str(self.upper),
                'approximation': self.approximation, 'implied_dim': self.implied,
                'note': self.note}


def laffey_bound(n):
    """Evaluates Laffey's bound exactly by rational bisection.

    (2n)^(2/3) is the real cube root of 4n^2, so dim A > (2n)^(2/3) - 1 forces
    dim A >= floor(cbrt(4n^2)).

    Args:
        n (int): matrix size, n >= 1

    Returns:
        bound (LaffeyBound): the evaluation

    Raises:
        PreconditionViolationError: if n < 1
    """

    if not isinstance(n, int) or n < 1:
        raise PreconditionViolationError(f"Laffey's bound needs n >= 1, got {n!r}")
    m = 4 * n * n
    lo, hi = _cbrt_bracket(m)
    note = ''
    if n in PRINTED_LAFFEY:
        note = (f"a printed value of {PRINTED_LAFFEY[n]} circulates for n={n}; it equals "
                f"14^(2/3) - 1, not {2 * n}^(2/3) - 1. Both give dim A >= {_icbrt(m)}.")
    return LaffeyBound(n=n, expression=f"{2 * n}^(2/3) - 1", lower=lo - 1, upper=hi - 1,
                       approximation=_decimal(lo - 1), implied=_icbrt(m), note=note)
