"""algebra.py
This file is part of maxcomm
Licensed under MIT License

Finite-dimensional commutative algebras given by structure constants:
presentations, radical, radical powers, Hilbert-Samuel type
"""

# imports
import logging
import re
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from maxcomm.errors import FieldTooSmallError, InconsistentPresentationError, \
    MalformedPresentationError, NotLocalError, PreconditionViolationError
from maxcomm.fields import Rationals
from maxcomm.linalg import EchelonBasis, Matrix, as_array, span_basis, in_span

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

logger = logging.getLogger(__name__)

MAX_REWRITE_DEPTH = 64

_NAME = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')
_FACTOR = re.compile(r'^(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?:\^(?P<exp>\d+))?$')
_NUMBER = re.compile(r'^\d+(?:/\d+)?$')


def parse_monomial(text, generators):
    """Reads 'x^2*y' (or '1') into an exponent tuple over the generators.

    Args:
        text (str): monomial string
        generators (tuple): generator names

    Returns:
        exps (tuple): exponent of each generator

    Raises:
        MalformedPresentationError: on unknown generators or bad syntax
    """

    exps = [0] * len(generators)
    text = text.replace(' ', '')
    if text in ('', '1'):
        return tuple(exps)
    for factor in text.split('*'):
        m = _FACTOR.match(factor)
        if m is None:
            raise MalformedPresentationError(f"cannot read factor '{factor}' of monomial '{text}'")
        name = m.group('name')
        if name not in generators:
            raise MalformedPresentationError(f"unknown generator '{name}' in monomial '{text}'")
        exp = int(m.group('exp') or 1)
        if exp == 0:
            raise MalformedPresentationError(f"zero exponent in monomial '{text}'")
        exps[generators.index(name)] += exp
    return tuple(exps)


def format_monomial(exps, generators):
    parts = []
    for name, e in zip(generators, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return '*'.join(parts) if parts else '1'


def monomial_key(exps):
    """Total degree first, then lexicographic on generator names."""
    return (sum(exps), tuple(-e for e in exps))


def parse_combination(text, generators, field):
    """Reads a linear combination such as '2*x^2 - 3/2*y*z' or '0'.

    Returns:
        terms (dict): exponent tuple -> coefficient (zero terms dropped)
    """

    text = str(text).replace(' ', '')
    if not text:
        raise MalformedPresentationError("empty linear combination")
    terms = {}
    for term in re.findall(r'[+-]?[^+-]+', text):
        sign = -1 if term.startswith('-') else 1
        body = term.lstrip('+-')
        coef = field.one * sign
        mono_factors = []
        for factor in body.split('*'):
            if _NUMBER.match(factor):
                coef = coef * field.coerce(factor)
            else:
                mono_factors.append(factor)
        exps = parse_monomial('*'.join(mono_factors), generators)
        terms[exps] = terms.get(exps, field.zero) + coef
    return {m: c for m, c in terms.items() if c}


@dataclass(frozen=True)
class Presentation:
    """Quotient of a polynomial ring by monomial and linear rewrite rules.

    Args:
        generators (tuple): generator names
        basis (tuple): monomial strings spanning the algebra; must contain '1'
        rules (dict): non-basis monomial -> linear combination of basis monomials
    """

    generators: tuple
    basis: tuple
    rules: dict = dc_field(default_factory=dict)

    def __hash__(self):
        return hash((self.generators, self.basis, tuple(sorted(self.rules.items()))))


def _exps_divide(a, b):
    return all(x <= y for x, y in zip(a, b))


class _Rewriter():
    """Reduces monomials to basis coordinates through the rewrite rules."""

    def __init__(self, p, field):
        self.field = field
        self.generators = tuple(p.generators)
        basis = [parse_monomial(b, self.generators) for b in p.basis]
        if len(set(basis)) != len(basis):
            raise MalformedPresentationError("basis lists a monomial twice")
        if tuple(0 for _ in self.generators) not in basis:
            raise MalformedPresentationError("basis must contain the unit monomial '1'")
        self.basis = sorted(basis, key=monomial_key)
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.rules = {}
        for lhs, rhs in p.rules.items():
            lhs_exps = parse_monomial(lhs, self.generators)
            if lhs_exps in self.index:
                raise MalformedPresentationError(f"rule rewrites the basis monomial '{lhs}'")
            terms = parse_combination(rhs, self.generators, field)
            for m in terms:
                if m not in self.index:
                    raise MalformedPresentationError(
                        f"rule '{lhs}' references '{format_monomial(m, self.generators)}', "
                        "which is not a basis monomial")
            self.rules[lhs_exps] = terms
        self.rule_order = sorted(self.rules, key=monomial_key)
        self._cache = {}

    def reduce(self, exps, depth=0):
        if exps in self._cache:
            return self._cache[exps]
        if depth > MAX_REWRITE_DEPTH:
            raise MalformedPresentationError(
                f"rewriting '{format_monomial(exps, self.generators)}' does not terminate")
        d = len(self.basis)
        v = [self.field.zero] * d
        if exps in self.index:
            v[self.index[exps]] = self.field.one
        elif exps in self.rules:
            for m, c in self.rules[exps].items():
                v[self.index[m]] += c
        else:
            lhs = next((r for r in self.rule_order if _exps_divide(r, exps)), None)
            if lhs is None:
                raise MalformedPresentationError(
                    f"no rule reduces the monomial '{format_monomial(exps, self.generators)}'")
            quotient = tuple(x - y for x, y in zip(exps, lhs))
            for m, c in self.rules[lhs].items():
                shifted = tuple(x + y for x, y in zip(m, quotient))
                for i, x in enumerate(self.reduce(shifted, depth + 1)):
                    v[i] += c * x
        v = tuple(v)
        self._cache[exps] = v
        return v


@dataclass(frozen=True, eq=False)
class AlgebraData:
    """Commutative unital algebra given by structure constants.

    e_i e_j = sum_k constants[i][j][k] e_k, and e_0 is the unit.

    Args:
        field (Rationals or PrimeField): ground field
        labels (tuple): basis labels
        constants (tuple): d x d x d nested tuples of field elements
        generators (tuple): generator names, when built from a presentation
        generator_vectors (tuple): coordinates of each generator
        monomials (tuple): exponent tuple of each basis element, when known
    """

    field: object
    labels: tuple
    constants: tuple
    generators: tuple = ()
    generator_vectors: tuple = ()
    monomials: tuple = ()

    def __post_init__(self):
        d = len(self.labels)
        table = np.empty((d, d), dtype=object)
        for i in range(d):
            for j in range(d):
                table[i, j] = as_array(self.constants[i][j])
        object.__setattr__(self, '_table', table)

    @classmethod
    def from_structure_constants(cls, field, labels, constants, **kwargs):
        """Builds and validates an algebra from raw structure constants.

        Raises:
            InconsistentPresentationError: if an algebra axiom fails
        """

        labels = tuple(labels)
        d = len(labels)
        try:
            coerced = tuple(tuple(tuple(field.coerce(x) for x in constants[i][j])
                                  for j in range(d)) for i in range(d))
        except (IndexError, TypeError):
            raise InconsistentPresentationError(f"structure constants are not {d}x{d}x{d}")
        if any(len(constants[i][j]) != d for i in range(d) for j in range(d)):
            raise InconsistentPresentationError(f"structure constants are not {d}x{d}x{d}")
        a = cls(field, labels, coerced, **kwargs)
        a.validate()
        return a

    @property
    def dim(self):
        return len(self.labels)

    def basis_vector(self, i):
        return tuple(self.field.one if k == i else self.field.zero for k in range(self.dim))

    @property
    def unit(self):
        return self.basis_vector(0)

    def zero_vector(self):
        return tuple(self.field.zero for _ in range(self.dim))

    def multiply(self, u, v):
        result = as_array(self.zero_vector())
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if vj:
                    result = result + self._table[i, j] * (ui * vj)
        return tuple(result)

    def power(self, u, k):
        result = self.unit
        for _ in range(k):
            result = self.multiply(result, u)
        return result

    @cached_property
    def trace_radical(self):
        """Kernel of the trace form, computed once per algebra; see radical()."""
        return _trace_form_kernel(self)

    def left_matrix(self, u):
        """Matrix of multiplication by u in the basis e_0, ..., e_{d-1}."""
        cols = [self.multiply(u, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def combination(self, v):
        """Human readable form of a coordinate vector."""
        terms = [f"{c}*{lbl}" if lbl != '1' else str(c)
                 for c, lbl in zip(v, self.labels) if c]
        return ' + '.join(terms) if terms else '0'

    def evaluate(self, monomial):
        """Value of a monomial (exponent tuple or string) in the generators."""
        if not self.generators:
            raise PreconditionViolationError("algebra has no generator names")
        if isinstance(monomial, str):
            monomial = parse_monomial(monomial, self.generators)
        result = self.unit
        for g, e in zip(self.generator_vectors, monomial):
            result = self.multiply(result, self.power(g, e))
        return result

    def validate(self):
        """Checks the unit law, commutativity and associativity exactly.

        Raises:
            InconsistentPresentationError: naming the first failing basis elements
        """

        d = self.dim
        if d == 0:
            raise InconsistentPresentationError("an algebra needs at least the unit")
        c = self._table
        lbl = self.labels
        for j in range(d):
            if tuple(c[0, j]) != self.basis_vector(j):
                raise InconsistentPresentationError(f"unit law fails: 1*{lbl[j]} != {lbl[j]}")
        for i in range(d):
            for j in range(i + 1, d):
                if tuple(c[i, j]) != tuple(c[j, i]):
                    raise InconsistentPresentationError(
                        f"not commutative: {lbl[i]}*{lbl[j]} != {lbl[j]}*{lbl[i]}")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    left = self.multiply(tuple(c[i, j]), self.basis_vector(k))
                    right = self.multiply(self.basis_vector(i), tuple(c[j, k]))
                    if left != right:
                        raise InconsistentPresentationError(
                            f"not associative: ({lbl[i]}*{lbl[j]})*{lbl[k]} != "
                            f"{lbl[i]}*({lbl[j]}*{lbl[k]})")


def algebra_from_presentation(p, field=None):
    """Builds the quotient ring described by a presentation.

    Basis monomials are ordered by total degree, then lexicographically on
    the generator names, so the structure constants are deterministic.

    Args:
        p (Presentation): the presentation
        field (Rationals or PrimeField): ground field, Q by default

    Returns:
        a (AlgebraData): the validated algebra

    Raises:
        MalformedPresentationError: unknown monomials or irreducible products
        InconsistentPresentationError: the induced table is not a commutative algebra
    """

    field = field or Rationals()
    for g in p.generators:
        if not _NAME.match(g):
            raise MalformedPresentationError(f"'{g}' is not a valid generator name")
    if len(set(p.generators)) != len(p.generators):
        raise MalformedPresentationError("generator names must be distinct")
    rw = _Rewriter(p, field)
    d = len(rw.basis)
    constants = tuple(tuple(rw.reduce(tuple(x + y for x, y in zip(rw.basis[i], rw.basis[j])))
                            for j in range(d)) for i in range(d))
    gens = tuple(p.generators)
    gen_vectors = tuple(rw.reduce(tuple(1 if k == i else 0 for k in range(len(gens))))
                        for i in range(len(gens)))
    a = AlgebraData(field, tuple(format_monomial(b, gens) for b in rw.basis), constants,
                    generators=gens, generator_vectors=gen_vectors,
                    monomials=tuple(rw.basis))
    a.validate()
    logger.debug("built %d-dimensional algebra on %s", d, ', '.join(gens))
    return a


def read_off_rules(a, p):
    """Evaluates the left-hand side of every rule inside the algebra.

    Returns:
        values (dict): rule monomial string -> coordinate vector
    """

    return {lhs: a.evaluate(lhs) for lhs in p.rules}


def regular_representation(a):
    """Images of the basis elements acting on A by left multiplication."""
    return tuple(a.left_matrix(a.basis_vector(i)) for i in range(a.dim))


@dataclass(frozen=True, eq=False)
class IdealBasis:
    """Ideal of an algebra, stored as a canonical (RREF) basis.

    Args:
        parent (AlgebraData): the algebra
        vectors (tuple): linearly independent coordinate vectors
    """

    parent: AlgebraData
    vectors: tuple

    @classmethod
    def spanned_by(cls, parent, vectors):
        return cls(parent, tuple(span_basis(parent.field, vectors, parent.dim)))

    @property
    def dim(self):
        return len(self.vectors)

    def contains(self, v):
        return in_span(self.parent.field, self.vectors, v, self.parent.dim)

    def is_ideal(self):
        a = self.parent
        return all(self.contains(a.multiply(a.basis_vector(i), v))
                   for v in self.vectors for i in range(a.dim))

    def __eq__(self, other):
        if not isinstance(other, IdealBasis):
            return NotImplemented
        return other.parent is self.parent and other.vectors == self.vectors

    __hash__ = None


def radical(a):
    """Jacobson radical (= nilradical) as the kernel of the trace form.

    t(u, v) = trace(L_{uv}); its kernel is the radical when the
    characteristic is 0 or exceeds dim A.

    Args:
        a (AlgebraData): commutative associative algebra

    Returns:
        j (IdealBasis): the radical

    Raises:
        FieldTooSmallError: for F_p with p <= dim A
    """

    d = a.dim
    p = a.field.characteristic
    if p and p <= d:
        raise FieldTooSmallError(
            f"trace-form radical needs characteristic 0 or > {d}, got {p}")
    return a.trace_radical


def _trace_form_kernel(a):
    d = a.dim
    c = a.constants
    traces = [sum((c[k][j][j] for j in range(d)), a.field.zero) for k in range(d)]
    gram = [[sum((c[i][j][k] * traces[k] for k in range(d)), a.field.zero)
             for j in range(d)] for i in range(d)]
    kernel = Matrix.from_rows(a.field, gram, d).kernel_basis()
    return IdealBasis.spanned_by(a, kernel)


def ideal_product(i1, i2):
    a = i1.parent
    return IdealBasis.spanned_by(a, [a.multiply(u, v) for u in i1.vectors for v in i2.vectors])


def ideal_power(j, e):
    """Basis of J^e.

    Raises:
        PreconditionViolationError: if e < 1
    """

    if e < 1:
        raise PreconditionViolationError(f"ideal power needs e >= 1, got {e}")
    result = j
    for _ in range(e - 1):
        if result.dim == 0:
            break
        result = ideal_product(result, j)
    return result


def is_local(a):
    return radical(a).dim == a.dim - 1


def radical_chain(a):
    """J, J^2, ... up to and excluding the zero ideal."""
    j = radical(a)
    chain = []
    current = j
    while current.dim > 0:
        chain.append(current)
        current = ideal_product(current, j)
    return chain


def hilbert_samuel(a):
    """Hilbert-Samuel type (dim A/J, dim J/J^2, dim J^2/J^3, ...).

    Raises:
        NotLocalError: if a is not local
    """

    if not is_local(a):
        raise NotLocalError(f"algebra with basis {', '.join(a.labels)} is not local")
    chain = radical_chain(a)
    dims = [a.dim - (chain[0].dim if chain else 0)]
    for k, ideal in enumerate(chain):
        nxt = chain[k + 1].dim if k + 1 < len(chain) else 0
        dims.append(ideal.dim - nxt)
    return tuple(dims)


def radical_generators(a):
    """Lifts of a basis of J/J^2: radical basis vectors independent modulo J^2."""
    j = radical(a)
    j2 = ideal_product(j, j)
    echelon = EchelonBasis(a.field, a.dim)
    for v in j2.vectors:
        echelon.add(v)
    return [v for v in j.vectors if echelon.add(v)]
