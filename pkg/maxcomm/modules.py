"""modules.py
This file is part of maxcomm
Licensed under MIT License

Representations of a local algebra on k^n: validation, faithfulness,
radical filtration, socle, quotient modules and seeded random sampling
"""

# imports
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from maxcomm.algebra import hilbert_samuel, is_local, radical, radical_generators
from maxcomm.errors import MalformedRepError, NotLocalError, PreconditionViolationError
from maxcomm.linalg import EchelonBasis, Matrix, QuotientMap, SparseOperator, int_row, \
    is_zero_vector, span_basis, span_dim

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

logger = logging.getLogger(__name__)

DEFAULT_ATTEMPTS = 10000


@dataclass(frozen=True)
class FiltrationVector:
    """(dim V/JV, dim JV/J^2V, ..., dim J^rV) of a module.

    Args:
        dims (tuple): positive layer dimensions
    """

    dims: tuple

    def __post_init__(self):
        object.__setattr__(self, 'dims', tuple(int(d) for d in self.dims))

    @property
    def n(self):
        return sum(self.dims)

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, i):
        return self.dims[i]

    def __str__(self):
        return '(' + ','.join(map(str, self.dims)) + ')'


def as_filtration(target):
    if target is None or isinstance(target, FiltrationVector):
        return target
    return FiltrationVector(tuple(target))


@dataclass(frozen=True, eq=False)
class ModuleRep:
    """A representation A -> M_n(k), one image per algebra basis element.

    Args:
        algebra (AlgebraData): the acting algebra
        n (int): module dimension
        images (tuple): n x n Matrix per basis element, in basis order
    """

    algebra: object
    n: int
    images: tuple

    @classmethod
    def from_images(cls, algebra, images):
        """Builds a representation, checking sizes and fields.

        Raises:
            MalformedRepError: on a wrong number of images or mismatched sizes
        """

        images = tuple(images)
        if len(images) != algebra.dim:
            raise MalformedRepError(
                f"{len(images)} images given for an algebra of dimension {algebra.dim}")
        if not images:
            raise MalformedRepError("a representation needs at least the unit image")
        n = images[0].rows
        for i, m in enumerate(images):
            if m.shape != (n, n):
                raise MalformedRepError(f"image {i} has shape {m.shape}, expected ({n}, {n})",
                                        location=f"images[{i}]")
            if m.field != algebra.field:
                raise MalformedRepError(
                    f"image {i} is over {m.field}, algebra over {algebra.field}",
                    location=f"images[{i}]")
        return cls(algebra, n, images)

    @classmethod
    def from_generator_images(cls, algebra, generator_images):
        """Evaluates every basis monomial on the given generator matrices.

        Args:
            algebra (AlgebraData): algebra built from a presentation
            generator_images (dict): generator name -> n x n Matrix

        Raises:
            MalformedRepError: if a generator image is missing or misshapen
        """

        if not algebra.monomials:
            raise MalformedRepError("generator images need an algebra given by a presentation")
        missing = [g for g in algebra.generators if g not in generator_images]
        if missing:
            raise MalformedRepError(f"no image for generator(s) {', '.join(missing)}")
        extra = [g for g in generator_images if g not in algebra.generators]
        if extra:
            raise MalformedRepError(f"unknown generator(s) {', '.join(map(str, extra))}")
        gens = [generator_images[g] for g in algebra.generators]
        n = gens[0].rows
        for g, m in zip(algebra.generators, gens):
            if m.shape != (n, n):
                raise MalformedRepError(f"generator '{g}' image has shape {m.shape}",
                                        location=f"generators.{g}")
        images = []
        for exps in algebra.monomials:
            m = Matrix.identity(algebra.field, n)
            for g, e in zip(gens, exps):
                m = m @ g.power(e)
            images.append(m)
        return cls.from_images(algebra, images)

    @classmethod
    def regular(cls, algebra):
        """A acting on itself by left multiplication."""
        return cls.from_images(algebra, [algebra.left_matrix(algebra.basis_vector(i))
                                         for i in range(algebra.dim)])

    @property
    def field(self):
        return self.algebra.field

    def act(self, element):
        """Image of an algebra element given by coordinates."""
        result = Matrix.zeros(self.field, self.n, self.n)
        for c, m in zip(element, self.images):
            if c:
                result = result + m.scale(c)
        return result

    @cached_property
    def generator_images(self):
        """Images of the radical generators (lifts of a basis of J/J^2)."""
        return tuple(self.act(g) for g in radical_generators(self.algebra))

    @cached_property
    def radical_images(self):
        """Images of the canonical radical basis."""
        return tuple(self.act(v) for v in radical(self.algebra).vectors)

    def full_space(self):
        one, zero = self.field.one, self.field.zero
        return [tuple(one if i == j else zero for j in range(self.n)) for i in range(self.n)]


def validate(rep):
    """Checks that the unit acts as the identity and products are preserved.

    Returns:
        valid (bool): 'True' if rep is an algebra homomorphism

    Raises:
        MalformedRepError: if image sizes do not match
    """

    a = rep.algebra
    if len(rep.images) != a.dim:
        raise MalformedRepError(f"{len(rep.images)} images for an algebra of dimension {a.dim}")
    for i, m in enumerate(rep.images):
        if m.shape != (rep.n, rep.n):
            raise MalformedRepError(f"image {i} has shape {m.shape}, expected ({rep.n}, {rep.n})")
    if rep.images[0] != Matrix.identity(rep.field, rep.n):
        logger.debug("unit does not act as the identity")
        return False
    for i in range(a.dim):
        for j in range(a.dim):
            product = rep.images[i] @ rep.images[j]
            expected = rep.act(a.multiply(a.basis_vector(i), a.basis_vector(j)))
            if product != expected:
                logger.debug("homomorphism law fails for %s*%s", a.labels[i], a.labels[j])
                return False
    return True


def is_faithful(rep):
    """'True' if the basis images are linearly independent in M_n(k)."""
    return span_dim(rep.field, [m.vec() for m in rep.images], rep.n * rep.n) == rep.algebra.dim


def _closure(echelon, vectors, operators, limit=None):
    """Adds vectors to echelon and closes under operators in place.

    Returns:
        ok (bool): 'False' as soon as the basis would exceed limit
    """

    queue = list(vectors)
    while queue:
        w = queue.pop()
        if echelon.add(w):
            if limit is not None and len(echelon) > limit:
                return False
            queue.extend(op.apply(w) for op in operators)
    return True


def submodule_span(rep, vectors):
    """Smallest subspace containing vectors and closed under the action.

    Returns:
        basis (list): canonical basis of the submodule
    """

    echelon = EchelonBasis(rep.field, rep.n)
    _closure(echelon, vectors, rep.images)
    return span_basis(rep.field, echelon.vectors, rep.n)


def _require_local(a):
    if not is_local(a):
        raise NotLocalError(f"algebra with basis {', '.join(a.labels)} is not local")


def radical_layers(rep):
    """Bases of V, JV, J^2V, ... down to the last nonzero power.

    J^{i+1}V is spanned by the radical generators applied to J^iV.

    Raises:
        NotLocalError: if the algebra is not local
    """

    _require_local(rep.algebra)
    layers = [rep.full_space()]
    current = layers[0]
    while True:
        nxt = span_basis(rep.field, [g.apply(v) for g in rep.generator_images for v in current],
                         rep.n)
        if not nxt:
            break
        if len(nxt) == len(current):
            raise PreconditionViolationError("radical does not act nilpotently on the module")
        layers.append(nxt)
        current = nxt
    return layers


def filtration(rep):
    """Filtration vector (dim V/JV, dim JV/J^2V, ..., dim J^rV).

    Raises:
        NotLocalError: if the algebra is not local
    """

    sizes = [len(layer) for layer in radical_layers(rep)] + [0]
    return FiltrationVector(tuple(sizes[i] - sizes[i + 1] for i in range(len(sizes) - 1)))


def socle(rep):
    """Basis of Soc(V) = {v : Jv = 0}, the joint kernel of the radical images."""
    _require_local(rep.algebra)
    if not rep.radical_images:
        return rep.full_space()
    stacked = Matrix.vstack(list(rep.radical_images))
    return span_basis(rep.field, stacked.kernel_basis(), rep.n)


def quotient_module(rep, submodule, check=True):
    """The module V/N with the induced action.

    Args:
        rep (ModuleRep): the module V
        submodule (list): spanning vectors of a submodule N
        check (bool): verify that N is closed under the action; callers that
            built N as a closure pass False

    Raises:
        PreconditionViolationError: if check is set and N is not closed under the action
    """

    qmap = QuotientMap(rep.field, submodule, rep.n)
    if check:
        for i, m in enumerate(rep.images):
            for j, v in enumerate(qmap.basis):
                if not is_zero_vector(qmap.coordinates(m.apply(v))):
                    raise PreconditionViolationError(
                        f"subspace is not a submodule: "
                        f"{rep.algebra.labels[i]} moves vector {j} out",
                        pair=(i, j))
    images = []
    for m in rep.images:
        # the class of e_c is the quotient basis vector for complement column c
        cols = [qmap.coordinates(m.column(c)) for c in qmap.complement]
        images.append(Matrix.from_columns(rep.field, cols, qmap.quotient_dim))
    logger.debug("quotient of a %d-dim module by a %d-dim submodule", rep.n, len(qmap.basis))
    return ModuleRep.from_images(rep.algebra, images)


def free_module(a, m):
    """A^m, the regular representation repeated m times."""
    regular = ModuleRep.regular(a)
    ident = Matrix.identity(a.field, m)
    return ModuleRep.from_images(a, [ident.kron(img) for img in regular.images])


##########################################################################
# feasibility of target filtrations
##########################################################################

def filtration_infeasibility(a, n, target):
    """Reasons a faithful n-dimensional module cannot have the filtration target.

    Args:
        a (AlgebraData): local algebra
        n (int): module dimension
        target (FiltrationVector or sequence): candidate filtration

    Returns:
        reasons (list): human readable reasons, empty if no obstruction is known
    """

    target = as_filtration(target)
    dims = target.dims
    hs = hilbert_samuel(a)
    reasons = []
    if sum(dims) != n:
        reasons.append(f"entries sum to {sum(dims)}, not {n}")
    if any(d <= 0 for d in dims):
        reasons.append("entries must be positive")
    if len(dims) > len(hs):
        reasons.append(f"{len(dims)} layers exceed the Loewy length {len(hs)} of the algebra")
    if len(dims) < len(hs):
        reasons.append(f"a faithful module needs J^{len(hs) - 1}V != 0, "
                       f"so {len(hs)} layers, got {len(dims)}")
    if reasons:
        return reasons
    for i in range(1, len(dims)):
        if dims[i] > dims[0] * hs[i]:
            reasons.append(f"layer {i} has dim {dims[i]} > {dims[0]}*{hs[i]} "
                           f"(dim V/JV times dim J^{i}/J^{i + 1})")
    for i in range(len(dims) - 1):
        if dims[i + 1] > dims[i] * hs[1]:
            reasons.append(f"layer {i + 1} has dim {dims[i + 1]} > {dims[i]}*{hs[1]} "
                           f"(previous layer times dim J/J^2)")
        if dims[i + 1] > dims[i] * hs[i + 1]:
            reasons.append(f"layer {i + 1} has dim {dims[i + 1]} > {dims[i]}*{hs[i + 1]} "
                           f"(previous layer times dim J^{i + 1}/J^{i + 2})")
    if n > dims[0] * a.dim:
        reasons.append(f"a module generated by {dims[0]} elements has dim <= {dims[0] * a.dim}")
    return reasons


def _compositions(n, parts):
    for cuts in itertools.combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def feasible_filtrations(a, n):
    """All filtration vectors of length equal to the Loewy length that pass
    filtration_infeasibility, in lexicographic order."""

    length = len(hilbert_samuel(a))
    if n < length:
        return []
    found = [FiltrationVector(c) for c in _compositions(n, length)
             if not filtration_infeasibility(a, n, c)]
    return sorted(found, key=lambda f: f.dims)


##########################################################################
# seeded sampling
##########################################################################

@dataclass(frozen=True)
class SampleOutcome:
    """Result of sample_module.

    Args:
        rep (ModuleRep): the module found, or None
        attempt (int): index of the successful attempt, or the next unused index
        reason (str): why nothing was found
    """

    rep: object = None
    attempt: int = 0
    reason: str = ''

    @property
    def found(self):
        return self.rep is not None


def _seed_words(seed):
    if isinstance(seed, (tuple, list)):
        return [int(s) for s in seed]
    return [int(seed)]


class _FreeModuleSampler():
    """Quotients A^m / N with N grown from random elements of radical sources.

    Candidate vectors are int rows (see int_row) and the generators act
    through SparseOperator, so growing N needs no field arithmetic.
    """

    def __init__(self, a, m, n):
        self.a = a
        self.m = m
        self.n = n
        self.free = free_module(a, m)
        self.dim = self.free.n
        self.target_dim = self.dim - n
        self._p = a.field.characteristic
        gens = self.free.generator_images
        self.operators = [SparseOperator(g) for g in gens]
        sources = [layer for layer in radical_layers(self.free)[1:]]
        sources.append(socle(self.free))
        for g in gens:
            sources.append(span_basis(a.field, [g.column(j) for j in range(self.dim)], self.dim))
        unique = []
        for s in sources:
            if s and s not in unique:
                unique.append(s)
        self.sources = [[int_row(b, self._p) for b in s] for s in unique]

    def _draw(self, rng):
        basis = self.sources[int(rng.integers(len(self.sources)))]
        v = [0] * self.dim
        for b in basis:
            c = int(self.a.field.random_element(rng))
            if c:
                v = [x + c * y for x, y in zip(v, b)]
        if self._p:
            v = [x % self._p for x in v]
        return v

    def submodule(self, rng):
        """A random submodule of dimension dim F - n inside JF, or None."""
        echelon = EchelonBasis(self.a.field, self.dim)
        draws = 0
        max_draws = 4 * self.target_dim + 8
        while len(echelon) < self.target_dim and draws < max_draws:
            draws += 1
            v = self._draw(rng)
            if not any(v):
                continue
            trial = echelon.copy()
            if _closure(trial, [v], self.operators, limit=self.target_dim):
                echelon = trial
        if len(echelon) != self.target_dim:
            return None
        return echelon.vectors


@lru_cache(maxsize=32)
def _sampler(a, m, n):
    return _FreeModuleSampler(a, m, n)


def sample_module(a, n, target=None, seed=0, attempts=DEFAULT_ATTEMPTS, start=0):
    """Samples a faithful n-dimensional module, optionally with a given filtration.

    Attempt k draws from numpy's default generator (PCG64) seeded with the
    sequence [*seed, k], so the outcome depends only on (seed, k). A returned
    module is faithful, has the target filtration and passes validate().

    Args:
        a (AlgebraData): local algebra
        n (int): module dimension
        target (FiltrationVector): required filtration, or None
        seed (int or tuple): seed words
        attempts (int): attempt indices below this bound are tried
        start (int): first attempt index

    Returns:
        outcome (SampleOutcome): the module, or a not-found reason

    Raises:
        NotLocalError: if the algebra is not local
    """

    _require_local(a)
    target = as_filtration(target)
    if target is not None:
        reasons = filtration_infeasibility(a, n, target)
        if reasons:
            return SampleOutcome(None, start, "infeasible: " + "; ".join(reasons))
    words = _seed_words(seed)
    for attempt in range(start, attempts):
        rng = np.random.default_rng(words + [attempt])
        if target is not None:
            m = target[0]
        else:
            m = int(rng.integers(-(-n // a.dim), n + 1))
        sampler = _sampler(a, m, n)
        vectors = sampler.submodule(rng)
        if vectors is None:
            logger.debug("attempt %d: no submodule of the right size", attempt)
            continue
        rep = quotient_module(sampler.free, vectors, check=False)
        if not is_faithful(rep):
            logger.debug("attempt %d: quotient is not faithful", attempt)
            continue
        if target is not None:
            found = filtration(rep)
            if found != target:
                logger.debug("attempt %d: filtration %s", attempt, found)
                continue
        if not validate(rep):
            logger.warning("attempt %d: quotient is not a representation, skipped", attempt)
            continue
        logger.debug("attempt %d: found module", attempt)
        return SampleOutcome(rep, attempt, '')
    what = f"with filtration {target} " if target is not None else ''
    return SampleOutcome(None, attempts,
                         f"no faithful module {what}found in attempts {start}..{attempts - 1}")
