"""centralizer.py
This file is part of maxcomm
Licensed under MIT License

Commutants, endomorphism algebras of modules, maximal commutativity and
endomorphisms lifted from maps V/JV -> L with JL = 0
"""

# imports
import logging
from dataclasses import dataclass

from maxcomm.algebra import radical
from maxcomm.errors import MalformedInputError, NotCommutativeError, \
    PreconditionViolationError
from maxcomm.linalg import EchelonBasis, Matrix, QuotientMap, in_span, same_span, \
    solve_homogeneous, span_dim, subspace_intersection
from maxcomm.modules import radical_layers

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CommutantResult:
    """Basis of a space of n x n matrices, usually a commutant.

    Args:
        field (Rationals or PrimeField): ground field
        n (int): matrix size
        basis (tuple): linearly independent n x n matrices
    """

    field: object
    n: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def vectors(self):
        return [m.vec() for m in self.basis]

    def contains(self, m):
        return in_span(self.field, self.vectors(), m.vec(), self.n * self.n)

    def same_space(self, other):
        """Equal dimension and mutual containment."""
        return self.n == other.n and \
            same_span(self.field, self.vectors(), other.vectors(), self.n * self.n)


def _check_square(mats, field=None, n=None):
    mats = list(mats)
    if mats:
        field = field or mats[0].field
        n = mats[0].rows if n is None else n
    if field is None or n is None:
        raise MalformedInputError("an empty matrix list needs an explicit field and size")
    for i, m in enumerate(mats):
        if m.shape != (n, n):
            raise MalformedInputError(f"matrix {i} has shape {m.shape}, expected ({n}, {n})",
                                      location=f"matrices[{i}]")
        if m.field != field:
            raise MalformedInputError(f"matrix {i} is over {m.field}, expected {field}",
                                      location=f"matrices[{i}]")
    return mats, field, n


def commutation_map(m):
    """Matrix of X -> XM - MX acting on row-major vec(X)."""
    ident = Matrix.identity(m.field, m.rows)
    return ident.kron(m.T) - m.kron(ident)


def commutant(mats, field=None, n=None):
    """Exact basis of {X : XM = MX for every M in mats}.

    Args:
        mats (list): square matrices of one size over one field
        field (Rationals or PrimeField): needed only when mats is empty
        n (int): needed only when mats is empty

    Returns:
        result (CommutantResult): the commutant

    Raises:
        MalformedInputError: on inconsistent sizes or fields
    """

    mats, field, n = _check_square(mats, field, n)
    constraints = [commutation_map(m) for m in mats if not m.is_zero()]
    kernel = solve_homogeneous(field, constraints, n * n)
    logger.debug("commutant of %d matrices of size %d has dim %d", len(mats), n, len(kernel))
    return CommutantResult(field, n, tuple(Matrix.from_vec(field, v, n, n) for v in kernel))


def end_algebra(rep, full_basis=False):
    """End_A(V) as the commutant of the algebra image.

    By default only the radical generator images are used; commuting with
    them is the same as commuting with the whole image. full_basis=True
    stacks every basis image instead.

    Args:
        rep (ModuleRep): the module
        full_basis (bool): use all basis images

    Returns:
        result (CommutantResult): End_A(V)
    """

    mats = list(rep.images) if full_basis else list(rep.generator_images)
    return commutant(mats, rep.field, rep.n)


def algebra_closure(mats, field=None, n=None):
    """Basis of the unital algebra generated by mats.

    Returns:
        basis (list): linearly independent matrices, the identity first
    """

    mats, field, n = _check_square(mats, field, n)
    echelon = EchelonBasis(field, n * n)
    basis = []
    queue = [Matrix.identity(field, n)] + mats
    while queue:
        m = queue.pop(0)
        if echelon.add(m.vec()):
            basis.append(m)
            queue.extend(m @ g for g in mats)
    return basis


@dataclass(frozen=True, eq=False)
class MaximalityResult:
    """Outcome of is_maximal_commutative.

    Args:
        maximal (bool): the algebra equals its commutant
        algebra_dim (int): dimension of the unital closure
        commutant_dim (int): dimension of the commutant
        witness (Matrix): commutant element outside the algebra, when not maximal
        closure (tuple): basis of the unital closure, identity first
        commutant (CommutantResult): the commutant
    """

    maximal: bool
    algebra_dim: int
    commutant_dim: int
    witness: object = None
    closure: tuple = ()
    commutant: object = None


def first_noncommuting_pair(mats):
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if mats[i] @ mats[j] != mats[j] @ mats[i]:
                return (i, j)
    return None


def is_maximal_commutative(mats, field=None, n=None):
    """Decides whether the unital algebra generated by mats is maximal commutative.

    Raises:
        NotCommutativeError: with the first pair of input matrices that do not commute
    """

    mats, field, n = _check_square(mats, field, n)
    pair = first_noncommuting_pair(mats)
    if pair is not None:
        raise NotCommutativeError(pair)
    closure = algebra_closure(mats, field, n)
    comm = commutant(mats, field, n)
    vectors = [m.vec() for m in closure]
    witness = None
    if comm.dim > len(closure):
        witness = next(x for x in comm.basis if not in_span(field, vectors, x.vec(), n * n))
    return MaximalityResult(maximal=comm.dim == len(closure), algebra_dim=len(closure),
                            commutant_dim=comm.dim, witness=witness, closure=tuple(closure),
                            commutant=comm)


def verify_witness(mats, witness, closure):
    """'True' if witness commutes with every matrix and lies outside the closure."""
    if witness is None:
        return False
    if any(witness @ m != m @ witness for m in mats):
        return False
    n = witness.rows
    return not in_span(witness.field, [c.vec() for c in closure], witness.vec(), n * n)


def hom_lift(rep, l_subspace):
    """Endomorphisms v -> phi(v + JV) for phi in Hom(V/JV, L).

    Args:
        rep (ModuleRep): the module
        l_subspace (list): basis of a subspace L with JL = 0

    Returns:
        lifted (list): dim(V/JV) * dim(L) independent n x n matrices

    Raises:
        PreconditionViolationError: if some radical element does not kill L,
            naming the radical basis element and the vector
    """

    field, n = rep.field, rep.n
    labels = [rep.algebra.combination(v) for v in radical(rep.algebra).vectors]
    for i, g in enumerate(rep.radical_images):
        for j, v in enumerate(l_subspace):
            if any(g.apply(v)):
                raise PreconditionViolationError(
                    f"radical element {labels[i]} does not annihilate vector {j} of L",
                    pair=(labels[i], j))
    if not l_subspace:
        return []
    layers = radical_layers(rep)
    jv = layers[1] if len(layers) > 1 else []
    projection = QuotientMap(field, jv, n).matrix()
    lifted = []
    for i in range(projection.rows):
        row = Matrix.from_rows(field, [projection.row(i)], n)
        for v in l_subspace:
            lifted.append(Matrix.from_columns(field, [v], n) @ row)
    for x in lifted:
        for k, m in enumerate(rep.images):
            if x @ m != m @ x:
                raise PreconditionViolationError(
                    f"lifted map does not commute with {rep.algebra.labels[k]}")
    return lifted


##########################################################################
# nilpotent matrices
##########################################################################

def jordan_type(nilpotent):
    """Jordan block sizes of a nilpotent matrix, largest first.

    Computed from rank(N^k): the number of blocks of size >= k is
    rank(N^(k-1)) - rank(N^k).

    Raises:
        PreconditionViolationError: if the matrix is not square or not nilpotent
    """

    if not nilpotent.is_square():
        raise PreconditionViolationError(f"Jordan type of a {nilpotent.shape} matrix")
    n = nilpotent.rows
    ranks = [n]
    power = Matrix.identity(nilpotent.field, n)
    while ranks[-1] > 0:
        power = power @ nilpotent
        r = power.rank()
        if r == ranks[-1]:
            raise PreconditionViolationError("matrix is not nilpotent")
        ranks.append(r)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k in range(len(at_least), 0, -1):
        exactly = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        sizes.extend([k] * exactly)
    return tuple(sizes)


def jordan_commutant_dim(partition):
    """Commutant dimension of a nilpotent matrix of the given Jordan type."""
    return sum(min(a, b) for a in partition for b in partition)


@dataclass(frozen=True)
class InclusionExclusion:
    """dim(image + lifted) = image + lifted - intersection, a lower bound for End."""

    image_dim: int
    lift_dim: int
    intersection_dim: int

    @property
    def bound(self):
        return self.image_dim + self.lift_dim - self.intersection_dim


def inclusion_exclusion_bound(algebra_image, lifted, field=None, n=None):
    """Exact sizes for the lower bound dim End >= dim A(V) + dim lift - dim intersection.

    Args:
        algebra_image (list): matrices spanning the image of the algebra
        lifted (list): matrices from hom_lift
    """

    mats = list(algebra_image) + list(lifted)
    _, field, n = _check_square(mats, field, n)
    u = [m.vec() for m in algebra_image]
    w = [m.vec() for m in lifted]
    return InclusionExclusion(span_dim(field, u, n * n), span_dim(field, w, n * n),
                              len(subspace_intersection(field, u, w, n * n)))
