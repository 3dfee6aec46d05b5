"""linalg.py
This file is part of maxcomm
Licensed under MIT License

Exact dense linear algebra over Q and F_p: row reduction, kernels,
inverses, Kronecker products and subspace arithmetic
"""

# imports
import math
from fractions import Fraction

import numpy as np

from maxcomm.errors import IncompatibleFieldError, MalformedInputError, \
    PreconditionViolationError
from maxcomm.fields import ModP

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"


def _object_array(shape, fill):
    arr = np.empty(shape, dtype=object)
    arr.fill(fill)
    return arr


def as_array(v):
    """Converts a vector (any sequence of field elements) to a 1-D object array."""
    arr = np.empty(len(v), dtype=object)
    for i, x in enumerate(v):
        arr[i] = x
    return arr


def is_zero_vector(v):
    return not any(bool(x) for x in v)


##########################################################################
# row reduction on Python ints
##########################################################################

def int_row(values, p):
    """A row of Python ints spanning the same line as values.

    Over Q (p = 0) the row is cleared of denominators; over F_p the entries
    become residues in [0, p).

    Args:
        values (sequence): ints, Fractions or ModP elements
        p (int): characteristic of the field

    Returns:
        row (list): the int row
    """

    if p:
        return [int(x) % p for x in values]
    dens = [x.denominator for x in values]
    den = math.lcm(*dens) if dens else 1
    return [x.numerator * (den // x.denominator) for x in values]


def _primitive(row):
    g = math.gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def _combine(row, prow, pivot, p):
    """row with its entry in the pivot column cleared by prow."""
    c = row[pivot]
    if p:
        return [(a - c * b) % p for a, b in zip(row, prow)]
    lead = prow[pivot]
    return _primitive([lead * a - c * b for a, b in zip(row, prow)])


def _eliminate(rows, ncols, p):
    """Gauss-Jordan elimination of int rows, in place.

    Over Q rows are combined fraction free and kept primitive; over F_p
    every pivot row is scaled to a leading 1.

    Returns:
        pivots (list): pivot columns; rows[:len(pivots)] are the pivot rows
    """

    pivots = []
    r = 0
    n_rows = len(rows)
    for c in range(ncols):
        if r == n_rows:
            break
        best = None
        for i in range(r, n_rows):
            x = rows[i][c]
            if x and (best is None or abs(x) < abs(rows[best][c])):
                best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        if p:
            inv = pow(rows[r][c], -1, p)
            rows[r] = [(x * inv) % p for x in rows[r]]
        prow = rows[r]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                rows[i] = _combine(rows[i], prow, c, p)
        pivots.append(c)
        r += 1
    return pivots


def _field_row(field, row, pivot):
    """Field elements of an int pivot row, scaled to a leading 1."""
    p = field.characteristic
    if p:
        return [ModP(x, p) for x in row]
    lead = row[pivot]
    return [Fraction(x, lead) for x in row]


class Matrix():
    """Dense rectangular matrix with exact entries.

    Entries live in a 2-D numpy object array and all belong to one field.
    Instances are never mutated after construction.

    Args:
        field (Rationals or PrimeField): ground field
        entries (np.ndarray): 2-D object array of field elements
    """

    __slots__ = ('field', 'entries')

    def __init__(self, field, entries):
        self.field = field
        self.entries = entries

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        """Builds a matrix from nested sequences, coercing every entry.

        Args:
            field (Rationals or PrimeField): ground field
            rows (list): list of rows
            cols (int): column count, needed when rows is empty

        Returns:
            matrix (Matrix): the matrix

        Raises:
            MalformedInputError: if the rows have different lengths
            IncompatibleFieldError: if an entry belongs to another field
        """

        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        arr = np.empty((len(rows), cols), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise MalformedInputError(
                    f"row {i} has {len(row)} entries, expected {cols}")
            for j, x in enumerate(row):
                arr[i, j] = field.coerce(x)
        return cls(field, arr)

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, _object_array((rows, cols), field.zero))

    @classmethod
    def identity(cls, field, n):
        m = _object_array((n, n), field.zero)
        for i in range(n):
            m[i, i] = field.one
        return cls(field, m)

    @classmethod
    def from_vec(cls, field, v, rows, cols):
        """Inverse of vec(): reads a row-major vector back into a matrix."""
        if len(v) != rows * cols:
            raise MalformedInputError(f"vector of length {len(v)} cannot fill {rows}x{cols}")
        return cls(field, as_array(v).reshape(rows, cols))

    @classmethod
    def from_columns(cls, field, columns, rows):
        m = _object_array((rows, len(columns)), field.zero)
        for j, c in enumerate(columns):
            m[:, j] = as_array(c)
        return cls(field, m)

    @classmethod
    def hstack(cls, mats):
        _check_fields(mats)
        return cls(mats[0].field, np.hstack([m.entries for m in mats]))

    @classmethod
    def vstack(cls, mats):
        _check_fields(mats)
        return cls(mats[0].field, np.vstack([m.entries for m in mats]))

    @classmethod
    def block(cls, blocks):
        """Assembles a block matrix from a list of block rows."""
        return cls.vstack([cls.hstack(row) for row in blocks])

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __getitem__(self, key):
        return self.entries[key]

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected a Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise IncompatibleFieldError(f"matrices over {self.field} and {other.field}")

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise MalformedInputError(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, self.entries.dot(other.entries))

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise MalformedInputError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.field, self.entries + other.entries)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise MalformedInputError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.field, self.entries - other.entries)

    def __neg__(self):
        return Matrix(self.field, -self.entries)

    def scale(self, c):
        return Matrix(self.field, self.entries * self.field.coerce(c))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.field != self.field or other.shape != self.shape:
            return False
        return all(a == b for a, b in zip(self.entries.flat, other.entries.flat))

    __hash__ = None

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_strings()})"

    def apply(self, v):
        """Matrix-vector product; returns a tuple."""
        if len(v) != self.cols:
            raise MalformedInputError(f"vector of length {len(v)} for a {self.shape} matrix")
        if self.cols == 0:
            return tuple(self.field.zero for _ in range(self.rows))
        return tuple(self.entries.dot(as_array(v)))

    def transpose(self):
        return Matrix(self.field, self.entries.T.copy())

    T = property(transpose)

    def vec(self):
        """Row-major flattening."""
        return tuple(self.entries.flat)

    def row(self, i):
        return tuple(self.entries[i, :])

    def column(self, j):
        return tuple(self.entries[:, j])

    def submatrix(self, r0, r1, c0, c1):
        return Matrix(self.field, self.entries[r0:r1, c0:c1].copy())

    def is_zero(self):
        return is_zero_vector(self.entries.flat)

    def is_square(self):
        return self.rows == self.cols

    def kron(self, other):
        """Kronecker product self ⊗ other."""
        self._check(other)
        p, q = other.shape
        out = _object_array((self.rows * p, self.cols * q), self.field.zero)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.entries[i, j]
                if a:
                    out[i * p:(i + 1) * p, j * q:(j + 1) * q] = other.entries * a
        return Matrix(self.field, out)

    def power(self, k):
        result = Matrix.identity(self.field, self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def to_strings(self):
        return [[str(x) for x in row] for row in self.entries]

    def rref(self):
        """Reduced row echelon form.

        Returns:
            reduced (Matrix): the reduced matrix, same shape
            pivots (tuple): pivot columns, strictly increasing
        """

        field = self.field
        p = field.characteristic
        n_rows, n_cols = self.shape
        rows = [int_row(self.entries[i, :], p) for i in range(n_rows)]
        rows = [r for r in rows if any(r)]
        pivots = _eliminate(rows, n_cols, p)
        m = _object_array((n_rows, n_cols), field.zero)
        for i, c in enumerate(pivots):
            m[i, :] = as_array(_field_row(field, rows[i], c))
        return Matrix(field, m), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the right nullspace {v : self v = 0}.

        Returns:
            basis (list): cols - rank vectors (tuples); empty if the kernel is zero
        """

        reduced, pivots = self.rref()
        field = self.field
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [field.zero] * self.cols
            v[free] = field.one
            for i, pc in enumerate(pivots):
                v[pc] = -reduced.entries[i, free]
            basis.append(tuple(v))
        return basis

    def inverse(self):
        """Exact inverse.

        Raises:
            PreconditionViolationError: if the matrix is singular or not square
        """

        if not self.is_square():
            raise PreconditionViolationError(f"cannot invert a {self.shape} matrix")
        n = self.rows
        reduced, pivots = Matrix.hstack([self, Matrix.identity(self.field, n)]).rref()
        if pivots[:n] != tuple(range(n)):
            raise PreconditionViolationError("matrix is singular")
        return reduced.submatrix(0, n, n, 2 * n)

    def is_invertible(self):
        return self.is_square() and self.rank() == self.rows


def _check_fields(mats):
    if not mats:
        raise MalformedInputError("cannot stack an empty list of matrices")
    field = mats[0].field
    for m in mats[1:]:
        if m.field != field:
            raise IncompatibleFieldError(f"matrices over {field} and {m.field}")


def rref(m):
    """Reduced row echelon form of m, with its pivot columns."""
    return m.rref()


def rank(m):
    return m.rank()


def kernel_basis(m):
    return m.kernel_basis()


def solve_homogeneous(field, constraints, dim):
    """Solves a stacked homogeneous system.

    Args:
        field (Rationals or PrimeField): ground field
        constraints (list): Matrix blocks or row sequences, each with dim columns
        dim (int): number of unknowns

    Returns:
        basis (list): kernel basis of the stacked system (identity basis when
            there are no constraints)
    """

    blocks = []
    for c in constraints:
        block = c if isinstance(c, Matrix) else Matrix.from_rows(field, [c], dim)
        if block.cols != dim:
            raise MalformedInputError(f"constraint has {block.cols} columns, expected {dim}")
        blocks.append(block)
    if not blocks:
        return [tuple(field.one if i == j else field.zero for j in range(dim)) for i in range(dim)]
    return Matrix.vstack(blocks).kernel_basis()


def solve(a, b):
    """One solution of a x = b, or None when the system is inconsistent.

    Free variables are set to zero.
    """

    if len(b) != a.rows:
        raise MalformedInputError(f"right-hand side of length {len(b)} for {a.rows} equations")
    aug = Matrix.hstack([a, Matrix.from_columns(a.field, [b], a.rows)])
    reduced, pivots = aug.rref()
    if pivots and pivots[-1] == a.cols:
        return None
    x = [a.field.zero] * a.cols
    for i, pc in enumerate(pivots):
        x[pc] = reduced.entries[i, a.cols]
    return tuple(x)


def span_basis(field, vectors, dim):
    """Canonical basis (nonzero RREF rows) of the span of vectors in k^dim."""

    vectors = list(vectors)
    if not vectors:
        return []
    reduced, pivots = Matrix.from_rows(field, vectors, dim).rref()
    return [reduced.row(i) for i in range(len(pivots))]


def span_dim(field, vectors, dim):
    return len(span_basis(field, vectors, dim))


def in_span(field, basis, v, dim):
    return span_dim(field, list(basis) + [v], dim) == span_dim(field, basis, dim)


def same_span(field, u, w, dim):
    return span_basis(field, u, dim) == span_basis(field, w, dim)


def subspace_intersection(field, u, w, dim):
    """Exact basis of span(u) ∩ span(w) via the kernel of [u | -w]."""

    u, w = list(u), list(w)
    if not u or not w:
        return []
    stacked = Matrix.from_columns(field, u + [tuple(-x for x in v) for v in w], dim)
    vectors = []
    for k in stacked.kernel_basis():
        coeffs = k[:len(u)]
        vectors.append(tuple(sum((c * ui[t] for c, ui in zip(coeffs, u)), field.zero)
                             for t in range(dim)))
    return span_basis(field, vectors, dim)


def extend_basis(field, base, candidates, dim):
    """Greedily picks candidates that extend base to a larger independent set.

    Returns:
        added (list): the chosen candidates, in candidate order
    """

    echelon = EchelonBasis(field, dim)
    for v in base:
        echelon.add(v)
    return [c for c in candidates if echelon.add(c)]


class EchelonBasis():
    """Incrementally grown basis in semi-echelon form.

    Rows are kept as Python ints (see int_row). Each stored row has zeros in
    the pivots of the rows stored before it, so sequential reduction decides
    membership. 'vectors' holds the added vectors as given.
    """

    def __init__(self, field, dim):
        self.field = field
        self.dim = dim
        self._p = field.characteristic
        self._rows = []
        self.vectors = []

    def __len__(self):
        return len(self._rows)

    def copy(self):
        # stored rows are never modified in place, so sharing them is safe
        other = EchelonBasis(self.field, self.dim)
        other._rows = list(self._rows)
        other.vectors = list(self.vectors)
        return other

    def _reduce(self, v):
        row = int_row(v, self._p)
        for pivot, prow in self._rows:
            if row[pivot]:
                row = _combine(row, prow, pivot, self._p)
        return row

    def contains(self, v):
        return not any(self._reduce(v))

    def add(self, v):
        """Adds v if independent; returns whether it was added."""
        row = self._reduce(v)
        for pivot, x in enumerate(row):
            if x:
                if self._p:
                    inv = pow(x, -1, self._p)
                    row = [(y * inv) % self._p for y in row]
                self._rows.append((pivot, row))
                self.vectors.append(tuple(v))
                return True
        return False


class SparseOperator():
    """A matrix applied to int vectors through its nonzero entries.

    Over Q the matrix is scaled by the lcm of its denominators, so apply()
    returns a positive multiple of the true image.

    Args:
        matrix (Matrix): the operator
    """

    def __init__(self, matrix):
        p = matrix.field.characteristic
        self._p = p
        scaled = int_row(list(matrix.entries.flat), p)
        cols = matrix.cols
        self._rows = [[(j, scaled[i * cols + j]) for j in range(cols) if scaled[i * cols + j]]
                      for i in range(matrix.rows)]

    def apply(self, v):
        out = [sum(c * v[j] for j, c in row) for row in self._rows]
        if self._p:
            return [x % self._p for x in out]
        return out


class QuotientMap():
    """Coordinates in k^dim / S, using the non-pivot columns of RREF(S) as complement.

    Args:
        field (Rationals or PrimeField): ground field
        subspace (list): spanning vectors of S
        dim (int): ambient dimension
    """

    def __init__(self, field, subspace, dim):
        self.field = field
        self.dim = dim
        self.basis = span_basis(field, subspace, dim)
        self.pivots = tuple(next(i for i, x in enumerate(b) if x) for b in self.basis)
        pivot_set = set(self.pivots)
        self.complement = tuple(c for c in range(dim) if c not in pivot_set)

    @property
    def quotient_dim(self):
        return len(self.complement)

    def coordinates(self, v):
        """Complement coordinates of the representative of v + S vanishing on the pivots."""
        coords = [v[c] for c in self.complement]
        for pivot, b in zip(self.pivots, self.basis):
            x = v[pivot]
            if x:
                coords = [y - x * b[c] for y, c in zip(coords, self.complement)]
        return tuple(coords)

    def lift(self, coords):
        """Standard representative of the class with the given coordinates."""
        v = [self.field.zero] * self.dim
        for c, x in zip(self.complement, coords):
            v[c] = x
        return tuple(v)

    def matrix(self):
        """The projection k^dim -> k^dim/S as a quotient_dim x dim matrix."""
        one, zero = self.field.one, self.field.zero
        cols = [self.coordinates(tuple(one if i == j else zero for i in range(self.dim)))
                for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.quotient_dim)
