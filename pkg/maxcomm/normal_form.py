"""normal_form.py
This file is part of maxcomm
Licensed under MIT License

Block configurations of three-layer modules, the normal form of a triple
of 2x3 maps, and the block-structured endomorphism solver
"""

# imports
import itertools
import logging
from dataclasses import dataclass, field as dc_field

from maxcomm.algebra import radical, radical_generators
from maxcomm.catalog import catalog_algebra
from maxcomm.centralizer import CommutantResult, commutant
from maxcomm.errors import DegeneratePencilError, MalformedInputError, NotInOrbitError, \
    NotSpanningError, PreconditionViolationError
from maxcomm.fields import PrimeField, Rationals
from maxcomm.linalg import Matrix, extend_basis, solve, solve_homogeneous, span_dim
from maxcomm.modules import ModuleRep, is_faithful, radical_layers

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

logger = logging.getLogger(__name__)

SEARCH_RADIUS = 5


##########################################################################
# block configurations
##########################################################################

@dataclass(frozen=True, eq=False)
class BlockConfiguration:
    """Radical generators of a three-layer module in block form.

    With V = V0 + V1 + V2 adapted to V > JV > J^2V > 0 each generator is

        [[0, 0, 0],
         [L, 0, 0],
         [M, N, 0]]

    Args:
        field (Rationals or PrimeField): ground field
        dims (tuple): (dim V0, dim V1, dim V2)
        generators (tuple): generator names
        L (dict): name -> dim V1 x dim V0 block
        N (dict): name -> dim V2 x dim V1 block
        M (dict): name -> dim V2 x dim V0 block; zero when missing
    """

    field: object
    dims: tuple
    generators: tuple
    L: dict
    N: dict
    M: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        a, b, c = self.dims
        m = dict(self.M)
        for g in self.generators:
            m.setdefault(g, Matrix.zeros(self.field, c, a))
        object.__setattr__(self, 'M', m)
        expected = {'L': (b, a), 'N': (c, b), 'M': (c, a)}
        for name, shape in expected.items():
            blocks = getattr(self, name)
            for g in self.generators:
                if g not in blocks:
                    raise MalformedInputError(f"no {name} block for generator '{g}'")
                if blocks[g].shape != shape:
                    raise MalformedInputError(
                        f"{name} block of '{g}' has shape {blocks[g].shape}, expected {shape}")

    @property
    def n(self):
        return sum(self.dims)

    def assemble(self, g):
        """Full n x n matrix of generator g."""
        a, b, c = self.dims
        z = Matrix.zeros
        f = self.field
        return Matrix.block([[z(f, a, a), z(f, a, b), z(f, a, c)],
                             [self.L[g], z(f, b, b), z(f, b, c)],
                             [self.M[g], self.N[g], z(f, c, c)]])

    def generator_matrices(self):
        return [self.assemble(g) for g in self.generators]

    def noncommuting_pair(self):
        mats = self.generator_matrices()
        for i, j in itertools.combinations(range(len(mats)), 2):
            if mats[i] @ mats[j] != mats[j] @ mats[i]:
                return (self.generators[i], self.generators[j])
        return None

    def is_commutative(self):
        return self.noncommuting_pair() is None

    def is_adapted(self):
        """'True' if the L blocks span V1 and the products N L span V2."""
        a, b, c = self.dims
        ls = [self.L[g] for g in self.generators]
        if Matrix.hstack(ls).rank() != b:
            return False
        products = [self.N[u] @ self.L[v] for u in self.generators for v in self.generators]
        return Matrix.hstack(products).rank() == c

    def to_module_rep(self, algebra):
        """The module given by these generator images.

        Raises:
            MalformedRepError: if the names do not match the algebra generators
        """

        return ModuleRep.from_generator_images(
            algebra, {g: self.assemble(g) for g in self.generators})


def configuration_from_module(rep, generator_names=None):
    """Adapted basis and block form of a module with three radical layers.

    The algebra's own generators are used when they lie in the radical,
    otherwise the radical generators, named g1, g2, ...

    Returns:
        cfg (BlockConfiguration): the blocks
        basis (Matrix): columns V0 | V1 | V2 of the adapted basis

    Raises:
        PreconditionViolationError: if the module does not have exactly three layers
    """

    a = rep.algebra
    layers = radical_layers(rep)
    if len(layers) != 3:
        raise PreconditionViolationError(
            f"block form needs three radical layers, module has {len(layers)}")
    field, n = rep.field, rep.n
    v2 = list(layers[2])
    v1 = extend_basis(field, v2, layers[1], n)
    v0 = extend_basis(field, layers[1], rep.full_space(), n)
    basis = Matrix.from_columns(field, v0 + v1 + v2, n)
    inverse = basis.inverse()
    rad = radical(a)
    if a.generators and all(rad.contains(g) for g in a.generator_vectors):
        names, vectors = a.generators, a.generator_vectors
    else:
        vectors = radical_generators(a)
        names = generator_names or tuple(f"g{i + 1}" for i in range(len(vectors)))
    d0, d1 = len(v0), len(v1)
    blocks = {'L': {}, 'N': {}, 'M': {}}
    for name, vec in zip(names, vectors):
        g = inverse @ rep.act(vec) @ basis
        blocks['L'][name] = g.submatrix(d0, d0 + d1, 0, d0)
        blocks['N'][name] = g.submatrix(d0 + d1, n, d0, d0 + d1)
        blocks['M'][name] = g.submatrix(d0 + d1, n, 0, d0)
    cfg = BlockConfiguration(field, (d0, d1, len(v2)), tuple(names),
                             blocks['L'], blocks['N'], blocks['M'])
    return cfg, basis


##########################################################################
# block-structured End solver
##########################################################################

_UNKNOWNS = ('P', 'U', 'Q', 'W', 'T', 'R')


def _unknown_shapes(dims):
    a, b, c = dims
    return {'P': (a, a), 'U': (b, a), 'Q': (b, b), 'W': (c, a), 'T': (c, b), 'R': (c, c)}


def _equation(field, shapes, rows, terms):
    """One block row of the stacked system; terms maps unknown -> coefficient block."""
    blocks = []
    for name in _UNKNOWNS:
        r, c = shapes[name]
        blocks.append(terms.get(name, Matrix.zeros(field, rows, r * c)))
    return Matrix.hstack(blocks)


def block_parts(cfg, x):
    """Splits an endomorphism [[P,0,0],[U,Q,0],[W,T,R]] into its named blocks."""
    a, b, c = cfg.dims
    return {'P': x.submatrix(0, a, 0, a), 'U': x.submatrix(a, a + b, 0, a),
            'Q': x.submatrix(a, a + b, a, a + b), 'W': x.submatrix(a + b, a + b + c, 0, a),
            'T': x.submatrix(a + b, a + b + c, a, a + b),
            'R': x.submatrix(a + b, a + b + c, a + b, a + b + c)}


def structured_end_solver(cfg):
    """End of the configured module, solved block by block.

    For X = [[P,0,0],[U,Q,0],[W,T,R]] and every generator u, Xu = uX reads

        QL - LP = 0,    RN - NQ = 0,    TL + RM - MP - NU = 0,

    and W is unconstrained.

    Returns:
        result (CommutantResult): the solutions as full n x n matrices
    """

    field = cfg.field
    a, b, c = cfg.dims
    shapes = _unknown_shapes(cfg.dims)
    ia, ib, ic = (Matrix.identity(field, k) for k in (a, b, c))
    equations = []
    for g in cfg.generators:
        L, N, M = cfg.L[g], cfg.N[g], cfg.M[g]
        equations.append(_equation(field, shapes, b * a, {
            'Q': ib.kron(L.T), 'P': -L.kron(ia)}))
        equations.append(_equation(field, shapes, c * b, {
            'R': ic.kron(N.T), 'Q': -N.kron(ib)}))
        equations.append(_equation(field, shapes, c * a, {
            'T': ic.kron(L.T), 'R': ic.kron(M.T), 'P': -M.kron(ia), 'U': -N.kron(ia)}))
    size = sum(r * k for r, k in shapes.values())
    kernel = solve_homogeneous(field, equations, size)
    basis = []
    for v in kernel:
        parts = {}
        offset = 0
        for name in _UNKNOWNS:
            r, k = shapes[name]
            parts[name] = Matrix.from_vec(field, v[offset:offset + r * k], r, k)
            offset += r * k
        z = Matrix.zeros
        basis.append(Matrix.block([[parts['P'], z(field, a, b), z(field, a, c)],
                                   [parts['U'], parts['Q'], z(field, b, c)],
                                   [parts['W'], parts['T'], parts['R']]]))
    logger.debug("structured solver on dims %s: %d parameters", cfg.dims, len(basis))
    return CommutantResult(field, cfg.n, tuple(basis))


##########################################################################
# normal form of a triple of 2x3 maps
##########################################################################

def canonical_triple(field=None):
    field = field or Rationals()
    return (Matrix.from_rows(field, [[1, 0, 0], [0, 1, 0]]),
            Matrix.from_rows(field, [[0, 0, 1], [0, 0, 0]]),
            Matrix.from_rows(field, [[0, 0, 0], [0, 0, 1]]))


def _combine(coeffs, mats):
    result = Matrix.zeros(mats[0].field, mats[0].rows, mats[0].cols)
    for c, m in zip(coeffs, mats):
        if c:
            result = result + m.scale(c)
    return result


@dataclass(frozen=True, eq=False)
class BaseChange:
    """Layer base changes plus a change of generators modulo J^2.

    A map L: V_i -> V_{i+1} of generator j becomes
    T_{i+1} (sum_j mix[k][j] L_j) T_i^-1 for the new generator k.

    Args:
        transforms (tuple): one invertible Matrix per layer
        mix (Matrix): invertible generator mix
    """

    transforms: tuple
    mix: Matrix

    def __post_init__(self):
        for i, t in enumerate(self.transforms):
            if not t.is_invertible():
                raise PreconditionViolationError(f"layer transform {i} is not invertible")
        if not self.mix.is_invertible():
            raise PreconditionViolationError("generator mix is not invertible")

    @classmethod
    def identity(cls, field, sizes, generators):
        return cls(tuple(Matrix.identity(field, s) for s in sizes),
                   Matrix.identity(field, generators))

    def _mixed(self, mats):
        return [_combine(self.mix.row(k), mats) for k in range(self.mix.rows)]

    def apply(self, triple):
        """Transforms maps V0 -> V1, one per generator."""
        t0, t1 = self.transforms[0], self.transforms[1]
        t0_inv = t0.inverse()
        return tuple(t1 @ m @ t0_inv for m in self._mixed(list(triple)))

    def inverse(self):
        return BaseChange(tuple(t.inverse() for t in self.transforms), self.mix.inverse())

    def apply_to_configuration(self, cfg):
        """Transforms every block of a three-layer configuration."""
        if len(self.transforms) != 3:
            raise PreconditionViolationError("configurations need three layer transforms")
        t0, t1, t2 = self.transforms
        t0_inv, t1_inv = t0.inverse(), t1.inverse()
        gens = cfg.generators
        ls = self._mixed([cfg.L[g] for g in gens])
        ns = self._mixed([cfg.N[g] for g in gens])
        ms = self._mixed([cfg.M[g] for g in gens])
        return BlockConfiguration(
            cfg.field, cfg.dims, gens,
            {g: t1 @ m @ t0_inv for g, m in zip(gens, ls)},
            {g: t2 @ m @ t1_inv for g, m in zip(gens, ns)},
            {g: t2 @ m @ t0_inv for g, m in zip(gens, ms)})

    def is_identity(self):
        return all(t == Matrix.identity(t.field, t.rows) for t in self.transforms) and \
            self.mix == Matrix.identity(self.mix.field, self.mix.rows)


@dataclass(frozen=True, eq=False)
class NormalFormResult:
    triple: tuple
    base_change: BaseChange


def _search_order(radius=SEARCH_RADIUS):
    coeffs = [c for c in itertools.product(range(-radius, radius + 1), repeat=3) if any(c)]
    return sorted(coeffs, key=lambda c: (sum(abs(x) for x in c), tuple(-x for x in c)))


def _check_triple(triple):
    if len(triple) != 3:
        raise MalformedInputError(f"expected three maps, got {len(triple)}")
    field = triple[0].field
    for i, m in enumerate(triple):
        if m.shape != (2, 3):
            raise MalformedInputError(f"map {i} has shape {m.shape}, expected (2, 3)",
                                      location=f"triple[{i}]")
        if m.field != field:
            raise MalformedInputError(f"map {i} is over {m.field}, expected {field}",
                                      location=f"triple[{i}]")
    return field


def rank_two_combination(triple):
    """First coefficient vector in the search order whose combination has rank 2.

    The 2x2 minors of the combination are quadratic forms in the
    coefficients, so a box of side 11 contains a non-root whenever one exists.

    Raises:
        DegeneratePencilError: if every combination has rank <= 1
    """

    for coeffs in _search_order():
        if _combine(coeffs, triple).rank() == 2:
            return coeffs
    raise DegeneratePencilError("no linear combination of the three maps has rank 2")


def triple_normal_form(lx, ly, lz):
    """Brings (Lx, Ly, Lz): k^3 -> k^2 to the canonical triple.

    After one combination is normalised to [I | 0], the base changes that
    keep it there are Q together with P^-1 = [[Q^-1, 0], [rho, delta]];
    reaching the canonical triple then reduces to one linear system in
    (rho, alpha_y, alpha_z), so an inconsistent system proves the triple lies
    outside the canonical orbit.

    Returns:
        result (NormalFormResult): canonical triple and the BaseChange realising it

    Raises:
        NotSpanningError: if the images do not span k^2
        DegeneratePencilError: if the maps are dependent or no combination has rank 2
        NotInOrbitError: if the canonical triple is not reachable
    """

    triple = (lx, ly, lz)
    field = _check_triple(triple)
    if Matrix.hstack(list(triple)).rank() != 2:
        raise NotSpanningError("the images of the three maps do not span the 2-dim target")
    if span_dim(field, [m.vec() for m in triple], 6) != 3:
        raise DegeneratePencilError("the three maps are linearly dependent")
    one, zero = field.one, field.zero

    # pick x with rank 2 and keep the other two generators
    coeffs = rank_two_combination(triple)
    k = next(i for i, c in enumerate(coeffs) if c)
    others = [i for i in range(3) if i != k]
    g0 = Matrix.from_rows(field, [list(coeffs)] +
                          [[one if j == i else zero for j in range(3)] for i in others])
    mixed = [_combine(g0.row(r), list(triple)) for r in range(3)]

    # x -> [I | 0]
    lmap = mixed[0]
    _, pivots = lmap.rref()
    kernel = lmap.kernel_basis()[0]
    s1 = Matrix.from_columns(field, [tuple(one if r == p else zero for r in range(3))
                                     for p in pivots] + [kernel], 3)
    t = Matrix.from_columns(field, [lmap.column(p) for p in pivots], 2)
    q1 = t.inverse()
    by, bz = (q1 @ m @ s1 for m in mixed[1:])

    # B' + c rho = alpha I for both remaining generators
    rows, rhs = [], []
    for idx, bmat in enumerate((by, bz)):
        for i in range(2):
            for j in range(2):
                row = [zero] * 4
                row[j] = bmat[i, 2]
                if i == j:
                    row[2 + idx] = -one
                rows.append(row)
                rhs.append(-bmat[i, j])
    sol = solve(Matrix.from_rows(field, rows, 4), rhs)
    if sol is None:
        raise NotInOrbitError(
            "no base change fixing the rank-2 map clears the first two columns of "
            "the other maps; the triple is not equivalent to the canonical one")
    rho1, rho2, alpha_y, alpha_z = sol
    s2 = Matrix.from_rows(field, [[one, zero, zero], [zero, one, zero], [rho1, rho2, one]])
    g2 = Matrix.from_rows(field, [[one, zero, zero], [-alpha_y, one, zero],
                                  [-alpha_z, zero, one]])

    # [c_y c_z] -> identity
    cy = by @ s2 - (q1 @ mixed[0] @ s1 @ s2).scale(alpha_y)
    cz = bz @ s2 - (q1 @ mixed[0] @ s1 @ s2).scale(alpha_z)
    c = Matrix.from_columns(field, [cy.column(2), cz.column(2)], 2)
    if not c.is_invertible():
        raise DegeneratePencilError("the reduced maps are dependent")
    q3 = c.inverse()
    s3 = Matrix.block([[c, Matrix.zeros(field, 2, 1)],
                       [Matrix.zeros(field, 1, 2), Matrix.identity(field, 1)]])

    p_inv = s1 @ s2 @ s3
    change = BaseChange((p_inv.inverse(), q3 @ q1), g2 @ g0)
    result = change.apply(triple)
    if result != canonical_triple(field):
        raise NotInOrbitError("reduction did not reach the canonical triple")
    return NormalFormResult(result, change)


def rank_deficient_count(triple):
    """Number of nonzero coefficient vectors over F_p whose combination has rank <= 1.

    The count is invariant under the base changes of triple_normal_form; it is
    p^2 - 1 for the canonical triple.

    Raises:
        PreconditionViolationError: over the rationals
    """

    field = _check_triple(triple)
    if not isinstance(field, PrimeField):
        raise PreconditionViolationError("rank-deficient counting needs a prime field")
    p = field.p
    ints = [[[int(x) for x in m.row(i)] for i in range(2)] for m in triple]
    count = 0
    for coeffs in itertools.product(range(p), repeat=3):
        if not any(coeffs):
            continue
        r0 = [sum(c * ints[k][0][j] for k, c in enumerate(coeffs)) % p for j in range(3)]
        r1 = [sum(c * ints[k][1][j] for k, c in enumerate(coeffs)) % p for j in range(3)]
        if all((r0[i] * r1[j] - r0[j] * r1[i]) % p == 0
               for i, j in ((0, 1), (0, 2), (1, 2))):
            count += 1
    return count


@dataclass(frozen=True)
class OrbitSurvey:
    """Rows (u, v, w) whose triple (Lx, Ly, [[0,0,0],[u,v,w]]) does or does not reduce."""

    reducible: tuple
    irreducible: tuple


def orbit_survey(field, rows):
    """Runs triple_normal_form on (Lx, Ly, [[0,0,0],[u,v,w]]) for every row."""
    lx, ly, _ = canonical_triple(field)
    reducible, irreducible = [], []
    for row in rows:
        lz = Matrix.from_rows(field, [[0, 0, 0], list(row)])
        try:
            triple_normal_form(lx, ly, lz)
        except (NotInOrbitError, DegeneratePencilError, NotSpanningError) as e:
            logger.debug("row %s does not reduce: %s", row, e)
            irreducible.append(tuple(row))
        else:
            reducible.append(tuple(row))
    return OrbitSurvey(tuple(reducible), tuple(irreducible))


##########################################################################
# fixed configurations
##########################################################################

def _m(field, rows):
    return Matrix.from_rows(field, rows)


def normalized_321_configuration(field=None):
    """Canonical L triple with N_x = (1 0), N_y = (0 1), N_z = 0 and M = 0.

    These blocks do not commute (N_x L_y != N_y L_x), so they describe no module.
    """

    field = field or Rationals()
    lx, ly, lz = canonical_triple(field)
    return BlockConfiguration(field, (3, 2, 1), ('x', 'y', 'z'),
                              {'x': lx, 'y': ly, 'z': lz},
                              {'x': _m(field, [[1, 0]]), 'y': _m(field, [[0, 1]]),
                               'z': _m(field, [[0, 0]])})


def faithful_321_configuration(field=None):
    """Faithful class-16 configuration with filtration (3,2,1)."""
    field = field or Rationals()
    return BlockConfiguration(field, (3, 2, 1), ('x', 'y', 'z'),
                              {'x': _m(field, [[1, 0, 0], [0, 0, 0]]),
                               'y': _m(field, [[0, 0, 0], [0, 1, 0]]),
                               'z': _m(field, [[0, 0, 0], [0, 0, 1]])},
                              {'x': _m(field, [[1, 0]]), 'y': _m(field, [[0, 0]]),
                               'z': _m(field, [[0, 0]])})


def faithful_321_module(field=None):
    field = field or Rationals()
    return faithful_321_configuration(field).to_module_rep(catalog_algebra(16, field))


def appendix_configuration(field=None, n_x=None):
    """Class-16 configuration with filtration (2,3,1) and dim(Im L_y + Im L_z) = 1.

    Args:
        field (Rationals or PrimeField): ground field
        n_x (list): replacement for the N_x block, rows of a 1x3 matrix
    """

    field = field or Rationals()
    nx = _m(field, n_x if n_x is not None else [[0, 0, 1]])
    zero = Matrix.zeros(field, 1, 3)
    return BlockConfiguration(field, (2, 3, 1), ('x', 'y', 'z'),
                              {'x': _m(field, [[0, 0], [1, 0], [0, 1]]),
                               'y': _m(field, [[1, 0], [0, 0], [0, 0]]),
                               'z': _m(field, [[0, 1], [0, 0], [0, 0]])},
                              {'x': nx, 'y': zero, 'z': zero})


def appendix_module(field=None):
    field = field or Rationals()
    return appendix_configuration(field).to_module_rep(catalog_algebra(16, field))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    detail: str = ''


@dataclass(frozen=True)
class AppendixReport:
    """Outcome of appendix_replay.

    Args:
        field (str): field tag
        checks (tuple): IdentityCheck per identity
        dim (int): dimension from the structured solver
        oracle_dim (int): dimension from the generic commutant
    """

    field: str
    checks: tuple
    dim: int
    oracle_dim: int

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def discrepancies(self):
        return [c for c in self.checks if not c.passed]


def _holds_on(parts_list, predicate):
    return all(predicate(p) for p in parts_list)


def appendix_replay(field=None, n_x=None, expected_dim=9):
    """Replays the block computation for class 16 with filtration (2,3,1).

    Every identity is checked on each basis vector of the solution space,
    which is the same as checking it on the whole space.

    Returns:
        report (AppendixReport): one check per identity plus the dimension counts
    """

    field = field or Rationals()
    cfg = appendix_configuration(field, n_x)
    zero = field.zero
    checks = []
    nx_lx = cfg.N['x'] @ cfg.L['x']
    checks.append(IdentityCheck("faithful: N_x L_x != 0", not nx_lx.is_zero(),
                                "" if not nx_lx.is_zero() else
                                "x^2 acts as zero, so the module is not faithful"))
    checks.append(IdentityCheck("blocks commute", cfg.is_commutative(),
                                "" if cfg.is_commutative() else
                                "non-commuting generators %s" % (cfg.noncommuting_pair(),)))
    solved = structured_end_solver(cfg)
    oracle = commutant(cfg.generator_matrices(), field, cfg.n)
    parts = [block_parts(cfg, x) for x in solved.basis]

    def r(p):
        return p['R'][0, 0]

    identities = [
        ("q31 = q32 = 0", lambda p: p['Q'][2, 0] == zero and p['Q'][2, 1] == zero),
        ("q33 = r", lambda p: p['Q'][2, 2] == r(p)),
        ("q11 = p11", lambda p: p['Q'][0, 0] == p['P'][0, 0]),
        ("p12 = p21 = 0", lambda p: p['P'][0, 1] == zero and p['P'][1, 0] == zero),
        ("P = r I2", lambda p: p['P'] == Matrix.identity(field, 2).scale(r(p))),
        ("Q = r I3", lambda p: p['Q'] == Matrix.identity(field, 3).scale(r(p))),
        ("t1 = 0", lambda p: p['T'][0, 0] == zero),
        ("u31 = t2", lambda p: p['U'][2, 0] == p['T'][0, 1]),
        ("u32 = t3", lambda p: p['U'][2, 1] == p['T'][0, 2]),
    ]
    for name, predicate in identities:
        ok = _holds_on(parts, predicate)
        checks.append(IdentityCheck(name, ok, "" if ok else "fails on the solution space"))
    checks.append(IdentityCheck(f"dim = {expected_dim}", solved.dim == expected_dim,
                                f"structured solver gives {solved.dim}"))
    agree = solved.same_space(oracle)
    checks.append(IdentityCheck("generic commutant agrees", agree,
                                f"generic dim {oracle.dim}, structured dim {solved.dim}"))
    if cfg.is_commutative() and not nx_lx.is_zero():
        rep = cfg.to_module_rep(catalog_algebra(16, field))
        checks.append(IdentityCheck("module is faithful", is_faithful(rep)))
    logger.info("appendix replay over %s: dim %d, %d/%d checks pass", field, solved.dim,
                sum(c.passed for c in checks), len(checks))
    return AppendixReport(str(field), tuple(checks), solved.dim, oracle.dim)

