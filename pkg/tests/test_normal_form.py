import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from maxcomm.catalog import catalog_algebra
from maxcomm.centralizer import commutant
from maxcomm.errors import DegeneratePencilError, MalformedInputError, NotInOrbitError, \
    NotSpanningError, PreconditionViolationError
from maxcomm.fields import PrimeField, Rationals
from maxcomm.linalg import Matrix
from maxcomm.modules import ModuleRep
from maxcomm.normal_form import BaseChange, BlockConfiguration, appendix_configuration, \
    appendix_module, appendix_replay, canonical_triple, configuration_from_module, \
    normalized_321_configuration, faithful_321_configuration, orbit_survey, rank_deficient_count, \
    rank_two_combination, structured_end_solver, triple_normal_form


def random_invertible(field, n, rng):
    while True:
        m = Matrix.from_rows(field, rng.integers(0, 7, size=(n, n)).tolist())
        if m.is_invertible():
            return m


def random_base_change(field, sizes, rng):
    return BaseChange(tuple(random_invertible(field, s, rng) for s in sizes),
                      random_invertible(field, 3, rng))


def bottom_row(field, row):
    return Matrix.from_rows(field, [[0, 0, 0], list(row)])


def test_canonical_triple_is_fixed(Q):
    result = triple_normal_form(*canonical_triple(Q))
    assert result.triple == canonical_triple(Q)
    assert result.base_change.is_identity()


@pytest.mark.parametrize('field', [Rationals(), PrimeField(101)])
def test_normal_form_undoes_random_base_changes(field):
    rng = np.random.default_rng(2024)
    canonical = canonical_triple(field)
    for _ in range(50):
        moved = random_base_change(field, (3, 2), rng).apply(canonical)
        result = triple_normal_form(*moved)
        assert result.triple == canonical
        assert result.base_change.apply(moved) == canonical


def test_configuration_base_change_round_trip(Q):
    rng = np.random.default_rng(7)
    cfg = faithful_321_configuration(Q)
    change = random_base_change(Q, (3, 2, 1), rng)
    back = change.inverse().apply_to_configuration(change.apply_to_configuration(cfg))
    for g in cfg.generators:
        assert back.L[g] == cfg.L[g]
        assert back.N[g] == cfg.N[g]
        assert back.M[g] == cfg.M[g]


def test_base_change_must_be_invertible(Q):
    with pytest.raises(PreconditionViolationError):
        BaseChange((Matrix.zeros(Q, 3, 3), Matrix.identity(Q, 2)), Matrix.identity(Q, 3))


def test_triple_must_span_the_target(Q):
    triple = [Matrix.from_rows(Q, [[1 if j == i else 0 for j in range(3)], [0, 0, 0]])
              for i in range(3)]
    with pytest.raises(NotSpanningError):
        triple_normal_form(*triple)


def test_dependent_triple_is_degenerate(Q):
    lx, ly, _ = canonical_triple(Q)
    with pytest.raises(DegeneratePencilError):
        triple_normal_form(lx, ly, lx + ly)


def test_triple_shapes_are_checked(Q):
    lx, ly, _ = canonical_triple(Q)
    with pytest.raises(MalformedInputError):
        triple_normal_form(lx, ly, Matrix.identity(Q, 2))


def test_rank_two_combination(Q):
    assert rank_two_combination(canonical_triple(Q)) == (1, 0, 0)
    lx, ly, lz = canonical_triple(Q)
    assert rank_two_combination((ly, lx, lz)) == (0, 1, 0)


def test_orbit_survey(Q):
    survey = orbit_survey(Q, [(0, 0, 5), (1, 0, 0), (0, 1, 0), (1, 1, 1), (0, 0, 0)])
    assert survey.reducible == ((0, 0, 5),)
    assert survey.irreducible == ((1, 0, 0), (0, 1, 0), (1, 1, 1), (0, 0, 0))


def test_orbit_survey_over_prime_field(F101):
    rows = [r for r in itertools.product((-1, 0, 1), repeat=3) if any(r)]
    survey = orbit_survey(F101, rows)
    assert set(survey.reducible) == {(0, 0, 1), (0, 0, -1)}
    assert len(survey.irreducible) == len(rows) - 2


def test_row_outside_orbit(Q):
    lx, ly, _ = canonical_triple(Q)
    with pytest.raises(NotInOrbitError):
        triple_normal_form(lx, ly, bottom_row(Q, (1, 0, 0)))


def test_rank_deficient_count():
    f7 = PrimeField(7)
    lx, ly, lz = canonical_triple(f7)
    assert rank_deficient_count((lx, ly, lz)) == 48
    assert rank_deficient_count((lx, ly, bottom_row(f7, (1, 0, 0)))) == 12


def test_rank_deficient_count_is_invariant():
    f7 = PrimeField(7)
    rng = np.random.default_rng(3)
    moved = random_base_change(f7, (3, 2), rng).apply(canonical_triple(f7))
    assert rank_deficient_count(moved) == 48


def test_rank_deficient_count_needs_prime_field(Q):
    with pytest.raises(PreconditionViolationError):
        rank_deficient_count(canonical_triple(Q))


def test_configuration_shapes_are_checked(Q):
    with pytest.raises(MalformedInputError):
        BlockConfiguration(Q, (2, 3, 1), ('x',), {'x': Matrix.zeros(Q, 2, 2)},
                           {'x': Matrix.zeros(Q, 1, 3)})


def test_structured_solver_on_appendix_configuration(Q):
    cfg = appendix_configuration(Q)
    assert cfg.is_commutative() and cfg.is_adapted()
    solved = structured_end_solver(cfg)
    assert solved.dim == 9
    assert solved.same_space(commutant(cfg.generator_matrices(), Q, cfg.n))


def test_noncommuting_configuration(Q):
    cfg = normalized_321_configuration(Q)
    assert not cfg.is_commutative()
    assert cfg.noncommuting_pair() == ('x', 'y')
    assert cfg.is_adapted()
    assert structured_end_solver(cfg).dim == 5


def test_fixture_configuration(Q):
    cfg = faithful_321_configuration(Q)
    assert cfg.is_commutative()
    assert structured_end_solver(cfg).dim == 9


def test_zero_configuration_leaves_blocks_free(Q):
    z = Matrix.zeros(Q, 1, 1)
    cfg = BlockConfiguration(Q, (1, 1, 1), ('x',), {'x': z}, {'x': z})
    assert not cfg.is_adapted()
    assert structured_end_solver(cfg).dim == 6


def block_strategy(rows, cols):
    return st.lists(st.lists(st.integers(-2, 2), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


@st.composite
def unimodular(draw, n):
    """Lower times upper unitriangular, so the determinant is 1."""
    q = Rationals()
    lower = [[1 if i == j else (draw(st.integers(-2, 2)) if j < i else 0) for j in range(n)]
             for i in range(n)]
    upper = [[1 if i == j else (draw(st.integers(-2, 2)) if j > i else 0) for j in range(n)]
             for i in range(n)]
    return Matrix.from_rows(q, lower) @ Matrix.from_rows(q, upper)


@st.composite
def adapted_configurations(draw, dims=(2, 3, 1)):
    a, b, c = dims
    q = Rationals()
    rows = {name: {g: draw(block_strategy(*shape)) for g in ('x', 'y', 'z')}
            for name, shape in (('L', (b, a)), ('N', (c, b)), ('M', (c, a)))}
    # the L blocks span V1; N_x L_x != 0 spans V2
    rows['L']['x'] = [[1, 0], [0, 1], [0, 0]]
    rows['L']['z'][2][0] = 1
    rows['N']['x'][0][0] = 1
    blocks = {name: {g: Matrix.from_rows(q, r) for g, r in per_gen.items()}
              for name, per_gen in rows.items()}
    cfg = BlockConfiguration(q, dims, ('x', 'y', 'z'), blocks['L'], blocks['N'], blocks['M'])
    change = BaseChange(tuple(draw(unimodular(s)) for s in dims), draw(unimodular(3)))
    return change.apply_to_configuration(cfg)


@settings(max_examples=200, deadline=None)
@given(adapted_configurations())
def test_structured_solver_matches_commutant(cfg):
    assert cfg.is_adapted()
    solved = structured_end_solver(cfg)
    assert solved.same_space(commutant(cfg.generator_matrices(), cfg.field, cfg.n))


@pytest.mark.parametrize('field', [Rationals(), PrimeField(101)])
def test_appendix_replay_passes(field):
    report = appendix_replay(field)
    assert report.passed, report.discrepancies
    assert report.dim == report.oracle_dim == 9
    assert report.checks[-1].name == "module is faithful"


def test_appendix_replay_without_nx(Q):
    report = appendix_replay(Q, n_x=[[0, 0, 0]])
    assert not report.passed
    assert report.checks[0].name == "faithful: N_x L_x != 0"
    assert not report.checks[0].passed
    assert all(c.name != "module is faithful" for c in report.checks)


def test_configuration_from_module(Q):
    rep = appendix_module(Q)
    cfg, basis = configuration_from_module(rep)
    assert cfg.dims == (2, 3, 1)
    assert cfg.generators == ('x', 'y', 'z')
    assert cfg.is_commutative()
    assert basis.is_invertible()
    assert structured_end_solver(cfg).dim == 9


def test_configuration_round_trips_to_module(Q):
    cfg, _ = configuration_from_module(appendix_module(Q))
    rep = cfg.to_module_rep(catalog_algebra(16, Q))
    assert commutant(list(rep.images)).dim == 9


def test_configuration_needs_three_layers():
    with pytest.raises(PreconditionViolationError):
        configuration_from_module(ModuleRep.regular(catalog_algebra(9)))
