import pytest

from maxcomm.catalog import catalog_algebra
from maxcomm.centralizer import algebra_closure, commutant, end_algebra, \
    first_noncommuting_pair, hom_lift, inclusion_exclusion_bound, is_maximal_commutative, \
    jordan_commutant_dim, jordan_type, verify_witness
from maxcomm.errors import MalformedInputError, NotCommutativeError, \
    PreconditionViolationError
from maxcomm.linalg import Matrix
from maxcomm.modules import ModuleRep, radical_layers, socle
from maxcomm.normal_form import appendix_module, faithful_321_module


def unit(field, n, i, j):
    rows = [[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)]
    return Matrix.from_rows(field, rows)


def jordan_5_1(field):
    rows = [[1 if i == j + 1 and i < 5 else 0 for j in range(6)] for i in range(6)]
    return Matrix.from_rows(field, rows)


def test_commutant_of_identity(Q):
    assert commutant([Matrix.identity(Q, 6)]).dim == 36


def test_commutant_of_regular_nilpotent(Q, F101, shift):
    assert commutant([shift(6)]).dim == 6
    assert commutant([shift(6, F101)]).dim == 6


def test_commutant_basis_commutes(shift):
    n = shift(4)
    result = commutant([n])
    assert all(x @ n == n @ x for x in result.basis)
    assert result.contains(n @ n)


def test_empty_commutant_needs_size(Q):
    assert commutant([], Q, 3).dim == 9
    with pytest.raises(MalformedInputError):
        commutant([])


def test_mixed_sizes_are_rejected(Q):
    with pytest.raises(MalformedInputError):
        commutant([Matrix.identity(Q, 2), Matrix.identity(Q, 3)])


def test_mixed_fields_are_rejected(Q, F101):
    with pytest.raises(MalformedInputError):
        commutant([Matrix.identity(Q, 2), Matrix.identity(F101, 2)])


def test_end_algebra_from_generators_or_basis():
    rep = faithful_321_module()
    small = end_algebra(rep)
    assert small.dim == 9
    assert small.same_space(end_algebra(rep, full_basis=True))


def test_algebra_closure_of_nilpotent(shift):
    closure = algebra_closure([shift(5)])
    assert len(closure) == 5
    assert closure[0] == Matrix.identity(closure[0].field, 5)


def test_regular_nilpotent_is_maximal(shift):
    result = is_maximal_commutative([shift(6)])
    assert result.maximal
    assert result.algebra_dim == result.commutant_dim == 6
    assert result.witness is None


def test_diagonal_algebra_is_maximal(Q):
    result = is_maximal_commutative([unit(Q, 3, i, i) for i in range(3)])
    assert result.maximal
    assert result.algebra_dim == 3


def test_diagonal_algebra_in_m6(Q):
    result = is_maximal_commutative([unit(Q, 6, i, i) for i in range(6)])
    assert result.maximal
    assert result.algebra_dim == 6


def test_single_idempotent_is_not_maximal(Q):
    mats = [unit(Q, 3, 0, 0)]
    result = is_maximal_commutative(mats)
    assert not result.maximal
    assert (result.algebra_dim, result.commutant_dim) == (2, 5)
    assert verify_witness(mats, result.witness, algebra_closure(mats))


def test_faithful_module_image_is_not_maximal():
    mats = list(appendix_module().images)
    result = is_maximal_commutative(mats)
    assert not result.maximal
    assert (result.algebra_dim, result.commutant_dim) == (5, 9)
    assert verify_witness(mats, result.witness, algebra_closure(mats))


def test_noncommuting_input(Q):
    mats = [unit(Q, 2, 0, 1), unit(Q, 2, 1, 0)]
    assert first_noncommuting_pair(mats) == (0, 1)
    with pytest.raises(NotCommutativeError) as e:
        is_maximal_commutative(mats)
    assert e.value.pair == (0, 1)


def test_verify_witness_rejects_members(shift):
    n = shift(3)
    assert not verify_witness([n], n @ n, algebra_closure([n]))
    assert not verify_witness([n], None, [])


def test_hom_lift_on_square_zero_radical():
    rep = ModuleRep.regular(catalog_algebra(17))
    jv = radical_layers(rep)[1]
    lifted = hom_lift(rep, jv)
    assert len(lifted) == 4
    assert all(x @ m == m @ x for x in lifted for m in rep.images)


def test_hom_lift_requires_annihilated_subspace():
    rep = ModuleRep.regular(catalog_algebra(9))
    with pytest.raises(PreconditionViolationError):
        hom_lift(rep, radical_layers(rep)[1])


def test_socle_lift_and_inclusion_exclusion():
    rep = appendix_module()
    lifted = hom_lift(rep, socle(rep))
    assert len(lifted) == 6
    sizes = inclusion_exclusion_bound(list(rep.images), lifted)
    assert sizes.image_dim == 5
    assert sizes.lift_dim == 6
    assert sizes.intersection_dim >= 2
    assert sizes.bound <= end_algebra(rep).dim


def test_jordan_type(Q, shift):
    assert jordan_type(shift(6)) == (6,)
    assert jordan_type(jordan_5_1(Q)) == (5, 1)
    assert jordan_type(Matrix.zeros(Q, 3, 3)) == (1, 1, 1)
    with pytest.raises(PreconditionViolationError):
        jordan_type(Matrix.identity(Q, 2))


@pytest.mark.parametrize('partition, dim', [((6,), 6), ((5, 1), 8), ((3, 3), 12),
                                            ((1, 1, 1), 9)])
def test_jordan_commutant_dim(partition, dim):
    assert jordan_commutant_dim(partition) == dim


def test_commutant_matches_jordan_formula(Q):
    assert commutant([jordan_5_1(Q)]).dim == jordan_commutant_dim((5, 1)) == 8
