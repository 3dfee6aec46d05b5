import pytest

from maxcomm.errors import MalformedRepError, NotLocalError, PreconditionViolationError
from maxcomm.linalg import Matrix
from maxcomm.modules import FiltrationVector, ModuleRep, feasible_filtrations, filtration, \
    filtration_infeasibility, free_module, is_faithful, quotient_module, radical_layers, \
    sample_module, socle, submodule_span, validate
from maxcomm.normal_form import appendix_module, faithful_321_module


def fv(*dims):
    return FiltrationVector(dims)


def test_regular_module_of_monogenic_algebra(algebra):
    rep = ModuleRep.regular(algebra(9))
    assert validate(rep)
    assert is_faithful(rep)
    assert filtration(rep) == fv(1, 1, 1, 1, 1)
    assert len(socle(rep)) == 1


def test_fixed_modules():
    rep = faithful_321_module()
    assert validate(rep) and is_faithful(rep)
    assert filtration(rep) == fv(3, 2, 1)
    assert len(socle(rep)) == 2
    rep = appendix_module()
    assert validate(rep) and is_faithful(rep)
    assert filtration(rep) == fv(2, 3, 1)
    assert len(socle(rep)) == 3


def test_radical_layers_shrink():
    layers = radical_layers(faithful_321_module())
    assert [len(layer) for layer in layers] == [6, 3, 1]


def test_filtration_vector_rendering():
    f = fv(2, 3, 1)
    assert str(f) == "(2,3,1)"
    assert f.n == 6 and len(f) == 3 and f[1] == 3


def test_generator_images_must_match(algebra):
    a = algebra(16)
    with pytest.raises(MalformedRepError):
        ModuleRep.from_generator_images(a, {'x': Matrix.identity(a.field, 2)})


def test_wrong_image_count(algebra):
    a = algebra(9)
    with pytest.raises(MalformedRepError):
        ModuleRep.from_images(a, [Matrix.identity(a.field, 2)])


def test_invalid_representation_is_rejected(algebra):
    a = algebra(9)
    rep = ModuleRep.from_generator_images(a, {'x': Matrix.identity(a.field, 2)})
    assert not validate(rep)


def test_non_local_algebra_has_no_layers(split_algebra):
    rep = ModuleRep.regular(split_algebra())
    with pytest.raises(NotLocalError):
        filtration(rep)


def test_quotient_by_radical_cube(algebra):
    a = algebra(9)
    rep = ModuleRep.regular(a)
    e = [a.basis_vector(i) for i in range(5)]
    quotient = quotient_module(rep, [e[3], e[4]])
    assert quotient.n == 3
    assert validate(quotient)
    assert filtration(quotient) == fv(1, 1, 1)
    assert not is_faithful(quotient)


def test_quotient_by_non_submodule_raises(algebra):
    a = algebra(9)
    rep = ModuleRep.regular(a)
    with pytest.raises(PreconditionViolationError):
        quotient_module(rep, [a.basis_vector(1)])


def test_submodule_span(algebra):
    a = algebra(9)
    rep = ModuleRep.regular(a)
    assert len(submodule_span(rep, [a.basis_vector(2)])) == 3


def test_free_module(algebra):
    free = free_module(algebra(17), 2)
    assert free.n == 10
    assert filtration(free) == fv(2, 8)


@pytest.mark.parametrize('class_id, expected', [
    (16, [(2, 2, 2), (2, 3, 1), (3, 2, 1), (4, 1, 1)]),
    (14, [(2, 2, 2), (2, 3, 1), (3, 2, 1), (4, 1, 1)]),
    (11, [(2, 2, 2), (2, 3, 1), (3, 1, 2), (3, 2, 1), (4, 1, 1)]),
    (10, [(2, 2, 1, 1), (3, 1, 1, 1)]),
    (17, [(2, 4), (3, 3), (4, 2), (5, 1)]),
    (9, [(2, 1, 1, 1, 1)]),
])
def test_feasible_filtrations(algebra, class_id, expected):
    assert [f.dims for f in feasible_filtrations(algebra(class_id), 6)] == expected


def test_infeasibility_reasons(algebra):
    assert filtration_infeasibility(algebra(16), 6, (2, 3, 1)) == []
    assert filtration_infeasibility(algebra(16), 6, (3, 1, 2))
    assert any("generated by 1" in r for r in filtration_infeasibility(algebra(17), 6, (1, 5)))
    assert any("sum" in r for r in filtration_infeasibility(algebra(17), 6, (2, 2)))


def test_sampler_finds_module_with_target(algebra):
    a = algebra(17)
    outcome = sample_module(a, 6, fv(3, 3), seed=0, attempts=20)
    assert outcome.found
    assert validate(outcome.rep)
    assert is_faithful(outcome.rep)
    assert filtration(outcome.rep) == fv(3, 3)


def test_sampler_is_deterministic(algebra):
    a = algebra(17)
    first = sample_module(a, 6, fv(2, 4), seed=(3, 4), attempts=20)
    second = sample_module(a, 6, fv(2, 4), seed=(3, 4), attempts=20)
    assert first.found
    assert first.attempt == second.attempt
    assert first.rep.images == second.rep.images


def test_sampler_reports_infeasible_target(algebra):
    outcome = sample_module(algebra(17), 6, fv(1, 5), seed=0, attempts=5)
    assert not outcome.found
    assert outcome.reason.startswith("infeasible")


def test_sampler_needs_local_algebra(split_algebra):
    with pytest.raises(NotLocalError):
        sample_module(split_algebra(), 4, attempts=1)


@pytest.mark.parametrize('class_id, target', [(17, (4, 2)), (17, (3, 3)), (17, (2, 4))])
def test_sampled_modules_pass_validation(algebra, F101, class_id, target):
    for field in (None, F101):
        outcome = sample_module(algebra(class_id, field), 6, fv(*target), seed=5, attempts=300)
        assert outcome.found
        assert validate(outcome.rep)
        assert filtration(outcome.rep) == fv(*target)
