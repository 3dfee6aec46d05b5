import json
from fractions import Fraction

import pytest

from maxcomm.catalog import catalog_algebra
from maxcomm.check_input import check_document, rectangular_check, schema_check, \
    square_size_check, triple_shape_check
from maxcomm.errors import MalformedInputError
from maxcomm.fields import PrimeField, Rationals
from maxcomm.io_parsing import commutant_to_json, configuration_to_json, document_field, \
    load_document, loads, parse_algebra, parse_matrices, parse_rep, parse_triple, rep_to_json
from maxcomm.centralizer import commutant
from maxcomm.modules import ModuleRep, filtration
from maxcomm.normal_form import appendix_configuration, appendix_module


def test_valid_matrices_document():
    valid, log, path = schema_check({'matrices': [[[1, "1/2"], [0, "-3"]]]}, 'matrices')
    assert valid and log == '' and path is None


def test_schema_violations_are_located():
    valid, log, path = schema_check({'matrices': "oops"}, 'matrices')
    assert not valid
    assert path == '$.matrices'
    assert log.startswith('$.matrices')


def test_bad_scalar():
    valid, _, path = schema_check({'matrices': [[[1, "x"]]]}, 'matrices')
    assert not valid
    assert path == '$.matrices[0][0][1]'


def test_unknown_keys_are_rejected():
    assert not schema_check({'matrices': [], 'extra': 1}, 'matrices')[0]


def test_rep_needs_images_or_generators():
    assert not schema_check({'algebra': {'class': 16}}, 'rep')[0]
    assert schema_check({'algebra': {'class': 9}, 'generators': {'x': [[0]]}}, 'rep')[0]


def test_shape_checks():
    assert rectangular_check([[1, 2], [3]], '$.m')[0] is False
    valid, log = square_size_check([[[1, 0], [0, 1]], [[1, 2, 3]]])
    assert not valid
    assert '$.matrices[1]' in log
    assert square_size_check([[[1]]], n=2)[0] is False
    assert triple_shape_check([[[1, 0, 0], [0, 1, 0]]] * 2 + [[[1, 0], [0, 1]]])[0] is False


def test_check_document_raises_with_location():
    with pytest.raises(MalformedInputError) as e:
        check_document({'matrices': [[[1, 0], [0, 1]], [[1]]]}, 'matrices')
    assert e.value.location == '$.matrices[1]'


def test_json_syntax_errors_have_line_and_column():
    with pytest.raises(MalformedInputError) as e:
        loads('{"matrices": [\n  [1,]\n]}', 'm.json')
    assert e.value.location.startswith('m.json:2:')


def test_load_document(tmp_path):
    path = tmp_path / 'm.json'
    path.write_text(json.dumps({'field': 'fp:7', 'matrices': [[[1, 2], [3, 4]]]}))
    mats, field, n = parse_matrices(load_document(str(path), 'matrices'))
    assert field == PrimeField(7)
    assert n == 2
    assert mats[0][1, 1] == 4
    with pytest.raises(MalformedInputError):
        load_document(str(tmp_path / 'missing.json'), 'matrices')


def test_rational_entries():
    mats, field, _ = parse_matrices({'matrices': [[["1/2", "-3"], [0, 1]]]})
    assert field == Rationals()
    assert mats[0][0, 0] == Fraction(1, 2)


def test_empty_matrix_list_needs_size():
    assert parse_matrices({'matrices': [], 'n': 3})[2] == 3
    with pytest.raises(MalformedInputError):
        parse_matrices({'matrices': []})


def test_document_field_overrides_default():
    assert document_field({'field': 'Q'}, PrimeField(5)) == Rationals()
    assert document_field({}, PrimeField(5)) == PrimeField(5)
    assert document_field({}) == Rationals()


def test_parse_algebra_forms():
    assert parse_algebra({'class': 16}).labels == ('1', 'x', 'y', 'z', 'x^2')
    a = parse_algebra({'generators': ['t'], 'basis': ['1', 't', 't^2'],
                       'rules': {'t^3': '0'}})
    assert a.dim == 3
    with pytest.raises(MalformedInputError) as e:
        parse_algebra({'class': 99})
    assert e.value.location == '$.class'


def test_parse_rep_from_generators():
    rep = parse_rep({'algebra': {'class': 9},
                     'generators': {'x': [[0, 0], [1, 0]]}})
    assert rep.n == 2
    assert filtration(rep).dims == (1, 1)


def test_parse_triple():
    triple = parse_triple({'field': 'fp:101',
                           'triple': [[[1, 0, 0], [0, 1, 0]], [[0, 0, 1], [0, 0, 0]],
                                      [[0, 0, 0], [0, 0, 1]]]})
    assert len(triple) == 3
    assert triple[0].field == PrimeField(101)


def test_rep_document_round_trip():
    rep = appendix_module()
    document = rep_to_json(rep, {'class': 16})
    check_document(document, 'rep')
    again = parse_rep(document)
    assert again.images == rep.images


def test_writers_use_rational_strings():
    cfg = appendix_configuration()
    document = configuration_to_json(cfg)
    assert document['dims'] == [2, 3, 1]
    assert document['N']['x'] == [['0', '0', '1']]
    result = commutant([ModuleRep.regular(catalog_algebra(17)).images[1]])
    out = commutant_to_json(result)
    assert out['dim'] == len(out['basis']) == result.dim
    assert out['field'] == 'Q'
