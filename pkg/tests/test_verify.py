import collections
import dataclasses
import zlib

import pytest

from maxcomm.catalog import catalog_algebra
from maxcomm.config import Settings
from maxcomm.errors import MalformedInputError
from maxcomm.fields import Rationals
from maxcomm.io_parsing import parse_rep
from maxcomm.linalg import Matrix
from maxcomm.maxcomm_main import STRATEGIES, CaseReport, CaseSpec, case_by_id, \
    check_instance, feasible_coverage, instance_seed, case_table, summarize, verify_all, \
    verify_case, wide_annihilator_1211, wide_annihilator_411
from maxcomm.modules import ModuleRep, filtration
from maxcomm.normal_form import appendix_module, faithful_321_module


def test_cases_are_well_formed():
    cases = case_table()
    ids = [c.case_id for c in cases]
    assert len(ids) == 11
    assert len(set(ids)) == len(ids)
    assert ids[0] == 'jordan'
    for case in cases:
        assert case.strategy in STRATEGIES
        assert case.bound >= 6


def test_case_lookup():
    assert case_by_id('class16-231').strategy == 'socle-bound'
    assert case_by_id('type1211').targets is None
    with pytest.raises(MalformedInputError):
        case_by_id('type999')


def test_unknown_strategy():
    with pytest.raises(MalformedInputError):
        CaseSpec('x', (16,), ((2, 3, 1),), 'guess', 6)


def test_targets_of_every_feasible_filtration():
    case = case_by_id('type1211')
    targets = case.targets_for(catalog_algebra(10), 6)
    assert [t.dims for t in targets] == [(2, 2, 1, 1), (3, 1, 1, 1)]


def test_check_instance_on_faithful_fixture():
    record = check_instance(case_by_id('class16-231'), appendix_module(), 'appendix_module', 16)
    assert record.end_dim == record.oracle_dim == 9
    assert record.oracle_same_span
    assert record.socle_dim == 3
    assert record.image_dim == 5
    assert record.lift_dim == 6
    assert record.filtration == "(2,3,1)"
    assert record.witness_verified
    assert record.passed
    assert record.failed_claims == []
    assert any(c.name == "dim U = 1" for c in record.claims)


def test_check_instance_with_block_solver():
    record = check_instance(case_by_id('type131-321'), faithful_321_module(),
                            'faithful_321_module', 16)
    assert record.end_dim == 9
    assert record.failed_claims == []
    assert any(c.name.startswith("structured solver") and c.holds for c in record.claims)


def test_square_zero_radical_case():
    report = verify_case('square-zero', seed=0, instances=1, attempts=20)
    assert report.verdict == 'pass'
    assert [s.target for s in report.skipped] == ['(1,5)']
    assert report.skipped[0].reason.startswith('infeasible')
    assert sorted(r.filtration for r in report.instances) == \
        ['(2,4)', '(3,3)', '(4,2)', '(5,1)']
    assert report.discrepancies == []


def test_reports_are_deterministic():
    first = verify_case('square-zero', seed=3, instances=1, attempts=20)
    second = verify_case('square-zero', seed=3, instances=1, attempts=20)
    assert first.to_dict() == second.to_dict()
    assert 'timing_seconds' not in first.to_dict()
    assert 'timing_seconds' in first.to_dict(timing=True)


def test_monogenic_case():
    report = verify_case(case_by_id('jordan'), instances=1, attempts=50)
    assert report.verdict == 'pass'
    assert report.computed_bound == 8
    assert report.discrepancies == []


def test_fixtures_run_with_catalog_algebras_only():
    report = verify_case('type131-321', instances=0)
    assert [r.source for r in report.instances] == ['faithful_321_module']
    assert report.verdict == 'pass'
    custom = verify_case('type131-321', instances=0, algebra=catalog_algebra(16))
    assert custom.instances == ()
    assert custom.verdict == 'inconclusive'


def test_settings_supply_defaults():
    report = verify_case('type131-321', settings=Settings(seed=9, instances=0))
    assert report.seed == 9


def test_empty_report_is_inconclusive():
    report = CaseReport(case_by_id('jordan'), 0, 'Q', ())
    assert report.verdict == 'inconclusive'
    assert report.computed_bound is None


def test_instance_seed():
    key = zlib.crc32(b"jordan:9:(2,1,1,1,1)")
    assert instance_seed(5, 'jordan', 9, '(2,1,1,1,1)') == (5, key)
    assert instance_seed(5, 'jordan', 9, '(2,1,1,1,1)') != instance_seed(6, 'jordan', 9,
                                                                           '(2,1,1,1,1)')


def test_every_feasible_filtration_is_covered():
    coverage = feasible_coverage(Rationals())
    assert coverage
    assert [c for c in coverage if not c['cases']] == []
    assert {'class': 17, 'filtration': '(3,3)', 'cases': ['square-zero']} in coverage


def test_summary_flags_inconclusive_cases():
    report = CaseReport(case_by_id('jordan'), 0, 'Q', ())
    summary = summarize([report], Rationals())
    assert not summary.all_pass
    assert "jordan: inconclusive" in summary.flagged
    assert summary.laffey['implied_dim'] == 5
    assert summary.uncovered == ()
    assert summary.to_dict()['cases'][0]['verdict'] == 'inconclusive'


def module_from_units(class_id, n, generators):
    field = Rationals()
    images = {}
    for g, entries in generators.items():
        rows = [[0] * n for _ in range(n)]
        for i, j in entries:
            rows[i][j] = 1
        images[g] = Matrix.from_rows(field, rows)
    return ModuleRep.from_generator_images(catalog_algebra(class_id, field), images)


def test_wide_annihilator_breaks_type_1211_intersection():
    record = check_instance(case_by_id('type1211'), wide_annihilator_1211(),
                            'wide_annihilator_1211', 10)
    assert record.filtration == "(3,1,1,1)"
    assert record.intersection_dim == 2
    assert record.lift_dim == 3
    assert record.end_dim == 9
    assert record.socle_dim == 2
    assert record.lower_bound == 6
    assert record.passed
    assert [(c.name, c.detail) for c in record.failed_claims] == \
        [("intersection <= 1", "2 vs 1")]


def test_wide_annihilator_breaks_type_131_411_intersection():
    record = check_instance(case_by_id('type131-411'), wide_annihilator_411(),
                            'wide_annihilator_411', 16)
    assert record.filtration == "(4,1,1)"
    assert record.intersection_dim == 3
    assert record.lift_dim == 4
    assert record.end_dim == 10
    assert record.passed
    assert [c.name for c in record.failed_claims] == ["intersection <= 1"]


@pytest.mark.parametrize('case_id, fixture', [('type1211', 'wide_annihilator_1211'),
                                              ('type131-411', 'wide_annihilator_411')])
def test_failed_claim_makes_a_discrepancy(case_id, fixture):
    report = verify_case(case_id, instances=0)
    assert [r.source for r in report.instances] == [fixture]
    assert report.verdict == 'discrepancy'
    assert [d['claim'] for d in report.discrepancies] == ["intersection <= 1"]
    summary = summarize([report], Rationals())
    assert not summary.all_pass
    assert f"{case_id}: discrepancy" in summary.flagged
    assert any(line.startswith(f"{case_id}: intersection <= 1 fails for {fixture}")
               for line in summary.flagged)


def test_failing_instance_outranks_discrepancy():
    passing = check_instance(case_by_id('type1211'), wide_annihilator_1211(),
                             'wide_annihilator_1211', 10)
    failing = dataclasses.replace(passing, passed=False)
    report = CaseReport(case_by_id('type1211'), 0, 'Q', (passing, failing))
    assert report.verdict == 'fail'
    assert CaseReport(case_by_id('type1211'), 0, 'Q', (passing,)).verdict == 'discrepancy'


def test_type_1211_where_the_annihilator_is_the_cube():
    # A + k for k[x,y]/(xy, y^2 - x^3): filtration (2,2,1,1)
    rep = module_from_units(12, 6, {'x': [(1, 0), (3, 1), (4, 3)], 'y': [(2, 0), (4, 2)]})
    record = check_instance(case_by_id('type1211'), rep, 'sampled', 12)
    assert record.filtration == "(2,2,1,1)"
    assert record.intersection_dim == 1
    assert record.lift_dim == 2
    assert record.end_dim == 8
    assert record.lower_bound == 6
    assert record.passed
    assert record.failed_claims == []


def test_type_122_with_two_dimensional_bottom_layer():
    # A + k for k[x,y]/(xy, x^3, y^3): filtration (2,2,2)
    rep = module_from_units(11, 6, {'x': [(1, 0), (3, 1)], 'y': [(2, 0), (4, 2)]})
    record = check_instance(case_by_id('type122-c2'), rep, 'sampled', 11)
    assert record.filtration == "(2,2,2)"
    assert record.intersection_dim == 2
    assert record.lift_dim == 4
    assert record.end_dim == 9
    assert record.lower_bound == 7
    assert record.failed_claims == []
    assert record.passed


def test_class_16_with_two_dimensional_u():
    # V0 = e0, e1; V1 = e2, e3, e4; V2 = e5; y and z land in different socle lines
    rep = module_from_units(16, 6, {'x': [(3, 0), (4, 1), (5, 3)], 'y': [(2, 0)],
                                    'z': [(4, 1)]})
    record = check_instance(case_by_id('class16-231'), rep, 'sampled', 16)
    assert record.filtration == "(2,3,1)"
    assert record.socle_dim == 3
    assert record.lift_dim == 6
    assert record.intersection_dim == 3
    assert record.end_dim >= 8
    assert record.passed
    assert record.failed_claims == []
    assert any(c.name == "dim U = 2" and c.holds for c in record.claims)


@pytest.mark.parametrize('case_id, class_id', [
    ('type1211', 12), ('type122-c2', 11), ('type122-231', 11), ('type122-c1', 11),
    ('type131-222', 14), ('type131-231', 14)])
def test_sampled_instances_meet_their_claims(case_id, class_id):
    report = verify_case(case_id, seed=1, instances=1, attempts=300,
                         algebra=catalog_algebra(class_id))
    assert report.verdict in ('pass', 'inconclusive')
    for r in report.instances:
        assert r.class_id == 'custom'
        assert r.passed
        assert r.failed_claims == []
        assert r.end_dim >= report.case.bound
        assert r.end_dim >= r.lower_bound
    if report.instances:
        assert report.computed_bound >= report.case.bound


def test_square_zero_with_full_instance_count():
    report = verify_case('square-zero', seed=0, instances=25, attempts=2000)
    assert report.verdict == 'pass'
    counts = collections.Counter(r.filtration for r in report.instances)
    assert counts == {'(2,4)': 25, '(3,3)': 25, '(4,2)': 25, '(5,1)': 25}
    assert report.computed_bound >= 6


def test_verify_all_without_sampling():
    reports, summary = verify_all(instances=0)
    verdicts = {r.case.case_id: r.verdict for r in reports}
    assert len(reports) == 11
    assert verdicts['type131-321'] == 'pass'
    assert verdicts['class16-231'] == 'pass'
    assert verdicts['type1211'] == verdicts['type131-411'] == 'discrepancy'
    assert verdicts['jordan'] == 'inconclusive'
    assert not summary.all_pass
    assert summary.uncovered == ()
    assert "type1211: discrepancy" in summary.flagged
    assert "type131-321: pass" not in summary.flagged
    assert [row['case'] for row in summary.to_dict()['cases']] == list(verdicts)


def test_instance_records_carry_their_module():
    report = verify_case('type131-321', instances=0)
    document = report.to_dict()['instances'][0]
    assert document['module']['algebra'] == {'class': 16}
    rep = parse_rep(document['module'])
    assert rep.images == faithful_321_module().images
    assert document['configuration']['dims'] == [3, 2, 1]


def test_sampled_module_documents_rebuild_the_module():
    report = verify_case('square-zero', seed=0, instances=1, attempts=20)
    for record in report.instances:
        rep = parse_rep(record.module)
        assert str(filtration(rep)) == record.filtration
        assert record.configuration is None
