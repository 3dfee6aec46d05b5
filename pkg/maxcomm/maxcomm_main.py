"""maxcomm_main.py
This file is part of maxcomm
Licensed under MIT License

Runs the case analysis: every local algebra of dimension 5 against every
feasible filtration of a faithful 6-dimensional module
"""

# imports
import logging
import time
import zlib
from dataclasses import dataclass, field as dc_field

from maxcomm.catalog import TABLE_1, catalog_algebra, laffey_bound
from maxcomm.centralizer import end_algebra, hom_lift, inclusion_exclusion_bound, \
    is_maximal_commutative, jordan_commutant_dim, jordan_type, verify_witness
from maxcomm.config import Settings
from maxcomm.errors import MalformedInputError, MaxcommError
from maxcomm.fields import Rationals
from maxcomm.io_parsing import configuration_to_json, rep_to_json
from maxcomm.linalg import Matrix
from maxcomm.modules import ModuleRep, as_filtration, feasible_filtrations, filtration, \
    filtration_infeasibility, radical_layers, sample_module, socle
from maxcomm.normal_form import appendix_module, configuration_from_module, faithful_321_module, \
    structured_end_solver

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

logger = logging.getLogger(__name__)

STRATEGIES = ('hom-lift', 'block-solver', 'socle-bound', 'jordan')

LOCAL_REDUCTION = (
    "assumed: a maximal commutative subalgebra of M_6(k) of dimension 5 may be taken local; "
    "only local algebras are checked")


@dataclass(frozen=True)
class CaseSpec:
    """One line of the case analysis.

    Args:
        case_id (str): name used on the command line
        classes (tuple): catalog class ids checked
        targets (tuple): filtration vectors, or None for every feasible one
        strategy (str): one of STRATEGIES
        bound (int): dim End every instance must reach
        fixtures (tuple): names of fixed modules checked besides the samples
        description (str): one-line summary
    """

    case_id: str
    classes: tuple
    targets: tuple
    strategy: str
    bound: int
    fixtures: tuple = ()
    description: str = ''

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise MalformedInputError(f"unknown strategy '{self.strategy}'",
                                      location=self.case_id)
        if self.targets is not None:
            object.__setattr__(self, 'targets',
                               tuple(as_filtration(t) for t in self.targets))

    def targets_for(self, algebra, n):
        if self.targets is None:
            return tuple(feasible_filtrations(algebra, n))
        return self.targets

    def to_dict(self):
        return {'case': self.case_id, 'classes': list(self.classes),
                'targets': None if self.targets is None else [str(t) for t in self.targets],
                'strategy': self.strategy, 'bound': self.bound,
                'fixtures': list(self.fixtures), 'description': self.description}


def case_table():
    """The cases, in the order they are run."""
    return (
        CaseSpec('jordan', (9,), ((2, 1, 1, 1, 1),), 'jordan', 6,
                 description="monogenic: the generator is nilpotent of Jordan type (5,1)"),
        CaseSpec('square-zero', (17,), ((1, 5), (2, 4), (3, 3), (4, 2), (5, 1)),
                 'hom-lift', 6,
                 description="J^2 = 0: Hom(V/JV, JV) lifts, dim End >= ab + 1"),
        CaseSpec('type131-321', (14, 16), ((3, 2, 1),), 'block-solver', 6,
                 ('faithful_321_module',),
                 description="type (1,3,1), filtration (3,2,1): block solver"),
        CaseSpec('type1211', (10, 12), None, 'hom-lift', 6, ('wide_annihilator_1211',),
                 description="type (1,2,1,1): L = J^3V, dim End >= 5 + a - 1"),
        CaseSpec('type131-411', (14, 16), ((4, 1, 1),), 'hom-lift', 8,
                 ('wide_annihilator_411',),
                 description="type (1,3,1), filtration (4,1,1): dim End >= 5 + 4 - 1"),
        CaseSpec('type122-c2', (11,), ((2, 2, 2), (3, 1, 2)), 'hom-lift', 7,
                 description="type (1,2,2), dim J^2V = 2: dim End >= 5 + 4 - 2"),
        CaseSpec('type122-231', (11,), ((2, 3, 1),), 'socle-bound', 7,
                 description="type (1,2,2), filtration (2,3,1): dim Soc >= 2"),
        CaseSpec('class16-231', (16,), ((2, 3, 1),), 'socle-bound', 7, ('appendix_module',),
                 description="class 16, filtration (2,3,1): split by dim(Im L_y + Im L_z)"),
        CaseSpec('type131-222', (14, 16), ((2, 2, 2),), 'hom-lift', 6,
                 description="type (1,3,1), filtration (2,2,2)"),
        CaseSpec('type131-231', (14,), ((2, 3, 1),), 'hom-lift', 6,
                 description="type (1,3,1) other than class 16, filtration (2,3,1)"),
        CaseSpec('type122-c1', (11,), ((3, 2, 1), (4, 1, 1)), 'hom-lift', 6,
                 description="type (1,2,2), dim J^2V = 1 other than (2,3,1)"),
    )


def case_by_id(case_id):
    for case in case_table():
        if case.case_id == case_id:
            return case
    raise MalformedInputError(
        f"unknown case '{case_id}'; known cases: "
        f"{', '.join(c.case_id for c in case_table())}", location='case-id')


def _units(field, n, entries):
    rows = [[0] * n for _ in range(n)]
    for i, j in entries:
        rows[i][j] = 1
    return Matrix.from_rows(field, rows)


def wide_annihilator_1211(field=None):
    """Class-10 module with filtration (3,1,1,1) on which y maps V into J^3V.

    Basis e1..e4, f1, f2: x shifts e1 -> e2 -> e3 -> e4, y sends f1 to e4
    and J kills f2. Both x^3 and y then act as maps V/JV -> J^3V.
    """

    field = field or Rationals()
    return ModuleRep.from_generator_images(catalog_algebra(10, field), {
        'x': _units(field, 6, [(1, 0), (2, 1), (3, 2)]),
        'y': _units(field, 6, [(3, 4)])})


def wide_annihilator_411(field=None):
    """Class-16 module with filtration (4,1,1) on which y and z map V into J^2V.

    Basis e1, e2, e3, f1, f2, f3: x shifts e1 -> e2 -> e3, y sends f1 and z
    sends f2 to e3, and J kills f3.
    """

    field = field or Rationals()
    return ModuleRep.from_generator_images(catalog_algebra(16, field), {
        'x': _units(field, 6, [(1, 0), (2, 1)]),
        'y': _units(field, 6, [(2, 3)]),
        'z': _units(field, 6, [(2, 4)])})


# fixture name -> (builder taking the field, catalog class)
FIXTURES = {
    'faithful_321_module': (faithful_321_module, 16),
    'appendix_module': (appendix_module, 16),
    'wide_annihilator_1211': (wide_annihilator_1211, 10),
    'wide_annihilator_411': (wide_annihilator_411, 16),
}


##########################################################################
# per-instance checks
##########################################################################

@dataclass(frozen=True)
class Claim:
    name: str
    holds: bool
    detail: str = ''

    def to_dict(self):
        return {'name': self.name, 'holds': self.holds, 'detail': self.detail}


@dataclass(frozen=True)
class InstanceRecord:
    """Everything computed for one module.

    Args:
        source (str): 'sampled' or the fixture name
        class_id (object): catalog class id, or 'custom'
        attempt (int): sampler attempt that produced the module, None for fixtures
        filtration (str): filtration vector
        socle_dim (int): dim Soc(V)
        end_dim (int): dim End(V) from the radical generators
        oracle_dim (int): dim End(V) from every basis image
        oracle_same_span (bool): both computations give the same space
        image_dim (int): dim of the image of the algebra
        lift_dim (int): dim of the lifted Hom space
        intersection_dim (int): dim of image meet lifted space
        lower_bound (int): image + lift - intersection
        witness (list): commuting matrix outside the image, as strings
        witness_verified (bool): the witness commutes and lies outside the image
        passed (bool): end > image and end >= the case bound
        claims (tuple): Claim per intermediate inequality
        module (dict): the module as a rep document, None when the algebra has no
            document
        configuration (dict): block configuration, for the block-solver strategy
    """

    source: str
    class_id: object
    attempt: object
    filtration: str
    socle_dim: int
    end_dim: int
    oracle_dim: int
    oracle_same_span: bool
    image_dim: int
    lift_dim: int
    intersection_dim: int
    lower_bound: int
    witness: object
    witness_verified: bool
    passed: bool
    claims: tuple = ()
    module: object = None
    configuration: object = None

    def to_dict(self):
        return {'source': self.source, 'class': self.class_id, 'attempt': self.attempt,
                'filtration': self.filtration, 'socle_dim': self.socle_dim,
                'end_dim': self.end_dim, 'oracle_dim': self.oracle_dim,
                'oracle_same_span': self.oracle_same_span, 'image_dim': self.image_dim,
                'lift_dim': self.lift_dim, 'intersection_dim': self.intersection_dim,
                'lower_bound': self.lower_bound, 'witness': self.witness,
                'witness_verified': self.witness_verified, 'passed': self.passed,
                'claims': [c.to_dict() for c in self.claims], 'module': self.module,
                'configuration': self.configuration}

    @property
    def failed_claims(self):
        return [c for c in self.claims if not c.holds]


@dataclass(frozen=True)
class _Context:
    rep: object
    filtration: object
    socle_dim: int
    end_dim: int
    lift_dim: int
    intersection_dim: int
    structured: object = None


def _at_least(name, value, bound):
    return Claim(name, value >= bound, f"{value} vs {bound}")


def _at_most(name, value, bound):
    return Claim(name, value <= bound, f"{value} vs {bound}")


def _span_of_images(cfg, names):
    missing = [g for g in names if g not in cfg.L]
    if missing:
        return None
    return Matrix.hstack([cfg.L[g] for g in names]).rank()


def _claims_square_zero(ctx):
    a, b = ctx.filtration.dims
    return [Claim("lift dim = ab", ctx.lift_dim == a * b, f"{ctx.lift_dim} vs {a * b}"),
            _at_least("dim End >= ab + 1", ctx.end_dim, a * b + 1)]


def _claims_type131_321(ctx):
    claims = [_at_least("dim End >= 6", ctx.end_dim, 6)]
    if ctx.structured is not None:
        claims.append(Claim("structured solver agrees with the generic commutant",
                            ctx.structured[1], f"structured dim {ctx.structured[0]}"))
    return claims


def _claims_type1211(ctx):
    a = ctx.filtration[0]
    return [_at_most("intersection <= 1", ctx.intersection_dim, 1),
            Claim("lift dim = a >= 2", ctx.lift_dim == a and a >= 2, f"{ctx.lift_dim}, a = {a}"),
            _at_least("dim End >= 5 + a - 1", ctx.end_dim, 5 + a - 1)]


def _claims_type131_411(ctx):
    return [_at_most("intersection <= 1", ctx.intersection_dim, 1),
            _at_least("dim End >= 8", ctx.end_dim, 8)]


def _claims_type122_c2(ctx):
    return [_at_most("intersection <= 2", ctx.intersection_dim, 2),
            _at_least("dim End >= 7", ctx.end_dim, 7)]


def _claims_type122_231(ctx):
    return [_at_least("dim Soc >= 2", ctx.socle_dim, 2),
            _at_least("dim End >= 7", ctx.end_dim, 7)]


def _claims_class16_231(ctx):
    try:
        cfg, _ = configuration_from_module(ctx.rep)
    except MaxcommError as e:
        return [Claim("block form exists", False, str(e))]
    dim_u = _span_of_images(cfg, ('y', 'z'))
    if dim_u is None:
        return [Claim("generators y and z present", False, ", ".join(cfg.generators))]
    nx_lx = cfg.N['x'] @ cfg.L['x'] if 'x' in cfg.N else None
    claims = [Claim("N_x L_x != 0", nx_lx is not None and not nx_lx.is_zero())]
    if dim_u == 2:
        claims += [Claim("dim U = 2", True),
                   _at_least("dim Soc >= 3", ctx.socle_dim, 3),
                   _at_least("dim End >= 7", ctx.end_dim, 7)]
    else:
        claims += [Claim(f"dim U = {dim_u}", dim_u == 1),
                   _at_least("dim End >= 9", ctx.end_dim, 9)]
    return claims


def _claims_jordan(ctx):
    x = ctx.rep.generator_images[0]
    partition = jordan_type(x)
    formula = jordan_commutant_dim(partition)
    return [Claim("Jordan type (5,1)", partition == (5, 1), str(partition)),
            Claim("formula matches commutant", formula == ctx.end_dim,
                  f"formula {formula}, commutant {ctx.end_dim}")]


CLAIMS = {
    'square-zero': _claims_square_zero,
    'type131-321': _claims_type131_321,
    'type1211': _claims_type1211,
    'type131-411': _claims_type131_411,
    'type122-c2': _claims_type122_c2,
    'type122-231': _claims_type122_231,
    'class16-231': _claims_class16_231,
    'jordan': _claims_jordan,
}


def check_instance(case, rep, source, class_id, attempt=None, algebra_document=None):
    """Runs the case pipeline on one module.

    Args:
        case (CaseSpec): the case
        rep (ModuleRep): the module
        source (str): 'sampled' or the fixture name
        class_id (object): catalog class id, or 'custom'
        attempt (int): sampler attempt that produced the module
        algebra_document (dict): algebra document used in the module record;
            catalog classes default to {'class': class_id}

    Returns:
        record (InstanceRecord): computed values, verdict and claims
    """

    layers = radical_layers(rep)
    soc = socle(rep)
    end = end_algebra(rep)
    images = list(rep.images)
    maximality = is_maximal_commutative(images, rep.field, rep.n)
    oracle = maximality.commutant
    closure = list(maximality.closure)
    lift_space = soc if case.strategy == 'socle-bound' else layers[-1]
    lifted = hom_lift(rep, lift_space)
    counts = inclusion_exclusion_bound(closure, lifted, rep.field, rep.n)
    witness_ok = verify_witness(images, maximality.witness, closure)
    structured = configuration = None
    if case.strategy == 'block-solver':
        cfg, basis = configuration_from_module(rep)
        solved = structured_end_solver(cfg)
        # solutions live in the adapted basis; conjugate back before comparing
        inverse = basis.inverse()
        back = [basis @ x @ inverse for x in solved.basis]
        same = len(back) == end.dim and all(end.contains(x) for x in back)
        structured = (solved.dim, same)
        configuration = configuration_to_json(cfg)
    ctx = _Context(rep, filtration(rep), len(soc), end.dim, counts.lift_dim,
                   counts.intersection_dim, structured)
    claims = [Claim("generators and full basis give the same End", oracle.same_space(end)),
              Claim("lift bound holds", end.dim >= counts.bound,
                    f"{end.dim} vs {counts.bound}"),
              Claim("witness verified", witness_ok)]
    if case.case_id in CLAIMS:
        claims.extend(CLAIMS[case.case_id](ctx))
    if source == 'appendix_module':
        claims.append(Claim("dim End = 9", end.dim == 9, str(end.dim)))
    passed = end.dim > len(closure) and end.dim >= case.bound
    if algebra_document is None and isinstance(class_id, int):
        algebra_document = {'class': class_id}
    module = rep_to_json(rep, algebra_document) if algebra_document is not None else None
    return InstanceRecord(
        source=source, class_id=class_id, attempt=attempt, filtration=str(ctx.filtration),
        socle_dim=len(soc), end_dim=end.dim, oracle_dim=oracle.dim,
        oracle_same_span=oracle.same_space(end), image_dim=len(closure),
        lift_dim=counts.lift_dim, intersection_dim=counts.intersection_dim,
        lower_bound=counts.bound,
        witness=maximality.witness.to_strings() if maximality.witness is not None else None,
        witness_verified=witness_ok, passed=passed, claims=tuple(claims),
        module=module, configuration=configuration)


##########################################################################
# cases
##########################################################################

@dataclass(frozen=True)
class Skipped:
    class_id: object
    target: str
    reason: str

    def to_dict(self):
        return {'class': self.class_id, 'target': self.target, 'reason': self.reason}


@dataclass(frozen=True)
class CaseReport:
    """Outcome of verify_case.

    Args:
        case (CaseSpec): the case
        seed (int): base seed
        field (str): field tag
        instances (tuple): InstanceRecord per checked module
        skipped (tuple): Skipped per target without a module
        timing (float): wall-clock seconds, None unless requested
    """

    case: CaseSpec
    seed: int
    field: str
    instances: tuple
    skipped: tuple = ()
    timing: object = None

    @property
    def verdict(self):
        """'inconclusive' without instances, 'fail' if an instance misses the
        bound, 'discrepancy' if an intermediate claim fails, else 'pass'."""
        if not self.instances:
            return 'inconclusive'
        if not all(r.passed for r in self.instances):
            return 'fail'
        if self.discrepancies:
            return 'discrepancy'
        return 'pass'

    @property
    def computed_bound(self):
        """Smallest dim End over the checked instances."""
        return min((r.end_dim for r in self.instances), default=None)

    @property
    def discrepancies(self):
        found = []
        for r in self.instances:
            for c in r.failed_claims:
                found.append({'source': r.source, 'class': r.class_id,
                              'filtration': r.filtration, 'claim': c.name,
                              'detail': c.detail})
        return found

    def to_dict(self, timing=False):
        d = {'case': self.case.to_dict(), 'seed': self.seed, 'field': self.field,
             'verdict': self.verdict, 'instances_checked': len(self.instances),
             'computed_bound': self.computed_bound,
             'instances': [r.to_dict() for r in self.instances],
             'skipped': [s.to_dict() for s in self.skipped],
             'discrepancies': self.discrepancies}
        if timing and self.timing is not None:
            d['timing_seconds'] = round(self.timing, 3)
        return d


def instance_seed(seed, case_id, class_id, target):
    """Seed words of one (case, class, target) stream."""
    key = f"{case_id}:{class_id}:{target}".encode('utf-8')
    return (int(seed), zlib.crc32(key))


def _algebras(case, field, algebra):
    if algebra is not None:
        return [('custom', algebra)]
    return [(class_id, catalog_algebra(class_id, field)) for class_id in case.classes]


def verify_case(case, seed=None, instances=None, attempts=None, field=None, algebra=None,
                settings=None, verbose=False, algebra_document=None):
    """Samples modules for every (class, target) of a case and checks them.

    Instance i of a target continues the attempt sequence after instance i-1,
    all instances sharing one attempt budget; a target whose first instance
    is not found is reported as skipped.

    Args:
        case (CaseSpec or str): the case or its id
        seed (int): base seed
        instances (int): sampled modules per (class, target)
        attempts (int): attempt budget per (class, target)
        field (Rationals or PrimeField): ground field, Q by default
        algebra (AlgebraData): replaces the catalog algebras; fixtures are then skipped
        algebra_document (dict): document algebra was read from, copied into the
            module records
        settings (Settings): defaults for the unset arguments
        verbose (bool): log progress at INFO instead of DEBUG

    Returns:
        report (CaseReport): the case report
    """

    if isinstance(case, str):
        case = case_by_id(case)
    settings = (settings or Settings()).with_overrides(seed=seed, instances=instances,
                                                        attempts=attempts)
    field = field or Rationals()
    level = logging.INFO if verbose else logging.DEBUG
    started = time.perf_counter()
    records, skipped = [], []
    for class_id, a in _algebras(case, field, algebra):
        for target in case.targets_for(a, settings.n):
            reasons = filtration_infeasibility(a, settings.n, target)
            if reasons:
                logger.log(level, "%s: class %s %s infeasible", case.case_id, class_id, target)
                skipped.append(Skipped(class_id, str(target), "infeasible: " + "; ".join(reasons)))
                continue
            words = instance_seed(settings.seed, case.case_id, class_id, target)
            start = 0
            for i in range(settings.instances):
                outcome = sample_module(a, settings.n, target, seed=words,
                                        attempts=settings.attempts, start=start)
                if not outcome.found:
                    if i == 0:
                        skipped.append(Skipped(class_id, str(target), outcome.reason))
                    else:
                        logger.log(level, "%s: class %s %s: budget exhausted after %d instances",
                                   case.case_id, class_id, target, i)
                    break
                records.append(check_instance(case, outcome.rep, 'sampled', class_id,
                                              outcome.attempt, algebra_document))
                start = outcome.attempt + 1
            logger.log(level, "%s: class %s %s checked", case.case_id, class_id, target)
    if algebra is None:
        for name in case.fixtures:
            builder, class_id = FIXTURES[name]
            records.append(check_instance(case, builder(field), name, class_id))
    elapsed = time.perf_counter() - started
    report = CaseReport(case, settings.seed, field.tag, tuple(records), tuple(skipped), elapsed)
    logger.log(level, "%s: %s with %d instances", case.case_id, report.verdict, len(records))
    return report


def feasible_coverage(field, n=6):
    """Feasible filtrations of every catalog class and the cases covering them."""
    cases = case_table()
    coverage = []
    for row in TABLE_1:
        for class_id in row.classes:
            try:
                a = catalog_algebra(class_id, field)
            except KeyError:
                continue
            for target in feasible_filtrations(a, n):
                covering = [c.case_id for c in cases if class_id in c.classes and
                            target in c.targets_for(a, n)]
                coverage.append({'class': class_id, 'filtration': str(target),
                                 'cases': covering})
    return coverage


@dataclass(frozen=True)
class Summary:
    all_pass: bool
    rows: tuple
    flagged: tuple
    laffey: dict
    local_reduction: str
    coverage: tuple
    uncovered: tuple

    def to_dict(self):
        return {'all_pass': self.all_pass, 'cases': list(self.rows),
                'flagged': list(self.flagged), 'laffey': self.laffey,
                'local_reduction': self.local_reduction, 'coverage': list(self.coverage),
                'uncovered': list(self.uncovered)}


def _discrepancy_line(case_id, d):
    return f"{case_id}: {d['claim']} fails for {d['source']} class {d['class']} " \
           f"{d['filtration']} [{d['detail']}]"


def summarize(reports, field, n=6):
    """Overall verdict of a set of case reports.

    A case that is not 'pass' is flagged, and so is every failed claim and
    every skipped filtration.

    Args:
        reports (list): CaseReport per case
        field (Rationals or PrimeField): field of the coverage table
        n (int): module dimension

    Returns:
        summary (Summary): rows, flagged lines, Laffey line and coverage
    """

    rows = tuple({'case': r.case.case_id, 'classes': list(r.case.classes),
                  'strategy': r.case.strategy, 'expected_bound': r.case.bound,
                  'computed_bound': r.computed_bound, 'instances': len(r.instances),
                  'skipped': len(r.skipped), 'verdict': r.verdict} for r in reports)
    flagged = tuple(f"{r.case.case_id}: {r.verdict}" for r in reports if r.verdict != 'pass')
    flagged += tuple(_discrepancy_line(r.case.case_id, d)
                     for r in reports for d in r.discrepancies)
    flagged += tuple(f"{r.case.case_id}: class {s.class_id} {s.target} skipped ({s.reason})"
                     for r in reports for s in r.skipped)
    coverage = tuple(feasible_coverage(field, n))
    uncovered = tuple(f"class {c['class']} {c['filtration']}" for c in coverage
                      if not c['cases'])
    return Summary(all_pass=all(r.verdict == 'pass' for r in reports) and not uncovered,
                   rows=rows, flagged=flagged, laffey=laffey_bound(n).to_dict(),
                   local_reduction=LOCAL_REDUCTION, coverage=coverage, uncovered=uncovered)


def verify_all(seed=None, instances=None, attempts=None, field=None, settings=None,
               verbose=False):
    """Runs every case.

    Returns:
        reports (list): CaseReport per case, in case_table order
        summary (Summary): overall verdict, flagged cases and the Laffey line
    """

    settings = (settings or Settings()).with_overrides(seed=seed, instances=instances,
                                                        attempts=attempts)
    field = field or Rationals()
    reports = [verify_case(case, field=field, settings=settings, verbose=verbose)
               for case in case_table()]
    summary = summarize(reports, field, settings.n)
    if verbose:
        logger.info("verify-all: %s", 'pass' if summary.all_pass else 'not all cases pass')
    return reports, summary
