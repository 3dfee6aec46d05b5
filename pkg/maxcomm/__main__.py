"""__main__.py
This file is part of maxcomm
Licensed under MIT License

Runs maxcomm
"""

# imports
import argparse
import logging
import sys

from maxcomm import make_report
from maxcomm.algebra import hilbert_samuel, radical
from maxcomm.catalog import laffey_bound
from maxcomm.centralizer import commutant, is_maximal_commutative
from maxcomm.config import settings_from_env
from maxcomm.errors import IncompatibleFieldError, InconsistentPresentationError, \
    MalformedInputError, MalformedRepError, MaxcommError
from maxcomm.fields import PrimeField, Rationals, parse_field
from maxcomm.io_parsing import commutant_to_json, load_document, matrix_to_json, \
    parse_algebra, parse_matrices, parse_rep, parse_triple, vector_to_json
from maxcomm.maxcomm_main import case_by_id, verify_all, verify_case
from maxcomm.modules import filtration, socle, validate
from maxcomm.normal_form import appendix_replay, triple_normal_form

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

logger = logging.getLogger('maxcomm')

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_MALFORMED = 2


def parse_args(args):
    """Parses command line arguments
    """

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default='Q',
                        help="""Ground field: 'Q' or 'fp:<prime>' ('fp' alone uses 101). Default is Q""")
    common.add_argument("--format", choices=('text', 'json'), default='text',
                        help="""Output format. Default is text""")
    common.add_argument("--out", metavar='PATH', help="""Write the output here instead of stdout""")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="""Log progress to stderr; repeat for debug output""")

    parser = argparse.ArgumentParser(prog='maxcomm',
                                     description="""Exact centralizers, radical filtrations, socles and endomorphism algebras, and a verifier for the dimension bound of maximal commutative subalgebras of M_6(k)""")
    sub = parser.add_subparsers(dest='command', required=True)

    for name, kind, helptext in (
            ('centralizer', 'matrices-file', "commutant of a set of matrices"),
            ('maximal', 'matrices-file', "decide maximal commutativity of the generated algebra"),
            ('radical', 'algebra-file', "Jacobson radical of an algebra"),
            ('hs-type', 'algebra-file', "Hilbert-Samuel type of a local algebra"),
            ('filtration', 'rep-file', "radical filtration vector of a module"),
            ('socle', 'rep-file', "socle of a module"),
            ('normal-form', 'triple-file', "normal form of three 2x3 maps")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("path", metavar=kind)

    p = sub.add_parser('appendix-replay', parents=[common],
                       help="replay the class-16 block computation for filtration (2,3,1)")
    p.add_argument("--nx-zero", action="store_true",
                   help="""Replace N_x by zero; the faithfulness check then fails""")

    for name in ('verify-case', 'verify-all'):
        p = sub.add_parser(name, parents=[common],
                           help="verify one case" if name == 'verify-case' else "verify every case")
        if name == 'verify-case':
            p.add_argument("case_id", metavar='case-id')
            p.add_argument("--algebra", metavar='algebra-file',
                           help="""Check this algebra instead of the catalog representatives""")
        p.add_argument("--seed", type=int, help="""Base seed. Default is $MAXCOMM_SEED or 0""")
        p.add_argument("--instances", type=int,
                       help="""Sampled modules per class and filtration. Default is 25""")
        p.add_argument("--attempts", type=int,
                       help="""Sampler attempts per class and filtration. Default is 10000""")
        p.add_argument("--timing", action="store_true",
                       help="""Add wall-clock timings to the report""")

    p = sub.add_parser('laffey', parents=[common], help="evaluate (2n)^(2/3) - 1")
    p.add_argument("n", type=int)

    return parser.parse_args(args)


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def _field(args, settings):
    if args.field.strip().lower() == 'fp':
        field = PrimeField(settings.prime)
    else:
        field = parse_field(args.field)
    if not isinstance(field, Rationals):
        logger.warning("working over %s; the results are meant for characteristic 0", field)
    return field


def _emit(args, document, text):
    output = make_report.to_json(document) if args.format == 'json' else text
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(output)
    else:
        sys.stdout.write(output)


def _matrices_text(mats):
    return '\n'.join(make_report.render_matrix_text(matrix_to_json(m)) for m in mats)


def run_centralizer(args, field, settings):
    mats, field, n = parse_matrices(load_document(args.path, 'matrices'), field)
    result = commutant(mats, field, n)
    _emit(args, commutant_to_json(result), f"dim = {result.dim}\n\n" + _matrices_text(result.basis))
    return EXIT_OK


def run_maximal(args, field, settings):
    mats, field, n = parse_matrices(load_document(args.path, 'matrices'), field)
    result = is_maximal_commutative(mats, field, n)
    document = {'maximal': result.maximal, 'algebra_dim': result.algebra_dim,
                'commutant_dim': result.commutant_dim,
                'witness': matrix_to_json(result.witness) if result.witness is not None else None}
    if result.maximal:
        text = f"maximal, dim {result.algebra_dim}\n"
    else:
        text = f"not maximal: algebra dim {result.algebra_dim}, " \
               f"commutant dim {result.commutant_dim}\nwitness:\n"
        text += make_report.render_matrix_text(matrix_to_json(result.witness))
    _emit(args, document, text)
    return EXIT_OK if result.maximal else EXIT_NEGATIVE


def run_radical(args, field, settings):
    a = parse_algebra(load_document(args.path, 'algebra'), field)
    j = radical(a)
    elements = [a.combination(v) for v in j.vectors]
    document = {'dim': j.dim, 'basis': [vector_to_json(v) for v in j.vectors],
                'elements': elements, 'labels': list(a.labels)}
    _emit(args, document, f"dim J = {j.dim}\n" + ''.join(f"  {e}\n" for e in elements))
    return EXIT_OK


def run_hs_type(args, field, settings):
    a = parse_algebra(load_document(args.path, 'algebra'), field)
    hs = hilbert_samuel(a)
    _emit(args, {'hs_type': list(hs)}, f"({','.join(map(str, hs))})\n")
    return EXIT_OK


def _load_rep(args, field):
    rep = parse_rep(load_document(args.path, 'rep'), field)
    if not validate(rep):
        raise MalformedRepError("images do not define a representation of the algebra",
                                location=args.path)
    return rep


def run_filtration(args, field, settings):
    f = filtration(_load_rep(args, field))
    _emit(args, {'filtration': list(f.dims)}, f"{f}\n")
    return EXIT_OK


def run_socle(args, field, settings):
    basis = socle(_load_rep(args, field))
    document = {'dim': len(basis), 'basis': [vector_to_json(v) for v in basis]}
    _emit(args, document, f"dim Soc = {len(basis)}\n" +
          ''.join(f"  ({', '.join(vector_to_json(v))})\n" for v in basis))
    return EXIT_OK


def run_normal_form(args, field, settings):
    triple = parse_triple(load_document(args.path, 'triple'), field)
    result = triple_normal_form(*triple)
    change = result.base_change
    document = {'triple': [matrix_to_json(m) for m in result.triple],
                'P': matrix_to_json(change.transforms[0]),
                'Q': matrix_to_json(change.transforms[1]),
                'mix': matrix_to_json(change.mix)}
    text = "canonical triple:\n" + _matrices_text(result.triple)
    text += "\nP:\n" + _matrices_text([change.transforms[0]])
    text += "Q:\n" + _matrices_text([change.transforms[1]])
    text += "generator mix:\n" + _matrices_text([change.mix])
    _emit(args, document, text)
    return EXIT_OK


def run_appendix_replay(args, field, settings):
    report = appendix_replay(field, n_x=[[0, 0, 0]] if args.nx_zero else None)
    _emit(args, make_report.appendix_document(report), make_report.render_appendix_text(report))
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _seed(args, settings):
    return args.seed if args.seed is not None else settings.seed


def run_verify_case(args, field, settings):
    case = case_by_id(args.case_id)
    document = load_document(args.algebra, 'algebra') if args.algebra else None
    algebra = parse_algebra(document, field) if document is not None else None
    report = verify_case(case, seed=_seed(args, settings), instances=args.instances,
                         attempts=args.attempts, field=field, algebra=algebra,
                         settings=settings, verbose=args.verbose > 0,
                         algebra_document=document)
    _emit(args, make_report.verify_document([report], timing=args.timing),
          make_report.render_verify_text([report]))
    return EXIT_OK if report.verdict == 'pass' else EXIT_NEGATIVE


def run_verify_all(args, field, settings):
    reports, summary = verify_all(seed=_seed(args, settings), instances=args.instances,
                                  attempts=args.attempts, field=field, settings=settings,
                                  verbose=args.verbose > 0)
    _emit(args, make_report.verify_document(reports, summary, timing=args.timing),
          make_report.render_verify_text(reports, summary))
    return EXIT_OK if summary.all_pass else EXIT_NEGATIVE


def run_laffey(args, field, settings):
    bound = laffey_bound(args.n)
    _emit(args, bound.to_dict(), make_report.render_laffey_text(bound))
    return EXIT_OK


COMMANDS = {
    'centralizer': run_centralizer,
    'maximal': run_maximal,
    'radical': run_radical,
    'hs-type': run_hs_type,
    'filtration': run_filtration,
    'socle': run_socle,
    'normal-form': run_normal_form,
    'appendix-replay': run_appendix_replay,
    'verify-case': run_verify_case,
    'verify-all': run_verify_all,
    'laffey': run_laffey,
}


def main(args=sys.argv[1:]):
    """Runs one subcommand.

    Returns:
        status (int): 0 on success or pass, 1 on a negative verdict or failed
            precondition, 2 on malformed input
    """

    args = parse_args(args)
    _configure_logging(args.verbose)
    try:
        settings = settings_from_env()
        field = _field(args, settings)
        return COMMANDS[args.command](args, field, settings)
    except (MalformedInputError, IncompatibleFieldError, InconsistentPresentationError) as e:
        sys.stderr.write(f"maxcomm: malformed input: {e}\n")
        return EXIT_MALFORMED
    except MaxcommError as e:
        sys.stderr.write(f"maxcomm: {type(e).__name__}: {e}\n")
        return EXIT_NEGATIVE


if __name__ == '__main__':
    sys.exit(main(sys.argv[1:]))
