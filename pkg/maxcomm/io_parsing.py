"""io_parsing.py
This file is part of maxcomm
Licensed under MIT License

Reading input documents into library objects and writing results back out
"""

# imports
import json
import logging

from maxcomm.algebra import Presentation, algebra_from_presentation
from maxcomm.catalog import catalog_algebra
from maxcomm.check_input import check_document
from maxcomm.errors import MalformedInputError
from maxcomm.fields import Rationals, parse_field
from maxcomm.linalg import Matrix
from maxcomm.modules import ModuleRep

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

logger = logging.getLogger(__name__)


def loads(text, source='<input>'):
    """Decodes JSON text.

    Raises:
        MalformedInputError: located at the line and column of a syntax error
    """

    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(e.msg, location=f"{source}:{e.lineno}:{e.colno}") from None


def load_document(path, kind):
    """Reads, decodes and checks the document at path.

    Args:
        path (str): file path, '-' is not supported
        kind (str): 'matrices', 'algebra', 'rep' or 'triple'

    Returns:
        document (dict): the checked document
    """

    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise MalformedInputError(f"cannot read file: {e.strerror}", location=str(path)) from None
    document = loads(text, str(path))
    check_document(document, kind)
    return document


def document_field(document, default=None):
    """Field named by the document, else default, else Q."""
    if 'field' in document:
        field = parse_field(document['field'])
        if default is not None and field != default:
            logger.info("document field %s overrides %s", field, default)
        return field
    return default or Rationals()


def matrix_from_json(field, rows, where='$'):
    try:
        return Matrix.from_rows(field, rows)
    except MalformedInputError as e:
        raise MalformedInputError(str(e), location=where) from None


def parse_matrices(document, field=None):
    """Matrices document -> (matrices, field, n)."""
    field = document_field(document, field)
    mats = [matrix_from_json(field, m, f"$.matrices[{i}]")
            for i, m in enumerate(document['matrices'])]
    n = document.get('n', mats[0].rows if mats else None)
    if n is None:
        raise MalformedInputError("an empty matrix list needs 'n'", location='$.n')
    return mats, field, n


def parse_algebra(document, field=None):
    """Algebra document (presentation or catalog reference) -> AlgebraData."""
    field = document_field(document, field)
    if 'class' in document:
        try:
            return catalog_algebra(document['class'], field)
        except KeyError as e:
            raise MalformedInputError(e.args[0], location='$.class') from None
    p = Presentation(tuple(document['generators']), tuple(document['basis']),
                     dict(document.get('rules', {})))
    return algebra_from_presentation(p, field)


def parse_rep(document, field=None):
    """Rep document -> ModuleRep, from basis images or generator images."""
    field = document_field(document, field)
    algebra = parse_algebra(document['algebra'], field)
    if 'images' in document:
        images = [matrix_from_json(field, m, f"$.images[{i}]")
                  for i, m in enumerate(document['images'])]
        return ModuleRep.from_images(algebra, images)
    gens = {g: matrix_from_json(field, m, f"$.generators.{g}")
            for g, m in document['generators'].items()}
    return ModuleRep.from_generator_images(algebra, gens)


def parse_triple(document, field=None):
    field = document_field(document, field)
    return tuple(matrix_from_json(field, m, f"$.triple[{i}]")
                 for i, m in enumerate(document['triple']))


##########################################################################
# writing
##########################################################################

def matrix_to_json(m):
    return m.to_strings()


def vector_to_json(v):
    return [str(x) for x in v]


def commutant_to_json(result):
    return {'n': result.n, 'field': result.field.tag, 'dim': result.dim,
            'basis': [matrix_to_json(m) for m in result.basis]}


def configuration_to_json(cfg):
    """Blocks of a BlockConfiguration as rational-string arrays."""
    return {'field': cfg.field.tag, 'dims': list(cfg.dims),
            'generators': list(cfg.generators),
            'L': {g: matrix_to_json(cfg.L[g]) for g in cfg.generators},
            'N': {g: matrix_to_json(cfg.N[g]) for g in cfg.generators},
            'M': {g: matrix_to_json(cfg.M[g]) for g in cfg.generators}}


def rep_to_json(rep, algebra_document):
    """Serializes a module in the rep document format.

    Args:
        rep (ModuleRep): the module
        algebra_document (dict): how to rebuild the algebra, e.g. {'class': 16}
    """

    return {'field': rep.field.tag, 'n': rep.n, 'algebra': algebra_document,
            'images': [matrix_to_json(m) for m in rep.images]}
