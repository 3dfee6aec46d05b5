"""check_input.py
This file is part of maxcomm
Licensed under MIT License

Checks input documents before they are parsed, accumulating every problem
"""

# imports
from jsonschema import Draft202012Validator

from maxcomm.errors import MalformedInputError
from maxcomm.schemas import SCHEMAS

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

_VALIDATORS = {kind: Draft202012Validator(schema) for kind, schema in SCHEMAS.items()}


def schema_check(document, kind):
    """Checks a document against the schema of its kind.

    Args:
        document (object): decoded JSON
        kind (str): one of 'matrices', 'algebra', 'rep', 'triple'

    Returns:
        valid (bool): 'True' if the document matches the schema
        log (str): one line per violation, prefixed with its JSON path
        path (str): JSON path of the first violation, or None
    """

    errors = sorted(_VALIDATORS[kind].iter_errors(document),
                    key=lambda e: [str(p) for p in e.absolute_path])
    log = ''
    for e in errors:
        log += f"{e.json_path}: {e.message}\n"
    return not errors, log, (errors[0].json_path if errors else None)


def _shape(matrix):
    return len(matrix), len(matrix[0]) if matrix else 0


def rectangular_check(matrix, where):
    """Checks that every row of a nested list has the same length.

    Returns:
        valid (bool): 'True' if the matrix is rectangular
        log (str): the first ragged row, if any
    """

    cols = len(matrix[0])
    for i, row in enumerate(matrix):
        if len(row) != cols:
            return False, f"{where}[{i}]: row has {len(row)} entries, expected {cols}\n"
    return True, ''


def square_size_check(matrices, n=None, where='$.matrices'):
    """Checks that all matrices are n x n for one n.

    Returns:
        valid (bool): 'True' if all matrices are square of the same size
        log (str): one line per offending matrix
    """

    valid = True
    log = ''
    for i, m in enumerate(matrices):
        flag, templog = rectangular_check(m, f"{where}[{i}]")
        if not flag:
            valid = False
            log += templog
            continue
        rows, cols = _shape(m)
        if n is None:
            n = rows
        if (rows, cols) != (n, n):
            valid = False
            log += f"{where}[{i}]: matrix is {rows}x{cols}, expected {n}x{n}\n"
    return valid, log


def triple_shape_check(triple):
    """Checks that the triple consists of three 2x3 matrices."""
    valid = True
    log = ''
    for i, m in enumerate(triple):
        flag, templog = rectangular_check(m, f"$.triple[{i}]")
        if not flag:
            valid = False
            log += templog
        elif _shape(m) != (2, 3):
            valid = False
            log += f"$.triple[{i}]: matrix is {_shape(m)[0]}x{_shape(m)[1]}, expected 2x3\n"
    return valid, log


def rep_shape_check(document):
    """Checks that the image matrices of a rep document share one square size."""
    n = document.get('n')
    if 'images' in document:
        return square_size_check(document['images'], n, '$.images')
    names = list(document['generators'])
    return square_size_check([document['generators'][g] for g in names], n,
                             '$.generators')


_SHAPE_CHECKS = {
    'matrices': lambda d: square_size_check(d['matrices'], d.get('n')),
    'algebra': lambda d: (True, ''),
    'rep': rep_shape_check,
    'triple': lambda d: triple_shape_check(d['triple']),
}


def check_document(document, kind):
    """Checks a decoded document, first against its schema, then for shapes.

    Args:
        document (object): decoded JSON
        kind (str): document kind

    Raises:
        MalformedInputError: with the accumulated log, located at the first
            offending JSON path
    """

    valid, log, path = schema_check(document, kind)
    if not valid:
        raise MalformedInputError(f"{kind} document does not match its schema:\n{log}",
                                  location=path)
    valid, log = _SHAPE_CHECKS[kind](document)
    if not valid:
        raise MalformedInputError(f"{kind} document has inconsistent shapes:\n{log}",
                                  location=log.split(':', 1)[0])
