"""make_report.py
This file is part of maxcomm
Licensed under MIT License

Renders results as JSON documents or plain-text tables
"""

# imports
import json

from maxcomm.catalog import expected_type

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"


def to_json(document):
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, indent=2, sort_keys=True) + '\n'


def table(headers, rows):
    """Left-aligned plain-text table.

    Args:
        headers (list): column titles
        rows (list): lists of cell values, converted with str()

    Returns:
        text (str): the table, one line per row
    """

    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for k, row in enumerate(cells):
        lines.append('  '.join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if k == 0:
            lines.append('  '.join('-' * w for w in widths))
    return '\n'.join(lines) + '\n'


def _hs(classes):
    """Hilbert-Samuel type of the first class, without spaces, or '?'."""
    try:
        return ''.join(str(expected_type(classes[0])).split())
    except (KeyError, IndexError):
        return '?'


def verify_document(reports, summary=None, timing=False):
    """The verify-case / verify-all report document.

    Args:
        reports (list): CaseReport per case
        summary (Summary): added under 'summary' when given
        timing (bool): include wall-clock seconds per case

    Returns:
        document (dict): JSON-ready report
    """

    document = {'cases': [r.to_dict(timing=timing) for r in reports]}
    if summary is not None:
        document['summary'] = summary.to_dict()
    return document


def render_case_text(report):
    """Verdict line, instance table, skipped targets and failed claims of one case.

    Args:
        report (CaseReport): the case report

    Returns:
        text (str): the rendered case
    """

    s = f"case {report.case.case_id}: {report.case.description}\n"
    s += f"verdict: {report.verdict} ({len(report.instances)} instances, seed {report.seed}, "
    s += f"field {report.field})\n"
    rows = [[r.source, r.class_id, r.filtration, r.socle_dim, r.image_dim, r.end_dim,
             r.lift_dim, r.intersection_dim, r.lower_bound, 'yes' if r.passed else 'NO']
            for r in report.instances]
    if rows:
        s += table(['source', 'class', 'filtration', 'soc', 'image', 'End', 'lift', 'meet',
                    'bound', 'pass'], rows)
    for sk in report.skipped:
        s += f"skipped class {sk.class_id} {sk.target}: {sk.reason}\n"
    for d in report.discrepancies:
        s += f"discrepancy ({d['source']}, class {d['class']}, {d['filtration']}): " \
             f"{d['claim']} fails [{d['detail']}]\n"
    return s


def render_summary_text(reports, summary):
    """Summary table with expected and computed bounds, flagged lines and the Laffey line.

    Args:
        reports (list): CaseReport per case
        summary (Summary): the summary of reports

    Returns:
        text (str): the rendered summary
    """

    rows = [[','.join(map(str, r.case.classes)), _hs(r.case.classes), r.case.strategy,
             r.case.case_id, r.case.bound,
             '-' if r.computed_bound is None else r.computed_bound,
             len(r.instances), r.verdict] for r in reports]
    s = table(['classes', 'HS type', 'strategy', 'case', 'bound', 'computed bound',
               'instances', 'verdict'], rows)
    for f in summary.flagged:
        s += f"flagged: {f}\n"
    for u in summary.uncovered:
        s += f"not covered by any case: {u}\n"
    lb = summary.laffey
    s += f"Laffey: dim A > {lb['expression']} ~ {lb['approximation']}, " \
         f"so dim A >= {lb['implied_dim']}\n"
    s += f"{summary.local_reduction}\n"
    s += f"all cases pass: {'yes' if summary.all_pass else 'no'}\n"
    return s


def render_verify_text(reports, summary=None):
    """Every case report, followed by the summary when given.

    Args:
        reports (list): CaseReport per case
        summary (Summary): the summary, or None for verify-case

    Returns:
        text (str): the report
    """

    s = '\n'.join(render_case_text(r) for r in reports)
    if summary is not None:
        s += '\n' + render_summary_text(reports, summary)
    return s


def render_appendix_text(report):
    """One ok/FAIL line per check of an appendix replay, then the dimensions.

    Args:
        report (AppendixReport): the replay

    Returns:
        text (str): the rendered replay
    """

    s = ''
    for c in report.checks:
        mark = 'ok  ' if c.passed else 'FAIL'
        s += f"{mark} {c.name}" + (f" ({c.detail})" if c.detail and not c.passed else '') + '\n'
    s += f"dim = {report.dim}\n"
    s += f"generic commutant dim = {report.oracle_dim}\n"
    return s


def appendix_document(report):
    """JSON-ready form of an appendix replay.

    Args:
        report (AppendixReport): the replay

    Returns:
        document (dict): field, dimensions, verdict and checks
    """

    return {'field': report.field, 'dim': report.dim, 'oracle_dim': report.oracle_dim,
            'passed': report.passed,
            'checks': [{'name': c.name, 'passed': c.passed, 'detail': c.detail}
                       for c in report.checks]}


def render_laffey_text(bound):
    """Expression, approximation, implied bound and the note on the printed value.

    Args:
        bound (LaffeyBound): the evaluated bound

    Returns:
        text (str): the rendered bound
    """

    s = f"{bound.expression} ~ {bound.approximation}\n"
    s += f"implied bound: dim A >= {bound.implied}\n"
    if bound.note:
        s += f"note: {bound.note}\n"
    return s


def render_matrix_text(rows):
    """Bracketed rows of right-aligned entries.

    Args:
        rows (list): rows of entry strings

    Returns:
        text (str): one line per row
    """

    width = max((len(c) for row in rows for c in row), default=0)
    return '\n'.join('[' + ' '.join(c.rjust(width) for c in row) + ']' for row in rows) + '\n'
