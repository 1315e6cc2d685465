import json
from pathlib import Path

from cli.choices import OutputFormatChoices
from rodrigues.latex import render_latex_appendix, render_text


def dump_json(document):
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_vectors(vectors, output_format, document):
    """
    Renders `Q_0..Q_N` in `output_format`; `document` is the JSON payload for `JSON`.
    """
    if output_format == OutputFormatChoices.LATEX:
        return render_latex_appendix(vectors)
    if output_format == OutputFormatChoices.TEXT:
        return render_text(vectors)
    return dump_json(document)


def write_output(command, text, out=None):
    """Writes to `out` when given, else to the command's stdout."""
    if out:
        Path(out).write_text(text, encoding="utf-8")
        return
    command.stdout.write(text, ending="")


def render_report_text(report):
    """A short human summary: family-level flags, one status line per degree, the outcome."""
    lines = [
        f"family: {report.family}",
        f"form: {report.form}",
        f"route: {report.route}",
        f"cap: {report.cap}",
    ]
    for form, holds in sorted(report.condr.items()):
        lines.append(f"condition (R), {form} form: {'holds' if holds else 'fails'}")
    lines.append(f"symmetrizable: {report.symmetrizable}")
    for section in report.sections:
        failures = section.failures()
        status = "passed" if not failures else "; ".join(message for _, message in failures)
        lines.append(f"n={section.n}: {status}")
    outcome = report.outcome()
    lines.append(f"outcome: {'passed' if outcome is None else outcome}")
    return "\n".join(lines) + "\n"
