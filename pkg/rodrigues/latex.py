"""Human-readable renderings of `Q_0..Q_N`: a LaTeX `align*` block and a plain-text listing."""
from polycore.polynomial import to_latex, to_text


def _vectors(source):
    return getattr(source, "vectors", source)


def render_latex_appendix(source):
    """
    One aligned row per degree, `\\mathbb{Q}_n^t &= (Q_{n,0}, ..., Q_{0,n})`.

    Args:
    - `source`: A `VerificationReport` or a list of `RodriguesVector`.
    """
    rows = []
    for vector in _vectors(source):
        body = ",\\; ".join(to_latex(entry) for entry in vector.entries)
        rows.append(f"\\mathbb{{Q}}_{{{vector.n}}}^t &= \\left({body}\\right)")
    lines = ["\\begin{align*}", ",\\\\\n".join(rows) + ".", "\\end{align*}"]
    return "\n".join(lines) + "\n"


def render_text(source):
    lines = []
    for vector in _vectors(source):
        body = ", ".join(to_text(entry) for entry in vector.entries)
        lines.append(f"Q_{vector.n}^t = ({body})")
    return "\n".join(lines) + "\n"
