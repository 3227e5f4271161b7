"""Client-side rendering of service payloads as text, LaTeX or CSV.

Works directly on the JSON wire format (term lists with decimal-string
coefficients), so the CLI can render responses from a remote server without
reconstructing polynomial objects.
"""

from __future__ import annotations

import io
import json
from fractions import Fraction


def _coeff(term: dict) -> Fraction:
    return Fraction(int(term["num"]), int(term["den"]))


def _sorted_terms(terms: list[dict]) -> list[dict]:
    return sorted(terms, key=lambda t: (t["i"] + (t.get("j") or 0), t["i"]))


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_text(terms: list[dict]) -> str:
    """Plain-text rendering, e.g. ``x*y^2 + 12*x^2*y^2``."""
    if not terms:
        return "0"
    parts = []
    for term in _sorted_terms(terms):
        c = _coeff(term)
        factors = []
        if term["i"]:
            factors.append("x" if term["i"] == 1 else f"x^{term['i']}")
        j = term.get("j")
        if j:
            factors.append("y" if j == 1 else f"y^{j}")
        mono = "*".join(factors)
        if not mono:
            parts.append(_coeff_text(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{_coeff_text(c)}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def _latex_mono(i: int, j: int) -> str:
    out = ""
    if i:
        out += "x" if i == 1 else f"x^{{{i}}}"
    if j:
        out += "y" if j == 1 else f"y^{{{j}}}"
    return out


def poly_latex(terms: list[dict]) -> str:
    """LaTeX rendering factored by the minimal monomial, e.g.
    ``xy^{2}(y^{3}+12xy^{2}+15x^{2}y+2x^{3})``."""
    if not terms:
        return "0"
    min_i = min(t["i"] for t in terms)
    min_j = min(t.get("j", 0) for t in terms)
    inner = []
    for term in sorted(terms, key=lambda t: t["i"]):
        c = _coeff(term)
        mono = _latex_mono(term["i"] - min_i, term.get("j", 0) - min_j)
        if not mono:
            body = _coeff_text(c)
        elif abs(c) == 1:
            body = ("-" if c < 0 else "") + mono
        else:
            body = f"{_coeff_text(c)}{mono}"
        inner.append(body)
    joined = "+".join(inner).replace("+-", "-")
    prefix = _latex_mono(min_i, min_j)
    if not prefix:
        return joined
    if len(inner) == 1:
        return f"{prefix}{joined}" if joined != "1" else prefix
    return f"{prefix}({joined})"


def poly_csv(terms: list[dict]) -> str:
    bivariate = any("j" in t and t["j"] is not None for t in terms)
    out = io.StringIO()
    if bivariate:
        out.write("i,j,num,den\n")
        for t in _sorted_terms(terms):
            out.write(f"{t['i']},{t.get('j', 0)},{t['num']},{t['den']}\n")
    else:
        out.write("i,num,den\n")
        for t in _sorted_terms(terms):
            out.write(f"{t['i']},{t['num']},{t['den']}\n")
    return out.getvalue()


def render_polynomial(terms: list[dict], fmt: str) -> str:
    if fmt == "text":
        return poly_text(terms)
    if fmt == "latex":
        return poly_latex(terms)
    if fmt == "csv":
        return poly_csv(terms)
    if fmt == "json":
        return json.dumps(terms, indent=2)
    raise ValueError(f"unknown format {fmt!r}")


def render_check(body: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(body, indent=2)
    if fmt == "csv":
        keys = [
            "symmetric",
            "gamma_positive",
            "bi_gamma_positive",
            "alternatingly_increasing",
            "unimodal",
        ]
        header = "spec,n," + ",".join(keys) + ",modes"
        spec = " ".join(str(v) for v in body["spec"])
        row = f"{spec},{body['n']}," + ",".join(str(body.get(k)) for k in keys)
        row += "," + " ".join(str(v) for v in body["modes"])
        return header + "\n" + row + "\n"
    lines = [
        f"spec: ({', '.join(str(v) for v in body['spec'])})   m={body['m']}  n={body['n']}",
        f"A(x) = " + (poly_latex(body["polynomial"]) if fmt == "latex" else poly_text(body["polynomial"])),
    ]
    if body.get("expansion_type"):
        lines.append(f"expansion type: {body['expansion_type']}")
    lines += [
        f"symmetric:                {body['symmetric']}",
        f"gamma-positive:           {body.get('gamma_positive')}",
        f"bi-gamma-positive:        {body['bi_gamma_positive']}",
        f"alternatingly increasing: {body['alternatingly_increasing']}",
        f"unimodal:                 {body['unimodal']}   modes: {body['modes']}",
        f"a(x) = " + poly_text(body["decomposition"]["a"]),
        f"b(x) = " + poly_text(body["decomposition"]["b"]),
        f"gamma(a) = [{', '.join(body['gamma_a']['gammas'])}]  (n={body['gamma_a']['n']})",
        f"gamma(b) = [{', '.join(body['gamma_b']['gammas'])}]  (n={body['gamma_b']['n']})",
    ]
    if body.get("gamma_full"):
        lines.insert(3, f"gamma(f) = [{', '.join(body['gamma_full']['gammas'])}]")
    return "\n".join(lines)


def render_verify(body: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(body, indent=2)
    rows = []
    for r in body["results"]:
        rows.append({
            "spec": " ".join(str(v) for v in r["spec"]),
            "words": r["word_count"],
            "routes": "+".join(r["routes"]),
            "agree": r["routes_agree"],
            "commute": r["commutator_ok"],
            "type": r["expansion_type"],
            "bi_gamma": r["report"]["bi_gamma_positive"],
            "alt_inc": r["report"]["alternatingly_increasing"],
            "unimodal": r["report"]["unimodal"],
            "violations": len(r["violations"]),
        })
    if fmt == "csv":
        header = "spec,words,routes,agree,commute,type,bi_gamma,alt_inc,unimodal,violations"
        lines = [header] + [",".join(str(r[k]) for k in header.split(",")) for r in rows]
        return "\n".join(lines) + "\n"
    # text / latex: aligned table plus a summary line
    cols = ["spec", "words", "routes", "agree", "commute", "type",
            "bi_gamma", "alt_inc", "unimodal", "violations"]
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in cols}
    sep = "  "
    lines = [sep.join(c.ljust(widths[c]) for c in cols)]
    for r in rows:
        lines.append(sep.join(str(r[c]).ljust(widths[c]) for c in cols))
    lines.append(
        f"specs: {body['spec_count']}   violations: {body['violation_count']}"
    )
    first = body.get("first_violation")
    if first:
        lines.append(
            f"first counterexample: spec ({', '.join(str(v) for v in first['spec'])}): "
            + "; ".join(first["violations"])
        )
        lines.append("  A(x) = " + poly_text(first["polynomial"]))
    return "\n".join(lines)
