"""Text, LaTeX and JSON forms of polynomials and factored fractions.

JSON schema for a fraction (all rationals are strings, e.g. ``"-3/2"``)::

    {"scalar": "p/q", "mono": [e_q, e_Z], "num": [[e_q, e_Z, "p/q"], ...],
     "den": [[a, b, mult], ...]}

A polynomial is serialized as a fraction with an empty ``den``.
"""
from fractions import Fraction

from .fraction import FactoredFraction, RationalFunction
from .poly import LaurentPoly

__all__ = [
    "poly_text",
    "ff_text",
    "poly_latex",
    "ff_latex",
    "to_json",
    "ff_from_json",
    "render",
]


def _mono_text(eq, ez, var):
    parts = []
    if ez:
        parts.append(var if ez == 1 else f"{var}^{ez}")
    if eq:
        parts.append("q" if eq == 1 else (f"q^{eq}" if eq > 0 else f"q^({eq})"))
    return "*".join(parts)


def poly_text(p, var="Z"):
    """Terms ordered by (Z-degree, q-degree) ascending, e.g. ``1 + Z*q``."""
    if not isinstance(p, LaurentPoly):
        p = LaurentPoly.const(p)
    if p.is_zero():
        return "0"
    out = []
    for (eq, ez), c in p.items():
        mono = _mono_text(eq, ez, var)
        mag = abs(Fraction(c))
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)


def _factor_text(a, b, var):
    return f"1 - {_mono_text(a, b, var)}"


def ff_text(x, var="Z"):
    if isinstance(x, RationalFunction):
        return f"({ff_text(x.num, var)})/({ff_text(x.den, var)})"
    if isinstance(x, LaurentPoly):
        return poly_text(x, var)
    if x.is_zero():
        return "0"
    num = x.full_numerator()
    ntext = poly_text(num, var)
    if not x.den:
        return ntext
    if len(num) > 1 or "/" in ntext:
        ntext = f"({ntext})"
    pieces = []
    for a, b, m in x.den:
        f = f"({_factor_text(a, b, var)})"
        pieces.append(f if m == 1 else f"{f}^{m}")
    dtext = pieces[0] if len(pieces) == 1 else "(" + "*".join(pieces) + ")"
    return f"{ntext}/{dtext}"


# -- LaTeX -------------------------------------------------------------------

def _mono_latex(eq, ez, var):
    parts = []
    if eq:
        parts.append("q" if eq == 1 else f"q^{{{eq}}}")
    if ez:
        parts.append(var if ez == 1 else f"{var}^{{{ez}}}")
    return "".join(parts)


def _rat_latex(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def poly_latex(p, var="Z"):
    if p.is_zero():
        return "0"
    out = []
    for (eq, ez), c in p.items():
        mono = _mono_latex(eq, ez, var)
        mag = abs(Fraction(c))
        if not mono:
            body = _rat_latex(mag)
        elif mag == 1:
            body = mono
        else:
            body = _rat_latex(mag) + mono
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(out)


def _den_latex(den, var):
    """Group runs (1 - x)(1 - x q^s)... of simple factors into (x; q^s)_n."""
    pieces = []
    simple = {}
    for a, b, m in den:
        if m == 1:
            simple.setdefault(b, []).append(a)
        else:
            pieces.append((f"(1-{_mono_latex(a, b, var)})^{{{m}}}", True))
    for b in sorted(simple):
        exps = sorted(simple[b])
        i = 0
        while i < len(exps):
            j = i + 1
            if j < len(exps):
                step = exps[j] - exps[i]
                while j + 1 < len(exps) and exps[j + 1] - exps[j] == step:
                    j += 1
            if j < len(exps) and j > i:
                base = _mono_latex(exps[i], b, var)
                qs = "q" if step == 1 else f"q^{{{step}}}"
                pieces.append((f"({base};{qs})_{{{j - i + 1}}}", True))
                i = j + 1
            else:
                pieces.append((f"1-{_mono_latex(exps[i], b, var)}", False))
                i += 1
    if len(pieces) == 1:
        return pieces[0][0]
    return "".join(p if wrapped else f"({p})" for p, wrapped in pieces)


def ff_latex(x, var="Z"):
    if isinstance(x, RationalFunction):
        return f"\\frac{{{ff_latex(x.num, var)}}}{{{ff_latex(x.den, var)}}}"
    if isinstance(x, LaurentPoly):
        return poly_latex(x, var)
    if x.is_zero():
        return "0"
    num = poly_latex(x.full_numerator(), var)
    if not x.den:
        return num
    return f"\\frac{{{num}}}{{{_den_latex(x.den, var)}}}"


# -- JSON ----------------------------------------------------------------------

def _ff_json(x):
    return {
        "scalar": str(x.scalar),
        "mono": [x.mono[0], x.mono[1]],
        "num": [[eq, ez, str(Fraction(c))] for (eq, ez), c in x.num.items()],
        "den": [[a, b, m] for a, b, m in x.den],
    }


def to_json(x, var=None):
    """JSON-ready form of a polynomial, fraction, quotient or list of those."""
    if isinstance(x, (list, tuple)):
        return [to_json(v, var) for v in x]
    if isinstance(x, RationalFunction):
        out = {"quotient": [_ff_json(x.num), _ff_json(x.den)]}
    elif isinstance(x, LaurentPoly):
        out = _ff_json(FactoredFraction(x))
    elif isinstance(x, FactoredFraction):
        out = _ff_json(x)
    else:
        out = _ff_json(FactoredFraction.lift(x))
    if var is not None:
        out["var"] = var
    return out


def ff_from_json(obj):
    """Inverse of :func:`to_json` for fractions, polynomials and quotients."""
    if "quotient" in obj:
        n, d = obj["quotient"]
        return RationalFunction(ff_from_json(n), ff_from_json(d))
    num = LaurentPoly({(eq, ez): Fraction(c) for eq, ez, c in obj["num"]})
    return FactoredFraction(num, [tuple(f) for f in obj["den"]], Fraction(obj["scalar"]), tuple(obj["mono"]))


def render(x, fmt="text", var="Z"):
    """Render for the command line; ``fmt`` is text, latex or json (returns a JSON-ready object)."""
    if fmt == "text":
        return ff_text(x, var)
    if fmt == "latex":
        return ff_latex(x, var)
    if fmt == "json":
        return to_json(x, var)
    raise ValueError(f"unknown format {fmt!r}")
