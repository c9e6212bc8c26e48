"""Parsing and printing of signed monomial sums in ``t`` and ``t2``."""

import re

from .errors import ParameterError

_FACTOR = re.compile(r"(t2|t)(?:\^(-?\d+))?")
_COEFF = re.compile(r"\d+")


def _split_terms(text):
    text = text.replace(" ", "").replace("*", "")
    if not text:
        raise ParameterError("empty expression")
    terms = []
    sign = 1
    start = 0
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        start = 1
    buf_start = start
    for pos in range(start, len(text) + 1):
        if pos == len(text) or text[pos] in "+-":
            chunk = text[buf_start:pos]
            if not chunk:
                raise ParameterError(f"malformed expression: {text!r}")
            terms.append((sign, chunk))
            if pos < len(text):
                sign = -1 if text[pos] == "-" else 1
            buf_start = pos + 1
    return terms


def parse_terms(text, variables=("t",)):
    """Parse ``"3 t^2 t2^5 - t + 1"`` into ``[(coeff, (i, j)), ...]``.

    Exponents are returned per entry of ``variables``; unlisted variables
    are rejected.
    """
    out = []
    for sign, chunk in _split_terms(text):
        coeff = 1
        m = _COEFF.match(chunk)
        pos = 0
        if m and not chunk.startswith("t"):
            coeff = int(m.group())
            pos = m.end()
        exps = dict.fromkeys(variables, 0)
        while pos < len(chunk):
            f = _FACTOR.match(chunk, pos)
            if f is None or f.group(1) not in exps:
                raise ParameterError(f"cannot parse term {chunk!r}")
            exps[f.group(1)] += int(f.group(2)) if f.group(2) is not None else 1
            pos = f.end()
        out.append((sign * coeff, tuple(exps[v] for v in variables)))
    return out


def format_univariate(coeffs, signed=True):
    """``(0, 1, 1, 1, 0, -1, -1)`` -> ``"t + t^2 + t^3 - t^5 - t^6"``."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        mag = abs(c) if signed else c
        body = f"{mag}" if not mono else (mono if mag == 1 else f"{mag} {mono}")
        neg = signed and c < 0
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts) if parts else "0"
