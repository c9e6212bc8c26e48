"""Two-variable forms ``c t^i t2^j dt/t`` and their quotient spaces.

A :class:`BiForm` models H_1(LM) (x) H_0(LM): ``t`` tracks the component of
the first loop, ``t2`` the component of the second. The same class doubles
as a plain polynomial in ``t, t2`` when it is used as a multiplier; the
``dt/t`` marker is carried by exactly one factor of any product.

Quotients
---------
``RAW``
    Only the cyclic relations ``t^n = t2^n = 1``.
``RELATIVE``
    Also kills every monomial with ``i = 0`` or ``j = 0`` (the images of
    ``Omega^1 * 1`` and ``dt/t * Z[t2]``), i.e. passes to relative homology.
``MOD_DELTA_K``
    ``RELATIVE`` plus the span of ``t^l * Sigma_hom * dt/t``; over F_p only.
``Q``
    The same relations, allowed over the integers as well (q = 0).

In the last two, each anti-diagonal class ``i + j = c`` carries exactly one
relation (``t^c Sigma_hom``, whose surviving entries are all 1). The normal
form clears the surviving monomial with the largest ``i`` in each class.
"""

import enum
import json
from dataclasses import dataclass

from ._text import parse_terms
from .errors import ParameterError, UnsupportedContext
from .forms import OneForm
from .group_algebra import PowerMap


class Quotient(enum.Enum):
    RAW = "raw"
    RELATIVE = "relative"
    MOD_DELTA_K = "mod-delta-k"
    Q = "q"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        aliases = {"moddeltak": "mod-delta-k", "deltak": "mod-delta-k", "mod-dk": "mod-delta-k"}
        key = aliases.get(key, key)
        for member in cls:
            if member.value == key:
                return member
        raise ParameterError(f"unknown quotient context {name!r}")


@dataclass(frozen=True)
class BiForm:
    order: int
    modulus: int
    coeffs: tuple  # coeffs[i][j] is the coefficient of t^i t2^j dt/t

    def __post_init__(self):
        n, q = self.order, self.modulus
        if len(self.coeffs) != n or any(len(row) != n for row in self.coeffs):
            raise ParameterError(f"BiForm needs an {n}x{n} coefficient matrix")
        rows = tuple(tuple((int(c) % q) if q else int(c) for c in row) for row in self.coeffs)
        object.__setattr__(self, "coeffs", rows)

    @classmethod
    def zero(cls, order, modulus=0):
        return cls(order, modulus, ((0,) * order,) * order)

    @classmethod
    def from_terms(cls, terms, order, modulus=0):
        """``{(i, j): c}`` or ``[((i, j), c), ...]``; exponents reduced mod order."""
        mat = [[0] * order for _ in range(order)]
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, j), c in items:
            mat[i % order][j % order] += c
        return cls(order, modulus, tuple(map(tuple, mat)))

    @classmethod
    def monomial(cls, i, j, order, modulus=0, coeff=1):
        return cls.from_terms({(i, j): coeff}, order, modulus)

    def terms(self):
        """Nonzero ``((i, j), c)`` in ascending (i, j) order."""
        return [
            ((i, j), c)
            for i, row in enumerate(self.coeffs)
            for j, c in enumerate(row)
            if c
        ]

    def _check(self, other):
        if not isinstance(other, BiForm):
            raise ParameterError(f"expected a BiForm, got {type(other).__name__}")
        if (self.order, self.modulus) != (other.order, other.modulus):
            raise ParameterError(
                f"BiForms over (n={self.order}, q={self.modulus}) and "
                f"(n={other.order}, q={other.modulus})"
            )

    def __add__(self, other):
        self._check(other)
        return BiForm(
            self.order,
            self.modulus,
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.coeffs, other.coeffs)
            ),
        )

    def __neg__(self):
        return BiForm(self.order, self.modulus, tuple(tuple(-c for c in r) for r in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiForm(
                self.order, self.modulus, tuple(tuple(other * c for c in r) for r in self.coeffs)
            )
        return mul_biform(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def is_zero(self):
        return not any(any(r) for r in self.coeffs)

    def reduce(self, modulus):
        return BiForm(self.order, modulus, self.coeffs)

    def swap(self):
        """Exchange the roles of ``t`` and ``t2``."""
        n = self.order
        return BiForm(
            n, self.modulus, tuple(tuple(self.coeffs[j][i] for j in range(n)) for i in range(n))
        )

    def format(self, marker=True):
        return format_biform(self, marker)

    def __str__(self):
        return format_biform(self)

    def to_json(self):
        return {
            "n": self.order,
            "q": self.modulus,
            "terms": [{"i": i, "j": j, "c": c} for (i, j), c in self.terms()],
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_terms(
            [((t["i"], t["j"]), t["c"]) for t in data["terms"]], data["n"], data["q"]
        )


@dataclass(frozen=True)
class QuotientContext:
    kind: Quotient
    order: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Quotient.parse(self.kind))
        if self.kind is Quotient.MOD_DELTA_K and self.modulus == 0:
            raise UnsupportedContext(
                "the Delta(K) reduction is only defined over F_p; use Q for integral forms"
            )

    def relations(self):
        return relation_generators(self.kind, self.order, self.modulus)

    def reduce(self, x):
        if (x.order, x.modulus) != (self.order, self.modulus):
            raise ParameterError("context and form have different (n, q)")
        return normal_form(x, self.kind)


def format_biform(x, marker=True):
    """``"5 t^1 t2^1 + 4 t^4 t2^5 dt/t"``; ascending (i, j), coefficients as stored."""
    parts = []
    for (i, j), c in x.terms():
        factors = [f"t^{i}"] * bool(i) + [f"t2^{j}"] * bool(j)
        body = " ".join([str(abs(c) if not x.modulus else c)] + factors)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    if not parts:
        return "0"
    return " ".join(parts) + (" dt/t" if marker else "")


def parse_biform(text, order, modulus=0):
    """Inverse of :func:`format_biform`; also accepts a trailing ``dt``.

    ``"(4 + 2 t t2^6) dt"`` is read in the ``dt`` basis, i.e. every
    monomial is multiplied by ``t`` before storage.
    """
    body = text.strip()
    shift = 0
    if body.endswith("dt/t"):
        body = body[:-4]
    elif body.endswith("dt"):
        body = body[:-2]
        shift = 1
    body = body.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if body.strip() == "0":
        return BiForm.zero(order, modulus)
    terms = [((i + shift, j), c) for c, (i, j) in parse_terms(body, ("t", "t2"))]
    return BiForm.from_terms(terms, order, modulus)


def sigma_hom(order, modulus=0):
    """``t t2^(n-1) + ... + t^(n-1) t2 + t^n``: every monomial with i + j = 0."""
    return BiForm.from_terms({(i, -i): 1 for i in range(order)}, order, modulus)


def polynomial(terms, order, modulus=0):
    """Convenience alias of :meth:`BiForm.from_terms` for multiplier factors."""
    return BiForm.from_terms(terms, order, modulus)


def mul_biform(x, y):
    """Product in Z[t, t2]/(t^n - 1, t2^n - 1); the dt/t marker is not squared."""
    x._check(y)
    n = x.order
    out = [[0] * n for _ in range(n)]
    ty = y.terms()
    for (i1, j1), a in x.terms():
        for (i2, j2), b in ty:
            out[(i1 + i2) % n][(j1 + j2) % n] += a * b
    return BiForm(n, x.modulus, tuple(map(tuple, out)))


def apply_power_map_biform(phi, x, form=True):
    """Pull back along ``t -> t^a`` (applied to both variables).

    With ``form=True`` the ``dt/t`` marker picks up the factor ``a``,
    since ``d(t^a)/t^a = a dt/t``.
    """
    if not isinstance(phi, PowerMap):
        phi = PowerMap(phi, x.order)
    if phi.order != x.order:
        raise ParameterError("power map and form live over different groups")
    a = phi.exponent
    scale = a if form else 1
    return BiForm.from_terms(
        [((a * i, a * j), scale * c) for (i, j), c in x.terms()], x.order, x.modulus
    )


def homogenize(omega):
    """``t^i dt/t -> t^i t2^(-i) dt/t``."""
    n = omega.order
    return BiForm.from_terms(
        [((i, -i), c) for i, c in enumerate(omega.coeffs) if c], n, omega.modulus
    )


def dehomogenize(x):
    """Collapse ``t2 -> 1``; left inverse of :func:`homogenize`."""
    n = x.order
    if x.modulus < 2:
        raise ParameterError("1-forms need a modulus p >= 2")
    coeffs = [0] * n
    for (i, _), c in x.terms():
        coeffs[i] += c
    return OneForm(n, x.modulus, tuple(coeffs))


def _pivot(order, c):
    """Monomial cleared from anti-diagonal class c by the Sigma_hom relation."""
    i = order - 1 if c != order - 1 else order - 2
    return i, (c - i) % order


def _kill_relative(rows, n):
    rows[0] = [0] * n
    for row in rows:
        row[0] = 0


def normal_form(x, ctx):
    """Canonical representative of ``x`` in the quotient ``ctx``."""
    kind = ctx.kind if isinstance(ctx, QuotientContext) else Quotient.parse(ctx)
    if isinstance(ctx, QuotientContext) and (x.order, x.modulus) != (ctx.order, ctx.modulus):
        raise ParameterError("context and form have different (n, q)")
    if kind is Quotient.RAW:
        return x
    if kind is Quotient.MOD_DELTA_K and x.modulus == 0:
        raise UnsupportedContext(
            "the Delta(K) reduction is only defined over F_p; use Q for integral forms"
        )
    n = x.order
    rows = [list(r) for r in x.coeffs]
    _kill_relative(rows, n)
    if kind in (Quotient.MOD_DELTA_K, Quotient.Q):
        for c in range(n):
            pi, pj = _pivot(n, c)
            lead = rows[pi][pj]
            if not lead:
                continue
            for i in range(1, n):
                j = (c - i) % n
                if j:
                    rows[i][j] -= lead
    return BiForm(n, x.modulus, tuple(map(tuple, rows)))


def relation_generators(ctx, order, modulus=0):
    """Spanning set of the relations that ``ctx`` divides out (as raw BiForms)."""
    kind = Quotient.parse(ctx)
    gens = []
    if kind is Quotient.RAW:
        return gens
    for l in range(order):
        gens.append(BiForm.monomial(l, 0, order, modulus))
        if l:
            gens.append(BiForm.monomial(0, l, order, modulus))
    if kind in (Quotient.MOD_DELTA_K, Quotient.Q):
        s = sigma_hom(order, modulus)
        gens.extend(s * BiForm.monomial(l, 0, order, modulus) for l in range(order))
    return gens


def reduce_sigma_only(x):
    """Normal form modulo ``(t^n - 1, t2^n - 1, Sigma_hom)`` alone (no relative kill).

    Each anti-diagonal class then has one relation with all n entries equal
    to 1; the entry with the largest i is cleared.
    """
    n = x.order
    rows = [list(r) for r in x.coeffs]
    for c in range(n):
        pi = n - 1
        pj = (c - pi) % n
        lead = rows[pi][pj]
        if lead:
            for i in range(n):
                rows[i][(c - i) % n] -= lead
    return BiForm(n, x.modulus, tuple(map(tuple, rows)))
