"""Formal de Rham 1-forms on the cyclic group algebra.

A 1-form is stored in the basis ``t^i dt/t`` with coefficients in F_p;
``c t^j dt`` is the same thing as ``c t^(j+1) dt/t``.
"""

import re
from dataclasses import dataclass

from ._text import format_univariate, parse_terms
from .errors import ParameterError
from .group_algebra import GroupAlgebraElement, PowerMap, invert_unit


@dataclass(frozen=True)
class OneForm:
    order: int
    modulus: int
    coeffs: tuple

    def __post_init__(self):
        if self.modulus < 2:
            raise ParameterError("1-forms need a modulus p >= 2")
        if len(self.coeffs) != self.order:
            raise ParameterError(
                f"expected {self.order} coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(int(c) % self.modulus for c in self.coeffs))

    @classmethod
    def zero(cls, order, modulus=None):
        return cls(order, modulus or order, (0,) * order)

    @classmethod
    def from_terms(cls, terms, order, modulus=None, basis="dt/t"):
        """``{i: c}`` read in the ``dt/t`` basis, or the ``dt`` basis."""
        shift = 1 if basis == "dt" else 0
        coeffs = [0] * order
        items = terms.items() if isinstance(terms, dict) else terms
        for e, c in items:
            coeffs[(e + shift) % order] += c
        return cls(order, modulus or order, tuple(coeffs))

    def _check(self, other):
        if (self.order, self.modulus) != (other.order, other.modulus):
            raise ParameterError("forms over different rings")

    def __add__(self, other):
        self._check(other)
        return type(self)(
            self.order, self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return type(self)(self.order, self.modulus, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        if isinstance(scalar, int):
            return type(self)(self.order, self.modulus, tuple(scalar * c for c in self.coeffs))
        if isinstance(scalar, GroupAlgebraElement):
            return scale(scalar, self)
        return NotImplemented

    def is_zero(self):
        return not any(self.coeffs)

    def dt_coeffs(self):
        """Coefficients of ``t^j dt`` for j = 0..n-1."""
        n = self.order
        return tuple(self.coeffs[(j + 1) % n] for j in range(n))

    def format(self, basis="dt/t"):
        if basis == "dt":
            return f"({format_univariate(self.dt_coeffs(), signed=False)}) dt"
        return f"({format_univariate(self.coeffs, signed=False)}) dt/t"

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class ReducedOneForm(OneForm):
    """A 1-form modulo the span of ``dt/t``; position 0 is always 0."""

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "coeffs", (0,) + self.coeffs[1:])


_FORM = re.compile(r"^\s*\((?P<body>.*)\)\s*(?P<basis>dt/t|dt)\s*$|^\s*(?P<bare>.*?)\s*(?P<basis2>dt/t|dt)\s*$")


def parse_form(text, order, modulus=None):
    """Parse ``"(6 + 5t + 2t^6) dt"`` or ``"(...) dt/t"``."""
    m = _FORM.match(text)
    if m is None:
        raise ParameterError(f"a 1-form must end in 'dt' or 'dt/t': {text!r}")
    body = m.group("body") if m.group("body") is not None else m.group("bare")
    basis = m.group("basis") or m.group("basis2")
    terms = [(e[0], c) for c, e in parse_terms(body, ("t",))]
    return OneForm.from_terms(terms, order, modulus, basis=basis)


def scale(x, omega):
    """Module action of the group algebra on 1-forms."""
    if x.order != omega.order:
        raise ParameterError("element and form live over different groups")
    n, p = omega.order, omega.modulus
    out = [0] * n
    for i, a in enumerate(x.coeffs):
        if a % p:
            for j, b in enumerate(omega.coeffs):
                out[(i + j) % n] += a * b
    return OneForm(n, p, tuple(out))


def de_rham_d(x, modulus=None):
    """``sum c_i t^i  ->  sum i c_i t^i dt/t`` with coefficients mod p."""
    p = modulus or x.modulus or x.order
    if x.modulus and x.modulus % p:
        raise ParameterError(f"cannot take d of a mod-{x.modulus} element into F_{p}")
    if x.order % p:
        raise ParameterError(f"exponents mod {x.order} are not well defined mod {p}")
    return OneForm(x.order, p, tuple(i * c for i, c in enumerate(x.coeffs)))


def d_log(u, modulus=None):
    """``u^{-1} du`` for a unit u."""
    du = de_rham_d(u, modulus)
    return scale(invert_unit(u), du)


def pullback_form(phi, omega):
    """``t^i dt/t -> a t^(a i) dt/t`` for ``phi: t -> t^a``."""
    if not isinstance(phi, PowerMap):
        phi = PowerMap(phi, omega.order)
    if phi.order != omega.order:
        raise ParameterError("power map and form live over different groups")
    n, a = omega.order, phi.exponent
    out = [0] * n
    for i, c in enumerate(omega.coeffs):
        out[(a * i) % n] += a * c
    return type(omega)(n, omega.modulus, tuple(out))


def reduce_relative(omega):
    return ReducedOneForm(omega.order, omega.modulus, omega.coeffs)
