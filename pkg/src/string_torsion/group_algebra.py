"""Exact arithmetic in the group algebra of a cyclic group.

Elements of Z[Z_n] or (Z/q)[Z_n] are stored as coefficient vectors indexed
by the exponent of the generator ``t``:

>>> tau = parse_element("t + t^2 + t^3 - t^5 - t^6", 7)
>>> invert_unit(tau)
GroupAlgebraElement('t^4 - t^5 + t^6', order=7, modulus=0)
>>> augmentation(tau)
1
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ._linalg import InconsistentSystem, SingularSystem, solve_mod, solve_rational
from ._text import format_univariate, parse_terms
from .errors import LiftError, NotAUnit, ParameterError


@dataclass(frozen=True)
class GroupAlgebraElement:
    order: int
    modulus: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 1:
            raise ParameterError(f"group order must be positive, got {self.order}")
        if self.modulus < 0:
            raise ParameterError(f"modulus must be nonnegative, got {self.modulus}")
        if len(self.coeffs) != self.order:
            raise ParameterError(
                f"expected {self.order} coefficients, got {len(self.coeffs)}"
            )
        coeffs = tuple(int(c) for c in self.coeffs)
        if self.modulus:
            coeffs = tuple(c % self.modulus for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    # construction helpers

    @classmethod
    def zero(cls, order, modulus=0):
        return cls(order, modulus, (0,) * order)

    @classmethod
    def one(cls, order, modulus=0):
        return cls.monomial(0, order, modulus)

    @classmethod
    def monomial(cls, exponent, order, modulus=0, coeff=1):
        coeffs = [0] * order
        coeffs[exponent % order] = coeff
        return cls(order, modulus, tuple(coeffs))

    @classmethod
    def from_terms(cls, terms, order, modulus=0):
        """Build from ``{exponent: coeff}`` or ``[(exponent, coeff), ...]``."""
        items = terms.items() if isinstance(terms, dict) else terms
        coeffs = [0] * order
        for e, c in items:
            coeffs[e % order] += c
        return cls(order, modulus, tuple(coeffs))

    # arithmetic

    def _check(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if (self.order, self.modulus) != (other.order, other.modulus):
            raise ParameterError(
                "cannot combine elements of "
                f"(n={self.order}, q={self.modulus}) and "
                f"(n={other.order}, q={other.modulus})"
            )
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return GroupAlgebraElement(
            self.order, self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return GroupAlgebraElement(self.order, self.modulus, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupAlgebraElement(
                self.order, self.modulus, tuple(other * c for c in self.coeffs)
            )
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent):
        if exponent < 0:
            return invert_unit(self) ** (-exponent)
        result = GroupAlgebraElement.one(self.order, self.modulus)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self):
        return not any(self.coeffs)

    def reduce(self, modulus):
        """Image under Z -> Z/modulus (or a change of modulus dividing the old one)."""
        if self.modulus and modulus and self.modulus % modulus:
            raise ParameterError(f"cannot reduce mod {self.modulus} to mod {modulus}")
        return GroupAlgebraElement(self.order, modulus, self.coeffs)

    def rotate(self, shift):
        """Multiply by the trivial unit ``t^shift``."""
        n = self.order
        coeffs = [0] * n
        for i, c in enumerate(self.coeffs):
            coeffs[(i + shift) % n] = c
        return GroupAlgebraElement(n, self.modulus, tuple(coeffs))

    def __str__(self):
        return format_univariate(self.coeffs, signed=not self.modulus)

    def __repr__(self):
        return f"GroupAlgebraElement({str(self)!r}, order={self.order}, modulus={self.modulus})"


@dataclass(frozen=True)
class PowerMap:
    """The ring map ``t -> t^exponent`` of Z[Z_order]."""

    exponent: int
    order: int

    def __post_init__(self):
        if gcd(self.exponent, self.order) != 1:
            raise ParameterError(
                f"exponent {self.exponent} is not invertible mod {self.order}"
            )
        object.__setattr__(self, "exponent", self.exponent % self.order)

    def inverse(self):
        return PowerMap(pow(self.exponent, -1, self.order), self.order)

    def compose(self, other):
        """``self o other``, i.e. first ``other`` then ``self``."""
        if self.order != other.order:
            raise ParameterError("power maps on different groups")
        return PowerMap(self.exponent * other.exponent, self.order)


def parse_element(text, order, modulus=0):
    """Parse ``"t + t^2 - 3 t^5"``; exponents are reduced mod ``order``."""
    terms = [(e[0], c) for c, e in parse_terms(text, ("t",))]
    return GroupAlgebraElement.from_terms(terms, order, modulus)


def multiply(x, y):
    """Cyclic convolution of coefficient vectors."""
    x._check(y)
    n = x.order
    out = [0] * n
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        for j, b in enumerate(y.coeffs):
            if b:
                out[(i + j) % n] += a * b
    return GroupAlgebraElement(n, x.modulus, tuple(out))


def sigma(order, modulus=0):
    """The norm element ``1 + t + ... + t^(order-1)``."""
    if order < 1:
        raise ParameterError(f"group order must be positive, got {order}")
    return GroupAlgebraElement(order, modulus, (1,) * order)


def augmentation(x):
    total = sum(x.coeffs)
    return total % x.modulus if x.modulus else total


def apply_power_map(phi, x):
    if phi.order != x.order:
        raise ParameterError(f"power map on Z_{phi.order} applied to Z_{x.order}")
    n = x.order
    out = [0] * n
    for i, c in enumerate(x.coeffs):
        out[(phi.exponent * i) % n] += c
    return GroupAlgebraElement(n, x.modulus, tuple(out))


def convolution_matrix(x):
    """Matrix ``M`` with ``M @ y.coeffs == (x * y).coeffs``."""
    n = x.order
    return [[x.coeffs[(i - j) % n] for j in range(n)] for i in range(n)]


def invert_unit(x):
    """Inverse of a unit of Z[Z_n] (q = 0) or (Z/q)[Z_n] (q prime).

    Solves the convolution system exactly and checks the product.
    """
    n = x.order
    rows = convolution_matrix(x)
    rhs = [1] + [0] * (n - 1)
    try:
        if x.modulus:
            sol = solve_mod(rows, rhs, x.modulus)
        else:
            sol = solve_rational(rows, rhs)
    except (SingularSystem, InconsistentSystem):
        raise NotAUnit(f"{x} is a zero divisor") from None
    if not x.modulus:
        if any(v.denominator != 1 for v in sol):
            raise NotAUnit(f"{x} is invertible over Q but not over Z")
        sol = [int(v) for v in sol]
    inv = GroupAlgebraElement(n, x.modulus, tuple(sol))
    if multiply(x, inv) != GroupAlgebraElement.one(n, x.modulus):
        raise NotAUnit(f"inverse check failed for {x}")
    return inv


def torsion_quotient(num, den):
    """``num / den`` in Z[t]/(Sigma), lifted to augmentation 1.

    Solves ``x * den = num + c * Sigma`` together with ``aug(x) = 1`` over
    Q. The solution is unique whenever ``den`` is nonzero in Z[t]/(Sigma).
    """
    num._check(den)
    if num.modulus:
        raise ParameterError("torsion_quotient works over the integers (q = 0)")
    n = num.order
    conv = convolution_matrix(den)
    # unknowns: x_0..x_{n-1}, c
    rows = [conv[i] + [-1] for i in range(n)]
    rows.append([1] * n + [0])
    rhs = list(num.coeffs) + [1]
    try:
        sol = solve_rational(rows, rhs)
    except SingularSystem:
        raise NotAUnit(f"{den} is not invertible modulo Sigma") from None
    except InconsistentSystem:
        raise LiftError(f"no quotient {num} / {den} with augmentation 1") from None
    x = sol[:n]
    if any(Fraction(v).denominator != 1 for v in x):
        raise LiftError(f"{num} / {den} has no integral lift with augmentation 1")
    return GroupAlgebraElement(n, 0, tuple(int(v) for v in x))
