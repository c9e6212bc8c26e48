"""String coproduct and string product on degree-3 classes of L(k, p).

The classes ``[rho_{l,m}]`` come from the circle actions
``s -> (e(l s) z1, e((k l + p m) s) z2)``, ``s in [0, 1/p]``. Their
self-intersections lie on the exceptional circles ``K2 = {z2 = 0}``
(times ``n / (p l)``) and ``K1 = {z1 = 0}`` (times ``n / (p N)``,
``N = k l + p m``), which gives the closed formula of :func:`coproduct_rho`.
"""

import enum
from dataclasses import dataclass, field
from math import gcd

from .biforms import BiForm, Quotient, normal_form, sigma_hom
from .errors import ParameterError


def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class LensSpace:
    """L(k, p) = S^3 / Z_p with generator ``(z1, z2) -> (e(1/p) z1, e(k/p) z2)``."""

    k: int
    p: int = 7

    def __post_init__(self):
        if self.p < 3 or not _is_prime(self.p):
            raise ParameterError(f"p must be an odd prime, got {self.p}")
        if self.k % self.p == 0:
            raise ParameterError(f"k = {self.k} is not a unit mod {self.p}")
        object.__setattr__(self, "k", self.k % self.p)

    @property
    def r(self):
        """Inverse of k mod p."""
        return pow(self.k, -1, self.p)

    def winding(self, l, m):
        """``k l + p m``, the z2-winding of rho_{l,m} (not reduced mod p)."""
        return self.k * l + self.p * m

    def __str__(self):
        return f"L({self.k},{self.p})"


@dataclass(frozen=True)
class RhoClass:
    l: int
    m: int

    def __post_init__(self):
        if gcd(self.l, self.m) != 1:
            raise ParameterError(f"rho_{{{self.l},{self.m}}} needs gcd(l, m) = 1")

    def __str__(self):
        return f"rho_{{{self.l},{self.m}}}"


def check_rho(lens, rho):
    """Preconditions under which the closed coproduct formula applies."""
    if rho.l < 1:
        raise ParameterError(f"{rho}: the coproduct formula needs l >= 1")
    if lens.winding(rho.l, rho.m) < 1:
        raise ParameterError(
            f"{rho} on {lens}: k l + p m = {lens.winding(rho.l, rho.m)} must be >= 1"
        )


def minimal_m(lens, l):
    """Smallest m with gcd(l, m) = 1 and k l + p m >= 1."""
    m = -((lens.k * l - 1) // lens.p)
    while gcd(l, m) != 1:
        m += 1
    return m


def _coproduct_sum(lens, l, winding):
    p, r = lens.p, lens.r
    terms = [((n, l - n), 1) for n in range(1, l)]
    terms += [((r * n, r * (winding - n)), r) for n in range(1, winding)]
    return BiForm.from_terms(terms, p, p)


def coproduct_rho(lens, rho, ctx=Quotient.RAW):
    """Delta([rho_{l,m}]) in H_1 (x) H_0, reduced in the quotient ``ctx``."""
    check_rho(lens, rho)
    raw = _coproduct_sum(lens, rho.l, lens.winding(rho.l, rho.m))
    return normal_form(raw, ctx)


def coproduct_difference(lens, l, m, n):
    """``Delta(rho_{l,m+n}) - Delta(rho_{l,m})`` in relative homology."""
    a = coproduct_rho(lens, RhoClass(l, m + n), Quotient.RELATIVE)
    b = coproduct_rho(lens, RhoClass(l, m), Quotient.RELATIVE)
    return a - b


def difference_closed_form(lens, l, m, n):
    """``r n t^(r (k l + p m)) Sigma_hom dt/t``, reduced in relative homology.

    ``r (k l + p m)`` is congruent to l, so the result lives in component l.
    """
    p, r = lens.p, lens.r
    shift = BiForm.monomial(r * lens.winding(l, m), 0, p, p, coeff=r * n)
    return normal_form(shift * sigma_hom(p, p), Quotient.RELATIVE)


def string_product(rho, omega):
    """``[rho_{l,m}] * omega = t^l omega``."""
    l = rho.l if isinstance(rho, RhoClass) else int(rho)
    n = omega.order
    coeffs = [0] * n
    for i, c in enumerate(omega.coeffs):
        coeffs[(i + l) % n] = c
    return type(omega)(n, omega.modulus, tuple(coeffs))


class Verdict(enum.Enum):
    DISTINGUISHED = "DISTINGUISHED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class KernelReport:
    lens: LensSpace
    images: dict = field(repr=False)  # l -> torsion map image in Q
    zero_set: frozenset
    ranks: dict  # l -> 0 or 1

    def rank_multiset(self):
        return sorted(self.ranks.values())


def analyze_kernel(lens):
    """Which components H_3(L_l M) the coproduct kills, modulo Delta(K)."""
    from .torsion import torsion_map

    images = {l: torsion_map(lens, l, Quotient.Q) for l in range(lens.p)}
    ranks = {l: int(not img.is_zero()) for l, img in images.items()}
    zero_set = frozenset(l for l, rk in ranks.items() if rk == 0)
    return KernelReport(lens, images, zero_set, ranks)


@dataclass(frozen=True)
class Comparison:
    verdict: Verdict
    first: KernelReport
    second: KernelReport


def compare_lens_spaces(first, second):
    """DISTINGUISHED when the per-component ranks differ as multisets."""
    if first.p != second.p:
        raise ParameterError(f"cannot compare L(., {first.p}) with L(., {second.p})")
    ra, rb = analyze_kernel(first), analyze_kernel(second)
    if ra.rank_multiset() != rb.rank_multiset():
        return Comparison(Verdict.DISTINGUISHED, ra, rb)
    return Comparison(Verdict.INCONCLUSIVE, ra, rb)
