"""Reidemeister and Whitehead torsion, the Dennis trace, and the check of

    Delta f(x) = f(Delta x) + f(x * dlog tau(f))

for power-map homotopy equivalences ``f: L(k1, p) -> L(k2, p)``, ``t -> t^a``.
"""

import json
import os
from dataclasses import dataclass

from .biforms import (
    BiForm,
    Quotient,
    apply_power_map_biform,
    homogenize,
    normal_form,
)
from .errors import MissingDatum, NotAUnit, ParameterError
from .forms import d_log, reduce_relative
from .group_algebra import (
    GroupAlgebraElement,
    PowerMap,
    apply_power_map,
    augmentation,
    invert_unit,
    torsion_quotient,
)
from .string_ops import LensSpace, RhoClass, coproduct_rho, minimal_m

FIMAGE_ENV = "STRING_TORSION_FIMAGE"


def reidemeister_biform(lens, modulus=0):
    """Homogenized torsion ``(t^r - t2^r)(t - t2)`` as a polynomial in t, t2."""
    p, r = lens.p, lens.r
    a = BiForm.from_terms({(r, 0): 1, (0, r): -1}, p, modulus)
    b = BiForm.from_terms({(1, 0): 1, (0, 1): -1}, p, modulus)
    return a * b


def reidemeister_element(lens):
    """``(t^r - 1)(t - 1)`` in Z[Z_p], i.e. the torsion with t2 set to 1."""
    p = lens.p
    tr = GroupAlgebraElement.from_terms({lens.r: 1, 0: -1}, p)
    t1 = GroupAlgebraElement.from_terms({1: 1, 0: -1}, p)
    return tr * t1


def _geometric(step, count, order, modulus):
    # sum_{j=0}^{count-1} t^(step j) t2^(step (count-1-j))
    return BiForm.from_terms(
        [((step * j, step * (count - 1 - j)), 1) for j in range(count)], order, modulus
    )


def torsion_map(lens, l, ctx=Quotient.Q):
    """``t^l -> (t^l - t2^l) dlog R`` with ``R = (t^r - t2^r)(t - t2)``.

    Neither factor of ``dlog R`` is formed on its own. The two quotients
    ``(t^l - t2^l)/(t - t2) dt`` and ``(t^l - t2^l)/(t^r - t2^r) dt^r`` are
    written as geometric sums, the second one after rewriting
    ``t^l = (t^r)^(k l)``; ``dt = t dt/t`` and ``dt^r = r t^r dt/t``.

    With ``ctx=RELATIVE`` this returns the representative printed by the
    ``table`` command; with ``ctx=Q`` the canonical normal form.
    """
    p, k, r = lens.p, lens.k, lens.r
    if not 0 <= l < p:
        raise ParameterError(f"l must lie in [0, {p}), got {l}")
    if l == 0:
        return BiForm.zero(p, p)
    dt = BiForm.monomial(1, 0, p, p)
    dtr = BiForm.monomial(r, 0, p, p, coeff=r)
    raw = _geometric(1, l, p, p) * dt + _geometric(r, k * l, p, p) * dtr
    return normal_form(raw, ctx)


class WhiteheadElement:
    """A unit of Z[Z_p] with augmentation 1, compared modulo trivial units t^a."""

    def __init__(self, rep):
        if rep.modulus:
            raise ParameterError("Whitehead representatives are integral")
        if augmentation(rep) != 1:
            raise ParameterError(f"representative {rep} must have augmentation 1")
        self.rep = rep
        self.inverse_rep = invert_unit(rep)  # raises NotAUnit

    def canonical(self):
        return min(self.rep.rotate(s).coeffs for s in range(self.rep.order))

    def __eq__(self, other):
        if not isinstance(other, WhiteheadElement):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __mul__(self, other):
        return WhiteheadElement(self.rep * other.rep)

    def inverse(self):
        return WhiteheadElement(self.inverse_rep)

    def __repr__(self):
        return f"WhiteheadElement({str(self.rep)!r})"

    def __str__(self):
        return str(self.rep)


def whitehead_of_power_equiv(source, target, a):
    """Whitehead torsion of ``f: source -> target`` inducing ``t -> t^a`` on pi_1.

    ``tau = f^*(R_target) / R_source`` in Z[t]/(Sigma), where ``f^*`` is the
    power map by ``a^{-1}`` and ``R = (t^r - 1)(t - 1)``; the result is lifted
    to augmentation 1. Equivalently ``R_target = f(R_source tau)``.
    """
    if source.p != target.p:
        raise ParameterError("lens spaces with different fundamental groups")
    f = PowerMap(a, source.p)
    pulled = apply_power_map(f.inverse(), reidemeister_element(target))
    tau = torsion_quotient(pulled, reidemeister_element(source))
    try:
        return WhiteheadElement(tau)
    except NotAUnit:
        raise NotAUnit(f"torsion quotient {tau} is not a unit of Z[Z_{source.p}]") from None


def dennis_trace(tau):
    """``tau^{-1} dtau`` modulo the span of ``dt/t``."""
    rep = tau.rep if isinstance(tau, WhiteheadElement) else tau
    return reduce_relative(d_log(rep))


def correction_term(tau, l):
    """``(t^l - t2^l) * homogenize(dlog tau)`` on the source side, before f."""
    omega = d_log(tau.rep if isinstance(tau, WhiteheadElement) else tau)
    p = omega.order
    shift = BiForm.from_terms({(l, 0): 1, (0, l): -1}, p, omega.modulus)
    return shift * homogenize(omega)


# f-image data


@dataclass(frozen=True)
class FImageRecord:
    k1: int
    k2: int
    p: int
    a: int
    l: int
    m: int
    l_image: int
    m_image: int

    def key(self):
        return (self.k1 % self.p, self.k2 % self.p, self.p, self.a % self.p, self.l, self.m)


BUILTIN_FIMAGES = (
    # f: L(1,7) -> L(2,7), t -> t^2 sends [rho_{1,0}] to [rho_{2,3}]
    FImageRecord(k1=1, k2=2, p=7, a=2, l=1, m=0, l_image=2, m_image=3),
)


class FImageTable:
    """Known images ``f([rho_{l,m}]) = [rho_{l', m'}]``; immutable after load."""

    def __init__(self, records=BUILTIN_FIMAGES):
        self._table = {}
        for rec in records:
            self._table[rec.key()] = RhoClass(rec.l_image, rec.m_image)

    @classmethod
    def from_json(cls, path, include_builtin=True):
        with open(path) as fh:
            data = json.load(fh)
        if isinstance(data, dict):
            data = data.get("records", [data])
        records = [FImageRecord(**rec) for rec in data]
        if include_builtin:
            records = list(BUILTIN_FIMAGES) + records
        return cls(records)

    @classmethod
    def default(cls):
        path = os.environ.get(FIMAGE_ENV)
        return cls.from_json(path) if path else cls()

    def lookup(self, source, target, a, rho):
        key = (source.k, target.k, source.p, a % source.p, rho.l, rho.m)
        return self._table.get(key)

    def __len__(self):
        return len(self._table)


def image_class(source, target, a, rho, ctx, table=None):
    """The class f([rho]) in H_3 of the target.

    Looked up in ``table``; the identity map needs no datum, and in the
    Delta(K) quotients any lift of ``t^(a l)`` will do.
    """
    table = table if table is not None else FImageTable.default()
    found = table.lookup(source, target, a, rho)
    if found is not None:
        return found
    if source == target and a % source.p == 1:
        return rho
    if Quotient.parse(ctx) in (Quotient.MOD_DELTA_K, Quotient.Q):
        l = (a * rho.l) % target.p
        return RhoClass(l, minimal_m(target, l))
    raise MissingDatum(
        f"no f-image for {rho} under {source} -> {target}, t -> t^{a}; "
        f"supply one via ${FIMAGE_ENV}"
    )


@dataclass(frozen=True)
class TransformationCheck:
    source: LensSpace
    target: LensSpace
    a: int
    rho: RhoClass
    image: RhoClass
    context: Quotient
    tau: WhiteheadElement
    lhs: BiForm  # Delta f(x)
    pushed: BiForm  # f(Delta x)
    correction: BiForm  # f(x * dlog tau)
    residual: BiForm  # rhs - lhs, raw
    reduced_residual: BiForm

    @property
    def rhs(self):
        return self.pushed + self.correction

    @property
    def passed(self):
        return self.reduced_residual.is_zero()


def check_transformation(source, target, a, rho, ctx=Quotient.RELATIVE, table=None):
    """Evaluate both sides of the transformation formula for ``x = [rho]``."""
    ctx = Quotient.parse(ctx)
    f = PowerMap(a, source.p)
    image = image_class(source, target, a, rho, ctx, table)
    tau = whitehead_of_power_equiv(source, target, a)

    lhs = coproduct_rho(target, image)
    pushed = apply_power_map_biform(f, coproduct_rho(source, rho))
    correction = apply_power_map_biform(f, correction_term(tau, rho.l))
    residual = pushed + correction - lhs
    return TransformationCheck(
        source=source,
        target=target,
        a=f.exponent,
        rho=rho,
        image=image,
        context=ctx,
        tau=tau,
        lhs=lhs,
        pushed=pushed,
        correction=correction,
        residual=residual,
        reduced_residual=normal_form(residual, ctx),
    )
