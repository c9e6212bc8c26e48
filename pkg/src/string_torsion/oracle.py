"""Floating point cross-check of the coproduct formula.

Self-intersections of ``rho_{l,m}`` are found by brute force: for sample
points ``z`` of S^3 and every deck transformation ``g^j`` we look for
``s in (0, 1/p)`` with ``rho(s, z) = g^j z``, scanning a fine grid and
polishing local minima of ``|rho(s, z) - g^j z|^2`` with Newton's method.
Times are then matched to rationals, orientations come from a numerical
Jacobian in a tubular chart, and the H_1 weights and loop components are
read off from deck indices. Nothing here evaluates the closed formula.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .biforms import BiForm
from .errors import DegeneratePoint, FreenessViolation, ParameterError, PrecisionError
from .string_ops import check_rho

K1 = "K1"  # z1 = 0
K2 = "K2"  # z2 = 0

TWO_PI_I = 2j * np.pi


def e(x):
    return np.exp(TWO_PI_I * np.asarray(x, dtype=float))


def act(l, winding, s, z):
    """``rho(s, z) = (e(l s) z1, e(N s) z2)``."""
    return np.array([e(l * s) * z[0], e(winding * s) * z[1]])


def deck(lens, j, z):
    return np.array([e(j / lens.p) * z[0], e(j * lens.k / lens.p) * z[1]])


def deck_index(lens, w, z, tol=1e-9):
    """The j with ``w = g^j z``, or None."""
    hits = [j for j in range(lens.p) if np.abs(deck(lens, j, z) - w).max() < tol]
    if len(hits) > 1:
        raise PrecisionError("deck translates of the sample point coincide")
    return hits[0] if hits else None


@dataclass(frozen=True)
class IntersectionLocus:
    circle: str
    times: tuple  # Fractions in (0, 1/p), sorted
    decks: tuple  # deck index j of each time (component of the first loop)
    signs: tuple
    weight: int  # class of the circle in H_1(M) = Z_p

    def __len__(self):
        return len(self.times)


def sample_points(circle, count, rng):
    theta = rng.uniform(0.0, 1.0, size=count)
    if circle == K2:
        return [np.array([e(t), 0j]) for t in theta]
    if circle == K1:
        return [np.array([0j, e(t)]) for t in theta]
    radius = np.sqrt(rng.uniform(0.09, 0.91, size=count))
    phi = rng.uniform(0.0, 1.0, size=count)
    return [
        np.array([a * e(t), np.sqrt(1 - a * a) * e(f)])
        for a, t, f in zip(radius, theta, phi)
    ]


def _roots(lens, l, winding, z, tol):
    """All (s, j) with rho(s, z) = g^j z and s in (0, 1/p)."""
    p = lens.p
    freq = max(abs(l), abs(winding), 1)
    steps = 50 * p * freq
    s = np.linspace(0.0, 1.0 / p, steps + 1)
    h = s[1] - s[0]
    path = np.stack([e(l * s) * z[0], e(winding * s) * z[1]])
    found = []
    for j in range(p):
        target = deck(lens, j, z)
        f = np.abs(path - target[:, None]) ** 2
        f = f.sum(axis=0)
        interior = np.arange(1, steps)
        is_min = (f[interior] <= f[interior - 1]) & (f[interior] <= f[interior + 1])
        # |d/ds (rho - g^j z)| <= 2 pi freq sqrt(2), so a root is within h of a
        # grid point whose value is at most (2 pi freq sqrt(2) h)^2
        bound = (2 * np.pi * freq * np.sqrt(2) * h) ** 2 * 4
        for i in interior[is_min & (f[interior] < bound)]:
            root = _newton(l, winding, z, target, s[i])
            if root is None:
                continue
            if root <= tol or root >= 1.0 / p - tol:
                continue
            if np.abs(act(l, winding, root, z) - target).max() < 1e-7:
                if not any(abs(root - r) < tol and j == jj for r, jj in found):
                    found.append((root, j))
    return sorted(found)


def _newton(l, winding, z, target, s0, iterations=30):
    w = np.array([TWO_PI_I * l, TWO_PI_I * winding])
    s = float(s0)
    for _ in range(iterations):
        val = np.array([e(l * s) * z[0], e(winding * s) * z[1]])
        d = val - target
        d1 = w * val
        d2 = w * w * val
        g1 = 2 * np.real(np.vdot(d, d1))
        g2 = 2 * np.real(np.vdot(d1, d1) + np.vdot(d, d2))
        if g2 <= 0:
            return None
        step = g1 / g2
        s -= step
        if abs(step) < 1e-16:
            break
    return s


def to_fraction(x, max_denominator, tol):
    frac = Fraction(x).limit_denominator(max_denominator)
    if abs(float(frac) - x) > tol:
        raise PrecisionError(f"time {x!r} has no rational within {tol} (denominator <= {max_denominator})")
    return frac


def circle_weight(lens, circle):
    """H_1(M) class of the exceptional circle, in units of ``s -> (e(s), 0)``.

    Moving a point of the circle by 1/p of a turn is a deck transformation;
    its index is the class.
    """
    z = np.array([1 + 0j, 0j]) if circle == K2 else np.array([0j, 1 + 0j])
    moved = np.array([e(1 / lens.p) * z[0], e(1 / lens.p) * z[1]])
    j = deck_index(lens, moved, z)
    if j is None:
        raise PrecisionError("the exceptional circle is not invariant")
    return j


def _chart_residual(lens, l, winding, circle, j, alpha, t, x, y):
    """Chart coordinates of ``rho(t, P) - g^j P`` for P = chart(alpha, x + i y).

    K2 chart: (alpha, w) -> (e(alpha) sqrt(1 - |w|^2), w); K1 swaps the
    coordinates. Output: (angle difference in turns, Re, Im).
    """
    w = x + 1j * y
    radial = np.sqrt(1 - abs(w) ** 2)
    if circle == K2:
        P = np.array([e(alpha) * radial, w])
        a, b = 0, 1
    else:
        P = np.array([w, e(alpha) * radial])
        a, b = 1, 0
    Q = act(l, winding, t, P)
    R = deck(lens, j, P)
    dang = (np.angle(Q[a]) - np.angle(R[a])) / (2 * np.pi)
    dang = (dang + 0.5) % 1.0 - 0.5
    dw = Q[b] - R[b]
    return np.array([dang, dw.real, dw.imag])


def derivative_det(lens, l, winding, circle, t, j, alpha=0.1, h=1e-6):
    """Determinant of d(rho - g^j)/d(t, Re w, Im w) at a locus point."""
    base = (float(t), 0.0, 0.0)
    cols = []
    for k in range(3):
        plus = list(base)
        minus = list(base)
        plus[k] += h
        minus[k] -= h
        fp = _chart_residual(lens, l, winding, circle, j, alpha, *plus)
        fm = _chart_residual(lens, l, winding, circle, j, alpha, *minus)
        cols.append((fp - fm) / (2 * h))
    return float(np.linalg.det(np.column_stack(cols)))


def orientation_sign(lens, rho, circle, t, tol=1e-9):
    """Orientation of the self-intersection circle through time ``t``."""
    winding = lens.winding(rho.l, rho.m)
    z = np.array([1 + 0j, 0j]) if circle == K2 else np.array([0j, 1 + 0j])
    j = deck_index(lens, act(rho.l, winding, float(t), z), z, tol=1e-7)
    if j is None:
        raise ParameterError(f"t = {t} is not a self-intersection time on {circle}")
    det = derivative_det(lens, rho.l, winding, circle, float(t), j)
    if abs(det) < tol:
        raise DegeneratePoint(f"singular derivative at t = {t} on {circle}")
    return 1 if det > 0 else -1


def _locus_on(lens, rho, circle, samples, rng, tol):
    winding = lens.winding(rho.l, rho.m)
    maxden = lens.p * max(rho.l, winding)
    reference = None
    for z in sample_points(circle, samples, rng):
        roots = _roots(lens, rho.l, winding, z, tol)
        found = tuple((to_fraction(s, maxden, tol), j) for s, j in roots)
        if reference is None:
            reference = found
        elif found != reference:
            raise PrecisionError(f"{circle} locus differs between sample points")
    times = tuple(t for t, _ in reference)
    decks = tuple(j for _, j in reference)
    signs = tuple(orientation_sign(lens, rho, circle, t) for t in times)
    return IntersectionLocus(circle, times, decks, signs, circle_weight(lens, circle))


def enumerate_locus(lens, rho, tol=1e-9, samples=3, generic_samples=8, seed=0):
    """Self-intersection loci on (K1, K2); raises if a generic point intersects."""
    check_rho(lens, rho)
    if tol <= 0:
        raise ParameterError("tol must be positive")
    rng = np.random.default_rng(seed)
    winding = lens.winding(rho.l, rho.m)
    for z in sample_points("generic", generic_samples, rng):
        roots = _roots(lens, rho.l, winding, z, tol)
        if roots:
            raise FreenessViolation(f"{rho} on {lens} meets itself at generic point {z}: {roots}")
    k1 = _locus_on(lens, rho, K1, samples, rng, tol)
    k2 = _locus_on(lens, rho, K2, samples, rng, tol)
    return k1, k2


def full_loop_component(lens, rho):
    """The component of the whole loop, i.e. the J with rho(1/p, z) = g^J z."""
    winding = lens.winding(rho.l, rho.m)
    z = np.array([np.sqrt(0.5) + 0j, np.sqrt(0.5) * e(0.3)])
    J = deck_index(lens, act(rho.l, winding, 1.0 / lens.p, z), z, tol=1e-7)
    if J is None:
        raise PrecisionError("rho(1/p, z) is not a deck translate of z")
    return J


def oracle_coproduct(lens, rho, **kwargs):
    """Assemble Delta([rho]) from the enumerated loci.

    A split at deck index j gives loops in components j and J - j, where J
    is the component of the whole loop; the coefficient is sign * weight.
    """
    k1, k2 = enumerate_locus(lens, rho, **kwargs)
    J = full_loop_component(lens, rho)
    terms = []
    for locus in (k2, k1):
        for j, sign in zip(locus.decks, locus.signs):
            terms.append(((j, J - j), sign * locus.weight))
    return BiForm.from_terms(terms, lens.p, lens.p)
