import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from string_torsion import (
    GroupAlgebraElement,
    LiftError,
    NotAUnit,
    ParameterError,
    PowerMap,
    apply_power_map,
    augmentation,
    invert_unit,
    multiply,
    parse_element,
    sigma,
    torsion_quotient,
)
from string_torsion.group_algebra import convolution_matrix

from conftest import elements


def el(text, n=7, q=0):
    return parse_element(text, n, q)


def naive_product(x, y):
    """Multiply as polynomials in Z[t], then fold t^i onto t^(i mod n)."""
    prod = [0] * (2 * x.order - 1)
    for i, a in enumerate(x.coeffs):
        for j, b in enumerate(y.coeffs):
            prod[i + j] += a * b
    folded = [0] * x.order
    for i, c in enumerate(prod):
        folded[i % x.order] += c
    return GroupAlgebraElement(x.order, x.modulus, tuple(folded))


class TestConstruction:
    def test_parse_and_print(self):
        x = el("t + t^2 + t^3 - t^5 - t^6")
        assert x.coeffs == (0, 1, 1, 1, 0, -1, -1)
        assert str(x) == "t + t^2 + t^3 - t^5 - t^6"

    def test_parse_reduces_exponents(self):
        assert el("t^8 - 1") == el("t - 1")

    def test_modulus_reduces_coefficients(self):
        x = GroupAlgebraElement(7, 7, (-1, 8, 0, 0, 0, 0, 14))
        assert x.coeffs == (6, 1, 0, 0, 0, 0, 0)

    def test_wrong_length(self):
        with pytest.raises(ParameterError):
            GroupAlgebraElement(7, 0, (1, 2, 3))

    def test_mixing_rings_is_an_error(self):
        with pytest.raises(ParameterError):
            el("t") * el("t", 5)
        with pytest.raises(ParameterError):
            el("t") + el("t", 7, 7)


class TestMultiply:
    def test_expansion(self):
        assert el("t^3 + t^2 + t + 1") * el("t + 1") == el("1 + 2t + 2t^2 + 2t^3 + t^4")

    def test_identity(self, tau):
        assert tau * GroupAlgebraElement.one(7) == tau

    def test_tau_times_inverse_by_naive_oracle(self, tau):
        inv = el("t^4 - t^5 + t^6")
        assert naive_product(tau, inv) == GroupAlgebraElement.one(7)
        assert multiply(tau, inv) == GroupAlgebraElement.one(7)

    @given(elements(), elements())
    def test_matches_naive_oracle(self, x, y):
        assert multiply(x, y) == naive_product(x, y)

    @given(elements(), elements(), elements())
    def test_ring_axioms(self, x, y, z):
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @given(elements(), elements())
    def test_augmentation_is_multiplicative(self, x, y):
        assert augmentation(x * y) == augmentation(x) * augmentation(y)

    @given(elements(modulus=7), elements(modulus=7))
    def test_mod_p_ring_axioms(self, x, y):
        assert x * y == y * x
        assert augmentation(x * y) == (augmentation(x) * augmentation(y)) % 7


class TestSigma:
    def test_values(self):
        assert sigma(7).coeffs == (1,) * 7
        assert sigma(1) == GroupAlgebraElement.one(1)

    def test_absorbs_t(self):
        assert sigma(7) * el("t") == sigma(7)

    def test_augmentation(self, tau):
        assert augmentation(tau) == 1
        assert augmentation(sigma(7)) == 7
        assert augmentation(GroupAlgebraElement.zero(7)) == 0


class TestPowerMap:
    def test_relabel(self):
        assert apply_power_map(PowerMap(2, 7), el("t + t^3")) == el("t^2 + t^6")

    def test_identity(self, tau):
        assert apply_power_map(PowerMap(1, 7), tau) == tau

    def test_square_of_t_minus_1(self):
        r1 = el("t - 1") * el("t - 1")
        assert r1 == el("t^2 - 2t + 1")
        assert apply_power_map(PowerMap(2, 7), r1) == el("t^4 - 2t^2 + 1")

    def test_noninvertible(self):
        with pytest.raises(ParameterError):
            PowerMap(3, 6)
        with pytest.raises(ParameterError):
            PowerMap(0, 7)

    @given(st.integers(1, 6), st.integers(1, 6), elements())
    def test_composition(self, a, b, x):
        fa, fb = PowerMap(a, 7), PowerMap(b, 7)
        assert apply_power_map(fa, apply_power_map(fb, x)) == apply_power_map(
            PowerMap(a * b, 7), x
        )

    @given(st.integers(1, 6), elements(), elements())
    def test_ring_homomorphism(self, a, x, y):
        f = PowerMap(a, 7)
        assert apply_power_map(f, x * y) == apply_power_map(f, x) * apply_power_map(f, y)


class TestInvertUnit:
    def test_tau_inverse(self, tau):
        assert invert_unit(tau) == el("t^4 - t^5 + t^6")

    @pytest.mark.parametrize("a", range(7))
    def test_trivial_units(self, a):
        assert invert_unit(el(f"t^{a}")) == el(f"t^{(7 - a) % 7}")

    def test_sigma_is_not_a_unit(self):
        # independent check that the convolution matrix is singular
        assert abs(np.linalg.det(np.array(convolution_matrix(sigma(7)), dtype=float))) < 1e-9
        with pytest.raises(NotAUnit):
            invert_unit(sigma(7))

    def test_rational_but_not_integral(self):
        with pytest.raises(NotAUnit):
            invert_unit(el("2"))

    def test_mod_p_inverse(self):
        x = el("2", 7, 7)
        assert invert_unit(x) == el("4", 7, 7)
        u = el("1 + t", 7, 7)
        assert u * invert_unit(u) == GroupAlgebraElement.one(7, 7)

    def test_negative_power(self, tau):
        assert tau ** -2 == invert_unit(tau) * invert_unit(tau)


class TestTorsionQuotient:
    def test_quotient_gives_tau(self):
        num = el("t^4 - 1") * el("t^2 - 1")
        den = el("t - 1") * el("t - 1")
        assert torsion_quotient(num, den) == el("t + t^2 + t^3 - t^5 - t^6")

    def test_quotient_gives_tau_inverse(self):
        num = el("t^8 - 1") * el("t^8 - 1")
        den = el("t^4 - 1") * el("t^2 - 1")
        assert torsion_quotient(num, den) == el("t^4 - t^5 + t^6")

    def test_lift_is_product_minus_sigma(self):
        # (t^3 + t^2 + t + 1)(t + 1) - Sigma
        expected = el("t^3 + t^2 + t + 1") * el("t + 1") - sigma(7)
        num = el("t^4 - 1") * el("t^2 - 1")
        den = el("t - 1") * el("t - 1")
        assert torsion_quotient(num, den) == expected

    def test_self_quotient(self):
        x = el("t^3 - 1") * el("t - 1")
        assert torsion_quotient(x, x) == GroupAlgebraElement.one(7)

    def test_zero_divisor_denominator(self):
        with pytest.raises(NotAUnit):
            torsion_quotient(el("t - 1"), sigma(7))

    def test_no_augmentation_one_lift(self):
        # (t^4 - 1)/(t - 1) = 1 + t + t^2 + t^3 has augmentation 4, not 1 mod 7
        with pytest.raises(LiftError):
            torsion_quotient(el("t^4 - 1"), el("t - 1"))

    @settings(max_examples=60)
    @given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
    def test_quotient_times_den_is_num_mod_sigma(self, a, b, c, d):
        num = el(f"t^{a} - 1") * el(f"t^{b} - 1")
        den = el(f"t^{c} - 1") * el(f"t^{d} - 1")
        try:
            x = torsion_quotient(num, den)
        except LiftError:
            return
        diff = x * den - num
        assert len(set(diff.coeffs)) == 1  # an integer multiple of Sigma
        assert augmentation(x) == 1
