import json

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from string_torsion import (
    BiForm,
    OneForm,
    ParameterError,
    Quotient,
    QuotientContext,
    UnsupportedContext,
    apply_power_map_biform,
    homogenize,
    normal_form,
    parse_biform,
    sigma_hom,
)
from string_torsion.biforms import dehomogenize, reduce_sigma_only, relation_generators

N = 7


def biforms(modulus=N):
    return st.lists(
        st.tuples(st.integers(0, N - 1), st.integers(0, N - 1), st.integers(-6, 6)),
        max_size=12,
    ).map(lambda ts: BiForm.from_terms([((i, j), c) for i, j, c in ts], N, modulus))


contexts = st.sampled_from([Quotient.RELATIVE, Quotient.MOD_DELTA_K, Quotient.Q])


def to_sympy(x):
    t, s = sympy.symbols("t t2")
    return sum(c * t**i * s**j for (i, j), c in x.terms())


def from_sympy(expr, modulus=N):
    t, s = sympy.symbols("t t2")
    terms = [((i, j), int(c)) for (i, j), c in sympy.Poly(sympy.expand(expr), t, s).terms()]
    return BiForm.from_terms(terms, N, modulus)


class TestBasics:
    def test_format_roundtrip(self):
        text = "5 t^1 t2^1 + 4 t^4 t2^5 + 4 t^5 t2^4 dt/t"
        x = parse_biform(text, N, N)
        assert str(x) == text
        assert parse_biform("0", N, N).is_zero()
        assert str(BiForm.zero(N, N)) == "0"

    def test_dt_basis_shifts(self):
        assert parse_biform("(2 t2^3) dt", N, N) == BiForm.monomial(1, 3, N, N, 2)

    def test_zero_exponents_are_omitted(self):
        assert str(BiForm.from_terms({(2, 0): 1, (0, 3): 1, (0, 0): 1}, N, N)) == (
            "1 + 1 t2^3 + 1 t^2 dt/t"
        )

    def test_json_roundtrip(self):
        x = parse_biform("2 t^1 t2^5 + 3 t^4 t2^2 dt/t", N, N)
        assert BiForm.from_json(json.dumps(x.to_json())) == x

    def test_rings_must_match(self):
        with pytest.raises(ParameterError):
            BiForm.zero(N, N) + BiForm.zero(N, 0)

    def test_swap(self):
        assert BiForm.monomial(1, 3, N).swap() == BiForm.monomial(3, 1, N)

    @given(biforms(0), biforms(0))
    def test_product_matches_sympy(self, x, y):
        t, s = sympy.symbols("t t2")
        expected = sympy.rem(
            sympy.rem(sympy.expand(to_sympy(x) * to_sympy(y)), t**N - 1, t), s**N - 1, s
        )
        assert x * y == from_sympy(expected, 0)


class TestSigmaHom:
    def test_absorbs_t_over_t2(self):
        s = sigma_hom(N, N)
        assert BiForm.monomial(1, 0, N, N) * s == BiForm.monomial(0, 1, N, N) * s

    def test_t_minus_t2_times_homogenized_sum(self):
        # (t - t2) * sum_i t^i t2^(-i) telescopes to zero in the cyclic quotient
        t, s = sympy.symbols("t t2")
        g = sum(t**i * s ** (N - i) for i in range(N))
        assert from_sympy((t - s) * g, 0).is_zero()
        assert (BiForm.from_terms({(1, 0): 1, (0, 1): -1}, N) * sigma_hom(N)).is_zero()


class TestHomogenize:
    def test_value(self):
        w = OneForm.from_terms({2: 3}, N)
        assert homogenize(w) == BiForm.monomial(2, -2, N, N, 3)

    @given(st.lists(st.integers(0, 6), min_size=N, max_size=N), st.lists(st.integers(0, 6), min_size=N, max_size=N))
    def test_additive_and_invertible(self, a, b):
        u, v = OneForm(N, N, tuple(a)), OneForm(N, N, tuple(b))
        assert homogenize(u + v) == homogenize(u) + homogenize(v)
        assert dehomogenize(homogenize(u)) == u


class TestPowerMap:
    def test_value(self):
        x = BiForm.monomial(1, 2, N, N)
        assert apply_power_map_biform(2, x) == BiForm.monomial(2, 4, N, N, 2)
        assert apply_power_map_biform(2, x, form=False) == BiForm.monomial(2, 4, N, N)

    @given(biforms(), st.integers(1, 6), contexts)
    def test_preserves_relations(self, x, a, ctx):
        # power maps send relations to relations, so they descend to the quotient
        lhs = normal_form(apply_power_map_biform(a, normal_form(x, ctx)), ctx)
        rhs = normal_form(apply_power_map_biform(a, x), ctx)
        assert lhs == rhs


class TestNormalForm:
    def test_raw_is_identity(self):
        x = BiForm.monomial(0, 3, N, N)
        assert normal_form(x, Quotient.RAW) == x

    def test_relative_kills_axes(self):
        x = BiForm.from_terms({(0, 3): 1, (3, 0): 1, (2, 2): 1}, N, N)
        assert normal_form(x, "relative") == BiForm.monomial(2, 2, N, N)

    def test_mod_delta_k_over_z_rejected(self):
        with pytest.raises(UnsupportedContext):
            normal_form(BiForm.zero(N, 0), Quotient.MOD_DELTA_K)
        with pytest.raises(UnsupportedContext):
            QuotientContext(Quotient.MOD_DELTA_K, N, 0)

    def test_q_over_z_allowed(self):
        ctx = QuotientContext("q", N, 0)
        assert ctx.reduce(sigma_hom(N, 0)).is_zero()

    @pytest.mark.parametrize("kind", ["mod-delta-k", "q"])
    @pytest.mark.parametrize("l", range(N))
    def test_relations_vanish(self, kind, l):
        rel = BiForm.monomial(l, 0, N, N) * sigma_hom(N, N)
        assert normal_form(rel, kind).is_zero()

    def test_every_generator_vanishes(self):
        for kind in Quotient:
            for g in relation_generators(kind, N, N):
                assert normal_form(g, kind).is_zero()

    @given(biforms(), contexts)
    def test_idempotent(self, x, ctx):
        y = normal_form(x, ctx)
        assert normal_form(y, ctx) == y

    @given(biforms(), biforms(), contexts)
    def test_linear(self, x, y, ctx):
        assert normal_form(x + y, ctx) == normal_form(x, ctx) + normal_form(y, ctx)

    @given(biforms(), contexts)
    def test_differs_by_a_relation(self, x, ctx):
        # x - NF(x) lies in the span of the relation generators: its own
        # normal form is zero, and NF is determined class by class
        assert normal_form(x - normal_form(x, ctx), ctx).is_zero()

    @given(biforms())
    def test_pivot_entries_are_zero(self, x):
        y = normal_form(x, Quotient.Q)
        assert all(y.coeffs[N - 1][(c - (N - 1)) % N] == 0 for c in range(N) if c != N - 1)
        assert y.coeffs[N - 2][1] == 0

    def test_dimension_of_quotient(self):
        # (n-1)^2 surviving monomials minus n independent relations
        free = [BiForm.monomial(i, j, N, N) for i in range(1, N) for j in range(1, N)]
        images = {normal_form(m, "q") for m in free}
        survivors = {m for m in free if normal_form(m, "q") == m}
        assert len(survivors) == (N - 1) ** 2 - N
        assert BiForm.zero(N, N) not in images

    @given(biforms())
    def test_sigma_only_kills_sigma(self, x):
        y = reduce_sigma_only(x + BiForm.monomial(3, 0, N, N) * sigma_hom(N, N))
        assert y == reduce_sigma_only(x)


class TestParse:
    def test_unknown_context(self):
        with pytest.raises(ParameterError):
            Quotient.parse("nope")

    def test_aliases(self):
        assert Quotient.parse("mod_delta_k") is Quotient.MOD_DELTA_K
        assert Quotient.parse("Q") is Quotient.Q
