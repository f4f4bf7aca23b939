import random
from fractions import Fraction as F
from math import ceil

import mpmath
import pytest
import sympy

from cfseries import (
    CoefficientError, ComplexField, ConfigurationError, DomainError, FloatField, NonConvergenceError, QComplex,
    build_coeff_seq, convergents, equivalence_transform, eval_backward, eval_lentz,
    preset_coeffs, tail_backward,
)
from cfseries.contfrac import coefficients_equal
from cfseries.verify import random_coeffs, random_rational

GOLDEN = mpmath.findroot(lambda t: t * t + t - 1, 0.6)


class TestConvergents:
    def test_fibonacci_ratios(self):
        vals = [c.value for c in convergents(build_coeff_seq("1", "1"), 5)]
        assert vals == [1, F(1, 2), F(2, 3), F(3, 5), F(5, 8), F(8, 13)]

    def test_head_only(self):
        (c,) = convergents(build_coeff_seq([7], [3]), 0)
        assert (c.P, c.Q, c.value) == (7, 3, F(7, 3))

    def test_determinant_hand_case(self):
        cs = convergents(build_coeff_seq("1", "1"), 3)
        assert cs[3].P * cs[2].Q - cs[2].P * cs[3].Q == 3 * 3 - 2 * 5 == -1

    def test_determinant_sign_symbolic(self):
        a = sympy.symbols("a0:4")
        b = sympy.symbols("b0:4")
        p_prev, q_prev, p, q = 0, 1, a[0], b[0]
        for n in range(4):
            if n:
                p_prev, p = p, b[n] * p + a[n] * p_prev
                q_prev, q = q, b[n] * q + a[n] * q_prev
            det = sympy.expand(p * q_prev - p_prev * q)
            assert det == sympy.expand((-1) ** n * sympy.Mul(*a[: n + 1]))

    def test_at_infinity(self):
        cs = convergents(build_coeff_seq([1, 1], [1, -1]), 1)
        assert cs[1].at_infinity and cs[1].value is None

    def test_float_rescaling(self, f128):
        c = build_coeff_seq("1", "2^600", field=f128)
        cs = convergents(c, 6)
        exact = convergents(build_coeff_seq("1", "2^600"), 6)
        two = f128.convert(2)
        for got, ref in zip(cs, exact):
            assert abs(got.value - f128.convert(ref.value)) <= abs(f128.convert(ref.value)) * two ** -120
            big = max(abs(got.P), abs(got.Q))
            assert big <= two ** 600 * 2
        assert max(abs(cs[-1].P), abs(cs[-1].Q)) < two ** 1200


def test_determinant_identity_random():
    for seed in range(100):
        rng = random.Random(seed)
        c = random_coeffs(rng, 21)
        cs = convergents(c, 20)
        prod = c.a(0)
        for n in range(1, 21):
            prod *= c.a(n)
            assert cs[n].P * cs[n - 1].Q - cs[n - 1].P * cs[n].Q == (-1) ** n * prod


def test_backward_equals_last_convergent():
    for seed in range(100):
        rng = random.Random(seed)
        N = rng.randint(0, 20)
        c = random_coeffs(rng, N + 1)
        conv = convergents(c, N)[N]
        try:
            val = eval_backward(c, N)
        except DomainError:
            continue
        if not conv.at_infinity:
            assert val == conv.value


class TestBackward:
    def test_unit(self):
        assert eval_backward(build_coeff_seq("1", "1"), 4) == F(5, 8)

    def test_head_only(self):
        assert eval_backward(build_coeff_seq([5], [3]), 0) == F(5, 3)

    def test_equals_tail(self):
        c = build_coeff_seq("m+2", "3*m-1/2")
        assert eval_backward(c, 12) == tail_backward(c, 12).value

    def test_app3_canonical(self, f128):
        v = eval_backward(preset_coeffs("app3-canonical", {"q": 2, "z": 1}, f128), 30)
        assert abs(v - F(70991669439, 10**11)) < 1e-11
        assert abs(v - F(7099158, 10**7)) < 2e-6

    def test_zero_denominator(self):
        with pytest.raises(DomainError):
            eval_backward(build_coeff_seq([1, 1], [1, 0]), 1)


class TestLentz:
    def test_golden(self, f128):
        res = eval_lentz(build_coeff_seq("1", "1", field=f128), 1e-14)
        assert abs(res.value - GOLDEN) < 1e-13
        assert abs(res.value - mpmath.mpf("0.6180339887498949")) < 1e-13

    def test_terminating(self, f128):
        c = build_coeff_seq("0", "1", overrides={"a0": 7, "b0": 3}, field=f128)
        res = eval_lentz(c, 1e-30)
        assert res.iterations == 1
        assert abs(res.value - f128.convert(F(7, 3))) < 1e-35

    def test_non_convergence(self, f128):
        c = build_coeff_seq("-1", "1", overrides={"a0": 1}, field=f128)
        with pytest.raises(NonConvergenceError) as info:
            eval_lentz(c, 1e-14, max_iter=10)
        assert info.value.iterations == 10
        assert info.value.value is not None

    def test_exact_realization_rejected(self):
        with pytest.raises(ConfigurationError):
            eval_lentz(build_coeff_seq("1", "1"), 1e-10)

    def test_complex(self):
        cf = ComplexField(FloatField(128))
        z = QComplex(F(1, 3), F(1, 2))
        c = preset_coeffs("app1", {"c": 1, "z": z}, cf)
        res = eval_lentz(c, 1e-30)
        with mpmath.workprec(128):
            zz = mpmath.mpc(mpmath.mpf(1) / 3, mpmath.mpf(1) / 2)
            ref = mpmath.hyp0f1(2, zz) / mpmath.hyp0f1(1, zz)
        assert abs(res.value - ref) < 1e-25
        assert abs(eval_backward(c, 60) - ref) < 1e-25

    def test_three_way_agreement(self, f128):
        for c in [
            preset_coeffs("app1", {"c": 1, "z": F(1, 2)}, f128),
            preset_coeffs("app1", {"c": 2, "z": F(-3, 10)}, f128),
            preset_coeffs("app1", {"c": F(1, 2), "z": F(1, 4)}, f128),
            preset_coeffs("app2", {"q": F(1, 5), "z": 1}, f128),
            preset_coeffs("app3-paper", {"q": 2, "z": 1, "c": 0}, f128),
            preset_coeffs("app3-canonical", {"q": 2, "z": 1}, f128),
        ]:
            lentz = eval_lentz(c, 1e-32).value
            back = eval_backward(c, 60)
            conv = convergents(c, 60)[-1].value
            assert abs(lentz - back) < 1e-20
            assert abs(conv - back) < 1e-30


class TestEquivalence:
    def test_identity(self):
        c = build_coeff_seq("m+1", "m-5/2")
        assert coefficients_equal(equivalence_transform(c, lambda m: 1), c, 10)

    def test_doubling_keeps_values(self):
        c = build_coeff_seq("1", "1")
        t = equivalence_transform(c, lambda m: 1 if m == 0 else 2)
        assert t.a(1) == 2 and t.a(2) == 4 and t.b(1) == 2
        assert [x.value for x in convergents(t, 12)] == [x.value for x in convergents(c, 12)]

    def test_app3_floor_factor(self):
        q = F(3, 2)
        paper = preset_coeffs("app3-paper", {"q": q, "z": F(5, 7), "c": 0})
        canon = preset_coeffs("app3-canonical", {"q": q, "z": F(5, 7)})
        mapped = equivalence_transform(paper, lambda m: q ** (m // 2))
        assert coefficients_equal(mapped, canon, 6)
        assert coefficients_equal(mapped, canon, 30)

    def test_app3_ceiling_factor_does_not_map(self):
        q = F(2)
        paper = preset_coeffs("app3-paper", {"q": q, "z": 1, "c": 0})
        canon = preset_coeffs("app3-canonical", {"q": q, "z": 1})
        mapped = equivalence_transform(paper, lambda m: q ** ceil(m / 2))
        assert not coefficients_equal(mapped, canon, 6)
        assert [mapped.b(m) for m in range(5)] == [1, 4, 4, 16, 16]

    def test_r0_must_be_one(self):
        with pytest.raises(ConfigurationError):
            equivalence_transform(build_coeff_seq("1", "1"), [2, 1])

    def test_zero_factor(self):
        t = equivalence_transform(build_coeff_seq("1", "1"), [1, 0, 1])
        with pytest.raises(CoefficientError) as info:
            t.b(1)
        assert info.value.index == 1 and isinstance(info.value.cause, DomainError)

    def test_sequence_factors_bound_length(self):
        t = equivalence_transform(build_coeff_seq("1", "1"), [1, 2, 3])
        assert t.length == 3


def test_equivalence_invariance_random():
    for seed in range(100):
        rng = random.Random(seed)
        c = random_coeffs(rng, 16)
        r = [F(1)] + [random_rational(rng, nonzero=True) for _ in range(15)]
        t = equivalence_transform(c, r)
        for x, y in zip(convergents(c, 15), convergents(t, 15)):
            assert x.at_infinity == y.at_infinity
            if not x.at_infinity:
                assert x.value == y.value
