from fractions import Fraction as F

import pytest

from cfseries import (
    CoefficientError, ConfigurationError, ExprSyntaxError, FloatField, SeriesField,
    build_coeff_seq, parse_coeff_list, preset_coeffs,
)
from cfseries.coeffspec import alternating_exponent, load_coeff_file


def a_list(seq, n):
    return [seq.a(m) for m in range(n)]


def b_list(seq, n):
    return [seq.b(m) for m in range(n)]


class TestBuild:
    def test_constant_rules(self):
        s = build_coeff_seq("1", "1")
        assert a_list(s, 5) == [1] * 5 and b_list(s, 5) == [1] * 5

    def test_app2_shape_with_override(self):
        s = build_coeff_seq("z*q^m", "1", {"q": "1/2", "z": 1}, {"a0": 1})
        assert a_list(s, 4) == [1, F(1, 2), F(1, 4), F(1, 8)]
        assert b_list(s, 4) == [1] * 4

    def test_app1_shape_with_override(self):
        s = build_coeff_seq("z", "m+c", {"c": 2, "z": 1}, {"a0": 2})
        assert a_list(s, 4) == [2, 1, 1, 1]
        assert b_list(s, 4) == [2, 3, 4, 5]

    def test_override_touches_index_zero_only(self):
        s = build_coeff_seq("m", "m+1", overrides={"b0": 7})
        assert b_list(s, 3) == [7, 2, 3]
        assert a_list(s, 3) == [0, 1, 2]

    def test_eval_error_names_index(self):
        s = build_coeff_seq("1/(m-3)", "1")
        assert s.a(2) == -1
        with pytest.raises(CoefficientError) as info:
            s.a(3)
        assert info.value.index == 3

    def test_parse_error_propagates(self):
        with pytest.raises(ExprSyntaxError):
            build_coeff_seq("(m+", "1")

    def test_missing_parameter(self):
        with pytest.raises(ConfigurationError):
            build_coeff_seq("m+c", "1")

    def test_explicit_lists(self):
        s = build_coeff_seq([1, 2, 3], ["1/2", "0.25", 3])
        assert b_list(s, 3) == [F(1, 2), F(1, 4), 3]
        assert s.length == 3
        with pytest.raises(CoefficientError):
            s.a(3)

    def test_realization_is_respected(self):
        f = FloatField(128)
        s = build_coeff_seq("1/3", "m", field=f)
        assert s.a(0) == f.one / 3


class TestCoeffList:
    def test_parse(self):
        a, b = parse_coeff_list("1 2\n3/4 0.5\n-1 7\n\n")
        assert a == [1, F(3, 4), -1] and b == [2, F(1, 2), 7]

    def test_malformed(self):
        with pytest.raises(ConfigurationError):
            parse_coeff_list("1 2\n3\n")

    def test_file(self, tmp_path):
        p = tmp_path / "c.txt"
        p.write_text("5 2\n1 1\n")
        s = load_coeff_file(str(p))
        assert (s.a(0), s.b(0), s.a(1)) == (5, 2, 1)


class TestPresets:
    def test_app3_paper_exponents(self):
        assert [alternating_exponent(m) for m in range(7)] == [0, 1, 1, 2, 2, 3, 3]

    def test_app3_paper_denominators(self):
        s = preset_coeffs("app3-paper", {"q": 2, "z": 1, "c": 0})
        assert b_list(s, 7) == [1, 2, 2, 4, 4, 8, 8]
        assert a_list(s, 4) == [1, 1, 1, 1]

    def test_app3_paper_offset_c(self):
        # partial sums s_m = 0, -1, 1, -2 so e_m = 1, 0, 2, 1
        s = preset_coeffs("app3-paper", {"q": 2, "z": 1, "c": 1})
        assert b_list(s, 4) == [2, 1, 4, 2]

    def test_app1_zero_z(self):
        s = preset_coeffs("app1", {"c": 2, "z": 0})
        assert a_list(s, 4) == [2, 0, 0, 0] and b_list(s, 4) == [2, 3, 4, 5]

    def test_app2_values(self):
        s = preset_coeffs("app2", {"q": F(1, 2), "z": 1})
        assert a_list(s, 4) == [1, F(1, 2), F(1, 4), F(1, 8)]

    @pytest.mark.parametrize("name,params,a_hand,b_hand", [
        ("app1", {"c": F(1, 2), "z": F(3, 7)},
         lambda m: F(1, 2) if m == 0 else F(3, 7), lambda m: F(1, 2) + m),
        ("app2", {"q": F(2, 3), "z": F(-5, 4)},
         lambda m: F(1) if m == 0 else F(-5, 4) * F(2, 3) ** m, lambda m: F(1)),
        ("app3-paper", {"q": F(3), "z": F(1, 5), "c": 0},
         lambda m: F(1) if m == 0 else F(1, 5), lambda m: F(3) ** ((m + 1) // 2)),
        ("app3-canonical", {"q": F(3), "z": F(1, 5)},
         lambda m: F(1) if m == 0 else F(1, 5) * F(3) ** (m - 1), lambda m: F(3) ** m),
        ("constant", {"a": 2, "b": F(1, 3)}, lambda m: F(2), lambda m: F(1, 3)),
    ])
    def test_first_ten_coefficients(self, name, params, a_hand, b_hand):
        s = preset_coeffs(name, params)
        assert a_list(s, 10) == [a_hand(m) for m in range(10)]
        assert b_list(s, 10) == [b_hand(m) for m in range(10)]

    def test_list_preset(self):
        s = preset_coeffs("list", {"a": [1, 2], "b": [3, 4]})
        assert a_list(s, 2) == [1, 2] and b_list(s, 2) == [3, 4]

    def test_missing_parameter(self):
        with pytest.raises(ConfigurationError):
            preset_coeffs("app2", {"q": F(1, 2)})

    def test_unknown(self):
        with pytest.raises(ConfigurationError):
            preset_coeffs("app9", {})

    def test_series_realization(self):
        f = SeriesField(4)
        s = preset_coeffs("app2", {"q": F(1, 3), "z": f.generator}, f)
        assert s.a(2) == f.generator * F(1, 9)

    def test_non_integer_c_float_only(self):
        f = FloatField(64)
        s = preset_coeffs("app3-paper", {"q": 2, "z": 1, "c": F(1, 2)}, f)
        assert abs(s.b(0) - f.ctx.sqrt(2)) < 1e-15
        with pytest.raises(CoefficientError):
            preset_coeffs("app3-paper", {"q": 2, "z": 1, "c": F(1, 2)}).b(0)
