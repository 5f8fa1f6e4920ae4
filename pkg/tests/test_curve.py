import random

import pytest

from quadff.curve import (DEGENERATE, OUT_OF_SCOPE, EvenModel, ModelError,
                          OddModel, from_char2_equation, from_odd_equation,
                          least_nonsquare, make_even_model, model_from_dict,
                          model_to_dict, normalize_u, parse_curve)
from quadff.fqpoly import Poly, parse_poly
from quadff.gf import field_of_order

F2 = field_of_order(2)
F3 = field_of_order(3)
F4 = field_of_order(4)
F5 = field_of_order(5)


def P(F, s):
    return parse_poly(F, s)


# --- odd characteristic -----------------------------------------------------


def test_odd_model_basics():
    m = from_odd_equation(F3, P(F3, "x^3+x"))
    assert (m.c, m.genus, m.t) == (1, 1, 3)          # x * (x^2+1), + infinity
    assert [p.degree for p, _ in m.ramified_finite()] == [1, 2]
    m2 = from_odd_equation(F3, P(F3, "2x^3+2x"))
    assert m2.c == least_nonsquare(F3) and m2.f == m.f


def test_odd_square_factors_are_stripped():
    # (x+1)^2 * f defines the same field as f
    f = P(F3, "x^3+x")
    squared = P(F3, "(x+1)^2") * f
    assert from_odd_equation(F3, squared) == from_odd_equation(F3, f)


def test_odd_rejects_out_of_scope():
    with pytest.raises(ModelError) as e:
        from_odd_equation(F3, P(F3, "(x+1)^2"))      # square rhs: splits
    assert e.value.code == DEGENERATE
    with pytest.raises(ModelError) as e:
        from_odd_equation(F3, P(F3, "2*(x+1)^2"))    # constant-field ext
    assert e.value.code == OUT_OF_SCOPE
    with pytest.raises(ModelError) as e:
        from_odd_equation(F3, P(F3, "x^2+1"))        # infinity inert/split
    assert e.value.code == OUT_OF_SCOPE
    with pytest.raises(ValueError):
        from_odd_equation(F2, P(F2, "x^3+x+1"))      # wrong characteristic


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_least_nonsquare(q):
    F = field_of_order(q)
    lns = least_nonsquare(F)
    assert lns == min(a for a in range(1, q) if not F.is_square[a])


# --- characteristic two ------------------------------------------------------


def test_even_model_basics():
    m = make_even_model(F2, P(F2, "x^2+x+1"), P(F2, "x"))
    assert (m.genus, m.t) == (1, 2)
    assert m.den.is_monic()
    assert [(str(p), mult) for p, mult in m.ramified_finite()] == [("x", 1)]


def test_from_char2_equation_matches_u_form():
    B, C = P(F2, "x^3+x+1"), P(F2, "(x^3+x+1)*(x^4+x+1)")
    assert from_char2_equation(F2, B, C) == make_even_model(F2, C, B * B)
    with pytest.raises(ModelError):
        from_char2_equation(F2, Poly(F2, [0]), C)


def test_normalize_u_is_idempotent():
    rng = random.Random(9)
    seen = 0
    for _ in range(300):
        num = Poly(F2, [rng.randrange(2) for _ in range(7)] + [1])
        den = Poly(F2, [rng.randrange(2) for _ in range(3)] + [1])
        try:
            n1, d1 = normalize_u(F2, num, den)
        except ModelError:
            continue
        seen += 1
        assert normalize_u(F2, n1, d1) == (n1, d1)
        assert d1.is_monic() and n1.gcd(d1).degree == 0
        assert (n1.degree - d1.degree) % 2 == 1 and n1.degree > d1.degree
        assert all(mult % 2 == 1 for _, mult in EvenModel(F2, n1, d1)
                   .ramified_finite())
    assert seen > 50


def test_normalize_u_reduces_even_pole_orders():
    # 1/x + 1/x^2 = (w^2+w) with w = 1/x: the extension splits
    with pytest.raises(ModelError) as e:
        make_even_model(F2, P(F2, "x+1"), P(F2, "x^2"))
    assert e.value.code == DEGENERATE
    # x^3/(x+1)^2 reduces to the polynomial u = x
    n1, d1 = normalize_u(F2, P(F2, "x^3"), P(F2, "(x+1)^2"))
    assert (str(n1), str(d1)) == ("x", "1")


def test_normalize_u_strips_even_degrees_at_infinity():
    # u = x^4 + x^3 - shift by w = x^2 leaves an odd-degree tail
    n1, d1 = normalize_u(F2, P(F2, "x^4+x^3"), Poly.one(F2))
    assert d1.degree == 0 and n1.degree % 2 == 1


def test_degenerate_and_scope_errors_char2():
    w = P(F2, "x^3+x")
    with pytest.raises(ModelError) as e:
        make_even_model(F2, w * w + w, Poly.one(F2))   # u = w^2+w
    assert e.value.code == DEGENERATE
    with pytest.raises(ModelError) as e:
        make_even_model(F4, Poly.const(F4, 2), Poly.one(F4))  # u = z
    assert e.value.code == OUT_OF_SCOPE                 # constant-field ext
    with pytest.raises(ModelError) as e:
        make_even_model(F2, P(F2, "x"), P(F2, "x^2+x"))  # deg u < 0
    assert e.value.code == OUT_OF_SCOPE
    with pytest.raises(ValueError):
        normalize_u(F3, P(F3, "x"), Poly.one(F3))
    with pytest.raises(ZeroDivisionError):
        normalize_u(F2, P(F2, "x"), Poly(F2, [0]))


def test_genus_via_conductor():
    # simple poles: deg num = 2g+1 - sum deg p_i
    for num_s, den_s, g in [("x^2+x+1", "x", 1),
                            ("x^4+x^3+1", "x^3+x^2+1", 3),
                            ("x^3+x^2+1", "x^2+x", 2)]:
        m = make_even_model(F2, P(F2, num_s), P(F2, den_s))
        assert m.genus == g
        sum_deg = sum(p.degree for p, _ in m.ramified_finite())
        assert m.num.degree == 2 * g + 1 - sum_deg
    # a triple pole: 2g - 2 = -4 + (3+1)*1 + (1+1)*1
    m = make_even_model(F2, P(F2, "x^4+1"), P(F2, "x^3"))
    assert m.genus == 2 and m.ramified_finite()[0][1] == 3


def test_ramification_budget_inequality():
    # 2g+1 > sum (gamma_i + 1) deg p_i whenever deg u > 0
    for num_s, den_s in [("x^2+x+1", "x"), ("x^4+1", "x^3"),
                         ("x^5+x^4+x^3+x^2+1", "x^4+x^3")]:
        m = make_even_model(F2, P(F2, num_s), P(F2, den_s))
        wt = sum((mult + 1) * p.degree for p, mult in m.ramified_finite())
        assert 2 * m.genus + 1 > wt


# --- text input and serialization -------------------------------------------


def test_parse_curve_all_forms():
    assert parse_curve(F3, "y^2 = x^3+x") == from_odd_equation(
        F3, P(F3, "x^3+x"))
    u = make_even_model(F2, P(F2, "x^2+x+1"), P(F2, "x"))
    assert parse_curve(F2, "u = (x^2+x+1)/(x)") == u
    assert parse_curve(F2, "y^2 + x*y = x*(x^2+x+1)") == u
    assert parse_curve(F2, "y^2 + (x)*y = x^3+x^2+x") == u
    assert parse_curve(F2, "y^2 + y = (x^2+x+1)/(x)") == u
    assert parse_curve(F2, "u = x^3+x^2+1").den.degree == 0


def test_parse_curve_rejections():
    with pytest.raises(ModelError):
        parse_curve(F2, "y^2 = x^3+x+1")       # inseparable in char 2
    with pytest.raises(ModelError):
        parse_curve(F3, "u = (x)/(x+1)")       # u-form needs char 2
    with pytest.raises(ModelError):
        parse_curve(F3, "y^2 + x*y = x^3")     # By-form needs char 2
    with pytest.raises(ValueError):
        parse_curve(F3, "y^3 = x")
    with pytest.raises(ValueError):
        parse_curve(F2, "y^2 + x*y")           # no right-hand side


def test_describe_parses_back():
    models = [
        from_odd_equation(F3, P(F3, "2*(x+2)*(x^2+1)*(x^2+x+2)")),
        from_odd_equation(F5, P(F5, "x^3+2x")),
        make_even_model(F2, P(F2, "x^4+x^3+1"), P(F2, "x^3+x^2+1")),
        make_even_model(F4, P(F4, "z*x^2+z^2*x+z^2"), P(F4, "x")),
        make_even_model(F2, P(F2, "x^3+x+1"), Poly.one(F2)),
    ]
    for m in models:
        assert parse_curve(m.F, m.describe()) == m


def test_model_dict_roundtrip():
    models = [
        from_odd_equation(F3, P(F3, "x^3+x")),
        make_even_model(F4, P(F4, "z*x^2+z^2*x+z^2"), P(F4, "x")),
    ]
    for m in models:
        d = model_to_dict(m)
        assert model_from_dict(d) == m


def test_t_counts_on_recorded_examples():
    m14 = from_odd_equation(F3, P(F3, "x*(x+1)*(x+2)*(x^2+1)"))
    assert m14.t == 5
    m1 = from_char2_equation(F2, P(F2, "x"), P(F2, "x*(x^2+x+1)"))
    assert m1.t == 2
