"""Polynomial arithmetic, the grevlex order, parser and printer."""

import random
from fractions import Fraction

import pytest

from logtangent.fields import QQ, FieldMismatchError, PrimeField
from logtangent.poly import ParseError, grevlex_key, monomials_of_degree


def test_parse_mixed_sign_quadratic(qq4):
    p = qq4.parse("2*x1*x3 - x1^2")
    assert dict(p.terms) == {
        (0, 1, 0, 1): Fraction(2),
        (0, 2, 0, 0): Fraction(-1),
    }
    assert p.degree == 2 and p.is_homogeneous()


def test_parse_cancellation_to_zero(qq4):
    assert qq4.parse("x0 - x0").is_zero()


def test_parse_square_expansion(qq4):
    # oracle: expand by one explicit multiplication
    s = qq4.parse("x0 + x1")
    assert qq4.parse("(x0+x1)^2") == s * s
    assert dict(qq4.parse("(x0+x1)^2").terms) == {
        (2, 0, 0, 0): Fraction(1),
        (1, 1, 0, 0): Fraction(2),
        (0, 2, 0, 0): Fraction(1),
    }


def test_parse_rational_literals(qq4):
    p = qq4.parse("1/2*x0 + 3/2*x0")
    assert p == qq4.parse("2*x0")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("x0/2", "division"),
        ("(x0+x1)/3", "division"),
        ("x0 +", "expected"),
        ("2x1", "missing '*'"),
        ("x0^-2", "exponent"),
        ("x0^x1", "exponent"),
        ("y + x0", "unknown variable"),
        ("x9", "unknown variable"),
        ("x0 * * x1", "expected"),
        ("(x0", "expected ')'"),
    ],
)
def test_parse_errors(qq4, text, fragment):
    with pytest.raises(ParseError) as err:
        qq4.parse(text)
    assert fragment in str(err.value)
    assert err.value.offset >= 0


def test_parse_error_offset_points_at_problem(qq4):
    with pytest.raises(ParseError) as err:
        qq4.parse("x0 + x7^2")
    assert err.value.offset == 5


def test_mul_difference_of_squares(qq4):
    a = qq4.parse("x0 + x1")
    b = qq4.parse("x0 - x1")
    assert a * b == qq4.parse("x0^2 - x1^2")


def test_mul_absorbs_zero(qq4):
    assert (qq4.parse("x0^2 + 3*x2") * qq4.zero()).is_zero()


def test_square_of_linear_form_all_variables(qq4):
    # multinomial count: 4 squares with coefficient 1, 6 cross terms with 2
    p = qq4.parse("(x0 + x1 + x2 + x3)^2")
    assert len(p.terms) == 10
    coeffs = sorted(c for _, c in p.terms)
    assert coeffs == [1, 1, 1, 1, 2, 2, 2, 2, 2, 2]


def test_mixed_fields_rejected(qq4, fp4):
    with pytest.raises(FieldMismatchError):
        qq4.parse("x0") * fp4.parse("x0")


def test_partial_derivative_pair_entry(qq4):
    p = qq4.parse("2*x1*x3 - x1^2")
    assert p.partial(3) == qq4.parse("2*x1")
    assert p.partial(0).is_zero()


def test_partial_derivative_power_rule(qq4):
    for k in range(1, 6):
        p = qq4.variable(2) ** k
        assert p.partial(2) == qq4.parse(f"{k}*x2^{k-1}" if k > 1 else f"{k}")


def test_euler_relation_on_random_homogeneous(qq4):
    rng = random.Random(1131)
    for _ in range(40):
        d = rng.randint(1, 5)
        p = qq4.random_homogeneous(d, rng)
        if p.is_zero():
            continue
        total = qq4.zero()
        for i in range(4):
            total = total + qq4.variable(i) * p.partial(i)
        assert total == p * d


def test_grevlex_is_graded_and_transitive():
    rng = random.Random(2026)
    monos = [tuple(rng.randint(0, 4) for _ in range(4)) for _ in range(60)]
    for a in monos[:20]:
        for b in monos[20:40]:
            if grevlex_key(a) > grevlex_key(b):
                assert sum(a) >= sum(b)
            for c in monos[40:]:
                if grevlex_key(a) > grevlex_key(b) and grevlex_key(b) > grevlex_key(c):
                    assert grevlex_key(a) > grevlex_key(c)
                # multiplication compatibility
                ac = tuple(x + y for x, y in zip(a, c))
                bc = tuple(x + y for x, y in zip(b, c))
                assert (grevlex_key(a) > grevlex_key(b)) == (
                    grevlex_key(ac) > grevlex_key(bc)
                )


def test_grevlex_classic_degree_two_chain():
    x0x0 = (2, 0, 0, 0)
    x0x1 = (1, 1, 0, 0)
    x1x1 = (0, 2, 0, 0)
    x0x3 = (1, 0, 0, 1)
    assert grevlex_key(x0x0) > grevlex_key(x0x1) > grevlex_key(x1x1) > grevlex_key(x0x3)


def test_printer_parser_round_trip(qq4, fp4):
    rng = random.Random(77)
    for ring in (qq4, fp4):
        for _ in range(25):
            p = ring.random_homogeneous(rng.randint(0, 4), rng)
            assert ring.parse(str(p)) == p


def test_terms_sorted_strictly_descending(qq4):
    rng = random.Random(5)
    for _ in range(20):
        p = qq4.random_homogeneous(3, rng)
        keys = [grevlex_key(e) for e, _ in p.terms]
        assert keys == sorted(keys, reverse=True)
        assert len(set(keys)) == len(keys)


def test_compose_linear_permutation(qq4):
    p = qq4.parse("x0^2*x1 - x3^3")
    # swap x0 <-> x1
    mat = [
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]
    matq = [[QQ.of(v) for v in row] for row in mat]
    assert p.compose_linear(matq) == qq4.parse("x1^2*x0 - x3^3")


def test_monomials_of_degree_count():
    assert sum(1 for _ in monomials_of_degree(4, 3)) == 20  # C(6,3)
    assert sum(1 for _ in monomials_of_degree(3, 4)) == 15  # C(6,2)


def test_prime_field_arithmetic():
    K = PrimeField(32003)
    a, b = K.of(-5), K.of(7)
    assert 0 <= a < 32003
    assert K.mul(a, K.inv(a)) == K.one
    assert K.add(a, K.neg(a)) == K.zero
    assert K.of(3, 2) == K.mul(K.of(3), K.inv(K.of(2)))


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, 32004])
def test_prime_field_rejects_bad_modulus(bad):
    with pytest.raises(ValueError):
        PrimeField(bad)
