from hypothesis import given, strategies as st

from mincodes.poly2 import BinaryPolynomial, pdivmod, pgcd, pmul, pmulmod, ppowmod, x_n_minus_1

polys = st.integers(min_value=0, max_value=(1 << 40) - 1)
nonzero = st.integers(min_value=1, max_value=(1 << 20) - 1)


def test_parse_and_format_round_trip():
    p = BinaryPolynomial.parse("X^{16} + X^{12} + X + 1")
    assert p.exponents() == [0, 1, 12, 16]
    assert str(p) == "X^16 + X^12 + X + 1"
    assert BinaryPolynomial.parse(str(p)) == p


def test_parse_cancels_repeated_terms():
    assert BinaryPolynomial.parse("X + X + 1").bits == 1
    assert BinaryPolynomial.parse("1 + 1").bits == 0


def test_degree_weight():
    p = BinaryPolynomial(0b101001)
    assert p.degree == 5 and p.weight == 3
    assert p.coefficients() == [1, 0, 0, 1, 0, 1]


def test_x_n_minus_1():
    assert x_n_minus_1(7).bits == (1 << 7) | 1


@given(polys, polys)
def test_mul_commutes(a, b):
    assert pmul(a, b) == pmul(b, a)


@given(polys, nonzero)
def test_divmod_identity(a, b):
    q, r = pdivmod(a, b)
    assert pmul(q, b) ^ r == a
    assert r == 0 or r.bit_length() < b.bit_length()


@given(polys, polys, nonzero)
def test_mulmod_matches_mul_then_mod(a, b, m):
    assert pmulmod(a, b, m) == pdivmod(pmul(a, b), m)[1]


@given(nonzero, nonzero)
def test_gcd_divides_both(a, b):
    g = pgcd(a, b)
    assert pdivmod(a, g)[1] == 0 and pdivmod(b, g)[1] == 0


def test_powmod_fermat():
    # x^(2^5) = x mod an irreducible quintic
    assert ppowmod(0b10, 32, 0b100101) == 0b10
