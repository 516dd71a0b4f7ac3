import pytest

from agcodes.errors import NonPrimitivePolynomial
from agcodes.galois import ZERO, field_new, gf9


# Independent oracle: GF(3)[x] arithmetic on coefficient tuples, reduced
# modulo x^2 + x + 2 by hand (x^2 = 2x + 1).
def mul_coords(u, v):
    c0 = u[0] * v[0]
    c1 = u[0] * v[1] + u[1] * v[0]
    c2 = u[1] * v[1]
    return ((c0 + c2) % 3, (c1 + 2 * c2) % 3)


def add_coords(u, v):
    return ((u[0] + v[0]) % 3, (u[1] + v[1]) % 3)


@pytest.fixture(scope="module")
def f9():
    return gf9()


def test_gf9_alpha_satisfies_cubic(f9):
    # alpha^3 + alpha + 1 = 0, checked in the coordinate representation
    a3 = f9.coords(3)
    a1 = f9.coords(1)
    s = add_coords(add_coords(a3, a1), (1, 0))
    assert s == (0, 0)
    # spot values: alpha^2 = 2*alpha + 1, alpha^3 = 2*alpha + 2
    assert f9.coords(2) == (1, 2)
    assert f9.coords(3) == (2, 2)


def test_gf9_tables_bijective(f9):
    assert len(set(f9.exp_table)) == 8
    assert f9.exp_table[0] == (1, 0)
    for i, coords in enumerate(f9.exp_table):
        assert f9.log_table[coords] == i


def test_gf2_trivial():
    f = field_new(2, 1, [1, 1])
    assert f.q == 2
    assert f.exp_table == [(1,)]
    assert f.add(0, 0) == ZERO  # 1 + 1 = 0
    assert f.mul(0, 0) == 0


def test_non_primitive_rejected():
    # x^2 + 1 over GF(3): its root has order 4, not 8
    with pytest.raises(NonPrimitivePolynomial):
        field_new(3, 2, [1, 0, 1])


def test_not_monic_rejected():
    with pytest.raises(ValueError):
        field_new(3, 2, [2, 1, 2])


def test_neg_of_one_is_alpha4(f9):
    assert f9.neg(0) == 4


def test_add_examples(f9):
    assert f9.add(0, 4) == ZERO  # 1 + (-1) = 0
    for x in f9.elements():
        assert f9.add(x, ZERO) == x
        assert f9.add(ZERO, x) == x


def test_add_matches_coordinate_oracle(f9):
    for a in f9.elements():
        for b in f9.elements():
            got = f9.add(a, b)
            want = f9.from_coords(add_coords(f9.coords(a), f9.coords(b)))
            assert got == want, (a, b)


def test_mul_examples(f9):
    assert f9.mul(1, 7) == 0  # exponents mod 8
    assert f9.pow(2, -1) == 6
    assert f9.mul(ZERO, 5) == ZERO
    for a in f9.elements():
        for b in f9.elements():
            got = f9.mul(a, b)
            want = f9.from_coords(mul_coords(f9.coords(a), f9.coords(b)))
            assert got == want, (a, b)


def test_inv_div_pow(f9):
    for a in f9.nonzero():
        assert f9.mul(a, f9.inv(a)) == 0
        assert f9.pow(a, f9.q - 1) == 0
        assert f9.pow(a, -1) == f9.inv(a)
    with pytest.raises(ZeroDivisionError):
        f9.inv(ZERO)
    with pytest.raises(ZeroDivisionError):
        f9.div(3, ZERO)
    assert f9.pow(ZERO, 0) == 0  # 0^0 = 1 convention
    assert f9.pow(ZERO, 3) == ZERO


def test_distributivity_exhaustive(f9):
    # a * (b + c) == a*b + a*c over every triple
    for a in f9.elements():
        for b in f9.elements():
            for c in f9.elements():
                left = f9.mul(a, f9.add(b, c))
                right = f9.add(f9.mul(a, b), f9.mul(a, c))
                assert left == right


def test_neg_is_multiplication_by_alpha_half(f9):
    half = (f9.q - 1) // 2
    for x in f9.elements():
        assert f9.neg(x) == f9.mul(x, half)


def test_characteristic(f9):
    # p * x = 0 for every x
    for x in f9.elements():
        acc = ZERO
        for _ in range(f9.p):
            acc = f9.add(acc, x)
        assert acc == ZERO


def test_larger_field_smoke():
    # GF(8) from x^3 + x + 1 over GF(2)
    f = field_new(2, 3, [1, 1, 0, 1])
    assert f.q == 8
    for a in f.nonzero():
        assert f.pow(a, 7) == 0
        assert f.add(a, a) == ZERO
