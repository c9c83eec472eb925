from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cwbd.finite_field import (field_of_order, is_irreducible, make_field, prime_power,
                               primitive_element, square_partition)

ODD_ORDERS = [3, 5, 7, 9, 11, 13, 19, 23, 25, 27, 31]
ORDERS_3MOD4 = [3, 7, 11, 19, 23, 27, 31]


def test_prime_field_is_integers_mod_p():
    f = make_field(7)
    assert f.order == 7
    assert [f.mul(3, x) for x in range(7)] == [3 * x % 7 for x in range(7)]
    assert [f.add(5, x) for x in range(7)] == [(5 + x) % 7 for x in range(7)]


def _brute_smallest_irreducible(p, k):
    # oracle: polynomial with no factor of degree <= k/2, by exhaustive product check
    from itertools import product
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return tuple(out)
    reducible = set()
    for d in range(1, k // 2 + 1):
        for lo1 in product(range(p), repeat=d):
            for lo2 in product(range(p), repeat=k - d):
                reducible.add(mul(lo1 + (1,), lo2 + (1,)))
    for enc in range(p ** k):
        low = tuple((enc // p ** i) % p for i in range(k))
        if low + (1,) not in reducible:
            return low + (1,)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (2, 4)])
def test_modulus_is_smallest_monic_irreducible(p, k):
    f = make_field(p, k)
    assert f.modulus == _brute_smallest_irreducible(p, k)
    assert is_irreducible(list(f.modulus), p)


def test_gf4_and_gf27_moduli():
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(3, 3).modulus == (1, 2, 0, 1)  # x^3 + 2x + 1


def test_bad_inputs():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(3, 0)
    with pytest.raises(ValueError):
        make_field(2, 17)
    with pytest.raises(ValueError):
        field_of_order(12)
    assert prime_power(12) is None and prime_power(27) == (3, 3)


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 49])
def test_field_axioms_exhaustive_small(q):
    f = field_of_order(q)
    els = list(f.elements())
    for a in els:
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a in els[:9]:
        for b in els:
            assert f.mul(a, b) == f._slow_mul(a, b)
            assert f.mul(a, b) == f.mul(b, a)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([8, 9, 25, 27, 81, 121]), st.data())
def test_distributivity(q, data):
    f = field_of_order(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)


def test_square_partitions_examples():
    assert square_partition(make_field(7)).squares == {1, 2, 4}
    assert square_partition(make_field(7)).nonsquares == {3, 5, 6}
    assert square_partition(make_field(11)).squares == {1, 3, 4, 5, 9}
    p3 = square_partition(make_field(3))
    assert p3.squares == {1} and p3.nonsquares == {2}
    with pytest.raises(ValueError):
        square_partition(make_field(2, 3))


@pytest.mark.parametrize("t", ODD_ORDERS)
def test_square_partition_invariants(t):
    f = field_of_order(t)
    part = square_partition(f)
    S, N = part.squares, part.nonsquares
    assert len(S) == len(N) == (t - 1) // 2
    assert not S & N and 0 not in S | N
    assert S == {f.mul(y, y) for y in range(1, t)}
    for a in range(1, t):
        assert (a in S) == (f.pow(a, (t - 1) // 2) == 1)
    for s in S:
        assert all(f.mul(s, s2) in S for s2 in S)
        assert all(f.mul(s, n) in N for n in N)
    if t % 4 == 3:
        assert f.neg(1) in N


def test_primitive_examples():
    assert primitive_element(make_field(7)).value == 3
    assert primitive_element(make_field(3)).value == 2
    assert primitive_element(make_field(11)).value == 2


@pytest.mark.parametrize("t", ODD_ORDERS + [4, 8, 16, 32])
def test_primitive_generates_and_is_smallest(t):
    f = field_of_order(t)
    x = primitive_element(f).value
    assert {f.pow(x, e) for e in range(t - 1)} == set(range(1, t))
    for y in range(1, x):
        assert len({f.pow(y, e) for e in range(t - 1)}) < t - 1


def test_field_element_operators():
    f = make_field(3, 2)
    a, b = f.element(4), f.element(7)
    assert int(a + b) == f.add(4, 7)
    assert int(a * b) == f.mul(4, 7)
    assert (a / b) * b == a
    assert a ** 8 == f.element(1)
    assert a.coeffs == (1, 1)
