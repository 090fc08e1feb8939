import json
import random

import numpy as np
import pytest

from nihocodes.fields import (FieldTower, build_tower, factorize, find_irreducible, is_irreducible,
                              is_prime)


@pytest.fixture(scope="module")
def t16():
    return build_tower(2, 2, 2)


@pytest.fixture(scope="module")
def t27():
    return build_tower(3, 1, 3)


def _order_by_iteration(tower, g):
    x, k = g, 1
    while x != 1:
        x = tower.mul(x, g)
        k += 1
    return k


def test_primes_and_factorization():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(255) == {3: 1, 5: 1, 17: 1}
    assert factorize(728) == {2: 3, 7: 1, 13: 1}
    assert factorize(2**32 - 1) == {3: 1, 5: 1, 17: 1, 257: 1, 65537: 1}


def test_irreducibility():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)  # (x+1)^2
    assert find_irreducible(2, 2) == (1, 1, 1)
    # x^2 + 1 is irreducible over GF(3)
    assert find_irreducible(3, 2) == (1, 0, 1)


@pytest.mark.parametrize("plm,q,r,u", [((2, 2, 2), 4, 16, 17), ((2, 3, 1), 8, 8, 9)])
def test_tower_sizes(plm, q, r, u):
    T = build_tower(*plm)
    assert (T.q, T.r, T.order) == (q, r, r * r)
    assert len(T.unit_circle()) == u


def test_gamma_order_27(t27):
    n = t27.order - 1
    assert n == 728
    assert t27.pow(t27.gamma, n) == 1
    for d in (2, 7, 13):
        assert t27.pow(t27.gamma, n // d) != 1
    assert _order_by_iteration(t27, t27.gamma) == 728


def test_gamma_enumerates_group():
    for plm in [(2, 2, 2), (3, 1, 3), (5, 1, 2), (7, 1, 2), (2, 4, 2)]:
        T = build_tower(*plm)
        assert len(np.unique(T.power_of_gamma(np.arange(T.order - 1)))) == T.order - 1


def test_tables_agree_with_generic(t27):
    rng = random.Random(1)
    for _ in range(200):
        a, b = rng.randrange(t27.order), rng.randrange(t27.order)
        assert t27.mul(a, b) == (t27._mul_generic(a, b) if a and b else 0)


@pytest.mark.parametrize("plm", [(2, 2, 2), (3, 1, 3), (5, 2, 1), (2, 3, 3)])
def test_ring_axioms(plm):
    T = build_tower(*plm)
    rng = random.Random(7)
    for _ in range(1000):
        a, b, c = (T.element(rng.randrange(T.order)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0
        if a:
            assert a * a.inverse() == 1


def test_untabled_tower_matches_tabled():
    big = build_tower(2, 2, 2, tables=False)
    small = build_tower(2, 2, 2)
    assert not big.has_tables and small.has_tables
    rng = random.Random(3)
    for _ in range(100):
        a, b, n = rng.randrange(256), rng.randrange(256), rng.randrange(-300, 300)
        assert big.mul(a, b) == small.mul(a, b)
        if a:
            assert big.pow(a, n) == small.pow(a, n)


def test_subfield_closure(t16):
    rng = random.Random(2)
    els = t16.subfield_elements(16)
    assert len(set(els)) == 16 and all(t16.in_subfield(y, 16) for y in els)
    for _ in range(200):
        a, b = rng.choice(els), rng.choice(els)
        assert t16.in_subfield(t16.add(a, b), 16)
        assert t16.in_subfield(t16.mul(a, b), 16)
    assert sorted(t16.subfield_elements(4)) == sorted(y for y in range(256) if t16.in_subfield(y, 4))


def test_trace_basics(t16):
    rng = random.Random(5)
    assert t16.trace(0, "r") == 0 and t16.trace(0) == 0
    gf_r = t16.subfield_elements(16)
    for _ in range(50):
        y = rng.choice(gf_r)
        tr = t16.trace(y, "r")
        assert t16.pow(tr, 4) == tr
    assert sum(t16.trace(y, "r") == 0 for y in gf_r) == 4


def test_trace_transitivity(t27):
    rng = random.Random(11)
    for _ in range(200):
        x = rng.randrange(t27.order)
        rel = t27.trace(x, "r2", "r")
        assert rel == t27.add(x, t27.conj(x))
        assert t27.trace(x) == t27.trace(rel, "r")


def test_trace_tables_match_scalar(t27):
    for x in range(0, t27.order, 17):
        assert t27.trace_r2_q[x] == t27.trace(x)
        assert t27.trace_r2_r[x] == t27.trace(x, "r2", "r")


def test_trace_source_check(t16):
    x = next(a for a in range(256) if not t16.in_subfield(a, 16))
    with pytest.raises(ValueError):
        t16.trace(x, "r")
    with pytest.raises(ValueError):
        t16.trace(x, "r", "r2")
    t8 = build_tower(2, 3, 1)
    assert all(t8.trace(y, "r") == y for y in t8.subfield_elements(8))


def test_pow_frobenius_conj(t16):
    rng = random.Random(9)
    for _ in range(100):
        x = rng.randrange(1, 256)
        assert t16.pow(x, 0) == 1
        assert t16.conj(t16.conj(x)) == x
        assert t16.frobenius(x, 2) == t16.pow(x, 16)
        assert t16.frobenius(x, 4) == x
        assert t16.pow(x, 256) == x


def test_unit_circle(t16):
    U = t16.unit_circle()
    assert U.generator == t16.pow(t16.gamma, 15)
    assert _order_by_iteration(t16, U.generator) == 17
    assert len(U) == 17 == len(set(U))
    for z in U:
        assert t16.pow(z, 17) == 1
        assert t16.mul(z, t16.conj(z)) == 1
    assert 0 not in U


def test_with_gamma(t16):
    g = t16.with_gamma(7)
    assert g.gamma == t16.pow(t16.gamma, 7) and g.modulus == t16.modulus
    with pytest.raises(ValueError):
        t16.with_gamma(5)


def test_dump_roundtrip(t16):
    d = json.loads(t16.to_json())
    assert d["p"] == 2 and len(d["modulus"]) == 9 and len(d["gamma"]) == 8
    rebuilt = FieldTower(d["p"], d["l"], d["m"], d["modulus"], t16.from_digits(d["gamma"]))
    assert rebuilt.gamma == t16.gamma
    assert rebuilt.mul(77, 199) == t16.mul(77, 199)


def test_build_is_deterministic():
    a, b = build_tower(3, 2, 1), build_tower(3, 2, 1)
    assert (a.modulus, a.gamma) == (b.modulus, b.gamma)


def test_build_errors():
    with pytest.raises(ValueError):
        build_tower(4, 1, 1)
    with pytest.raises(ValueError):
        build_tower(2, 0, 1)
    with pytest.raises(ValueError):
        build_tower(3, 2, 6)  # 3^24 > 2^32


def test_large_tower_without_tables():
    T = build_tower(2, 4, 4)  # GF(2^32)
    assert not T.has_tables
    x = 0x1234567
    assert T.pow(x, T.order) == x
    assert T.mul(x, T.inv(x)) == 1
