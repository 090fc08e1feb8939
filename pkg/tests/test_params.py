import json
import math

import pytest

from helpers import admissible_sweep
from nihocodes.params import (CodeSpec, ConsistencyError, InadmissibleParameters, check_conditions,
                              derive, dimension, closed_form_minpoly_degree, closed_form_same_minpoly,
                              minpoly_degree, same_minpoly)


def test_derive_family1_example():
    d = derive(CodeSpec(1, 2, 2, 2, 1, 3, 1))
    assert (d.e, d.exponents, d.delta, d.n, d.dimension) == (1, (51, 66), 3, 85, 6)
    assert d.delta == math.gcd(51, 15)


def test_derive_family2_example():
    d = derive(CodeSpec(2, 2, 2, 2, 2, 6, 2))
    assert (d.exponents, d.delta, d.n, d.dimension) == ((66, 96), 3, 85, 8)


def test_derive_q3_r27():
    d = derive(CodeSpec(1, 3, 1, 3, 2, 1, 1))
    assert (d.e, d.delta, d.n, d.dimension) == (2, 4, 182, 9)


def test_family2_p2_odd_difference_uses_inverse_of_two():
    # f - h odd: (f-h)/2 is taken with the inverse of 2
    spec = CodeSpec(2, 2, 2, 2, 1, 6, 1)
    d = derive(spec)
    r = 16
    c = d.decomposition[0][0] - spec.h
    assert (2 * c) % (r * r - 1) == (spec.f - spec.h) % (r * r - 1)
    assert (2 * c) % (r - 1) == (spec.f - spec.h) % (r - 1)


def test_family2_parity_violation_is_reported():
    spec = CodeSpec(2, 3, 1, 1, 1, 2, 1)
    with pytest.raises(InadmissibleParameters):
        derive(spec)
    rep = check_conditions(spec)
    assert not rep.passed and "c'" in rep.failures
    assert not rep["c1'"].passed and not rep["c2'"].passed


def test_conditions_pass_and_fail():
    assert check_conditions(CodeSpec(1, 2, 3, 1, 1, 7, 3)).passed
    rep = check_conditions(CodeSpec(1, 2, 2, 2, 1, 3, 9))
    assert rep.failures == ["a"]
    assert "9/2" in rep["a"].detail or "17/2" in rep["a"].detail


def test_condition_bounds_strict_vs_weak():
    # r=7, e=1: (r+1)/(2e) = 4
    assert not check_conditions(CodeSpec(1, 7, 1, 1, 1, 3, 4)).passed
    assert check_conditions(CodeSpec(2, 7, 1, 1, 1, 3, 4))["a'"].passed


def test_condition_c_family1_odd_p():
    # p odd, m even, h odd -> (c) fails
    rep = check_conditions(CodeSpec(1, 3, 1, 2, 1, 1, 1))
    assert "c" in rep.failures
    assert check_conditions(CodeSpec(1, 3, 1, 2, 2, 1, 1))["c"].passed


def test_condition_report_json_labels():
    rep = check_conditions(CodeSpec(2, 3, 1, 1, 2, 2, 1))
    data = json.loads(rep.to_json())
    labels = [c["label"] for c in data["conditions"]]
    assert labels == ["a'", "c1'", "c2'", "c'"]
    assert data["passed"] == rep.passed


def test_condition_monotone_in_t():
    for spec in admissible_sweep(40, seed=5):
        r, e = spec.r, math.gcd(spec.h, spec.r + 1)
        bound = (r + 1) // (2 * e) + 1
        big = CodeSpec(spec.family, spec.p, spec.l, spec.m, spec.h, spec.f, bound)
        assert not check_conditions(big)[("a" if spec.family == 1 else "a'")].passed


def test_minpoly_examples():
    d = derive(CodeSpec(1, 2, 2, 2, 1, 3, 1))
    assert minpoly_degree(d.exponents[0], 4, 16) == 2
    assert minpoly_degree(66, 4, 16) == 4
    assert minpoly_degree(0, 4, 16) == 1
    assert same_minpoly(51, 51 * 4, 4, 16)
    assert not same_minpoly(51, 66, 4, 16)


@pytest.mark.parametrize("spec,k", [
    (CodeSpec(1, 2, 2, 2, 1, 3, 3), 14),
    (CodeSpec(2, 2, 3, 1, 2, 14, 2), 4),
    (CodeSpec(1, 2, 3, 1, 1, 7, 1), 3),
])
def test_dimension_examples(spec, k):
    assert dimension(derive(spec)) == k


def test_dimension_detects_collision():
    # t exceeds the bound, so two exponents share a minimal polynomial
    d = derive(CodeSpec(1, 2, 2, 1, 1, 1, 3))
    with pytest.raises(ConsistencyError):
        dimension(d)


def test_sweep_invariants():
    for spec in admissible_sweep(80, seed=9):
        d = derive(spec)
        mod = d.r * d.r - 1
        assert d.n * d.delta == mod
        assert math.gcd(*d.exponents, mod) == d.delta
        assert all(0 <= x < mod for x in d.exponents)
        want = (2 * spec.f if spec.family == 1 else spec.f) % (d.r - 1)
        assert all(x % (d.r - 1) == want for x in d.exponents)
        assert len(set(d.exponents)) == len(d.exponents)
        assert dimension(d) == d.dimension


def test_closed_form_minpoly_agrees_with_orbits():
    checked = 0
    for spec in admissible_sweep(80, seed=13):
        d = derive(spec)
        for (s, dl), x in zip(d.decomposition, d.exponents):
            lem = closed_form_minpoly_degree(s, dl, d.q, d.r, spec.m)
            if lem is not None:
                assert lem == minpoly_degree(x, d.q, d.r)
                checked += 1
        for i in range(len(d.exponents)):
            for j in range(i + 1, len(d.exponents)):
                (s1, dl), (s2, _) = d.decomposition[i], d.decomposition[j]
                lem = closed_form_same_minpoly(s1, s2, dl, d.q, d.r)
                if lem is not None:
                    assert lem == same_minpoly(d.exponents[i], d.exponents[j], d.q, d.r)
    assert checked > 50


def test_delta_branches_coincide():
    # base = -h (mod r+1), so gcd(base, r+1) = e and both gcds agree prime by prime
    for p, l, m in [(2, 1, 2), (2, 3, 1), (3, 1, 2), (5, 1, 1), (3, 2, 1)]:
        r = (p**l) ** m
        for h in range(r + 1):
            for f in range(0, 3 * r, 1 if p == 2 else 2):
                spec = CodeSpec(2, p, l, m, h if p == 2 else h - h % 2 + f % 2, f, 1)
                d = derive(spec)
                assert d.delta == d.delta_other_branch
                assert not check_conditions(spec).notes


def test_negative_and_large_parameters_reduce():
    a = derive(CodeSpec(1, 2, 2, 2, 1, 3, 1))
    b = derive(CodeSpec(1, 2, 2, 2, 1 + 17, 3 + 255, 1))
    c = derive(CodeSpec(1, 2, 2, 2, 1 - 17, 3 - 255, 1))
    assert a.exponents == b.exponents == c.exponents
    assert a.delta == b.delta == c.delta


def test_spec_validation():
    with pytest.raises(ValueError):
        CodeSpec(3, 2, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        CodeSpec(1, 4, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        CodeSpec(1, 2, 1, 1, 1, 1, 0)
