"""Closed-form weight distributions via exact power-moment systems.

The frequencies mu_j of the weights w_j solve a Vandermonde system on the
nodes x_j = j*e*r - r - 1 whose right-hand side comes from the counts N_k.
All arithmetic is exact (int / Fraction).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .distribution import WeightDistribution
from .params import CodeSpec, ConsistencyError, DerivedParams, derive


def partitions_min2(k: int, smallest: int = 2) -> Iterator[dict[int, int]]:
    """Partitions of k into parts >= 2, as {part: multiplicity}."""
    if k == 0:
        yield {}
        return
    for part in range(smallest, k + 1):
        for rest in partitions_min2(k - part, part):
            out = dict(rest)
            out[part] = out.get(part, 0) + 1
            yield out


@lru_cache(maxsize=None)
def N_k(r: int, e: int, k: int) -> int:
    """Exact value of the count N_k (N_0 = 1, N_1 = 0)."""
    if (r + 1) % e:
        raise ValueError(f"e={e} does not divide r+1={r + 1}")
    if k == 0:
        return 1
    if k == 1:
        return 0
    R = (r + 1) // e
    B = {j: Fraction((r - 1) ** j, r) + (-1) ** j * (1 - Fraction(1, r)) for j in range(2, k + 1)}
    total = Fraction(0)
    for lam in partitions_min2(k):
        s = sum(lam.values())
        term = Fraction(math.comb(R, s) * math.factorial(s))
        for j, lj in lam.items():
            term *= (B[j] / math.factorial(j)) ** lj / math.factorial(lj)
        total += term
    value = total * math.factorial(k) * e**k
    if value.denominator != 1:
        raise ConsistencyError(f"N_{k}(r={r}, e={e}) = {value} is not an integer")
    return int(value)


def theoretical_weights(derived: DerivedParams) -> list[int]:
    """w_j = (q-1)/(q delta) * (r^2 - (je-1) r) for j = 0 .. 2t (or 2t-1)."""
    q, r, e, delta = derived.q, derived.r, derived.e, derived.delta
    out = []
    for j in range(derived.num_weights):
        num = (q - 1) * (r * r - (j * e - 1) * r)
        if num % (q * delta):
            raise ValueError(f"weight w_{j} = {num}/{q * delta} is not an integer")
        out.append(num // (q * delta))
    return out


def weight_from_root_count(derived: DerivedParams, count: int) -> int:
    """Weight of a codeword whose reduced form has `count` zeros on U."""
    q, r, delta = derived.q, derived.r, derived.delta
    num = (q - 1) * (r * r - (count - 1) * r)
    if num % (q * delta):
        raise ConsistencyError(f"root count {count} gives a non-integral weight")
    return num // (q * delta)


def solve_transposed_vandermonde(nodes: list[int], b: list[int]) -> list[Fraction]:
    """Solve sum_j nodes[j]^i mu_j = b[i] (i = 0..s-1) exactly.

    mu_j equals the functional b applied to the coefficients of the Lagrange
    basis polynomial L_j, since sum_j mu_j L(x_j) = sum_i c_i b_i for any
    L = sum_i c_i x^i.
    """
    s = len(nodes)
    if len(set(nodes)) != s:
        raise ValueError("nodes must be distinct")
    # P(x) = prod (x - x_k), coefficients low -> high
    P = [1]
    for xk in nodes:
        P = [(P[i - 1] if i else 0) - xk * (P[i] if i < len(P) else 0) for i in range(len(P) + 1)]
    mu = []
    for xj in nodes:
        # synthetic division P / (x - xj)
        quo = [0] * s
        acc = 0
        for i in range(s, 0, -1):
            acc = P[i] + acc * xj
            quo[i - 1] = acc
        denom = 1
        for xk in nodes:
            if xk != xj:
                denom *= xj - xk
        mu.append(Fraction(sum(c * bi for c, bi in zip(quo, b)), denom))
    return mu


@dataclass
class MomentSystem:
    size: int
    nodes: list[int]
    matrix: list[list[int]]
    b: list[int]
    mu: list[int]

    def residual(self) -> list[int]:
        """M mu - b; all zeros for a correct solve."""
        return [sum(mij * mj for mij, mj in zip(row, self.mu)) - bi
                for row, bi in zip(self.matrix, self.b)]


def moment_system(derived: DerivedParams) -> MomentSystem:
    r, e = derived.r, derived.e
    s = derived.num_weights
    power = derived.spec.t * 2 + (1 if derived.spec.family == 1 else 0)
    nodes = [j * e * r - r - 1 for j in range(s)]
    matrix = [[x**i for x in nodes] for i in range(s)]
    b = [r**power * N_k(r, e, i) - (r * r - 1) ** i for i in range(s)]
    sol = solve_transposed_vandermonde(nodes, b)
    for j, v in enumerate(sol):
        if v.denominator != 1 or v < 0:
            raise ConsistencyError(f"mu_{j} = {v} is not a nonnegative integer")
    return MomentSystem(s, nodes, matrix, b, [int(v) for v in sol])


def _distribution(derived: DerivedParams, freqs: list[int], method: str) -> WeightDistribution:
    weights = theoretical_weights(derived)
    table = {0: 1}
    zero_freq = []
    for w, mu in zip(weights, freqs):
        if mu == 0:
            zero_freq.append(w)
        else:
            table[w] = table.get(w, 0) + mu
    return WeightDistribution.for_code(derived, table, method, zero_frequency_weights=zero_freq)


def solve_distribution(spec: CodeSpec | DerivedParams) -> WeightDistribution:
    """Weight distribution from the moment system (no enumeration)."""
    derived = spec if isinstance(spec, DerivedParams) else derive(spec)
    system = moment_system(derived)
    if any(system.residual()):
        raise ConsistencyError("moment system residual is nonzero")
    return _distribution(derived, system.mu, "vandermonde")


def _table1(e: int, r: int) -> list[Fraction]:
    # first row printed with q in place of r in the source table; r is right
    return [
        Fraction(-1 + 3 * e - 2 * e**2 - r + 2 * e * r + r**2 - 3 * e * r**2 + r**3
                 - 2 * e * r**3 + 2 * e**2 * r**3, 2 * e**2),
        Fraction(1 - 2 * e + r - e * r - r**2 + 2 * e * r**2 - r**3 + e * r**3, e**2),
        Fraction(-1 + e - r + r**2 - e * r**2 + r**3, 2 * e**2),
    ]


def _table2(e: int, r: int) -> list[Fraction]:
    return [Fraction((e - 1) * (r * r - 1), e), Fraction(r * r - 1, e)]


def _table3(e: int, r: int) -> list[Fraction]:
    return [
        Fraction(1 - 6 * e + 11 * e**2 - 6 * e**3 + 2 * r - 9 * e * r + 9 * e**2 * r
                 + 3 * e * r**2 - 5 * e**2 * r**2 - 2 * r**3 + 9 * e * r**3 - 9 * e**2 * r**3
                 - r**4 + 3 * e * r**4 - 6 * e**2 * r**4 + 6 * e**3 * r**4, 6 * e**3),
        Fraction(-1 + 5 * e - 6 * e**2 - 2 * r + 7 * e * r - 4 * e**2 * r - 3 * e * r**2
                 + 4 * e**2 * r**2 + 2 * r**3 - 7 * e * r**3 + 4 * e**2 * r**3 + r**4
                 - 2 * e * r**4 + 2 * e**2 * r**4, 2 * e**3),
        Fraction(1 - 4 * e + 3 * e**2 + 2 * r - 5 * e * r + e**2 * r + 3 * e * r**2
                 - 3 * e**2 * r**2 - 2 * r**3 + 5 * e * r**3 - e**2 * r**3 - r**4 + e * r**4,
                 2 * e**3),
        Fraction(-1 + 3 * e - 2 * e**2 - 2 * r + 3 * e * r - 3 * e * r**2 + 2 * e**2 * r**2
                 + 2 * r**3 - 3 * e * r**3 + r**4, 6 * e**3),
    ]


def corollary_tables(spec: CodeSpec | DerivedParams) -> WeightDistribution:
    """Weight distribution from the tabulated polynomials in (e, r).

    Covers family 1 with t=1 and family 2 with t in {1, 2}.
    """
    derived = spec if isinstance(spec, DerivedParams) else derive(spec)
    fam, t = derived.spec.family, derived.spec.t
    if (fam, t) == (1, 1):
        rows = _table1(derived.e, derived.r)
    elif (fam, t) == (2, 1):
        rows = _table2(derived.e, derived.r)
    elif (fam, t) == (2, 2):
        rows = _table3(derived.e, derived.r)
    else:
        raise ValueError(f"no closed-form table for family {fam}, t={t}")
    if any(v.denominator != 1 for v in rows):
        raise ConsistencyError(f"table frequencies {rows} are not integral")
    return _distribution(derived, [int(v) for v in rows], "corollary-table")


def griesmer_bound(k: int, d: int, q: int) -> int:
    """Least length of a q-ary linear [n, k, d] code allowed by the Griesmer bound."""
    if k < 1 or d < 1:
        raise ValueError("k and d must be positive")
    return sum(-(-d // q**i) for i in range(k))


@dataclass(frozen=True)
class GriesmerReport:
    n: int
    k: int
    d: int
    q: int
    bound: int

    @property
    def consistent(self) -> bool:
        return self.n >= self.bound

    @property
    def meets(self) -> bool:
        return self.n == self.bound


def griesmer_check(n: int, k: int, d: int, q: int) -> GriesmerReport:
    return GriesmerReport(n, k, d, q, griesmer_bound(k, d, q))
