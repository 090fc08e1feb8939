"""Finite field tower GF(p) < GF(q) < GF(r) < GF(r^2).

Everything lives in one flat representation of GF(r^2) as GF(p)[x]/(modulus).
An element is encoded as the integer sum(c_i * p**i) of its coefficient
vector, so 0 and 1 are the field's zero and one.  The subfields GF(q) and GF(r)
are the Frobenius-fixed subsets of that flat field.

Towers with r^2 <= TABLE_LIMIT also carry log/antilog tables and the numpy
helpers the enumerator relies on.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

MAX_ORDER = 2**32
TABLE_LIMIT = 2**16
_ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- polynomials over GF(p), coefficient lists low -> high -------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            shift = i - df
            for j, fj in enumerate(f):
                a[shift + j] = (a[shift + j] - c * fj) % p
    return _trim(a[:df])


def _poly_mulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _poly_mod(prod, f, p)


def _poly_powmod(a: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(a), f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _poly_mulmod(base, base, f, p)
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over GF(p)."""
    f = list(f)
    deg = len(f) - 1
    if deg < 1 or f[-1] != 1:
        return False
    if deg == 1:
        return True
    x = [0, 1]
    # frob[k] = x^(p^k) mod f
    frob = [x]
    for _ in range(deg):
        frob.append(_poly_powmod(frob[-1], p, f, p))
    if _poly_sub(frob[deg], x, p):
        return False
    for s in factorize(deg):
        g = _poly_gcd(f, _poly_sub(frob[deg // s], x, p), p)
        if len(g) != 1:
            return False
    return True


def find_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """Least monic irreducible polynomial of the given degree.

    Candidates are ordered by the integer sum(c_i p^i) of their non-leading
    coefficients, which is lexicographic order on (c_{deg-1}, ..., c_0).
    """
    for code in range(p**degree):
        coeffs = [(code // p**i) % p for i in range(degree)] + [1]
        if coeffs[0] == 0 and degree > 1:
            continue
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError(f"no irreducible polynomial of degree {degree} over GF({p})")


# -- the tower ----------------------------------------------------------------

@dataclass(frozen=True)
class UnitCircle:
    """The order r+1 subgroup U = {z : z^(r+1) = 1}, listed as g^0, ..., g^r."""

    generator: int
    order: int
    elements: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, z: int) -> bool:
        return z in set(self.elements)


class FieldTower:
    """GF(p) < GF(q=p^l) < GF(r=q^m) < GF(r^2) with a primitive element gamma.

    Instances are treated as immutable; the lazily built tables never change
    once computed, so a tower can be shared freely between workers.

    Elements are plain ints (see module docstring).  Wrap them with
    :meth:`element` to get operator syntax.
    """

    def __init__(self, p: int, l: int, m: int, modulus: Sequence[int], gamma: int):
        self.p, self.l, self.m = p, l, m
        self.q = p**l
        self.r = self.q**m
        self.order = self.r**2
        self.degree = 2 * l * m
        self.modulus = tuple(modulus)
        self.gamma = gamma
        if len(self.modulus) != self.degree + 1:
            raise ValueError("modulus has the wrong degree")
        self._mod_int = sum(c << i for i, c in enumerate(self.modulus)) if p == 2 else None
        self._pw = [p**i for i in range(self.degree)]

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, l={self.l}, m={self.m}, q={self.q}, r={self.r})"

    # -- encoding
    def digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // w) % p for w in self._pw]

    def from_digits(self, d: Sequence[int]) -> int:
        return sum((c % self.p) * w for c, w in zip(d, self._pw))

    def element(self, value: int) -> "Elem":
        return Elem(int(value), self)

    # -- scalar arithmetic on encodings
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        return sum(((a // w + b // w) % p) * w for w in self._pw)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        return sum(((-(a // w)) % p) * w for w in self._pw)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_generic(self, a: int, b: int) -> int:
        if self.p == 2:
            prod = 0
            while b:
                if b & 1:
                    prod ^= a
                b >>= 1
                a <<= 1
            deg, mod = self.degree, self._mod_int
            for i in range(prod.bit_length() - 1, deg - 1, -1):
                if prod >> i & 1:
                    prod ^= mod << (i - deg)
            return prod
        res = _poly_mulmod(_trim(self.digits(a)), _trim(self.digits(b)), self.modulus, self.p)
        return self.from_digits(res)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return int(self.exp[(int(self.log[a]) + int(self.log[b])) % (self.order - 1)])
        return self._mul_generic(a, b)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        if a == 0:
            return 1 if n == 0 else 0
        if self.has_tables:
            return int(self.exp[(int(self.log[a]) * n) % (self.order - 1)])
        return self._pow_generic(a, n % (self.order - 1))

    def _pow_generic(self, a: int, n: int) -> int:
        result = 1
        while n:
            if n & 1:
                result = self._mul_generic(result, a)
            n >>= 1
            if n:
                a = self._mul_generic(a, a)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def frobenius(self, a: int, k: int = 1) -> int:
        """a -> a^(q^k)."""
        return self.pow(a, pow(self.q, k % (2 * self.m)))

    def conj(self, a: int) -> int:
        """The involution a -> a^r of GF(r^2) over GF(r)."""
        return self.pow(a, self.r)

    def in_subfield(self, a: int, size: int) -> bool:
        return self.pow(a, size) == a

    def trace(self, a: int, source: str = "r2", target: str = "q") -> int:
        """Relative trace from GF(r) or GF(r^2) down to GF(q) or GF(r)."""
        try:
            src = {"r": self.m, "r2": 2 * self.m}[source]
            dst = {"q": 1, "r": self.m}[target]
        except KeyError:
            raise ValueError(f"unknown trace {source} -> {target}") from None
        if src < dst:
            raise ValueError(f"no trace from {source} to {target}")
        if source == "r" and not self.in_subfield(a, self.r):
            raise ValueError(f"{a} is not in GF({self.r})")
        acc, x = 0, a
        for _ in range(src // dst):
            acc = self.add(acc, x)
            x = self.pow(x, self.q**dst)
        return acc

    def unit_circle(self) -> UnitCircle:
        g = self.pow(self.gamma, self.r - 1)
        elems, z = [], 1
        for _ in range(self.r + 1):
            elems.append(z)
            z = self.mul(z, g)
        return UnitCircle(g, self.r + 1, tuple(elems))

    def subfield_generator(self, size: int) -> int:
        """A primitive element of the subfield with `size` elements."""
        if (self.order - 1) % (size - 1):
            raise ValueError(f"GF({size}) is not a subfield of GF({self.order})")
        return self.pow(self.gamma, (self.order - 1) // (size - 1))

    def subfield_elements(self, size: int) -> list[int]:
        g = self.subfield_generator(size)
        out, z = [0], 1
        for _ in range(size - 1):
            out.append(z)
            z = self.mul(z, g)
        return out

    def with_gamma(self, s: int) -> "FieldTower":
        """Same modulus, primitive element gamma^s (requires gcd(s, r^2-1) = 1)."""
        if math.gcd(s, self.order - 1) != 1:
            raise ValueError(f"gamma^{s} is not primitive")
        return FieldTower(self.p, self.l, self.m, self.modulus, self.pow(self.gamma, s))

    def to_dict(self) -> dict:
        return {"p": self.p, "l": self.l, "m": self.m,
                "modulus": list(self.modulus), "gamma": self.digits(self.gamma)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    # -- tables (r^2 <= TABLE_LIMIT) ---------------------------------------
    @property
    def has_tables(self) -> bool:
        return self.order <= TABLE_LIMIT and "exp" in self.__dict__

    def _mul_matrix(self, a: int) -> np.ndarray:
        # column i holds the digits of a * x^i
        cols, v = [], a
        for _ in range(self.degree):
            cols.append(self.digits(v))
            v = self._mul_generic(v, self.p)
        return np.array(cols, dtype=np.int64).T

    def build_tables(self) -> "FieldTower":
        if self.order > TABLE_LIMIT:
            raise ValueError(f"tables need r^2 <= {TABLE_LIMIT}")
        if "exp" in self.__dict__:
            return self
        p, n = self.p, self.order - 1
        pw = np.array(self._pw, dtype=np.int64)
        digs = np.zeros((1, self.degree), dtype=np.int64)
        digs[0, 0] = 1
        while len(digs) < n:
            step = self.from_digits(digs[-1].tolist())
            step = self._mul_generic(step, self.gamma)  # gamma^len(digs)
            digs = np.vstack([digs, digs @ self._mul_matrix(step).T % p])
        exp = (digs[:n] @ pw).astype(np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(n)
        if (log[1:] < 0).any():
            raise ValueError("gamma is not primitive")
        self.__dict__["exp"] = exp
        self.__dict__["log"] = log
        return self

    @cached_property
    def digit_table(self) -> np.ndarray:
        vals = np.arange(self.order, dtype=np.int64)
        return np.stack([(vals // w) % self.p for w in self._pw], axis=1).astype(np.int64)

    @cached_property
    def _add_table(self) -> np.ndarray | None:
        if self.p == 2 or self.order > _ADD_TABLE_LIMIT:
            return None
        d = self.digit_table
        pw = np.array(self._pw, dtype=np.int64)
        return ((d[:, None, :] + d[None, :, :]) % self.p) @ pw

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise sum of encoded arrays (broadcasting)."""
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        tbl = self._add_table
        if tbl is not None:
            return tbl[a, b]
        pw = np.array(self._pw, dtype=np.int64)
        return ((self.digit_table[a] + self.digit_table[b]) % self.p) @ pw

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        out = self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vpow(self, a: np.ndarray, n: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        out = self.exp[(self.log[a] * (n % (self.order - 1))) % (self.order - 1)]
        if n == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def power_of_gamma(self, k: np.ndarray | int) -> np.ndarray:
        return self.exp[np.asarray(k, dtype=np.int64) % (self.order - 1)]

    def _trace_table(self, terms: int, step: int) -> np.ndarray:
        x = np.arange(self.order, dtype=np.int64)
        acc = np.zeros_like(x)
        for _ in range(terms):
            acc = self.vadd(acc, x)
            x = self.vpow(x, step)
        return acc

    @cached_property
    def trace_r2_q(self) -> np.ndarray:
        """Lookup table of Tr_{r^2/q} over all encodings."""
        return self._trace_table(2 * self.m, self.q)

    @cached_property
    def trace_r_q(self) -> np.ndarray:
        """Lookup of Tr_{r/q}; only meaningful on GF(r) members."""
        return self._trace_table(self.m, self.q)

    @cached_property
    def trace_r2_r(self) -> np.ndarray:
        return self._trace_table(2, self.r)


class Elem:
    """An element of a tower with the usual operators."""

    __slots__ = ("value", "tower")

    def __init__(self, value: int, tower: FieldTower):
        self.value = value
        self.tower = tower

    def _coerce(self, other) -> int:
        if isinstance(other, Elem):
            if other.tower is not self.tower:
                raise ValueError("elements of different towers")
            return other.value
        if isinstance(other, int):
            return self.tower.from_digits([other % self.tower.p])
        return NotImplemented

    def __add__(self, other):
        return Elem(self.tower.add(self.value, self._coerce(other)), self.tower)

    __radd__ = __add__

    def __sub__(self, other):
        return Elem(self.tower.sub(self.value, self._coerce(other)), self.tower)

    def __neg__(self):
        return Elem(self.tower.neg(self.value), self.tower)

    def __mul__(self, other):
        return Elem(self.tower.mul(self.value, self._coerce(other)), self.tower)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Elem(self.tower.mul(self.value, self.tower.inv(self._coerce(other))), self.tower)

    def __pow__(self, n: int):
        return Elem(self.tower.pow(self.value, n), self.tower)

    def __eq__(self, other):
        if isinstance(other, (Elem, int)):
            return self.value == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, id(self.tower)))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Elem({self.value})"

    def inverse(self) -> "Elem":
        return Elem(self.tower.inv(self.value), self.tower)

    def frobenius(self, k: int = 1) -> "Elem":
        return Elem(self.tower.frobenius(self.value, k), self.tower)

    def conj(self) -> "Elem":
        return Elem(self.tower.conj(self.value), self.tower)

    def trace(self, source: str = "r2", target: str = "q") -> "Elem":
        return Elem(self.tower.trace(self.value, source, target), self.tower)

    def in_subfield(self, size: int) -> bool:
        return self.tower.in_subfield(self.value, size)


def _is_primitive(tower: FieldTower, g: int, prime_factors: Sequence[int]) -> bool:
    n = tower.order - 1
    if tower._pow_generic(g, n) != 1:
        return False
    return all(tower._pow_generic(g, n // s) != 1 for s in prime_factors)


def build_tower(p: int, l: int, m: int, *, tables: bool = True) -> FieldTower:
    """Construct GF(p^(2lm)) with its deterministic modulus and primitive element.

    The modulus is the least irreducible polynomial in the order used by
    :func:`find_irreducible`; gamma is the least encoding of multiplicative
    order r^2 - 1.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if l < 1 or m < 1:
        raise ValueError("l and m must be positive")
    degree = 2 * l * m
    if p**degree > MAX_ORDER:
        raise ValueError(f"r^2 = {p}^{degree} exceeds the supported size 2^32")
    modulus = find_irreducible(p, degree)
    tower = FieldTower(p, l, m, modulus, 1)
    primes = list(factorize(tower.order - 1))
    for g in range(2, tower.order):
        if _is_primitive(tower, g, primes):
            break
    else:  # GF(2) would land here, but degree >= 2 always
        raise RuntimeError("no primitive element found")
    tower = FieldTower(p, l, m, modulus, g)
    if tables and tower.order <= TABLE_LIMIT:
        tower.build_tables()
    return tower
