"""Codeword construction and exhaustive weight distributions.

Both exhaustive paths exploit linearity.  The codeword map a -> c(a) is
GF(q)-linear, so all q^k codewords are the GF(q)-combinations of the images
of a basis of the coefficient space.  Likewise the value vector of the
reduced form F on the unit circle U is GF(r)-linear in a.  An enumeration is
therefore a table of scaled generator vectors plus a per-row statistic
(Hamming weight, zero count, or a lookup sum), histogrammed over every
combination.

Combination index i encodes the digits (lambda_0, ..., lambda_{K-1}) in base
Q with lambda_0 most significant.  Parallel workers take disjoint contiguous
index ranges; histograms merge by addition, so results do not depend on the
worker count.
"""
from __future__ import annotations

import math
import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .distribution import WeightDistribution
from .fields import FieldTower, TABLE_LIMIT, build_tower
from .params import (CodeSpec, ConsistencyError, DerivedParams, InadmissibleParameters,
                     check_conditions, derive)
from .theory import weight_from_root_count

DEFAULT_BUDGET = 2**22
_CHUNK_ELEMS = 1 << 22


class BudgetExceeded(RuntimeError):
    """Enumeration would exceed the tuple budget and long_run was not set."""


class VerificationError(RuntimeError):
    """Two independent weight computations disagree."""


class Subfield:
    """Compact additive coordinates for the subfield GF(size) of a tower.

    Coordinate c in [0, size) has base-p digits equal to the coefficients of
    the element in the basis 1, beta, ..., beta^(k-1), beta primitive in the
    subfield; so 0 <-> 0 and, for p = 2, addition is XOR.
    """

    def __init__(self, tower: FieldTower, size: int):
        self.tower, self.size, self.p = tower, size, tower.p
        k = round(math.log(size, tower.p))
        beta = tower.subfield_generator(size)
        to_flat = np.zeros(1, dtype=np.int64)
        for i in range(k):
            b = tower.pow(beta, i)
            to_flat = np.concatenate([tower.vadd(to_flat, tower.mul(d, b)) for d in range(tower.p)])
        from_flat = np.full(tower.order, -1, dtype=np.int64)
        from_flat[to_flat] = np.arange(size)
        if len(np.unique(to_flat)) != size:
            raise ConsistencyError(f"subfield basis of GF({size}) is degenerate")
        self.to_flat = to_flat
        self.from_flat = from_flat
        self.dtype = np.uint8 if size <= 256 else np.uint16
        self._table = None
        if self.p != 2:
            flat_sum = tower.vadd(to_flat[:, None], to_flat[None, :])
            self._table = from_flat[flat_sum].astype(self.dtype)

    def coords(self, flat: np.ndarray) -> np.ndarray:
        c = self.from_flat[np.asarray(flat, dtype=np.int64)]
        if (c < 0).any():
            raise ValueError(f"value outside GF({self.size})")
        return c.astype(self.dtype)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._table is None:
            return np.bitwise_xor(a, b)
        return self._table[a, b]


@dataclass
class LinearEnumeration:
    """All Q^K combinations of K scaled generator vectors of length L.

    `scaled[i, lam]` is the coordinate vector lam * g_i.  `score` is
    "nonzero" (Hamming weight), "zero" (zero count) or an integer lookup table
    over coordinates whose row sum is the statistic.
    """

    scaled: np.ndarray
    field: Subfield
    score: object

    @property
    def K(self) -> int:
        return self.scaled.shape[0]

    @property
    def Q(self) -> int:
        return self.scaled.shape[1]

    @property
    def L(self) -> int:
        return self.scaled.shape[2]

    @property
    def size(self) -> int:
        return self.Q**self.K

    @property
    def max_stat(self) -> int:
        if isinstance(self.score, str):
            return self.L
        return int(self.L * np.max(self.score))

    def stats(self, rows: np.ndarray) -> np.ndarray:
        if isinstance(self.score, str):
            nz = np.count_nonzero(rows, axis=-1)
            return nz if self.score == "nonzero" else self.L - nz
        return self.score[rows].sum(axis=-1)

    def rows(self, indices: Sequence[int]) -> np.ndarray:
        idx = [int(i) for i in indices]
        out = np.zeros((len(idx), self.L), dtype=self.scaled.dtype)
        for i in range(self.K):
            place = self.Q ** (self.K - 1 - i)
            digits = np.array([(x // place) % self.Q for x in idx], dtype=np.int64)
            out = self.field.add(out, self.scaled[i, digits])
        return out

    def split(self) -> tuple[int, int]:
        """(K_out, K_in) with the inner table at most _CHUNK_ELEMS entries."""
        k_in = 0
        while k_in < self.K and self.Q ** (k_in + 1) * self.L <= _CHUNK_ELEMS:
            k_in += 1
        return self.K - k_in, k_in

    def _inner(self, k_in: int) -> np.ndarray:
        table = np.zeros((1, self.L), dtype=self.scaled.dtype)
        for i in range(self.K - 1, self.K - 1 - k_in, -1):
            table = np.concatenate([self.field.add(table, self.scaled[i, lam]) for lam in range(self.Q)])
        return table

    def histogram(self, lo: int, hi: int) -> np.ndarray:
        """Histogram of the statistic over outer indices [lo, hi)."""
        k_out, k_in = self.split()
        inner = self._inner(k_in)
        hist = np.zeros(self.max_stat + 1, dtype=np.int64)
        for o in range(lo, hi):
            offset = np.zeros(self.L, dtype=self.scaled.dtype)
            for i in range(k_out):
                lam = (o // self.Q ** (k_out - 1 - i)) % self.Q
                if lam:
                    offset = self.field.add(offset, self.scaled[i, lam])
            block = self.field.add(inner, offset[None, :]) if offset.any() else inner
            hist += np.bincount(self.stats(block), minlength=len(hist))
        return hist

    def run(self, workers: int = 1) -> np.ndarray:
        k_out, _ = self.split()
        n_outer = self.Q**k_out
        workers = max(1, min(workers, n_outer))
        if workers == 1:
            return self.histogram(0, n_outer)
        bounds = [n_outer * w // workers for w in range(workers + 1)]
        with ProcessPoolExecutor(workers, mp_context=mp.get_context("fork")) as pool:
            parts = list(pool.map(self.histogram, bounds[:-1], bounds[1:]))
        return np.sum(parts, axis=0)


def _as_flat(a) -> int:
    return int(getattr(a, "value", a))


class NihoCode:
    """One code of either family, bound to a concrete field tower.

    Coefficient tuples are sequences of flat field encodings (or Elem):
    (a_0, a_1, ..., a_t) for family 1 with a_0 in GF(r), (a_1, ..., a_t) for
    family 2.
    """

    def __init__(self, spec: CodeSpec, tower: FieldTower | None = None, *, check: bool = True):
        self.spec = spec
        if check:
            report = check_conditions(spec)
            if not report.passed:
                raise InadmissibleParameters(f"conditions fail: {', '.join(report.failures)}")
        self.derived: DerivedParams = derive(spec)
        if tower is None:
            tower = build_tower(spec.p, spec.l, spec.m)
        if (tower.p, tower.l, tower.m) != (spec.p, spec.l, spec.m):
            raise ValueError("tower does not match the spec")
        if tower.order > TABLE_LIMIT:
            raise ValueError(f"enumeration needs r^2 <= {TABLE_LIMIT}")
        self.tower = tower.build_tables()

    def __repr__(self) -> str:
        d = self.derived
        return f"NihoCode({self.spec}, n={d.n}, k={d.dimension})"

    @property
    def num_codewords(self) -> int:
        return self.derived.q ** self.derived.dimension

    @cached_property
    def gf_q(self) -> Subfield:
        return Subfield(self.tower, self.derived.q)

    @cached_property
    def gf_r(self) -> Subfield:
        return Subfield(self.tower, self.derived.r)

    # -- direct evaluation --------------------------------------------------
    def _check_tuples(self, A: np.ndarray) -> np.ndarray:
        A = np.atleast_2d(np.asarray(A, dtype=np.int64))
        if A.shape[1] != len(self.derived.exponents):
            raise ValueError(f"expected {len(self.derived.exponents)} coefficients")
        if self.spec.family == 1:
            a0 = A[:, 0]
            if (self.tower.vpow(a0, self.derived.r) != a0).any():
                raise ValueError("a_0 must lie in GF(r)")
        return A

    @cached_property
    def _term_tables(self) -> list[tuple[np.ndarray, np.ndarray]]:
        """Per exponent: (log of gamma^(d_j i) for i < n, trace -> GF(q) coordinate lookup)."""
        T, F = self.tower, self.gf_q
        i = np.arange(self.derived.n, dtype=np.int64)
        out = []
        for j, d in enumerate(self.derived.exponents):
            tr = T.trace_r_q if self.spec.family == 1 and j == 0 else T.trace_r2_q
            lookup = F.from_flat[tr]
            # entry 0 stands in for the product 0 (see _exp2)
            out.append(((d * i) % (T.order - 1), lookup))
        return out

    @cached_property
    def _exp2(self) -> np.ndarray:
        """exp table over [0, 2(order-1)) with a trailing slot mapping to 0."""
        e = self.tower.exp
        return np.concatenate([e, e, np.zeros(1, dtype=e.dtype)])

    def _codeword_coords(self, A: np.ndarray) -> np.ndarray:
        T, F = self.tower, self.gf_q
        zero_slot = 2 * (T.order - 1)
        acc = np.zeros((A.shape[0], self.derived.n), dtype=F.dtype)
        for j, (logp, lookup) in enumerate(self._term_tables):
            la = np.where(A[:, j] == 0, zero_slot, T.log[A[:, j]])
            idx = la[:, None] + logp[None, :]
            # rows with a_j = 0 land at or beyond zero_slot; clamp them there
            np.minimum(idx, zero_slot, out=idx)
            acc = F.add(acc, lookup[self._exp2[idx]].astype(F.dtype))
        return acc

    def codewords(self, A) -> np.ndarray:
        """Codewords (flat encodings of GF(q) symbols) for a batch of tuples."""
        return self.gf_q.to_flat[self._codeword_coords(self._check_tuples(A))]

    def codeword(self, a: Sequence) -> np.ndarray:
        return self.codewords([[_as_flat(x) for x in a]])[0]

    def weights(self, A, batch: int = 4096) -> np.ndarray:
        A = self._check_tuples(A)
        return np.concatenate([np.count_nonzero(self._codeword_coords(A[s:s + batch]), axis=1)
                               for s in range(0, len(A), batch)])

    def weight(self, a: Sequence) -> int:
        return int(np.count_nonzero(self.codeword(a)))

    def random_tuples(self, rng: np.random.Generator, size: int) -> np.ndarray:
        cols = [rng.integers(0, self.tower.order, size) for _ in self.derived.exponents]
        if self.spec.family == 1:
            cols[0] = self.gf_r.to_flat[rng.integers(0, self.derived.r, size)]
        return np.stack(cols, axis=1)

    # -- reduced forms ------------------------------------------------------
    @cached_property
    def unit_circle(self) -> np.ndarray:
        return np.array(self.tower.unit_circle().elements, dtype=np.int64)

    @cached_property
    def _u_exponents(self) -> list[int]:
        """Exponent of z attached to a_j in the reduced form F (family 1)."""
        s = self.spec
        if s.p != 2 and s.m % 2 == 1:
            return [j * s.h for j in range(1, s.t + 1)]
        return [-2 * j * s.h for j in range(1, s.t + 1)]

    @cached_property
    def _u_powers(self) -> list[np.ndarray]:
        return [self.tower.vpow(self.unit_circle, k) for k in self._u_exponents]

    def reduced_form(self, A) -> np.ndarray:
        """F(z) = a_0 + sum_j (a_j z^k_j + conj(a_j) z^-k_j) on every z in U (family 1)."""
        if self.spec.family != 1:
            raise ValueError("the root-count reduction is for family 1")
        A = self._check_tuples(A)
        T, R = self.tower, self.gf_r
        F = np.broadcast_to(R.coords(A[:, :1]), (A.shape[0], len(self.unit_circle)))
        for j, zp in enumerate(self._u_powers, start=1):
            F = R.add(F, R.coords(T.trace_r2_r[T.vmul(A[:, j, None], zp[None, :])]))
        return R.to_flat[F]

    def root_counts(self, A) -> np.ndarray:
        F = self.reduced_form(A)
        N = F.shape[1] - np.count_nonzero(F, axis=1)
        d = self.derived
        ok = (N == d.r + 1) | ((N % d.e == 0) & (N <= 2 * d.spec.t * d.e))
        if not ok.all():
            raise ConsistencyError(f"root counts outside the admissible set: {sorted(set(N[~ok].tolist()))}")
        return N

    def root_count(self, a: Sequence) -> int:
        """Number of z in U with F(z) = 0."""
        return int(self.root_counts([[_as_flat(x) for x in a]])[0])

    @cached_property
    def omega(self) -> np.ndarray:
        """Coset representatives gamma^0 .. gamma^r of GF(r^2)* / GF(r)*."""
        return self.tower.power_of_gamma(np.arange(self.derived.r + 1))

    @cached_property
    def _nonzero_trace_counts(self) -> np.ndarray:
        """Z[v] = #{y in GF(r)*: Tr_{r/q}(y^f v) != 0} for v in GF(r), indexed by flat encoding.

        Every nonzero symbol comes from some x = y*omega; family 2 has
        x^d = y^f omega^d for all its exponents since d = f (mod r-1).
        """
        T, r = self.tower, self.derived.r
        ys = T.vpow(self.gf_r.to_flat[1:], self.spec.f % (r - 1))
        v = self.gf_r.to_flat
        counts = np.count_nonzero(T.trace_r_q[T.vmul(v[:, None], ys[None, :])], axis=1)
        out = np.zeros(T.order, dtype=np.int64)
        out[v] = counts
        return out

    def _family2_form(self, A) -> np.ndarray:
        A = self._check_tuples(A)
        T, R = self.tower, self.gf_r
        G = np.zeros((A.shape[0], len(self.omega)), dtype=R.dtype)
        for j, d in enumerate(self.derived.exponents):
            G = R.add(G, R.coords(T.trace_r2_r[T.vmul(A[:, j, None], T.vpow(self.omega, d)[None, :])]))
        return R.to_flat[G]

    def fast_weights(self, A) -> np.ndarray:
        """Weights from the reduced form on r+1 points instead of n symbols.

        Family 1 uses the root count N on U.  Family 2 (experimental) sums the
        per-coset nonzero counts Z over the representatives omega.
        """
        d = self.derived
        if self.spec.family == 1:
            N = self.root_counts(A)
            num = (d.q - 1) * (d.r * d.r - (N - 1) * d.r)
            if (num % (d.q * d.delta)).any():
                raise ConsistencyError("non-integral weight from root count")
            return num // (d.q * d.delta)
        s = self._nonzero_trace_counts[self._family2_form(A)].sum(axis=1)
        if (s % d.delta).any():
            raise ConsistencyError("coset sum not divisible by delta")
        return s // d.delta

    def fast_weight(self, a: Sequence) -> int:
        return int(self.fast_weights([[_as_flat(x) for x in a]])[0])

    # -- index <-> tuple ----------------------------------------------------
    def _digits(self, index: int, base: int, count: int) -> list[int]:
        return [(index // base ** (count - 1 - i)) % base for i in range(count)]

    @cached_property
    def _q_basis(self) -> list[tuple[int, int]]:
        """(component, element) pairs forming a GF(q)-basis of the tuple space."""
        T, m = self.tower, self.spec.m
        rho = T.subfield_generator(self.derived.r)
        out = []
        for j in range(len(self.derived.exponents)):
            if self.spec.family == 1 and j == 0:
                out += [(0, T.pow(rho, i)) for i in range(m)]
            else:
                out += [(j, T.pow(T.gamma, i)) for i in range(2 * m)]
        return out

    @cached_property
    def _r_basis(self) -> list[tuple[int, int]]:
        """(component, element) pairs forming a GF(r)-basis of the tuple space."""
        out = []
        for j in range(len(self.derived.exponents)):
            if self.spec.family == 1 and j == 0:
                out.append((0, 1))
            else:
                out += [(j, 1), (j, self.tower.gamma)]
        return out

    def tuple_from_index(self, index: int, over: str = "q") -> list[int]:
        """Coefficient tuple with lexicographic index `index` over the GF(q) or GF(r) basis."""
        basis, sub = (self._q_basis, self.gf_q) if over == "q" else (self._r_basis, self.gf_r)
        T = self.tower
        a = [0] * len(self.derived.exponents)
        for (j, b), lam in zip(basis, self._digits(index, sub.size, len(basis))):
            a[j] = T.add(a[j], T.mul(int(sub.to_flat[lam]), b))
        return a

    # -- exhaustive distributions -------------------------------------------
    def _guard(self, budget: int, long_run: bool):
        if self.num_codewords > budget and not long_run:
            raise BudgetExceeded(
                f"{self.num_codewords} tuples exceed the budget {budget}; pass long_run=True")

    def _scale(self, sub: Subfield, base: list[np.ndarray]) -> np.ndarray:
        lam = sub.to_flat
        return np.stack([sub.coords(self.tower.vmul(lam[:, None], b[None, :])) for b in base])

    def brute_force_enumeration(self) -> LinearEnumeration:
        gens = []
        for j, b in self._q_basis:
            a = [0] * len(self.derived.exponents)
            a[j] = b
            gens.append(self.codeword(a))
        return LinearEnumeration(self._scale(self.gf_q, gens), self.gf_q, "nonzero")

    def accelerated_enumeration(self) -> LinearEnumeration:
        T = self.tower
        gens = []
        for j, b in self._r_basis:
            a = np.zeros((1, len(self.derived.exponents)), dtype=np.int64)
            a[0, j] = b
            if self.spec.family == 1:
                gens.append(self.reduced_form(a)[0])
            else:
                gens.append(self._family2_form(a)[0])
        if self.spec.family == 1:
            score = "zero"
        else:
            score = self._nonzero_trace_counts[self.gf_r.to_flat]
        return LinearEnumeration(self._scale(self.gf_r, gens), self.gf_r, score)

    def brute_force_distribution(self, *, budget: int = DEFAULT_BUDGET, long_run: bool = False,
                                 workers: int = 1) -> WeightDistribution:
        """Hamming weights of all q^k codewords."""
        self._guard(budget, long_run)
        hist = self.brute_force_enumeration().run(workers)
        if hist[0] != 1:
            raise ConsistencyError(f"{hist[0]} tuples give the zero codeword; the map is not injective")
        freqs = {w: int(a) for w, a in enumerate(hist) if a}
        return WeightDistribution.for_code(self.derived, freqs, "brute-force")

    def accelerated_distribution(self, *, budget: int = DEFAULT_BUDGET, long_run: bool = False,
                                 workers: int = 1, validate: int = 64,
                                 seed: int = 0) -> WeightDistribution:
        """Distribution from the reduced forms, one r+1 point evaluation per tuple.

        `validate` sampled tuples are checked against direct codeword weights
        first; any mismatch raises VerificationError.
        """
        self._guard(budget, long_run)
        d = self.derived
        enum = self.accelerated_enumeration()
        if validate:
            rng = np.random.default_rng(seed)
            idx = [int(x) for x in rng.integers(0, enum.size, validate)] + [0, enum.size - 1]
            try:
                got = self._stats_to_weights(enum.stats(enum.rows(idx)))
            except ConsistencyError as exc:
                raise VerificationError(f"accelerated statistics failed validation: {exc}") from exc
            tuples = np.array([self.tuple_from_index(i, over="r") for i in idx], dtype=np.int64)
            want = self.weights(tuples)
            bad = np.nonzero(got != want)[0]
            if len(bad):
                i = bad[0]
                raise VerificationError(
                    f"tuple {tuples[i].tolist()}: accelerated weight {got[i]} != direct {want[i]}")
        hist = enum.run(workers)
        if self.spec.family == 1:
            if hist[d.r + 1] != 1:
                raise ConsistencyError("F vanishes identically for a nonzero tuple")
        elif hist[0] != 1:
            raise ConsistencyError("nonzero tuple with zero accelerated weight")
        freqs: dict[int, int] = {}
        for stat, a in enumerate(hist):
            if a:
                w = int(self._stats_to_weights(np.array([stat]))[0])
                freqs[w] = freqs.get(w, 0) + int(a)
        return WeightDistribution.for_code(d, freqs, "accelerated")

    def _stats_to_weights(self, stats: np.ndarray) -> np.ndarray:
        d = self.derived
        if self.spec.family == 1:
            return np.array([weight_from_root_count(d, int(N)) for N in stats], dtype=np.int64)
        if (stats % d.delta).any():
            raise ConsistencyError("coset sum not divisible by delta")
        return stats // d.delta
