"""Code parameters, admissibility conditions and dimension checks."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .fields import is_prime


class InadmissibleParameters(ValueError):
    """The parameters violate the conditions the constructions require."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class CodeSpec:
    family: int
    p: int
    l: int
    m: int
    h: int
    f: int
    t: int

    def __post_init__(self):
        if self.family not in (1, 2):
            raise ValueError(f"family must be 1 or 2, got {self.family}")
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        for name in ("l", "m", "t"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.l

    @property
    def r(self) -> int:
        return self.q**self.m

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("family", "p", "l", "m", "h", "f", "t")}


@dataclass(frozen=True)
class DerivedParams:
    spec: CodeSpec
    q: int
    r: int
    e: int
    delta: int
    n: int
    exponents: tuple[int, ...]
    # exponent j written as s_j (r-1) + Delta, the form the closed-form minpoly rule uses
    decomposition: tuple[tuple[int, int], ...]
    dimension: int
    # family 2 only: delta from the other branch of its two-case definition
    delta_other_branch: int | None = None

    @property
    def modulus(self) -> int:
        return self.r**2 - 1

    @property
    def num_weights(self) -> int:
        """Size of the moment system: 2t+1 (family 1) or 2t (family 2)."""
        return 2 * self.spec.t + (1 if self.spec.family == 1 else 0)


@dataclass(frozen=True)
class Condition:
    label: str
    passed: bool
    detail: str
    required: bool = True


@dataclass
class ConditionReport:
    family: int
    conditions: list[Condition]
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions if c.required)

    @property
    def failures(self) -> list[str]:
        return [c.label for c in self.conditions if c.required and not c.passed]

    def __getitem__(self, label: str) -> Condition:
        for c in self.conditions:
            if c.label == label:
                return c
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "passed": self.passed,
            "conditions": [
                {"label": c.label, "passed": c.passed, "required": c.required, "detail": c.detail}
                for c in self.conditions
            ],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def format(self) -> str:
        lines = []
        for c in self.conditions:
            tag = "pass" if c.passed else "fail"
            opt = "" if c.required else " (alternative)"
            lines.append(f"({c.label}) {tag}{opt}: {c.detail}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)


def _half(spec: CodeSpec, value: int) -> int | None:
    """value/2 as an integer usable in exponents mod r^2-1.

    Odd p: plain halving, None when value is odd.  p = 2: multiplication by
    the inverse of 2 modulo r^2-1 (odd), which also inverts 2 mod r-1.
    """
    if value % 2 == 0:
        return value // 2
    if spec.p == 2:
        mod = spec.r**2 - 1
        return value * pow(2, -1, mod) % mod
    return None


def derive(spec: CodeSpec) -> DerivedParams:
    """All quantities determined by the raw parameters.

    Raises InadmissibleParameters when family 2 has p odd and h, f of
    different parity (the exponents are then undefined).
    """
    q, r, t, h, f = spec.q, spec.r, spec.t, spec.h, spec.f
    mod = r * r - 1
    e = math.gcd(h, r + 1)
    if spec.family == 1:
        delta = math.gcd((r + 1) * f, (r - 1) * e)
        decomposition = tuple((j * h + f, 2 * f) for j in range(t + 1))
        other = None
        dim = (2 * t + 1) * spec.m
    else:
        c = _half(spec, f - h)
        if c is None:
            raise InadmissibleParameters(
                f"family 2 with odd p needs h = f (mod 2); got h={h}, f={f}")
        base = (h + c) * (r - 1) + f
        delta_t1 = math.gcd(base, mod)
        delta_t2 = math.gcd(base, (r - 1) * e)
        delta, other = (delta_t1, delta_t2) if t == 1 else (delta_t2, delta_t1)
        decomposition = tuple((j * h + c, f) for j in range(1, t + 1))
        dim = 2 * t * spec.m
    exponents = tuple((s * (r - 1) + d) % mod for s, d in decomposition)
    return DerivedParams(spec, q, r, e, delta, mod // delta, exponents,
                         decomposition, dim, other)


def check_conditions(spec: CodeSpec, derived: DerivedParams | None = None) -> ConditionReport:
    """Evaluate the admissibility conditions of the spec's family."""
    p, q, r, m, h, f, t = spec.p, spec.q, spec.r, spec.m, spec.h, spec.f, spec.t
    e = math.gcd(h, r + 1)
    ratio = (r - 1) // (q - 1)
    bound = f"(r+1)/(2e) = {r + 1}/{2 * e}"
    conds: list[Condition] = []
    notes: list[str] = []
    if spec.family == 1:
        conds.append(Condition("a", 1 <= t and 2 * e * t < r + 1, f"t={t} < {bound}"))
        g = math.gcd(f, ratio)
        conds.append(Condition("b", g == 1, f"gcd(f, (r-1)/(q-1)) = gcd({f}, {ratio}) = {g}"))
        if p == 2:
            conds.append(Condition("c", True, "p = 2, not applicable"))
        else:
            ok = m % 2 == 1 or (m % 2 == 0 and h % 2 == 0)
            conds.append(Condition("c", ok, f"p odd: m={m} odd, or m and h={h} both even"))
    else:
        conds.append(Condition("a'", 1 <= t and 2 * e * t <= r + 1, f"t={t} <= {bound}"))
        g = math.gcd(f, ratio)
        if p == 2:
            conds.append(Condition("b'", g == 1, f"gcd(f, (r-1)/(q-1)) = gcd({f}, {ratio}) = {g}"))
        else:
            c1 = (h - f) % 2 == 0 and g == 1
            g2 = math.gcd(f // 2, ratio) if f % 2 == 0 else None
            c2 = h % 2 == 0 and f % 2 == 0 and g2 == 1
            conds.append(Condition("c1'", c1, f"h = f (mod 2) and gcd({f}, {ratio}) = {g}", False))
            conds.append(Condition("c2'", c2, f"h, f even and gcd(f/2, {ratio}) = {g2}", False))
            conds.append(Condition("c'", c1 or c2, "(c1') or (c2')"))
        if derived is None and (p == 2 or (h - f) % 2 == 0):
            derived = derive(spec)
        if derived is not None and derived.delta_other_branch not in (None, derived.delta):
            notes.append(
                f"delta={derived.delta} differs from the other branch's "
                f"{derived.delta_other_branch} of the t=1 / t>=2 definition")
    return ConditionReport(spec.family, conds, notes)


def cyclotomic_coset(d: int, q: int, modulus: int) -> frozenset[int]:
    """Orbit {d q^i mod modulus}."""
    d %= modulus
    out, x = set(), d
    while x not in out:
        out.add(x)
        x = x * q % modulus
    return frozenset(out)


def minpoly_degree(d: int, q: int, r: int) -> int:
    """Degree over GF(q) of the minimal polynomial of gamma^(-d).

    Equal to the size of the q-cyclotomic coset of d modulo r^2-1.
    """
    return len(cyclotomic_coset(-d, q, r * r - 1))


def same_minpoly(d1: int, d2: int, q: int, r: int) -> bool:
    mod = r * r - 1
    return (-d2) % mod in cyclotomic_coset(-d1, q, mod)


def _closed_form_applies(delta_: int, q: int, r: int) -> bool:
    ratio = (r - 1) // (q - 1)
    if math.gcd(delta_, ratio) == 1:
        return True
    return delta_ % 2 == 0 and math.gcd(delta_ // 2, ratio) == 1


def closed_form_minpoly_degree(s: int, delta_: int, q: int, r: int, m: int) -> int | None:
    """Closed-form degree for d = s(r-1) + delta_; None outside its gcd hypothesis."""
    if not _closed_form_applies(delta_, q, r):
        return None
    return m if (delta_ - 2 * s) % (r + 1) == 0 else 2 * m


def closed_form_same_minpoly(s1: int, s2: int, delta_: int, q: int, r: int) -> bool | None:
    if not _closed_form_applies(delta_, q, r):
        return None
    return (s1 - s2) % (r + 1) == 0 or (s1 + s2 - delta_) % (r + 1) == 0


def dimension(derived: DerivedParams) -> int:
    """Sum of minimal-polynomial degrees of the exponents.

    Checks it against the expected (2t+1)m / 2tm and that the minimal
    polynomials are pairwise distinct; raises ConsistencyError otherwise.
    """
    q, r, m = derived.q, derived.r, derived.spec.m
    degs = [minpoly_degree(d, q, r) for d in derived.exponents]
    expected = [m] + [2 * m] * derived.spec.t if derived.spec.family == 1 else [2 * m] * derived.spec.t
    if degs != expected:
        raise ConsistencyError(f"minimal polynomial degrees {degs}, expected {expected}")
    exps = derived.exponents
    for i in range(len(exps)):
        for j in range(i + 1, len(exps)):
            if same_minpoly(exps[i], exps[j], q, r):
                raise ConsistencyError(f"exponents {exps[i]} and {exps[j]} share a minimal polynomial")
    total = sum(degs)
    if total != derived.dimension:
        raise ConsistencyError(f"dimension {total} != {derived.dimension}")
    return total
