"""Weight distributions and their JSON / text / enumerator-string forms."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Mapping

if TYPE_CHECKING:
    from .params import DerivedParams

_TERM = re.compile(r"^(\d*)Y(?:\^\{?(\d+)\}?)?$")


def parse_enumerator(text: str) -> dict[int, int]:
    """Parse '1+2040Y^{60}+255Y^{64}' (braces optional) into {weight: freq}."""
    out: dict[int, int] = {}
    for term in text.replace(" ", "").split("+"):
        if not term:
            continue
        if term.isdigit():
            out[0] = out.get(0, 0) + int(term)
            continue
        mt = _TERM.match(term)
        if not mt:
            raise ValueError(f"cannot parse enumerator term {term!r}")
        coef = int(mt.group(1)) if mt.group(1) else 1
        w = int(mt.group(2)) if mt.group(2) else 1
        out[w] = out.get(w, 0) + coef
    return out


def format_enumerator(freqs: Mapping[int, int], braces: bool = False) -> str:
    parts = []
    for w in sorted(freqs):
        a = freqs[w]
        if a == 0:
            continue
        if w == 0:
            parts.append(str(a))
        else:
            exp = f"{{{w}}}" if braces else str(w)
            parts.append(f"{a}Y^{exp}")
    return "+".join(parts)


@dataclass
class WeightDistribution:
    """Exact weight -> frequency map of a code, zero codeword included."""

    frequencies: dict[int, int]
    n: int
    k: int
    q: int
    method: str = ""
    params: dict = field(default_factory=dict)
    zero_frequency_weights: list[int] = field(default_factory=list)

    @classmethod
    def for_code(cls, derived: "DerivedParams", frequencies: Mapping[int, int], method: str,
                 zero_frequency_weights: list[int] | None = None) -> "WeightDistribution":
        params = derived.spec.to_dict()
        params.update(delta=derived.delta, e=derived.e)
        freqs = {int(w): int(a) for w, a in sorted(frequencies.items()) if a}
        return cls(freqs, derived.n, derived.dimension, derived.q, method, params,
                   list(zero_frequency_weights or []))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.frequencies == other.frequencies and self.n == other.n

    @property
    def total(self) -> int:
        return sum(self.frequencies.values())

    @property
    def min_distance(self) -> int:
        nz = [w for w in self.frequencies if w > 0]
        return min(nz) if nz else 0

    @property
    def num_nonzero_weights(self) -> int:
        return sum(1 for w in self.frequencies if w > 0)

    @property
    def enumerator(self) -> str:
        return format_enumerator(self.frequencies)

    @property
    def nkd(self) -> tuple[int, int, int]:
        return self.n, self.k, self.min_distance

    def first_difference(self, other: "WeightDistribution") -> int | None:
        """Smallest weight whose frequency differs, or None if equal."""
        ws = sorted(set(self.frequencies) | set(other.frequencies))
        for w in ws:
            if self.frequencies.get(w, 0) != other.frequencies.get(w, 0):
                return w
        return None

    def to_dict(self) -> dict:
        out = dict(self.params)
        out.update(
            n=self.n, k=self.k, d=self.min_distance, q=self.q,
            weights=[{"w": w, "freq": str(a)} for w, a in sorted(self.frequencies.items())],
            enumerator=self.enumerator,
            method=self.method,
        )
        if self.zero_frequency_weights:
            out["zero_frequency_weights"] = list(self.zero_frequency_weights)
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: Mapping) -> "WeightDistribution":
        skip = {"n", "k", "d", "q", "weights", "enumerator", "method", "zero_frequency_weights"}
        freqs = {int(item["w"]): int(item["freq"]) for item in data["weights"]}
        params = {k: v for k, v in data.items() if k not in skip}
        return cls(freqs, int(data["n"]), int(data["k"]), int(data["q"]), data.get("method", ""),
                   params, list(data.get("zero_frequency_weights", [])))

    @classmethod
    def from_json(cls, text: str) -> "WeightDistribution":
        return cls.from_dict(json.loads(text))

    def format_table(self) -> str:
        rows = [("weight", "frequency")] + [(str(w), str(a)) for w, a in sorted(self.frequencies.items())]
        w0 = max(len(a) for a, _ in rows)
        w1 = max(len(b) for _, b in rows)
        lines = [f"{a.rjust(w0)}  {b.rjust(w1)}" for a, b in rows]
        lines.insert(1, "-" * (w0 + w1 + 2))
        head = f"[{self.n}, {self.k}, {self.min_distance}] over GF({self.q})"
        if self.method:
            head += f"  ({self.method})"
        return "\n".join([head] + lines + [format_enumerator(self.frequencies, braces=True)])
