"""Shared spec generators for the test suite."""
from __future__ import annotations

import random

from nihocodes import CodeSpec, check_conditions

# (p, l, m) with r^2 <= 4096 so that direct weights stay cheap
SMALL_TOWERS = [
    (2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 1, 3), (2, 3, 1), (2, 1, 4), (2, 2, 2), (2, 4, 1),
    (2, 1, 5), (2, 1, 6), (2, 2, 3), (2, 3, 2), (2, 6, 1),
    (3, 1, 1), (3, 1, 2), (3, 2, 1), (3, 1, 3), (3, 3, 1),
    (5, 1, 1), (5, 1, 2), (5, 2, 1),
    (7, 1, 1), (7, 1, 2), (7, 2, 1),
]


def admissible_sweep(count: int, seed: int = 2024, primes=(2, 3, 5, 7), families=(1, 2),
                     towers=SMALL_TOWERS, max_t: int = 4) -> list[CodeSpec]:
    """Distinct admissible specs drawn from a seeded RNG, round-robin over p."""
    rng = random.Random(seed)
    pools = {p: [tw for tw in towers if tw[0] == p] for p in primes}
    out: list[CodeSpec] = []
    seen = set()
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 200 * count:
            raise RuntimeError("sweep generator starved")
        p = primes[len(out) % len(primes)]
        _, l, m = rng.choice(pools[p])
        r = (p**l) ** m
        spec = CodeSpec(rng.choice(families), p, l, m, rng.randrange(-r, 2 * r + 2),
                        rng.randrange(-r, 2 * r), rng.randint(1, max_t))
        key = (spec.family, p, l, m, spec.h % (r + 1), spec.f % (r * r - 1), spec.t)
        if key in seen or not check_conditions(spec).passed:
            continue
        seen.add(key)
        out.append(spec)
    return out


# closed-form only: any tower up to r^2 <= 2^32
WIDE_TOWERS = SMALL_TOWERS + [
    (2, 1, 7), (2, 1, 8), (2, 2, 4), (2, 4, 2), (2, 8, 1), (2, 3, 4), (2, 4, 4), (2, 8, 2),
    (3, 1, 4), (3, 2, 2), (3, 4, 1), (3, 1, 5), (3, 5, 1),
    (5, 1, 3), (5, 3, 1), (7, 1, 3), (7, 3, 1),
]


def specs_for(family: int, t: int, count: int, seed: int = 99) -> list:
    """Admissible specs with a fixed family and t, over the wide tower list."""
    out = []
    s = seed
    while len(out) < count:
        batch = admissible_sweep(4 * count, seed=s, primes=(2, 3, 5, 7), families=(family,),
                                 towers=WIDE_TOWERS, max_t=t)
        out += [x for x in batch if x.t == t and x not in out]
        s += 1
    return out[:count]
