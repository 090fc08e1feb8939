"""Closed-form weight distributions for both families, and where they come from."""
from nihocodes import CodeSpec, check_conditions, derive, moment_system, solve_distribution
from nihocodes.theory import corollary_tables, griesmer_check

spec = CodeSpec(family=1, p=2, l=2, m=2, h=1, f=3, t=2)
print(check_conditions(spec).format())

d = derive(spec)
print(f"q={d.q} r={d.r} e={d.e} delta={d.delta} n={d.n} k={d.dimension} exponents={d.exponents}")

# the frequencies solve a Vandermonde system built from the counts N_k
ms = moment_system(d)
print("nodes", ms.nodes)
print("b    ", ms.b)
print("mu   ", ms.mu, " residual", ms.residual())

dist = solve_distribution(spec)
print(dist.format_table())

# for t = 1 (family 1) and t <= 2 (family 2) the frequencies are also
# polynomials in (e, r); both routes must agree
spec2 = CodeSpec(family=2, p=2, l=3, m=1, h=2, f=14, t=2)
a, b = solve_distribution(spec2), corollary_tables(spec2)
print(a.enumerator, "==", b.enumerator, a == b)

g = griesmer_check(*a.nkd, a.q)
print(f"[{g.n},{g.k},{g.d}] over GF({g.q}): Griesmer length >= {g.bound}, meets bound: {g.meets}")
