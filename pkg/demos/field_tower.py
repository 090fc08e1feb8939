"""Walk through the field tower GF(2) < GF(4) < GF(16) < GF(256)."""
from nihocodes import build_tower

T = build_tower(2, 2, 2)
print(T)
print("modulus coefficients (low to high):", T.modulus)
print("gamma encoding:", T.gamma, "digits", T.digits(T.gamma))

# elements are ints; wrap one to get operator syntax
g = T.element(T.gamma)
print("gamma^255 =", g**255)
print("gamma * gamma^-1 =", g * g.inverse())

# conjugation x -> x^r fixes GF(16) and swaps the rest in pairs
x = g**3
print("conj(conj(x)) == x:", x.conj().conj() == x)
print("Tr_{r^2/q}(x) =", x.trace(), " lies in GF(4):", x.trace().in_subfield(4))

# the unit circle U of order r+1 = 17
U = T.unit_circle()
print("|U| =", len(U), " every z has z * conj(z) = 1:",
      all(T.mul(z, T.conj(z)) == 1 for z in U))

# kernel of the trace GF(16) -> GF(4) has 16/4 elements
print("zeros of Tr_{r/q} on GF(16):", sum(T.trace(y, "r") == 0 for y in T.subfield_elements(16)))
