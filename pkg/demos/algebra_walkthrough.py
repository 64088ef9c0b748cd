"""A guided tour of the SANFV algebra.

Run:  python demos/algebra_walkthrough.py
"""

import symfai as s

print("=== Representations ===")
f = s.Sanfv.from_indices(6, [4, 2, 1])
print("f = sigma_4 + sigma_2 + sigma_1 on 6 variables")
print("  SANFV string :", f.to_string())
print("  value vector :", s.to_values(f).to_string(), "(bit k = value at weight k)")
print("  degree       :", f.degree())
print("  f(1,1,0,1,0,0) =", s.evaluate(f, [1, 1, 0, 1, 0, 0]))

print()
print("=== Products follow the OR rule, truncated above n ===")
for n, i, j in [(8, 1, 2), (8, 3, 5), (6, 4, 3), (2, 1, 2)]:
    product = s.mul(s.sigma(n, i), s.sigma(n, j))
    print(f"  sigma_{i} * sigma_{j} on n={n}: {product.to_string()}"
          f"  (indices {product.indices()})")

print()
print("The binomial-coefficient expansion is an independent route:")
print("  sigma_3 * sigma_5 on n=8 :", s.sigma_product_binomial(3, 5, 8).indices())

print()
print("=== Every symmetric function composes power-of-two sigmas ===")
g = s.Sanfv.from_indices(5, [5])
form = s.decompose(g)
print("sigma_5 on n=5 decomposes with m =", form.m)
print("  ANF bits of the 3-variable function:", bin(form.bits))
print("  bit 5 = 0b101 set, so F(y1,y2,y3) = y1*y3: sigma_5 = sigma_1 * sigma_4")
assert s.compose(form, 5) == g

print()
print("=== Splitting peels off sigma_{2^i} multiples ===")
h = s.Sanfv.from_indices(7, [4, 3, 1])
parts = s.split(h, 2)
for i, part in parts.parts:
    print(f"  factor of sigma_{1 << i}: {part.to_string()}")
print("  residue (degree < 4):", parts.residue.to_string())
assert parts.recombine() == h
print("  recombination reproduces f exactly")
