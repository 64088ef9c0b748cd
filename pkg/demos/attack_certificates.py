"""Constructing explicit low-degree multiplier pairs (g, h = g*f).

A pair with small deg(g) and controlled deg(h) is the preprocessing step of
a fast algebraic attack; the constructions below read g straight off the
SANFV instead of solving a linear system.

Run:  python demos/attack_certificates.py
"""

import json

import symfai as s

print("=== odd degree: an affine multiplier always drops the degree by 2 ===")
f = s.Sanfv.from_indices(9, [9, 6, 2])
cert = s.affine_multiplier(f)
print(f"f = {f.to_string()} (deg {f.degree()})")
print(f"g = {cert.g.to_string()} (affine), h = g*f = {cert.h.to_string()} (deg {cert.deg_h})")

print()
print("=== degree not a power of two: one certificate per residue ===")
f = s.Sanfv.from_indices(10, [7, 3])
for cert in s.residue_multipliers(f):
    print(f"k={cert.params['k']}: deg(g)={cert.deg_g}, deg(h)={cert.deg_h}"
          f"  bound deg(f)-e-1 = {f.degree() - cert.params['e'] - 1}")

print()
print("=== n slightly above a power of two: the window dichotomy ===")
for f in (s.sigma(8, 4), s.majority(9), s.sigma(10, 8)):
    cert = s.near_power_certificate(f)
    h_deg = "vanishes" if cert.vanishing else f"deg {cert.deg_h}"
    print(f"n={f.n}, f={f.to_string()}: {cert.source}, g deg {cert.deg_g}, product {h_deg}")

print()
print("As JSON (the CLI emits the same shape):")
print(json.dumps(s.near_power_certificate(s.sigma(8, 4)).to_json_dict(), indent=2, sort_keys=True))

print()
print("=== expected degree drop of the affine multiplier ===")
for n in (21, 41, 81):
    stat = s.product_degree_gap_statistic(n, samples=2000, seed=0)
    print(f"n={n}: mean gap = {float(stat.mean_gap):.3f}"
          f" ({stat.vanished} vanished products) -> tends to 4")
