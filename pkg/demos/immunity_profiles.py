"""Exact AI and FAI of a few named symmetric functions.

Run:  python demos/immunity_profiles.py
"""

import json

import symfai as s


def show(name, f):
    p = s.profile(f)
    print(f"{name} (n={f.n})")
    print(f"  SANFV={f.to_string()}  deg={p.deg}  AI={p.ai}  FAI={p.fai}"
          f"{'  (cap 2*AI attained)' if p.capped else ''}")
    witness = [sorted_indices(m) for m in p.ai_witness[:4]]
    print(f"  annihilator witness monomials (first few): {witness}")
    if p.fai_witness:
        g_masks, h_masks = p.fai_witness
        g_deg = max(m.bit_count() for m in g_masks)
        h_deg = max(m.bit_count() for m in h_masks)
        print(f"  multiplier pair degrees: deg(g)={g_deg}, deg(g*f)={h_deg}")
    print()


def sorted_indices(mask):
    return [i for i in range(16) if (mask >> i) & 1]


for n in (5, 7, 9, 11):
    show(f"majority({n})", s.majority(n))

show("sigma_4 on 8 variables", s.sigma(8, 4))
show("threshold(6, 4) = sigma_4 on 6 variables", s.sigma(6, 4))

print("=== cross-check against the brute-force oracle ===")
f = s.majority(7)
dense = s.dense_from_sanfv(f)
print("majority(7): symmetric route AI =", s.ai_symmetric(f)[0],
      "| dense oracle AI =", s.ai(dense))
d, witness = s.min_annihilator_degree(dense)
print("dense minimum annihilator degree:", d)

print()
print("=== machine-readable profile ===")
print(json.dumps(s.profile(s.majority(5)).to_json_dict(), indent=2, sort_keys=True))
