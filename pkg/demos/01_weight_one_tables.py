"""Weight-1 cohomology of all three graph complex variants.

The weight-1 pieces are small enough to understand completely: the connected
complexes are spanned by a single vertex with three decorations, the tadpole
generators (gc1tp), and the crossed generators (gcex).  This script computes
the cohomology for g = 0..4 and both parities of m and prints the tables,
with the irreducible dimensions for comparison.
"""

from gchom import ComplexSpec, cohomology_dims, weyl_dim
from gchom.reptheory import SP, O


def table(parity: str):
    print(f"\n== weight 1, m {parity} ==")
    header = ["variant"] + [f"g={g}" for g in range(5)]
    rows = []
    for variant in ("gc1tp", "gc1", "gcex"):
        row = [variant]
        for g in range(5):
            rep = cohomology_dims(ComplexSpec(variant, "connected", g, parity, 1))
            hom = {E: h for E, h in rep.homology().items() if h}
            if not hom:
                row.append("0")
            else:
                # report in dual (Lie algebra side) degrees for m = 1 or 2
                m = 1 if parity == "odd" else 2
                row.append(", ".join(
                    f"{h} @ deg {1 - m + E}" for E, h in sorted(hom.items())))
        rows.append(row)
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    for r in [header] + rows:
        print("  ".join(str(c).ljust(w) for c, w in zip(r, widths)))


table("odd")
print("\nfor comparison: dim V(lambda_3) =",
      {g: weyl_dim((1, 1, 1), g, SP) for g in (3, 4)},
      "and dim V(lambda_1) = 2g")

table("even")
print("\nfor comparison: dim ker(S^3 V -> V) =",
      {g: weyl_dim((3,), g, O) * (2 if g == 1 else 1) for g in (1, 2, 3, 4)})
