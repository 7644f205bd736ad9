"""Equivariant Euler characteristics and their irreducible decompositions.

In weight 2 the connected cohomology is concentrated in the single stratum
E = 1 once g >= 4 (and already at g = 3), so the equivariant Euler
characteristic determines the cohomology as a representation.  This script
decomposes it for all three variants at g = 3 and g = 6, m odd, recovering
the V(0) + V(lambda_2) + V(2 lambda_2) answer for the tadpole/plain variants
and the single V(2 lambda_2) for the extended one.
"""

from gchom import ComplexSpec, enumerate_basis, weyl_dim
from gchom.reptheory import SP, char_scale, decompose, equivariant_euler


def fmt(lam):
    return "V(" + ",".join(map(str, lam)) + ")" if lam else "V(0)"


for g in (3, 6):
    print(f"\n== weight 2, m odd, g = {g} ==")
    for variant in ("gc1tp", "gc1", "gcex"):
        basis = enumerate_basis(ComplexSpec(variant, "connected", g, "odd", 2))
        euler = equivariant_euler(basis, g)
        # cohomology sits at E = 1, so the character is minus the Euler sum
        dec = decompose(char_scale(euler, -1), g, SP)
        dims = {lam: weyl_dim(lam, g, SP) for lam in dec}
        total = sum(m * dims[lam] for lam, m in dec.items())
        pieces = " + ".join(fmt(lam) for lam in sorted(dec))
        print(f"{variant:6s}: {pieces}   (total dim {total})")
