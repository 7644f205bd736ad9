"""Stable invariant cohomology and the kappa classes.

At large genus the invariant part of the CE cohomology of the plain and
extended variants is a polynomial algebra on classes kappa_j (a single vertex
with j+1 dashed tadpoles, weight 2j); for the tadpole variant it vanishes.
This script computes the stable complexes at M = 0 for weights 1..4 and
prints the cohomology dimensions together with the kappa monomial count.
"""

from gchom import StableSpec, enumerate_stable, stable_cohomology_dims


def kappa_monomials(w: int) -> list[str]:
    # monomials kappa_{j1} ... kappa_{jk} with 2(j1 + ... + jk) = w
    out = []

    def rec(rem, minj, acc):
        if rem == 0:
            out.append("".join(f"k{j}" for j in acc) or "1")
            return
        for j in range(minj, rem // 2 + 1):
            rec(rem - 2 * j, j, acc + [j])

    rec(w, 1, [])
    return out


for family in ("jtp", "j", "k"):
    print(f"\n== stable family {family}, M = 0 ==")
    for W in (1, 2, 3, 4):
        basis = enumerate_stable(StableSpec(family, 0, W))
        rep = stable_cohomology_dims(StableSpec(family, 0, W), g=7, parity=1)
        hom = {E: h for E, h in rep.homology().items() if h}
        note = ""
        if family != "jtp":
            mons = kappa_monomials(W)
            note = f"   kappa monomials: {mons}"
        print(f"W={W}: dims {basis.dims() or {}}  ->  H = {hom or 0}{note}")
