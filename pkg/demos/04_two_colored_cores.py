"""The two-colored complex of a core graph and its concentration.

For a fixed core multigraph the 2-colorings whose solid part stays connected
form a complex under turning solid edges dashed; its cohomology sits entirely
in the top degree 1 - N.  The surviving classes are spanned by spanning
trees, so the top dimension is (#spanning trees) - (rank of the one-loop
differential).
"""

from gchom import CoreGraph, build_cgamma, cgamma_homology_dims

cores = {
    "triangle": CoreGraph(3, ((0, 1), (0, 2), (1, 2))),
    "square": CoreGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    "theta": CoreGraph(2, ((0, 1), (0, 1), (0, 1))),
    "K4": CoreGraph(4, tuple((i, j) for i in range(4) for j in range(i + 1, 4))),
    "tadpole core": CoreGraph(2, ((0, 0), (0, 1))),
}

for name, core in cores.items():
    bases = build_cgamma(core)
    dims = {d: len(v) for d, v in bases.items()}
    hom = {d: h for d, h in cgamma_homology_dims(core).items() if h}
    print(f"{name:13s} N={core.n} k={len(core.edges)}  dims {dims}")
    print(f"{'':13s} cohomology {hom or 0}   (top degree {1 - core.n})")
