"""Named verification scenarios: each reduces one of the source claims to
exact integer checks over the engine, producing a structured report.

Every expected value carries a provenance tag (PAPER / TRIVIAL / DERIVED).
Infeasible checks are reported SKIPPED with the resource reason; they never
silently shrink.  Reports are deterministic and idempotent.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .cache import Cache, Config
from .cgamma import CoreGraph, cgamma_homology_dims
from .differential import assemble_dynamic
from .enumeration import (
    ComplexSpec,
    ResourceLimitError,
    StableSpec,
    enumerate_basis,
    enumerate_ce,
    enumerate_connected,
    enumerate_stable,
)
from .graphs import decode, is_admissible
from .homology import (
    ce_dims_from_connected,
    cohomology_dims,
    complex_matrices,
    connected_euler_characteristic,
    report_from_matrices,
    stable_cohomology_dims,
    tadpole_ideal_report,
)
from .linalg import rank_exact, sparse_product_is_zero
from .liemodels import koszul_identity_check, wgfr_dims
from .reptheory import (
    O,
    SP,
    char_scale,
    decompose,
    equivariant_euler,
    group_for_parity,
    invariant_dim,
    invariant_dim_bruteforce,
    matching_count,
    weyl_dim,
)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass
class Check:
    description: str
    computed: object
    expected: object
    provenance: str
    status: str

    def to_json(self) -> dict:
        return {
            "description": self.description,
            "computed": _jsonable(self.computed),
            "expected": _jsonable(self.expected),
            "provenance": self.provenance,
            "status": self.status,
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class Report:
    scenario: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    elapsed_s: float = 0.0
    cache: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if any(c.status == FAIL for c in self.checks):
            return FAIL
        if all(c.status == SKIPPED for c in self.checks) and self.checks:
            return SKIPPED
        return PASS

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        return {
            "schema": "gchom-report@1",
            "scenario": self.scenario,
            "params": _jsonable(self.params),
            "status": self.status,
            "elapsed_s": round(self.elapsed_s, 3),
            "cache": self.cache,
            "checks": [c.to_json() for c in self.checks],
        }

    def summary_lines(self) -> list[str]:
        lines = [f"scenario {self.scenario}: {self.status} "
                 f"({len(self.checks)} checks, {self.elapsed_s:.1f}s)"]
        for c in self.checks:
            mark = {PASS: "ok  ", FAIL: "FAIL", SKIPPED: "skip"}[c.status]
            lines.append(f"  [{mark}] {c.description}: computed={c.computed} "
                         f"expected={c.expected} {c.provenance}")
        return lines


def _eq(desc: str, computed, expected, provenance: str) -> Check:
    status = PASS if computed == expected else FAIL
    return Check(desc, computed, expected, provenance, status)


def _true(desc: str, condition: bool, provenance: str, computed=None) -> Check:
    return Check(desc, computed if computed is not None else condition, True,
                 provenance, PASS if condition else FAIL)


def _skip(desc: str, reason: str) -> Check:
    return Check(desc, None, None, f"[SKIPPED: {reason}]", SKIPPED)


# ---------------------------------------------------------------------------
# Cached helpers
# ---------------------------------------------------------------------------


def _report(spec: ComplexSpec, config: Config, cache: Cache):
    from .linalg import DimReport

    def compute():
        return cohomology_dims(spec, limits=config.limits,
                               seed=config.prime_seed).to_json()

    doc, _hit = cache.get_or_compute("dimreport", spec.as_dict(), compute)
    dims = {int(k): v for k, v in doc["dims"].items()}
    ranks = {int(k): v for k, v in doc["ranks"].items()}
    return DimReport(spec_doc=doc["spec"], dims=dims, ranks=ranks)


def _homology(spec: ComplexSpec, config: Config, cache: Cache) -> dict[int, int]:
    rep = _report(spec, config, cache)
    return {E: h for E, h in rep.homology().items() if h}


# ---------------------------------------------------------------------------
# Scenarios
# ---------------------------------------------------------------------------


def scenario_d2_zero(params: dict, config: Config, cache: Cache) -> list[Check]:
    """d^2 = 0 exactly for all variants/sides/families (the axiom)."""
    g_max = params.get("g_max", 4)
    checks = []
    for variant in ("gc1tp", "gc1", "gcex"):
        for parity in (1, 0):
            for g in range(0, g_max + 1):
                for (side, w_max) in (("connected", params.get("w_conn", 3)),
                                      ("ce", params.get("w_ce", 2))):
                    for W in range(1, w_max + 1):
                        spec = ComplexSpec(variant, side, g, parity, W)
                        basis = enumerate_basis(spec, config.limits)
                        mats = complex_matrices(basis)
                        ok = True
                        for E, mat in mats.items():
                            nxt = mats.get(E + 1)
                            if nxt is not None and not sparse_product_is_zero(mat, nxt):
                                ok = False
                        checks.append(_true(
                            f"d^2=0 {variant}/{side} g={g} parity={parity} W={W}",
                            ok, "[TRIVIAL: differential axiom]"))
    for family in ("jtp", "j", "k"):
        for W in range(0, params.get("w_stable", 4) + 1):
            for M in range(0, min(params.get("m_stable", 4), 3 * W + 2) + 1):
                sspec = StableSpec(family, M, W)
                basis = enumerate_stable(sspec, config.limits)
                for (g, parity) in ((7, 1), (6, 0)):
                    mats = complex_matrices(basis, g=g, parity=parity)
                    ok = all(
                        sparse_product_is_zero(mat, mats[E + 1])
                        for E, mat in mats.items()
                        if E + 1 in mats
                    )
                    checks.append(_true(
                        f"d^2=0 stable {family} M={M} W={W} (g={g}, parity={parity})",
                        ok, "[TRIVIAL: differential axiom]"))
    return checks


def scenario_tadpole_quotient(params: dict, config: Config, cache: Cache) -> list[Check]:
    """The tadpole quotient is an isomorphism on weight >= 2 cohomology."""
    checks = []
    for parity in (1, 0):
        for g in range(0, params.get("g_max", 3) + 1):
            for W in (2, params.get("w_max", 3)):
                specs = [ComplexSpec(v, "connected", g, parity, W)
                         for v in ("gc1tp", "gc1")]
                h = [_homology(s, config, cache) for s in specs]
                checks.append(_eq(
                    f"gr^{W} H(gc1tp) = gr^{W} H(gc1) at g={g} parity={parity}",
                    h[0], h[1],
                    "[PAPER: Thm 1(i) 'induces an isomorphism']"))
    return checks


def scenario_ideal_cohomology(params: dict, config: Config, cache: Cache) -> list[Check]:
    """H of the tadpole ideal: 2g-dimensional at weight 1, E=1; else zero."""
    checks = []
    for parity in (1, 0):
        for g in (1, 2, 3):
            for W in range(1, params.get("w_max", 3) + 1):
                rep = tadpole_ideal_report(g, parity, W, limits=config.limits,
                                           seed=config.prime_seed)
                h = {E: v for E, v in rep.homology().items() if v}
                expected = {1: 2 * g} if W == 1 else {}
                checks.append(_eq(
                    f"H(tadpole ideal) g={g} parity={parity} W={W}",
                    h, expected,
                    "[PAPER: 'H(I_g^tp) is 2g-dimensional, concentrated in degree 2-m']"))
    return checks


def _weight1_expected(variant: str, g: int, parity: int) -> dict[int, int]:
    if g == 0:
        return {}
    if parity == 1:  # Sp(2g)
        lam3 = weyl_dim((1, 1, 1), g, SP) if g >= 3 else 0
        if variant == "gc1tp":
            if g == 1:
                return {1: 2}
            if g == 2:
                return {}
            return {0: lam3}
        if variant == "gc1":
            if g == 1:
                return {}
            if g == 2:
                return {0: 2 * g}
            return {0: 2 * g + lam3}
        if g == 1:
            return {-1: 2}
        if g == 2:
            return {}
        return {0: lam3}
    # O(g,g): V(3 lambda_1) = ker(S^3 V -> V)
    d3 = irrep_dim_o((3,), g)
    if variant == "gc1":
        return {0: 2 * g + d3}
    return {0: d3}


def irrep_dim_o(lam: tuple[int, ...], g: int) -> int:
    """O(g,g)-irreducible dimension; det-conjugate pairs count twice."""
    d = weyl_dim(lam, g, O)
    if len(lam) == g and g > 0 and lam[-1] > 0:
        d *= 2
    return d


def irrep_dim(lam: tuple[int, ...], g: int, group: str) -> int:
    return weyl_dim(lam, g, SP) if group == SP else irrep_dim_o(lam, g)


def scenario_weight1_tables(params: dict, config: Config, cache: Cache) -> list[Check]:
    """Both weight-1 tables, including the small-genus special cases."""
    checks = []
    for parity in (1, 0):
        for g in range(0, params.get("g_max", 4) + 1):
            for variant in ("gc1tp", "gc1", "gcex"):
                spec = ComplexSpec(variant, "connected", g, parity, 1)
                h = _homology(spec, config, cache)
                expected = _weight1_expected(variant, g, parity)
                name = "m odd" if parity else "m even"
                checks.append(_eq(
                    f"weight-1 table {variant} g={g} ({name})",
                    h, expected,
                    "[PAPER: weight-1 tables; irreducible dims DERIVED via Weyl formula]"))
    # cross-check the table's sample irreducible dimension
    checks.append(_eq("dim V(lambda_3) at g=3", weyl_dim((1, 1, 1), 3, SP), 14,
                      "[DERIVED: C(6,3) - 6 from the wedge^3 decomposition]"))
    return checks


GR2_EXPECTED = {
    # variant -> parity -> list of partitions with multiplicity 1
    "gc1tp": {1: [(), (1, 1), (2, 2)], 0: [(), (2,), (2, 2)]},
    "gc1": {1: [(), (1, 1), (2, 2)], 0: [(), (2,), (2, 2)]},
    "gcex": {1: [(2, 2)], 0: [(2, 2)]},
}


def scenario_gr2_tables(params: dict, config: Config, cache: Cache) -> list[Check]:
    """Equivariant Euler characteristics of the weight-2 complexes decompose
    as the listed irreducibles (cohomology sits in the single stratum E=1)."""
    checks = []
    for parity in (1, 0):
        group = group_for_parity(parity)
        for g in params.get("genera", (3, 6)):
            for variant in ("gc1tp", "gc1", "gcex"):
                spec = ComplexSpec(variant, "connected", g, parity, 2)
                basis = enumerate_basis(spec, config.limits)
                euler = equivariant_euler(basis, g)
                # cohomology concentrated at E = W-1 = 1: decompose -euler
                dec = decompose(char_scale(euler, -1), g, group)
                expected = {lam: 1 for lam in GR2_EXPECTED[variant][parity]}
                checks.append(_eq(
                    f"gr^2 Euler decomposition {variant} g={g} parity={parity}",
                    dec, expected,
                    "[PAPER: the listed gr^2 decompositions; characters DERIVED]"))
                if variant == "gc1tp" and parity == 1 and g == 3:
                    total = sum(m * irrep_dim(l, g, group) for l, m in dec.items())
                    checks.append(_eq(
                        "total dimension of gr^2 H(gc1tp) at g=3, m odd",
                        total, 105, "[DERIVED: 120 - 15]"))
    return checks


def scenario_vanishing(params: dict, config: Config, cache: Cache) -> list[Check]:
    """Connected cohomology concentrated at E = W-1 for g >= W+2."""
    checks = []
    for parity in (1, 0):
        for variant in ("gc1tp", "gc1", "gcex"):
            spec = ComplexSpec(variant, "connected", 4, parity, 2)
            h = _homology(spec, config, cache)
            checks.append(_true(
                f"vanishing W=2 g=4 {variant} parity={parity}: support {sorted(h)}",
                set(h) <= {1}, "[PAPER: Thm 3(iii), concentration at degree -(m-1)W]",
                computed=sorted(h)))
    if params.get("attempt_w3", True):
        for variant in ("gc1tp", "gc1", "gcex"):
            try:
                spec = ComplexSpec(variant, "connected", 5, 1, 3)
                h = _homology(spec, config, cache)
                checks.append(_true(
                    f"vanishing W=3 g=5 {variant} (m odd): support {sorted(h)}",
                    set(h) <= {2},
                    "[PAPER: Thm 3(iii)]", computed=sorted(h)))
            except ResourceLimitError as exc:
                checks.append(_skip(f"vanishing W=3 g=5 {variant}", str(exc)))
    else:
        checks.append(_skip("vanishing W=3 g=5", "disabled by params"))
    return checks


def scenario_ce_concentration(params: dict, config: Config, cache: Cache) -> list[Check]:
    """CE cohomology concentrated at E = 0 for g >= 3W."""
    checks = []
    for parity in (1, 0):
        for g in (3, 4):
            for variant in ("gc1tp", "gc1", "gcex"):
                spec = ComplexSpec(variant, "ce", g, parity, 1)
                h = _homology(spec, config, cache)
                checks.append(_true(
                    f"CE concentration W=1 g={g} {variant} parity={parity}",
                    set(h) <= {0}, "[PAPER: Thm 4, concentration in degree mW]",
                    computed=sorted(h)))
    # W=2, g=6 via the stable invariant complexes, all M <= 6
    for parity in (1, 0):
        for family in ("jtp", "j", "k"):
            for M in range(0, params.get("m_max", 6) + 1):
                rep = stable_cohomology_dims(StableSpec(family, M, 2), g=6,
                                             parity=parity, limits=config.limits,
                                             seed=config.prime_seed)
                h = {E: v for E, v in rep.homology().items() if v}
                checks.append(_true(
                    f"stable CE concentration {family} M={M} W=2 parity={parity}",
                    set(h) <= {0},
                    "[PAPER: Thm 4 via the invariant complexes J/K]",
                    computed=sorted(h)))
    return checks


def scenario_stable_complexes(params: dict, config: Config, cache: Cache) -> list[Check]:
    """Stable invariant CE cohomology at M=0: zero for the tadpole family,
    monomials in the kappa classes for the other two."""
    checks = []
    expected_by_w = {1: {}, 2: {0: 1}, 3: {}, 4: {0: 2}}
    for parity in (1, 0):
        g = 7
        for family in ("jtp", "j", "k"):
            for W in (1, 2, 3, 4):
                rep = stable_cohomology_dims(StableSpec(family, 0, W), g=g,
                                             parity=parity, limits=config.limits,
                                             seed=config.prime_seed)
                h = {E: v for E, v in rep.homology().items() if v}
                expected = {} if family == "jtp" else expected_by_w[W]
                checks.append(_eq(
                    f"stable M=0 cohomology {family} W={W} parity={parity}",
                    h, expected,
                    "[PAPER: the polynomial algebra on kappa classes; counts DERIVED]"))
    return checks


def scenario_ses_dims(params: dict, config: Config, cache: Cache) -> list[Check]:
    """dim gr^W H(gc1) = dim gr^W w^fr + dim gr^W H(gcex), and the g=1 splits."""
    checks = []
    for parity in (1, 0):
        for g in (2, 3):
            for W in (1, 2):
                h1 = sum(_homology(ComplexSpec("gc1", "connected", g, parity, W),
                                   config, cache).values())
                hx = sum(_homology(ComplexSpec("gcex", "connected", g, parity, W),
                                   config, cache).values())
                wfr = wgfr_dims(g, parity, W).get(W, 0)
                checks.append(_eq(
                    f"SES dims g={g} W={W} parity={parity}: H(gc1) vs w^fr + H(gcex)",
                    h1, wfr + hx,
                    "[PAPER: Thm 1(ii), homotopy of the unit sphere bundle; dims DERIVED]"))
    # g = 1 split sequences, per weight: dim H(gc1) - dim H(gcex) = A_W - D_W
    for parity, a_dims, d_dims in (
        (1, {2: 1}, {1: 2}),          # 0 -> Kc -> ... -> Kc_1 + Kc_2 -> 0
        (0, {1: 2, 2: 1}, {2: 2}),    # 0 -> Kc+Kc_1+Kc_2 -> ... -> K[c_i,c_i] -> 0
    ):
        for W in (1, 2, 3):
            h1 = sum(_homology(ComplexSpec("gc1", "connected", 1, parity, W),
                               config, cache).values())
            hx = sum(_homology(ComplexSpec("gcex", "connected", 1, parity, W),
                               config, cache).values())
            expected = a_dims.get(W, 0) - d_dims.get(W, 0)
            checks.append(_eq(
                f"g=1 split sequence, W={W}, parity={parity}",
                h1 - hx, expected,
                "[PAPER: the g=1 four-term exact sequences]"))
    return checks


def scenario_cgamma(params: dict, config: Config, cache: Cache) -> list[Check]:
    """Concentration of the two-colored core complex in top degree 1-N."""
    rng = random.Random(params.get("seed", 2024))
    count = params.get("count", 50)
    checks = []
    done = 0
    while done < count:
        n = rng.randint(1, 6)
        k = rng.randint(max(0, n - 1), 9)
        edges = tuple(
            tuple(sorted((rng.randrange(n), rng.randrange(n)))) for _ in range(k)
        )
        core = CoreGraph(n, edges)
        # connected cores only (otherwise the complex is empty)
        from .cgamma import _solid_connected

        if not _solid_connected(core, frozenset(range(k))):
            continue
        h = {d: v for d, v in cgamma_homology_dims(core, seed=config.prime_seed).items() if v}
        ok = set(h) <= {1 - n}
        done += 1
        if not ok or done <= 3 or h.get(1 - n):
            checks.append(_true(
                f"C_Gamma concentration: N={n}, k={k}, edges={edges}",
                ok, "[PAPER: Lemma, concentrated in the top degree 1-N]",
                computed=h))
        else:
            checks.append(_true(
                f"C_Gamma concentration: N={n}, k={k}", ok,
                "[PAPER: Lemma, concentrated in the top degree 1-N]", computed=h))
    return checks


def scenario_invariant_theory(params: dict, config: Config, cache: Cache) -> list[Check]:
    """First/Second Fundamental Theorem boundary: matchings are a basis of
    the invariants iff g >= N."""
    checks = []
    n_max = params.get("n_max", 4)
    for N in range(1, n_max + 1):
        target = matching_count(N)
        for g in range(1, min(5, N + 1) + 1):
            d_sp = invariant_dim(g, N, SP)
            if g >= N:
                checks.append(_eq(
                    f"Sp invariants: g={g} N={N}", d_sp, target,
                    "[PAPER: Thm, 'an isomorphism for g >= N']"))
            else:
                checks.append(_true(
                    f"Sp invariants strictly below matchings: g={g} N={N}",
                    d_sp < target,
                    "[DERIVED: brute force; surjectivity gives <=]",
                    computed=d_sp))
            if g >= N:
                d_o = invariant_dim(g, N, O)
                checks.append(_eq(
                    f"O(g,g) invariants: g={g} N={N}", d_o, target,
                    "[PAPER: Thm, 'an isomorphism for g >= N']"))
    # oracle cross-checks on the fixed-point equations where feasible
    for group in (SP, O):
        for (g, N) in ((1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 2)):
            if (2 * g) ** (2 * N) > 70000:
                checks.append(_skip(
                    f"oracle {group} g={g} N={N}", "tensor space too large"))
                continue
            a = invariant_dim(g, N, group)
            b = invariant_dim_bruteforce(g, N, group)
            checks.append(_eq(
                f"matching rank vs fixed-point oracle: {group} g={g} N={N}",
                a, b, "[DERIVED: independent zero-weight solve]"))
    checks.append(_eq("matching_count(2)", matching_count(2), 3,
                      "[TRIVIAL: double factorial]"))
    return checks


def scenario_koszul_gr2(params: dict, config: Config, cache: Cache) -> list[Check]:
    """(a) annihilator complementarity at g=6; (b) the Hilbert-series Koszul
    identity through weight 3 from enumeration-only Euler counts at g=9."""
    checks = []
    g6 = params.get("g_complementarity", 6)
    for parity in (1, 0):
        for variant in ("gc1tp", "gc1", "gcex"):
            v_dim = sum(_homology(
                ComplexSpec(variant, "connected", g6, parity, 1), config, cache
            ).values())
            conn2 = sum(_homology(
                ComplexSpec(variant, "connected", g6, parity, 2), config, cache
            ).values())
            # CE gr^2 cohomology at E=0: counted dims minus ranks of d on the
            # small E>=1 strata (rows of the E=1 block discovered on the fly).
            # The extended variant also has crossed strata E<0; there the E!=0
            # vanishing is exactly what the stable K-complex checks certify
            # (ce_concentration), so its E=0 dimension is the Euler count.
            spec2 = ComplexSpec(variant, "ce", g6, parity, 2)
            ce_dims = ce_dims_from_connected(spec2, limits=config.limits)
            upper = enumerate_ce(spec2, limits=config.limits, min_e=1)
            block1, _rows = assemble_dynamic(spec2, upper.strata.get(1, []))
            r1 = rank_exact(block1, seed=config.prime_seed).rank
            r2 = 0
            if upper.strata.get(2):
                from .differential import assemble

                mat2 = assemble(upper, 2)
                r2 = rank_exact(mat2, seed=config.prime_seed).rank
            ce1 = upper.dim(1) - r1 - r2
            checks.append(_eq(
                f"CE gr^2 homology vanishes at E=1 ({variant}, g={g6}, parity={parity})",
                ce1, 0, "[PAPER: Thm 4]"))
            if variant == "gcex":
                ce0 = sum((-1 if E % 2 else 1) * d for E, d in ce_dims.items())
                provenance = ("[PAPER: Prop (iii) annihilator; E=0 dim via Euler count, "
                              "E!=0 vanishing certified by the stable K checks]")
            else:
                ce0 = ce_dims.get(0, 0) - r1
                provenance = "[PAPER: Prop (iii), 'S is the annihilator of R']"
            # super exterior square of the generators
            lam2 = (v_dim * (v_dim - 1) // 2) if parity == 1 else (v_dim * (v_dim + 1) // 2)
            checks.append(_eq(
                f"dim R + dim S = dim Lambda^2 V ({variant}, parity={parity}, g={g6})",
                conn2 + ce0, lam2, provenance))
    g9 = params.get("g_hilbert", 9)
    for parity in (1, 0):
        for variant in ("gc1tp", "gc1", "gcex"):
            t_dims = {}
            a_dims = {}
            for W in (1, 2, 3):
                chi_conn = connected_euler_characteristic(
                    ComplexSpec(variant, "connected", g9, parity, W), config.limits)
                t_dims[W] = (-1) ** (W - 1) * chi_conn
                spec = ComplexSpec(variant, "ce", g9, parity, W)
                ce = ce_dims_from_connected(spec, limits=config.limits)
                a_dims[W] = sum((-1 if E % 2 else 1) * d for E, d in ce.items())
            ok = koszul_identity_check(t_dims, a_dims, parity, 3)
            checks.append(_true(
                f"Koszul Hilbert identity through s^3 ({variant}, parity={parity}, g={g9}), "
                f"t={t_dims}, a={a_dims}",
                ok, "[PAPER: Koszulness for g >= 3W >= 6; numbers DERIVED]"))
    return checks


def scenario_euler_consistency(params: dict, config: Config, cache: Cache) -> list[Check]:
    """Alternating sums of chain dims equal alternating sums of homology."""
    checks = []
    specs = [
        ComplexSpec(v, s, g, p, W)
        for v in ("gc1tp", "gc1", "gcex")
        for s in ("connected", "ce")
        for p in (1, 0)
        for (g, W) in ((2, 1), (2, 2), (3, 1))
    ]
    for spec in specs:
        rep = _report(spec, config, cache)
        checks.append(_eq(
            f"Euler conservation {spec.variant}/{spec.side} g={spec.g} "
            f"parity={spec.parity} W={spec.W}",
            rep.euler_homology(), rep.euler_dims(),
            "[TRIVIAL: rank-nullity bookkeeping]"))
    return checks


SCENARIOS = {
    "d2_zero": scenario_d2_zero,
    "tadpole_quotient": scenario_tadpole_quotient,
    "ideal_cohomology": scenario_ideal_cohomology,
    "weight1_tables": scenario_weight1_tables,
    "gr2_tables": scenario_gr2_tables,
    "vanishing": scenario_vanishing,
    "ce_concentration": scenario_ce_concentration,
    "stable_complexes": scenario_stable_complexes,
    "ses_dims": scenario_ses_dims,
    "cgamma": scenario_cgamma,
    "invariant_theory": scenario_invariant_theory,
    "koszul_gr2": scenario_koszul_gr2,
    "euler_consistency": scenario_euler_consistency,
}


def run(name: str, params: dict | None = None, config: Config | None = None) -> Report:
    if name not in SCENARIOS:
        raise KeyError(f"unknown scenario {name!r}; known: {sorted(SCENARIOS)}")
    config = config or Config()
    cache = Cache(config.cache_dir)
    t0 = time.time()
    checks = SCENARIOS[name](params or {}, config, cache)
    return Report(
        scenario=name,
        params=params or {},
        checks=checks,
        elapsed_s=time.time() - t0,
        cache={"hits": cache.hits, "misses": cache.misses},
    )
