"""Command-line interface: basis / cohomology / verify / table.

JSON is the source-of-truth output (--json); text summaries and the CSV /
markdown tables are derived views.  Exit code 0 unless a verification check
fails or an error occurs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cache import Cache, Config
from .enumeration import ComplexSpec, StableSpec, enumerate_basis, enumerate_stable
from .homology import cohomology_dims, stable_cohomology_dims
from .reptheory import SP, O, weyl_dim
from .verify import SCENARIOS, run as run_scenario
from .verify import _weight1_expected, GR2_EXPECTED


def _add_config_flags(p: argparse.ArgumentParser):
    p.add_argument("--cache-dir", default=None, help="cache root (default: "
                   "$GCHOM_CACHE_DIR or ~/.cache/gchom)")
    p.add_argument("--no-cache", action="store_true", help="disable the cache")
    p.add_argument("--prime-seed", type=int, default=0,
                   help="seed for the modular-rank prime choice")
    p.add_argument("--max-stratum", type=int, default=None,
                   help="hard cap on enumerated stratum sizes")


def _add_spec_flags(p: argparse.ArgumentParser):
    p.add_argument("--variant", choices=("gc1tp", "gc1", "gcex"))
    p.add_argument("--side", choices=("connected", "ce"), default="connected")
    p.add_argument("--g", type=int)
    p.add_argument("--parity", choices=("odd", "even"), default="odd")
    p.add_argument("--W", type=int, required=True)
    p.add_argument("--family", choices=("jtp", "j", "k"),
                   help="stable family (replaces --variant/--side/--g)")
    p.add_argument("--M", type=int, default=0, help="external legs (stable)")


def _spec_from_args(args):
    if args.family:
        return StableSpec(args.family, args.M, args.W)
    if args.variant is None or args.g is None:
        raise SystemExit("need --variant and --g (or --family for stable specs)")
    return ComplexSpec(args.variant, args.side, args.g, args.parity, args.W)


def _config_from_args(args) -> Config:
    return Config.from_flags(args.cache_dir, args.no_cache, args.prime_seed,
                             args.max_stratum)


def cmd_basis(args) -> int:
    spec = _spec_from_args(args)
    config = _config_from_args(args)
    cache = Cache(config.cache_dir)

    def compute():
        if isinstance(spec, StableSpec):
            return enumerate_stable(spec, config.limits).to_json()
        return enumerate_basis(spec, config.limits).to_json()

    doc, _ = cache.get_or_compute("basis", spec.as_dict(), compute)
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        dims = {int(E): len(v) for E, v in doc["strata"].items()}
        print(", ".join(f"E={E}: {d}" for E, d in sorted(dims.items())) or "(empty)")
        if not args.summary:
            for E, encs in sorted(doc["strata"].items(), key=lambda kv: int(kv[0])):
                for enc in encs:
                    print(f"  E={E}  {enc}")
    return 0


def cmd_cohomology(args) -> int:
    spec = _spec_from_args(args)
    config = _config_from_args(args)
    if isinstance(spec, StableSpec):
        g = args.g if args.g is not None else (3 * spec.W + spec.M + 1) // 2 + 1
        report = stable_cohomology_dims(spec, g=g, parity=1 if args.parity == "odd" else 0,
                                        limits=config.limits, seed=config.prime_seed)
    else:
        report = cohomology_dims(spec, limits=config.limits, seed=config.prime_seed)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
        return 0
    hom = {E: h for E, h in report.homology().items() if h}
    if args.e_number:
        if not hom:
            print("(empty)")
        for E, h in sorted(hom.items()):
            print(f"E={E}: {h}")
        return 0
    m = args.m
    if not hom:
        print("(empty)")
    connected = isinstance(spec, ComplexSpec) and spec.side == "connected"
    for E, h in sorted(hom.items()):
        # connected side: degrees of the dual Lie algebra; CE/stable: chain degrees
        degree = (1 - m * spec.W + E) if connected else (m * spec.W - E)
        print(f"degree {degree}: {h}")
    return 0


def cmd_verify(args) -> int:
    config = _config_from_args(args)
    params = json.loads(args.params) if args.params else {}
    report = run_scenario(args.scenario, params=params, config=config)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        for line in report.summary_lines():
            print(line)
    return 0 if report.ok else 1


def cmd_table(args) -> int:
    config = _config_from_args(args)
    parity = 1 if args.parity == "odd" else 0
    if args.name == "weight1":
        genera = list(range(0, args.g_max + 1))
        rows = []
        from .verify import _homology
        cache = Cache(config.cache_dir)
        for variant in ("gc1tp", "gc1", "gcex"):
            row = [variant]
            for g in genera:
                h = _homology(ComplexSpec(variant, "connected", g, parity, 1),
                              config, cache)
                if not h:
                    row.append("0")
                else:
                    row.append(", ".join(
                        f"{d}@E={E}" for E, d in sorted(h.items())))
            rows.append(row)
        header = ["variant"] + [f"g={g}" for g in genera]
        _print_table(header, rows, csv=args.csv)
        return 0
    if args.name == "gr2":
        rows = []
        for variant in ("gc1tp", "gc1", "gcex"):
            lams = GR2_EXPECTED[variant][parity]
            rows.append([variant, " + ".join(_fmt_partition(l) for l in lams)])
        _print_table(["variant", "gr^2 cohomology"], rows, csv=args.csv)
        return 0
    raise SystemExit(f"unknown table {args.name!r}")


def _fmt_partition(lam) -> str:
    if not lam:
        return "V(0)"
    return "V(" + ",".join(str(x) for x in lam) + ")"


def _print_table(header, rows, csv=False):
    if csv:
        print(",".join(header))
        for row in rows:
            print(",".join(str(c) for c in row))
        return
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    print(" | ".join(str(h).ljust(w) for h, w in zip(header, widths)))
    print("-+-".join("-" * w for w in widths))
    for row in rows:
        print(" | ".join(str(c).ljust(w) for c, w in zip(row, widths)))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="gchom",
        description="Exact cohomology engine for decorated graph complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="enumerate a canonical basis")
    _add_spec_flags(p)
    p.add_argument("--summary", action="store_true", help="stratum sizes only")
    p.add_argument("--json", action="store_true")
    _add_config_flags(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("cohomology", help="homology dimension report")
    _add_spec_flags(p)
    p.add_argument("--m", type=int, default=1, help="report degrees for this m")
    p.add_argument("--e-number", action="store_true", help="print raw E strata")
    p.add_argument("--json", action="store_true")
    _add_config_flags(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("verify", help="run a named verification scenario")
    p.add_argument("scenario", choices=sorted(SCENARIOS))
    p.add_argument("--params", default=None, help="JSON dict of overrides")
    p.add_argument("--json", action="store_true")
    _add_config_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print a summary table")
    p.add_argument("name", choices=("weight1", "gr2"))
    p.add_argument("--parity", choices=("odd", "even"), default="odd")
    p.add_argument("--g-max", type=int, default=4)
    p.add_argument("--csv", action="store_true")
    _add_config_flags(p)
    p.set_defaults(func=cmd_table)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
