"""Command-line front end.

Exit codes: 0 success or not distinguished, 1 distinguished, 2 input
error, 3 internal verification failure (including fuzz violations).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .diagram import Diagram, DiagramError, load_diagram, table_text
from .modalg import (
    DEFAULT_PRIMES,
    MembershipCertificate,
    PresentedModule,
    VerificationFailure,
    compare_enhanced,
    default_degree_bound,
    invariant_report,
    longitude_signature,
)
from .moves import InvalidSite, MoveSite, MoveWeights, random_equivalent, replay, verify_transport
from .presentation import phi
from .peripheral import CertificateFailure, HalfIntegerError, longitude, sum_of_longitudes, torsion_certificate

EXIT_OK, EXIT_DISTINGUISHED, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


@dataclass
class Config:
    degree_bound: int | None = None  # None means crossings + 4 for each diagram
    trials: int = 100
    moves: int = 20
    seed: int = 0
    primes: tuple[int, ...] = DEFAULT_PRIMES
    fmt: str = "json"
    welded: bool = False
    max_crossings: int = 30
    dump: str | None = None

    def __post_init__(self):
        if self.degree_bound is not None and self.degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")
        for p in self.primes:
            if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
                raise ValueError(f"{p} is not prime")
        if self.fmt not in ("json", "text"):
            raise ValueError("format must be json or text")

    def bound_for(self, d: Diagram) -> int:
        return default_degree_bound(d) if self.degree_bound is None else self.degree_bound


class InputError(Exception):
    pass


def read_input(path: str) -> Diagram:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    try:
        return load_diagram(text)
    except DiagramError as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from exc


def emit(obj: dict, cfg: Config, text: str | None = None) -> None:
    if cfg.fmt == "json" or text is None:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


# ------------------------------------------------------------------ commands


def cmd_validate(path: str, cfg: Config) -> int:
    d = read_input(path)
    print(table_text(d))
    return EXIT_OK


def invariants_payload(d: Diagram, cfg: Config) -> dict:
    bound = cfg.bound_for(d)
    m = PresentedModule(d)
    report = invariant_report(m, bound, cfg.primes)
    lons = []
    for i in range(1, d.mu + 1):
        entry = longitude(d, i).to_json(d)
        entry["torsion_certificate"] = torsion_certificate(d, i).to_json(d)
        sig = longitude_signature(m, i, bound)
        if sig.certificate is not None:
            entry["division_certificate"] = sig.certificate.to_json(d)
        lons.append(entry)
    payload = report.to_json()
    payload["degree_bound"] = bound
    payload["longitudes"] = lons
    return payload


def _invariants_text(p: dict) -> str:
    lines = [
        f"mu: {p['mu']}",
        f"linking matrix: {p['linking_matrix']}",
        f"free rank: {p['rational_invariant_factors']['free_rank']}",
        f"torsion factors: {p['rational_invariant_factors']['torsion']}",
        f"elementary ideal gcds: {p['elementary_ideal_gcds']}",
        f"Alexander polynomial: {p['alexander_polynomial']}",
        f"t = -1: {p['specializations']['t=-1']}",
        f"mod p dimensions: {p['specializations']['mod_p']}",
        f"longitude signatures: {p['longitude_signatures']}",
        f"degree bound: {p['degree_bound']}",
    ]
    for lon in p["longitudes"]:
        lines.append(f"longitude {lon['component']}: {lon['lift']['coeffs']}")
    return "\n".join(lines)


def cmd_invariants(path: str, cfg: Config) -> int:
    d = read_input(path)
    payload = invariants_payload(d, cfg)
    emit(payload, cfg, _invariants_text(payload))
    return EXIT_OK


def cmd_compare(path_a: str, path_b: str, cfg: Config) -> int:
    d1, d2 = read_input(path_a), read_input(path_b)
    bound = cfg.degree_bound
    rep = compare_enhanced(d1, d2, bound, cfg.primes)
    payload = rep.to_json()
    payload["verdict"] = "DISTINGUISHED" if rep.distinguished else "NOT_DISTINGUISHED"
    payload["summary"] = rep.describe()
    payload["degree_bound"] = bound if bound is not None else "crossings + 4"
    emit(payload, cfg, rep.describe())
    return EXIT_DISTINGUISHED if rep.distinguished else EXIT_OK


@dataclass
class FuzzSummary:
    trials: int = 0
    moves: int = 0
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"trials": self.trials, "moves_applied": self.moves, "violations": self.violations}


def trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def fuzz_diagram(d: Diagram, cfg: Config) -> FuzzSummary:
    weights = MoveWeights.welded_mode() if cfg.welded else MoveWeights()
    base = invariant_report(PresentedModule(d), cfg.degree_bound, cfg.primes).to_json()
    summary = FuzzSummary()
    for t in range(cfg.trials):
        s = trial_seed(cfg.seed, t)
        final, trail = random_equivalent(d, cfg.moves, s, weights, cfg.max_crossings)
        summary.trials += 1
        summary.moves += len(trail)
        problems = []
        for step, tr in enumerate(trail):
            rep = verify_transport(tr.domain, tr.codomain, tr, cfg.degree_bound)
            if not rep.ok:
                problems.append({"step": step, "site": tr.site.to_json(), "failures": rep.failures})
        after = invariant_report(PresentedModule(final), cfg.degree_bound, cfg.primes).to_json()
        diffs = sorted(k for k in base if base[k] != after[k])
        if diffs:
            problems.append({"report_fields": diffs})
        if problems:
            summary.violations.append(
                {
                    "trial": t,
                    "seed": s,
                    "start": str(d.code),
                    "sites": [tr.site.to_json() for tr in trail],
                    "final": str(final.code),
                    "problems": problems,
                }
            )
    return summary


def cmd_fuzz(path: str, cfg: Config) -> int:
    d = read_input(path)
    if d.code is None:
        raise InputError("fuzzing needs a Gauss code or a table with passages")
    summary = fuzz_diagram(d, cfg)
    if summary.violations and cfg.dump:
        with open(cfg.dump, "w", encoding="utf-8") as fh:
            json.dump(summary.violations, fh, indent=2)
    payload = summary.to_json()
    text = f"{summary.trials} trials, {summary.moves} moves, {len(summary.violations)} violations"
    emit(payload, cfg, text)
    return EXIT_VERIFY if summary.violations else EXIT_OK


def cmd_replay(path: str, trail_path: str, cfg: Config) -> int:
    d = read_input(path)
    try:
        with open(trail_path, encoding="utf-8") as fh:
            obj = json.load(fh)
        if isinstance(obj, list) and obj and "sites" in obj[0]:
            obj = obj[0]
        if isinstance(obj, dict):
            obj = obj["sites"]
        sites = [MoveSite.from_json(s) for s in obj]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad trail: {exc}") from exc
    final = replay(d, sites)
    print(final.code)
    return EXIT_OK


def sum_longitudes_result(d: Diagram, bound: int) -> dict:
    x = sum_of_longitudes(d)
    res = PresentedModule(d).membership(x, bound)
    if isinstance(res, MembershipCertificate):
        return {"result": "ZERO", "certificate": res.to_json(d), "lift_is_zero": x.is_zero()}
    # a nonzero image under phi rules out membership outright
    image = phi(d, x)
    phi_zero = not image.lambda_part and not any(image.z_parts)
    return {"result": f"NOT_FOUND_UP_TO({bound})", "flag": "manual review", "phi_image_zero": phi_zero}


def cmd_experiment_sum_longitudes(paths: list[str], cfg: Config) -> int:
    out = []
    for path in paths:
        d = read_input(path)
        entry = {"input": path, "degree_bound": cfg.bound_for(d)}
        entry.update(sum_longitudes_result(d, cfg.bound_for(d)))
        out.append(entry)
    text = "\n".join(f"{e['input']}: {e['result']}" for e in out)
    emit({"sum_of_longitudes": out}, cfg, text)
    return EXIT_OK


# ------------------------------------------------------------------ entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="enhanced-alexander", description="Enhanced reduced Alexander module tools")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree-bound", type=int, default=None)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--moves", type=int, default=20)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--primes", default=",".join(map(str, DEFAULT_PRIMES)), help="comma-separated primes")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("validate", parents=[common])
    p.add_argument("path")
    p = sub.add_parser("invariants", parents=[common])
    p.add_argument("path")
    p = sub.add_parser("compare", parents=[common])
    p.add_argument("path_a")
    p.add_argument("path_b")
    p = sub.add_parser("fuzz", parents=[common])
    p.add_argument("path")
    p.add_argument("--welded", action="store_true", help="favor welded overpass moves")
    p.add_argument("--max-crossings", type=int, default=30)
    p.add_argument("--dump", default=None, help="write violating trails here")
    p = sub.add_parser("replay", parents=[common])
    p.add_argument("path")
    p.add_argument("trail", help="JSON list of move sites")
    p = sub.add_parser("experiment-sum-longitudes", parents=[common])
    p.add_argument("paths", nargs="+")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        primes = tuple(int(x) for x in args.primes.split(",") if x.strip())
        cfg = Config(
            degree_bound=args.degree_bound,
            trials=args.trials,
            moves=args.moves,
            seed=args.seed,
            primes=primes,
            fmt=args.format,
            welded=getattr(args, "welded", False),
            max_crossings=getattr(args, "max_crossings", 30),
            dump=getattr(args, "dump", None),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.command == "validate":
            return cmd_validate(args.path, cfg)
        if args.command == "invariants":
            return cmd_invariants(args.path, cfg)
        if args.command == "compare":
            return cmd_compare(args.path_a, args.path_b, cfg)
        if args.command == "fuzz":
            return cmd_fuzz(args.path, cfg)
        if args.command == "replay":
            return cmd_replay(args.path, args.trail, cfg)
        return cmd_experiment_sum_longitudes(args.paths, cfg)
    except (InputError, InvalidSite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (VerificationFailure, CertificateFailure, HalfIntegerError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
