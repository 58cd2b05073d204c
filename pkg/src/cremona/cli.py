"""Command line: ``cremona {construct,analyze,theoremB,chow}``."""

import argparse
import sys
from dataclasses import dataclass

from .domains import DEFAULT_PRIME, PrimeField, is_prime
from .errors import CremonaError, ParseError
from .families import construct
from .fixtures import construction_fixture, field_text, read_fixture
from .ratmap import analyze
from .report import Check, Report, chow_checks, invariant_report, render_text

FAMILY_CHOICES = ("J", "R", "D", "C", "loria")


@dataclass
class RunConfig:
    prime: int = DEFAULT_PRIME
    seeds: tuple = (1,)
    family: str = "D"
    d: int = 4
    tier: str = "fast"
    out: str = None
    format: str = "text"
    jobs: int = 1
    timings: bool = False

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.tier not in ("fast", "full"):
            raise ValueError(f"unknown tier {self.tier!r}")

    @property
    def seed(self):
        return self.seeds[0]


def _seeds(text):
    try:
        seeds = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed list {text!r}") from None
    if not seeds:
        raise argparse.ArgumentTypeError("empty seed list")
    return seeds


def _format(text):
    if text in ("json", "structured", "json-like-structured"):
        return "json"
    if text == "text":
        return "text"
    raise argparse.ArgumentTypeError(f"unknown format {text!r}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    common.add_argument("--seed", type=_seeds, default=(1,),
                        help="seed, or a comma separated list of seeds")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--format", type=_format, default="text",
                        help="text or json (alias: structured)")

    parser = argparse.ArgumentParser(prog="cremona", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="construct a family member as a fixture")
    p.add_argument("--family", choices=FAMILY_CHOICES, default="D")
    p.add_argument("--d", type=int, default=4)

    p = sub.add_parser("analyze", parents=[common], help="analyze a fixture file")
    p.add_argument("fixture")

    p = sub.add_parser("theoremB", parents=[common], help="invariant table for all four families")
    p.add_argument("--tier", choices=("fast", "full"), default="fast")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the family analyses")
    p.add_argument("--timings", action="store_true", help="append wall times to text output")

    sub.add_parser("chow", parents=[common], help="intersection-number checks")
    return parser


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(rep, cfg):
    text = rep.to_json() if cfg.format == "json" else render_text(rep, cfg.timings)
    _emit(text, cfg.out)
    for name in rep.failures():
        print(f"FAIL {name}", file=sys.stderr)
    return 0 if rep.ok else 1


def cmd_construct(cfg):
    field = None if cfg.family == "loria" else PrimeField(cfg.prime)
    c = construct(cfg.family, cfg.seed, cfg.d, field=field)
    if cfg.d != 4:
        c.expected = {"bidegree": [cfg.d, cfg.d]}
    _emit(construction_fixture(c), cfg.out)
    return 0


def analysis_checks(fx, seed):
    m = fx.map
    a = analyze(m, seed)
    got = {"bidegree": list(a.bidegree), "alpha": a.alpha, "beta": a.beta, "eta": a.eta,
           "genus": a.genus, "degC1": a.degC1, "degC2": a.degC2, "base_degree": a.alpha}
    checks = [Check(key, "fixture annotation", value, got.get(key, "unknown key"))
              for key, value in fx.expect.items()]
    row = {"bidegree": list(a.bidegree), "alpha": a.alpha, "beta": a.beta, "eta": a.eta,
           "genus": a.genus, "degC1": a.degC1, "degC2": a.degC2, "birational": a.birational,
           "base_hilbert": a.base_poly}
    return row, checks


def cmd_analyze(cfg, path):
    fx = read_fixture(path)
    seed = fx.seed if isinstance(fx.seed, int) else cfg.seed
    row, checks = analysis_checks(fx, seed)
    rep = Report({"fixture": path, "field": field_text(fx.ring.field), "seed": seed})
    rep.rows[fx.family or "map"] = {str(seed): row}
    rep.add("analysis", fx.family or "map", checks)
    if cfg.format == "json":
        text = rep.to_json()
    else:
        lines = [f"{k}: {_cell(v)}" for k, v in row.items()]
        lines += [f"{'ok  ' if c.ok else 'FAIL'} {c.name}: expected {_cell(c.expected)} "
                  f"got {_cell(c.got)}" for c in checks]
        lines.append("status: " + ("pass" if rep.ok else "fail"))
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.out)
    for name in rep.failures():
        print(f"FAIL {name}", file=sys.stderr)
    return 0 if rep.ok else 1


def _cell(v):
    if v is None:
        return "none"
    if isinstance(v, list):
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v)


def cmd_invariants(cfg):
    rep = invariant_report(cfg.prime, cfg.seeds, cfg.tier, cfg.jobs)
    return _emit_report(rep, cfg)


def cmd_chow(cfg):
    rep = Report({})
    rep.add("chow", "classes", chow_checks())
    return _emit_report(rep, cfg)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(prime=args.prime, seeds=args.seed, out=args.out, format=args.format,
                        family=getattr(args, "family", "D"), d=getattr(args, "d", 4),
                        tier=getattr(args, "tier", "fast"), jobs=getattr(args, "jobs", 1),
                        timings=getattr(args, "timings", False))
    except ValueError as exc:
        parser.error(str(exc))
    try:
        if args.command == "construct":
            return cmd_construct(cfg)
        if args.command == "analyze":
            return cmd_analyze(cfg, args.fixture)
        if args.command == "theoremB":
            return cmd_invariants(cfg)
        return cmd_chow(cfg)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CremonaError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
