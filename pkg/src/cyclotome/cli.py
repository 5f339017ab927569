"""Command-line front end: ``cyclotome field|weights|verify``.

Exit codes: 0 success, 2 invalid parameters, 3 methods disagree,
4 internal arithmetic self-check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .charsum import default_threads
from .codes import (
    BRUTEFORCE_LIMIT,
    WeightDist,
    build_code,
    weight_dist_bruteforce,
    weight_dist_charsum,
    weight_dist_closed_form,
)
from .errors import InternalError, ParameterError, TooLarge
from .gf import FieldParams, build_field

EXIT_OK, EXIT_PARAMS, EXIT_DISAGREE, EXIT_INTERNAL = 0, 2, 3, 4

METHODS = {
    "bruteforce": weight_dist_bruteforce,
    "charsum": None,  # needs the thread count, see _compute
    "closedform": weight_dist_closed_form,
}


@dataclass
class RunConfig:
    p: int = 3
    m: int = 3
    k: int = 1
    prim_poly: tuple[int, ...] | None = None
    method: str = "all"
    output_format: str = "text"
    output_path: str | None = None
    seed: int = 0
    threads: int | None = None

    def params(self) -> FieldParams:
        return FieldParams(self.p, self.m, self.k, self.prim_poly)

    def validate(self) -> None:
        if self.method == "bruteforce" and self.p ** (3 * self.m) > BRUTEFORCE_LIMIT:
            raise TooLarge(f"bruteforce needs p^(3m) <= 2^26, got {self.p}^{3 * self.m}")


def _parse_poly(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_field(cfg: RunConfig) -> int:
    ctx = build_field(cfg.params())
    spec = build_code(ctx)
    hs = (spec.h0, spec.h1, spec.h2)
    distinct = len(set(hs)) == 3
    lines = [
        f"p = {ctx.p}, m = {ctx.m}, k = {ctx.k}",
        f"primitive polynomial: {ctx.poly}  {ctx.poly.to_json()}",
        f"lambda = {ctx.lam}",
    ]
    for name, h in zip(("h0", "h1", "h2"), hs):
        lines.append(f"{name} = {h}  (degree {h.degree})  {h.to_json()}")
    lines.append(f"pairwise distinct: {'yes' if distinct else 'NO'}")
    lines.append(f"h = h0*h1*h2 has degree {spec.h.degree}; code is [{spec.n}, {spec.dim}]")
    _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def _compute(cfg: RunConfig, spec) -> dict[str, WeightDist]:
    names = list(METHODS) if cfg.method == "all" else [cfg.method]
    out = {}
    for name in names:
        if name == "bruteforce" and spec.p**spec.dim > BRUTEFORCE_LIMIT:
            continue  # only reachable with method=all; validate() rejects the rest
        if name == "charsum":
            out[name] = weight_dist_charsum(spec, threads=cfg.threads)
        else:
            out[name] = METHODS[name](spec)
    return out


def _diff(dists: dict[str, WeightDist]) -> str:
    weights = sorted({w for d in dists.values() for w, _ in d.entries})
    lines = ["weight," + ",".join(dists)]
    for w in weights:
        row = [str(d.as_dict().get(w, 0)) for d in dists.values()]
        if len(set(row)) > 1:
            lines.append(f"{w}," + ",".join(row))
    return "\n".join(lines) + "\n"


def cmd_weights(cfg: RunConfig) -> int:
    cfg.validate()
    spec = build_code(build_field(cfg.params()))
    dists = _compute(cfg, spec)
    agree = len({d for d in dists.values()}) == 1
    first = next(iter(dists.values()))
    if cfg.output_format == "json":
        if cfg.method == "all":
            payload = {"methods": {k: d.to_dict() for k, d in dists.items()}, "agree": agree}
            text = json.dumps(payload) + "\n"
        else:
            text = first.to_json() + "\n"
    elif cfg.output_format == "csv":
        text = first.to_csv() if agree else _diff(dists)
    else:
        lines = [f"C_({spec.p},{spec.ctx.m},{spec.ctx.k}): [{spec.n}, {spec.dim}, {first.min_distance}]"]
        for name, d in dists.items():
            lines.append(f"{name}: {d.enumerator()}")
        if cfg.method == "all":
            lines.append(f"agreement: {'OK' if agree else 'MISMATCH'}")
        text = "\n".join(lines) + "\n"
    _emit(cfg, text)
    if not agree:
        sys.stderr.write(_diff(dists))
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_verify(cfg: RunConfig, large: bool = True) -> int:
    from .verify import iter_checks

    n_pass = n_fail = n_warn = 0
    lines = []
    for chk in iter_checks(seed=cfg.seed, threads=cfg.threads, large=large):
        print(chk.line(), flush=True)
        lines.append(chk.line())
        n_pass += chk.status == "PASS"
        n_fail += chk.status == "FAIL"
        n_warn += chk.status == "WARN"
    summary = f"{n_pass} passed, {n_fail} failed, {n_warn} warnings"
    print(summary)
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write("\n".join(lines + [summary]) + "\n")
    return EXIT_OK if n_fail == 0 else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclotome", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=3)
    common.add_argument("--m", type=int, default=3)
    common.add_argument("--k", type=int, default=1)
    common.add_argument("--prim-poly", type=_parse_poly, default=None, help="constant-first coefficients, e.g. 1,2,0,1")
    common.add_argument("--threads", type=int, default=None, help="worker cap (default: $CYCLOTOME_THREADS or CPU count)")
    common.add_argument("--output", dest="output_path", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("field", parents=[common], help="primitive polynomial, lambda and h0, h1, h2")

    w = sub.add_parser("weights", parents=[common], help="weight distribution")
    w.add_argument("--method", choices=["bruteforce", "charsum", "closedform", "all"], default="all")
    w.add_argument("--format", dest="output_format", choices=["json", "csv", "text"], default="text")

    v = sub.add_parser("verify", parents=[common], help="reproduce the published tables and examples")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--skip-large", action="store_true", help="skip the m = 7 example")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(
        p=args.p,
        m=args.m,
        k=args.k,
        prim_poly=args.prim_poly,
        method=getattr(args, "method", "all"),
        output_format=getattr(args, "output_format", "text"),
        output_path=args.output_path,
        seed=getattr(args, "seed", 0),
        threads=args.threads or default_threads(),
    )
    try:
        if args.command == "field":
            return cmd_field(cfg)
        if args.command == "weights":
            return cmd_weights(cfg)
        return cmd_verify(cfg, large=not args.skip_large)
    except ParameterError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_PARAMS
    except InternalError as exc:
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
