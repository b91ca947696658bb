"""Command-line front end: ``jacksym <subcommand> [options]``.

JSON on stdout is the machine contract. Errors are JSON objects of the form
``{"error": {"type": ..., "message": ...}}`` with exit status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import checks, operator as op
from .cache import DiskCache, open_cache
from .field import PoleError, RatFun, parse_rational
from .jack import METHODS, NORMS, clear_caches, jack
from .partition import Partition, is_horizontal_strip, revlex_order
from .structure import lr_direct, lr_filtration, pieri_hook
from .symfunc import BASES, SymExpr, inner
from .virasoro import annihilated, central_charge, singular_check

EXIT_FAILED_CHECK = 1
EXIT_ERROR = 2


@dataclass
class Config:
    max_weight: int = 8
    cache_dir: Optional[str] = None
    alpha_value: Optional[Fraction] = None
    output: str = "json"

    def __post_init__(self):
        if self.max_weight < 0:
            raise CliError("invalid_argument", "--max-weight must be >= 0")
        if self.output not in ("json", "text"):
            raise CliError("invalid_argument", f"unknown output format {self.output!r}")


class CliError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind
        self.message = message

    def to_json(self) -> dict:
        return {"error": {"type": self.kind, "message": self.message}}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("usage", message)


# ---------------------------------------------------------------------------
# argument helpers

def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise CliError("malformed_partition", str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise CliError("invalid_argument", f"not a rational number: {text!r}") from None


def _beta(text: str) -> RatFun:
    """A rational number p/q, or a RatFun JSON object for alpha-dependent values."""
    if text.lstrip().startswith("{"):
        try:
            return RatFun.from_json(json.loads(text))
        except (ValueError, KeyError, TypeError, ZeroDivisionError):
            raise CliError("invalid_argument", f"bad RatFun JSON {text!r}") from None
    return RatFun.from_fraction(_rational(text))


def _weights(text: str) -> list:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise CliError("invalid_argument", f"bad weight range {text!r}") from None


def _coeff(c: RatFun, cfg: Config):
    if cfg.alpha_value is None:
        return c.to_json()
    try:
        return str(c.evaluate(cfg.alpha_value))
    except PoleError:
        raise CliError("pole", f"alpha = {cfg.alpha_value} is a pole of {c}") from None


def _coeff_text(c: RatFun, cfg: Config) -> str:
    if cfg.alpha_value is None:
        return str(c)
    return _coeff(c, cfg)


def _alpha_json(cfg: Config):
    return None if cfg.alpha_value is None else str(cfg.alpha_value)


# ---------------------------------------------------------------------------
# commands; each returns (json_object, text_lines, exit_code)

def _expansion(la, norm, basis, method, cfg, cache: Optional[DiskCache]):
    if cache is not None:
        cache.load_table(sum(la))
        return cache.get_expansion(la, norm, basis, lambda: jack(la, norm, basis, method))
    return jack(la, norm, basis, method)


def cmd_expand(args, cfg: Config, cache):
    la = _partition(args.la)
    if not la:
        raise CliError("unsupported", "the empty partition has no Jack expansion to report")
    try:
        x = _expansion(la, args.norm, args.basis, args.method, cfg, cache)
    except ValueError as exc:
        raise CliError("unsupported", str(exc)) from None
    terms = [{"partition": str(k), "coeff": _coeff(v, cfg)} for k, v in x.expr.items()]
    obj = {"lambda": str(la), "norm": args.norm, "method": args.method, "alpha": _alpha_json(cfg),
           "expansion": {"basis": args.basis, "terms": terms}}
    text = [f"{args.norm}[{la}] in the {args.basis} basis ({args.method})"]
    text += [f"  {k}: {_coeff_text(v, cfg)}" for k, v in x.expr.items()]
    return obj, text, 0


def cmd_inner(args, cfg: Config, cache):
    la, mu = _partition(args.la), _partition(args.mu)
    a = _expansion(la, args.norm, "p", args.method, cfg, cache).expr if la else SymExpr.one()
    b = _expansion(mu, args.norm, "p", args.method, cfg, cache).expr if mu else SymExpr.one()
    v = inner(a, b)
    obj = {"lambda": str(la), "mu": str(mu), "norm": args.norm, "alpha": _alpha_json(cfg),
           "value": _coeff(v, cfg)}
    return obj, [f"<{args.norm}[{la}], {args.norm}[{mu}]> = {_coeff_text(v, cfg)}"], 0


def cmd_pieri(args, cfg: Config, cache):
    mu, la = _partition(args.mu), _partition(args.la)
    if args.n < 0:
        raise CliError("invalid_argument", "--n must be >= 0")
    v = pieri_hook(args.n, mu, la)
    strip = is_horizontal_strip(mu, la, args.n)
    obj = {"n": args.n, "mu": str(mu), "lambda": str(la), "alpha": _alpha_json(cfg),
           "value": _coeff(v, cfg), "strip": strip}
    text = [f"<J[{args.n}] J[{mu}], J[{la}]> = {_coeff_text(v, cfg)}",
            f"horizontal strip: {str(strip).lower()}"]
    return obj, text, 0


def cmd_lr(args, cfg: Config, cache):
    mu, nu, la = _partition(args.mu), _partition(args.nu), _partition(args.la)
    obj = {"mu": str(mu), "nu": str(nu), "lambda": str(la), "route": args.route,
           "normalization": "J", "alpha": _alpha_json(cfg)}
    if args.route == "filtration":
        d = lr_filtration(mu, nu, la, witnesses=args.witnesses)
        v = d.value
        obj["conversion"] = _coeff(d.conversion, cfg)
        if args.witnesses:
            obj["witnesses"] = [{"delta1": [str(p) for p in a], "delta2": [str(p) for p in b],
                                 "delta": [str(p) for p in c], "term": _coeff(t, cfg)}
                                for a, b, c, t in d.witnesses]
    else:
        v = lr_direct(mu, nu, la)
    obj["value"] = _coeff(v, cfg)
    obj["nonzero"] = bool(v)
    return obj, [f"C^[{la}]_[{mu}],[{nu}] = {_coeff_text(v, cfg)}"], 0


def cmd_virasoro(args, cfg: Config, cache):
    if args.r < 1 or args.s < 1:
        raise CliError("invalid_argument", "--r and --s must be positive")
    res = singular_check(args.r, args.s)
    obj = {"r": args.r, "s": args.s, "lambda": str(res["lambda"]),
           "beta_star": _coeff(res["beta_star"], cfg), "is_singular": res["is_singular"],
           "central_charge": _coeff(central_charge(), cfg)}
    text = [f"lambda = ({res['lambda']})",
            f"beta_star = {_coeff_text(res['beta_star'], cfg)}",
            f"is_singular = {str(res['is_singular']).lower()}",
            f"central_charge = {_coeff_text(central_charge(), cfg)}"]
    if args.beta is not None:
        beta = _beta(args.beta)
        ok = annihilated(jack(res["lambda"], "J", "p").expr, beta)
        obj["beta"] = args.beta
        obj["annihilated_at_beta"] = ok
        text.append(f"annihilated at beta = {args.beta}: {str(ok).lower()}")
    return obj, text, 0


def cmd_table(args, cfg: Config, cache):
    if args.operator != "Dprime":
        raise CliError("unsupported", f"unknown operator {args.operator!r}")
    if args.weight < 0:
        raise CliError("invalid_argument", "--weight must be >= 0")
    table = cache.load_table(args.weight) if cache is not None else op.dprime_table(args.weight)
    order = revlex_order(args.weight)
    matrix = [[_coeff(table[nu].get(mu, RatFun()), cfg) for mu in order] for nu in order]
    obj = {"operator": "Dprime", "weight": args.weight, "alpha": _alpha_json(cfg),
           "order": [str(p) for p in order], "matrix": matrix,
           "convention": "row nu, column mu: D' q_nu = sum_mu matrix[nu][mu] q_mu"}
    text = [f"D' on q, weight {args.weight} (row nu -> column mu)"]
    for nu in order:
        cells = ", ".join(f"{mu}: {_coeff_text(c, cfg)}" for mu, c in table[nu].items())
        text.append(f"  {nu} -> {cells}")
    return obj, text, 0


def _parse_fault(text: str):
    try:
        a, b = text.split(":")
    except ValueError:
        raise CliError("invalid_argument", "--inject-fault takes NU:MU, e.g. 1,1:2") from None
    nu, mu = _partition(a), _partition(b)
    if sum(nu) != sum(mu) or not nu:
        raise CliError("invalid_argument", "fault partitions must be nonempty and of equal weight")
    return nu, mu


def cmd_selfcheck(args, cfg: Config, cache):
    only = [s.strip() for s in args.suites.split(",")] if args.suites else None
    for s in only or ():
        if s not in checks.SUITES:
            raise CliError("invalid_argument", f"unknown suite {s!r}; choose from {list(checks.SUITES)}")
    if cache is not None:
        for w in range(cfg.max_weight + 1):
            cache.load_table(w)
    if args.inject_fault:
        nu, mu = _parse_fault(args.inject_fault)
        with op.injected_fault(nu, mu):
            results = checks.run_all(cfg.max_weight, only)
    else:
        results = checks.run_all(cfg.max_weight, only)
    passed = all(r.passed for r in results)
    obj = {"max_weight": cfg.max_weight, "passed": passed, "fault": args.inject_fault,
           "suites": [r.to_json() for r in results]}
    text = [f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checked} checks)" for r in results]
    for r in results:
        text += [f"  witness: {w}" for w in r.failures[:5]]
    return obj, text, 0 if passed else EXIT_FAILED_CHECK


def _time_weight(weight: int, method: str) -> dict:
    t0 = time.perf_counter()
    op.dprime_table(weight)
    table_s = time.perf_counter() - t0
    worst = 0.0
    t1 = time.perf_counter()
    for la in revlex_order(weight):
        s = time.perf_counter()
        jack(la, "Q", "q" if method != "gram_schmidt" else "m", method)
        worst = max(worst, time.perf_counter() - s)
    return {"table_seconds": table_s, "total_seconds": time.perf_counter() - t1,
            "max_shape_seconds": worst}


def cmd_bench(args, cfg: Config, cache):
    methods = [m.strip() for m in args.methods.split(",")]
    for m in methods:
        if m not in METHODS:
            raise CliError("invalid_argument", f"unknown method {m!r}")
    rows = []
    for w in _weights(args.weights):
        for m in methods:
            op._clear()
            clear_caches()
            cold = _time_weight(w, m)
            clear_caches()                       # keep the D' tables: warm run
            info0 = op.dprime_table.cache_info()
            warm = _time_weight(w, m)
            info1 = op.dprime_table.cache_info()
            rows.append({"weight": w, "method": m, "shapes": len(revlex_order(w)),
                         "cold_seconds": round(cold["total_seconds"] + cold["table_seconds"], 6),
                         "warm_seconds": round(warm["total_seconds"], 6),
                         "max_shape_seconds": round(warm["max_shape_seconds"], 6),
                         "table_hits": info1.hits - info0.hits,
                         "table_misses": info1.misses - info0.misses})
    obj = {"schema": 1, "rows": rows}
    text = [f"{'weight':>6} {'method':>14} {'shapes':>6} {'cold_s':>10} {'warm_s':>10} {'max_shape_s':>12}"]
    text += [f"{r['weight']:>6} {r['method']:>14} {r['shapes']:>6} {r['cold_seconds']:>10.4f} "
             f"{r['warm_seconds']:>10.4f} {r['max_shape_seconds']:>12.4f}" for r in rows]
    code = 0
    if args.shape is not None:
        la = _partition(args.shape)
        op.dprime_table(sum(la))                        # warm per-weight table
        clear_caches()
        t = time.perf_counter()
        jack(la, "Q", "q", "iteration")
        secs = time.perf_counter() - t
        ok = secs <= args.threshold
        obj["regression"] = {"shape": str(la), "method": "iteration", "seconds": round(secs, 6),
                             "threshold_seconds": args.threshold, "within_threshold": ok}
        text.append(f"iteration on ({la}): {secs:.3f}s (threshold {args.threshold}s) "
                    f"{'ok' if ok else 'SLOW'}")
        code = 0 if ok else EXIT_FAILED_CHECK
    if cache is not None:
        obj["disk_cache"] = cache.stats_json()
    return obj, text, code


# ---------------------------------------------------------------------------
# parser

def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = argparse.SUPPRESS
    p.add_argument("--alpha", default=d if suppress else None,
                   help="evaluate every coefficient at this rational alpha (p/q)")
    p.add_argument("--output", choices=("json", "text"), default=d if suppress else "json")
    p.add_argument("--cache-dir", default=d if suppress else None)
    p.add_argument("--max-weight", type=int, default=d if suppress else 8)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jacksym", description="Exact Jack symmetric functions over Q(alpha).")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _global_flags(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    p = add("expand", cmd_expand, "Jack function in a chosen basis")
    p.add_argument("--lambda", dest="la", required=True)
    p.add_argument("--norm", choices=NORMS, default="J")
    p.add_argument("--basis", choices=BASES, default="m")
    p.add_argument("--method", choices=METHODS, default="iteration")

    p = add("inner", cmd_inner, "Jack scalar product of two Jack functions")
    p.add_argument("--lambda", dest="la", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--norm", choices=NORMS, default="J")
    p.add_argument("--method", choices=METHODS, default="iteration")

    p = add("pieri", cmd_pieri, "<J_n J_mu, J_lambda> from hook lengths")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", dest="la", required=True)

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient <J_mu J_nu, J_lambda>")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--lambda", dest="la", required=True)
    p.add_argument("--route", choices=("direct", "filtration"), default="direct")
    p.add_argument("--witnesses", action="store_true", help="list per-filtration terms")

    p = add("virasoro-check", cmd_virasoro, "singular-vector check for J_(r^s)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--beta", default=None,
                   help="also test annihilation at this beta (p/q or RatFun JSON)")

    p = add("table", cmd_table, "dump the D' matrix in revlex order")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--operator", default="Dprime")

    p = add("selfcheck", cmd_selfcheck, "run invariant suites up to --max-weight")
    p.add_argument("--suites", default=None, help=f"comma list from {','.join(checks.SUITES)}")
    p.add_argument("--inject-fault", default=None, metavar="NU:MU",
                   help="test hook: add 1 to r_{nu mu} before checking")

    p = add("bench", cmd_bench, "timing table per (weight, method)")
    p.add_argument("--weights", default="4..8")
    p.add_argument("--methods", default="iteration,determinant")
    p.add_argument("--shape", default=None, help="also time one shape against --threshold")
    p.add_argument("--threshold", type=float, default=60.0)
    return parser


def _config(args) -> Config:
    alpha = _rational(args.alpha) if args.alpha is not None else None
    return Config(max_weight=args.max_weight, cache_dir=args.cache_dir,
                  alpha_value=alpha, output=args.output)


def _emit(obj, text, cfg_output: str, stream):
    if cfg_output == "text":
        stream.write("\n".join(text) + "\n")
    else:
        stream.write(json.dumps(obj, sort_keys=True) + "\n")


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    output = "json"
    try:
        args = build_parser().parse_args(argv)
        output = args.output
        cfg = _config(args)
        obj, text, code = args.func(args, cfg, open_cache(cfg.cache_dir))
    except CliError as exc:
        stdout.write(json.dumps(exc.to_json(), sort_keys=True) + "\n")
        return EXIT_ERROR
    _emit(obj, text, output, stdout)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
