"""Command-line surface: every identity check and computation of the
package, with machine-readable JSON or CSV reports.

Exit codes: 0 when every checked property holds, 1 when a check is
falsified, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import __version__
from . import bridges as br
from . import domains as dm
from . import enumeration as en
from . import identity as idt
from . import strip as sp
from .errors import HexsawError, InvalidParameterError
from .lattice import classify_walk
from .model import constants

SCHEMA_VERSION = 1
Y_STAR = 1.0 + 2.0**0.5


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"cannot parse rational {text!r}") from exc


def _parse_y(text: str, mode: str):
    if mode == "exact":
        y = _parse_rational(text)
    else:
        try:
            y = Fraction(text)
        except (ValueError, ZeroDivisionError):
            try:
                y = float(text)
            except ValueError as exc:
                raise InvalidParameterError(f"cannot parse y = {text!r}") from exc
    if y <= 0:
        raise InvalidParameterError(f"surface weight must be positive, got {text}")
    return y


def _parse_n(text: str):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        try:
            return float(text)
        except ValueError as exc:
            raise InvalidParameterError(f"cannot parse n = {text!r}") from exc


def _constants(args):
    n = _parse_n(args.n)
    mode = args.mode
    if mode == "exact" and n != 0:
        raise InvalidParameterError("exact mode requires n = 0")
    return constants(n, args.regime, mode)


def _emit(args, doc: dict, rows: list[dict] | None = None) -> None:
    fmt = getattr(args, "format", "json")
    if fmt == "csv" and rows is not None:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps(doc, indent=1, default=str) + "\n"
    out_path = getattr(args, "output", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _document(args, results, ok: bool, t0: float) -> dict:
    config = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    return {
        "schema_version": SCHEMA_VERSION,
        "package_version": __version__,
        "command": args.command,
        "config": config,
        "results": results,
        "ok": bool(ok),
        "wall_time_s": round(time.time() - t0, 3),
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_verify_local(args, t0):
    consts = _constants(args)
    y = _parse_y(args.y, consts.mode)
    domain = dm.build_trapezoid(args.T, args.L)
    rep = idt.check_local(domain, consts, y, with_loops=args.with_loops)
    results = {
        "kind": rep.kind,
        "mode": rep.mode,
        "max_abs_residual": rep.max_abs,
        "exact_zero": rep.exact_zero,
    }
    return results, rep.ok, None


def _cmd_verify_global(args, t0):
    consts = _constants(args)
    y = _parse_y(args.y, consts.mode)
    rep = idt.check_global_trapezoid(args.T, args.L, consts, y,
                                     with_loops=args.with_loops)
    results = {
        "kind": rep.kind,
        "mode": rep.mode,
        "residual": str(rep.residuals["global"]),
        "max_abs_residual": rep.max_abs,
        "exact_zero": rep.exact_zero,
    }
    return results, rep.ok, None


def _cmd_verify_rectangle(args, t0):
    consts = _constants(args)
    rep = idt.check_global_rectangle(args.T, args.L, consts,
                                     with_loops=args.with_loops)
    results = {
        "kind": rep.kind,
        "mode": rep.mode,
        "max_abs_residual": rep.max_abs,
        "exact_zero": rep.exact_zero,
    }
    return results, rep.ok, None


def _cmd_strip_mu(args, t0):
    y = _parse_y(args.y, "float")
    rows = []
    prev = None
    ok = True
    for T in range(1, args.Tmax + 1):
        est = sp.growth_mu(T, y, method=args.method)
        rows.append({"T": T, "y": float(y), "mu_T": est.mu, "error": est.error,
                     "method": est.method})
        if prev is not None and not est.mu > prev:
            ok = False
        if y == 1 and not est.mu < sp.MU_BULK + 1e-12:
            ok = False
        prev = est.mu
    return {"rows": rows, "mu_bulk": sp.MU_BULK}, ok, rows


def _cmd_y_seq(args, t0):
    rows = []
    prev = None
    ok = True
    for T in range(1, args.Tmax + 1):
        y_t = sp.solve_yT(T, tol=args.tol)
        rows.append({"T": T, "y_T": y_t, "y_star": Y_STAR,
                     "margin": y_t - Y_STAR})
        if y_t - Y_STAR <= 1e-9:
            ok = False
        if prev is not None and not y_t < prev:
            ok = False
        prev = y_t
    return {"rows": rows}, ok, rows


def _cmd_strip_identity(args, t0):
    y = _parse_y(args.y, args.mode if args.mode != "auto" else "exact")
    rep = sp.check_strip_identity(args.T, y, mode=args.mode)
    results = {
        "kind": rep.kind,
        "mode": rep.mode,
        "max_abs_residual": rep.max_abs,
        "exact_zero": rep.exact_zero,
    }
    return results, rep.ok, None


def _cmd_bounds(args, t0):
    y_grid = tuple(_parse_rational(t) for t in args.y_grid.split(","))
    rep = sp.check_bounds(args.Tmax, y_grid, mode=args.mode)
    rows = [
        {"check": c["check"], "margin": c["margin"], "ok": c["ok"]}
        for c in rep["checks"]
    ]
    return rep, rep["ok"], rows


def _cmd_kesten(args, t0):
    ns = [int(t) for t in args.N.split(",")]
    rows = []
    prev = None
    ok = True
    for n in ns:
        stats = br.kesten_partial(n)
        rows.append(
            {
                "N": n,
                "kesten_partial": stats.partial_sum_float,
                "f_h": {str(h): stats.f_h[h].to_float() for h in sorted(stats.f_h)},
                "mean_height": stats.mean_height_float,
            }
        )
        if not stats.partial_sum_float < 1.0:
            ok = False
        if prev is not None and not stats.partial_sum_float > prev:
            ok = False
        prev = stats.partial_sum_float
    flat = [
        {"N": r["N"], "kesten_partial": r["kesten_partial"],
         "mean_height": r["mean_height"]}
        for r in rows
    ]
    return {"rows": rows}, ok, flat


def _cmd_stickbreak_sweep(args, t0):
    checked = failures = bridges_used = 0
    for b in br.iter_bridges(args.max_len):
        d = br.diamond_points(b)
        if len(d) < 2:
            continue
        bridges_used += 1
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                out = br.stickbreak(b, i, j)
                checked += 1
                if not (
                    out.is_self_avoiding()
                    and classify_walk(out) == "bridge"
                    and len(out) == len(b) + 2
                ):
                    failures += 1
    results = {"max_len": args.max_len, "bridges": bridges_used,
               "pairs_checked": checked, "failures": failures}
    return results, failures == 0 and checked > 0, None


def _cmd_sample(args, t0):
    cfg = br.SamplerConfig(N=args.N, k=args.k, seed=args.seed)
    bridge, report = br.sample_renewal(cfg)
    report["turns"] = "".join(bridge.turns)
    ok = report["renewal_points"] == args.k + 1
    return report, ok, None


def _cmd_half_plane(args, t0):
    y = _parse_y(args.y, "float")
    counts = en.half_plane_counts(args.N)
    rows = []
    ok = True
    for n in range(args.N + 1):
        total = sum(c for (m, i), c in counts.items() if m == n)
        weighted = sum(c * float(y) ** i for (m, i), c in counts.items() if m == n)
        bound = float(y) ** (n // 2)
        if n and weighted < bound - 1e-12:
            ok = False
        rows.append({"n": n, "walks": total, "C_n_plus": weighted,
                     "zigzag_bound": bound})
    return {"rows": rows}, ok, rows


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(p, *, model=False, TL=False, output=True):
    if model:
        p.add_argument("--n", default="0", help="loop weight (rational or decimal)")
        p.add_argument("--regime", default="dilute", choices=["dilute", "dense"])
        p.add_argument("--mode", default="auto", choices=["auto", "exact", "float"])
        p.add_argument("--with-loops", action="store_true",
                       help="include closed-loop configurations")
    if TL:
        p.add_argument("--T", type=int, required=True, help="domain height")
        p.add_argument("--L", type=int, required=True, help="domain half-width")
    if output:
        p.add_argument("--output", default=None, help="write report to this path")
        p.add_argument("--format", default="json", choices=["json", "csv"])
        p.add_argument("--threads", type=int, default=1,
                       help="worker budget (checks are sequential at desk scale)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hexsaw",
        description="Exact identities for the honeycomb loop model "
        "with a surface fugacity.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-local", help="vertex identity on a trapezoid")
    _add_common(p, model=True, TL=True)
    p.add_argument("--y", default="1", help="surface weight, rational p/q in exact mode")
    p.set_defaults(func=_cmd_verify_local)

    p = sub.add_parser("verify-global", help="boundary identity on a trapezoid")
    _add_common(p, model=True, TL=True)
    p.add_argument("--y", default="1")
    p.set_defaults(func=_cmd_verify_global)

    p = sub.add_parser("verify-rectangle", help="boundary identity on a rectangle")
    _add_common(p, model=True, TL=True)
    p.set_defaults(func=_cmd_verify_rectangle)

    p = sub.add_parser("strip-mu", help="strip growth rates mu_T")
    _add_common(p)
    p.add_argument("--Tmax", type=int, default=4)
    p.add_argument("--y", default="1")
    p.add_argument("--method", default="eigen", choices=["eigen", "series-ratio"])
    p.set_defaults(func=_cmd_strip_mu)

    p = sub.add_parser("y-seq", help="critical strip fugacities y_T")
    _add_common(p)
    p.add_argument("--Tmax", type=int, default=4)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_y_seq)

    p = sub.add_parser("strip-identity", help="arch/bridge identity in a strip")
    _add_common(p)
    p.add_argument("--T", type=int, required=True)
    p.add_argument("--y", default="1")
    p.add_argument("--mode", default="auto", choices=["auto", "exact", "float"])
    p.set_defaults(func=_cmd_strip_identity)

    p = sub.add_parser("bounds", help="exact strip inequality suite")
    _add_common(p)
    p.add_argument("--Tmax", type=int, default=3)
    p.add_argument("--y-grid", default="1,3/2,2")
    p.add_argument("--mode", default="auto", choices=["auto", "exact", "float"])
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("kesten", help="truncated irreducible-bridge sums")
    _add_common(p)
    p.add_argument("--N", default="4,8,12,16", help="comma-separated truncations")
    p.set_defaults(func=_cmd_kesten)

    p = sub.add_parser("stickbreak-sweep", help="exhaustive stickbreak property check")
    _add_common(p)
    p.add_argument("--max-len", type=int, default=10, dest="max_len")
    p.set_defaults(func=_cmd_stickbreak_sweep)

    p = sub.add_parser("sample", help="truncated renewal sampler")
    _add_common(p)
    p.add_argument("--N", type=int, default=12, help="factor length truncation")
    p.add_argument("--k", type=int, default=10, help="number of factors")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("half-plane", help="half-plane walk partition sums")
    _add_common(p)
    p.add_argument("--N", type=int, default=10, help="maximum length")
    p.add_argument("--y", default="1")
    p.set_defaults(func=_cmd_half_plane)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.time()
    try:
        results, ok, rows = args.func(args, t0)
    except (HexsawError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    doc = _document(args, results, ok, t0)
    _emit(args, doc, rows)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
