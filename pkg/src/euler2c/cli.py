"""Command-line frontend.

Subcommands
-----------
constants          derived constants for a mass ratio as JSON
verdict            convexity verdicts (theory vs numerical oracle)
curve              figure data (boundaries, zero sets, thresholds) as CSV
verify-identities  run the exact polynomial-identity suite

Exit codes: 0 success (methods agree), 2 invalid input, 3 theory/oracle
disagreement, 4 identity failure.

Energies accept the symbolic forms ``cJ``, ``cJ-0.1``, ``cJ+0.05``
resolved against the critical Jacobi energy of the given mass ratio, so
figure recipes stay portable across mu. A ``--config FILE`` of
``key = value`` lines preloads any long-option defaults.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from . import elliptic, fiberwise, levicivita
from .errors import Euler2CError, TraceFailure
from .exactpoly import identity_names, verify_all, verify_identity
from .model import HillComponent, ProblemParams, hill_boundary
from .scan import sign_scan, trace_implicit

SCHEMA = 1


def _fail(msg, code=2):
    print(f"error: {msg}", file=sys.stderr)
    sys.exit(code)


def parse_energy(text, params):
    """Resolve an energy literal; ``cJ`` (optionally +/- a float offset)
    refers to the critical Jacobi energy of ``params``."""
    s = str(text).strip()
    if s.startswith("cJ"):
        rest = s[2:]
        off = 0.0
        if rest:
            try:
                off = float(rest)
            except ValueError:
                raise ValueError(f"bad symbolic energy {text!r}")
        return params.c_jacobi + off
    return float(s)


def _load_config(path):
    """Parse a ``key = value`` config file into a flat dict (keys use
    the long-option spelling with dashes or underscores)."""
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line {raw.rstrip()!r}")
            key, val = line.split("=", 1)
            val = val.strip()
            for cast in (int, float):
                try:
                    val = cast(val)
                    break
                except ValueError:
                    pass
            out[key.strip().replace("-", "_")] = val
    return out


def _fmt(x):
    return "%.17g" % float(x)


def _write_csv(path, header, rows):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(
            v if isinstance(v, str) else _fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _emit_json(obj, path=None):
    text = json.dumps(obj, indent=2, sort_keys=False)
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


# -- constants ---------------------------------------------------------------

def cmd_constants(args):
    params = ProblemParams(args.mu)
    a, b = elliptic.roots_ab(params, params.c_jacobi - 0.1)
    th = elliptic.thresholds(params)
    _emit_json({
        "schema": SCHEMA,
        "mu": args.mu,
        "l": params.l,
        "c_jacobi": params.c_jacobi,
        "a": a,
        "b": b,
        "c_e_pp": th.c_E_pp,
        "c0": th.c0,
    }, args.out)
    return 0


# -- verdicts ----------------------------------------------------------------

def _theory_verdict(target, params, c):
    """Proved verdict where the theorems cover (target, mu, c); None
    where they are silent."""
    if target == "elliptic":
        return None  # handled per-component below
    if target == "levi":
        # boundary nonconvexity at the critical energy for mu below the
        # inflection threshold 16/17 (and its mirror 1/17)
        if abs(c - params.c_jacobi) < 1e-9:
            mu_eff = min(params.mu, 1.0 - params.mu)
            if mu_eff < 16.0 / 17.0:
                return "nonconvex"
        return None
    if target == "fiberwise":
        if abs(params.mu - 0.5) < 1e-15 and c <= params.c_jacobi:
            return "convex"
        if abs(c - params.c_jacobi) < 1e-12 and params.mu != 0.5:
            return "nonconvex"
        return None
    raise ValueError(target)


def cmd_verdict(args):
    params = ProblemParams(args.mu)
    c = parse_energy(args.c, params)
    t0 = time.perf_counter()
    theory = oracle = None
    witness = None
    samples = 0

    if args.target == "elliptic":
        if args.component is None:
            _fail("verdict elliptic requires --component")
        comp = HillComponent(args.component)
        if args.method in ("theory", "both"):
            theory = elliptic.convexity_verdict(params, c, comp).value
        if args.method in ("oracle", "both"):
            rep = elliptic.oracle_convexity(params, c, comp,
                                            grid=tuple(args.grid))
            oracle = "convex" if rep.verdict == "posdef" else "nonconvex"
            samples = rep.samples
            if rep.verdict != "posdef":
                witness = {"point": list(rep.argmin),
                           "min_eigenvalue": rep.min_value}
    elif args.target == "levi":
        if args.method in ("theory", "both"):
            theory = _theory_verdict("levi", params, c)
        if args.method in ("oracle", "both"):
            w = levicivita.nonconvex_witness_levi(params, c)
            oracle = "nonconvex" if w is not None else "convex"
            if w is not None:
                witness = {"point": [w[0], w[1]], "F": w[2]}
    elif args.target == "fiberwise":
        if args.method in ("theory", "both"):
            theory = _theory_verdict("fiberwise", params, c)
        if args.method in ("oracle", "both"):
            rep = fiberwise.fiberwise_verdict(params, c)
            oracle = "convex" if rep.verdict == "convex" else "nonconvex"
            samples = rep.samples
            if rep.witness is not None:
                e, q, cv = rep.witness
                witness = {"energy": e, "point": list(q), "C": cv}
    else:
        _fail(f"unknown verdict target {args.target!r}")

    verdict = oracle if oracle is not None else theory
    out = {
        "schema": SCHEMA,
        "claim": f"{args.target} convexity, mu={args.mu}, c={c}",
        "method": args.method,
        "verdict": verdict,
        "samples": samples,
        "runtime": time.perf_counter() - t0,
    }
    if theory is not None and args.method == "both":
        out["theory"] = theory
    if witness is not None:
        out["witness"] = witness
    _emit_json(out, args.out)
    if (args.method == "both" and theory is not None and oracle is not None
            and theory != oracle):
        print(f"error: theory says {theory}, oracle says {oracle}",
              file=sys.stderr)
        return 3
    return 0


# -- curves ------------------------------------------------------------------

def _curve_hill(args, params, c):
    rows = []
    for comp in (HillComponent.EARTH, HillComponent.MOON):
        pts = hill_boundary(params, c, comp, n=args.n)
        for q1, q2 in pts:
            rows.append((f"hill-{comp.value}", q1, q2,
                         fiberwise.curvature_numerator((q1, q2), params)))
    # touching-cone tangents through (l, 0)
    l = params.l
    for sgn, name in ((1.0, "cone+"), (-1.0, "cone-")):
        for t in np.linspace(-0.2, 0.2, args.n // 4):
            rows.append((name, l + t, sgn * math.sqrt(2.0) * t, 0.0))
    return ["series", "q1", "q2", "C"], rows


def _trace_zero(f, grad, seed, direction, step, max_len):
    try:
        return trace_implicit(f, seed, step=step, max_len=max_len,
                              grad=grad, direction=direction), False
    except TraceFailure as err:
        if err.partial is not None:
            return err.partial, True
        raise


def _curve_v0(args, params, c):
    x0 = levicivita.x0_of(params, c)
    f = lambda x, y: levicivita.V_value(x, y, params, c)
    g = levicivita._grad_V(params, c)
    # both V=0 and F=0 pass through the axis tangency point exactly
    rows = [("v0", x0, 0.0, levicivita.F_value(x0, 0.0, params, c))]
    partial = False
    for direction in ((-1.0, math.sqrt(2.0)), (-1.0, -math.sqrt(2.0))):
        pl, bad = _trace_zero(f, g, (x0 - 1e-6, direction[1] * 1e-6),
                              direction, args.step, args.max_len)
        partial |= bad
        for x, y in pl.points:
            rows.append(("v0", x, y,
                         levicivita.F_value(x, y, params, c)))
    for sgn, name in ((1.0, "tangent+"), (-1.0, "tangent-")):
        for t in np.linspace(-0.3, 0.3, args.n // 4):
            rows.append((name, x0 + t, sgn * math.sqrt(2.0) * t, 0.0))
    return ["series", "x", "y", "F"], rows, partial


def _curve_f0(args, params, c):
    f = lambda x, y: levicivita.F_value(x, y, params, c)
    x0 = levicivita.x0_of(params, c)
    rows = [("f0", x0, 0.0, levicivita.V_value(x0, 0.0, params, c))]
    partial = False
    # F = 0 passes through (x0, 0) transversally to the axis
    for direction in ((0.0, 1.0), (0.0, -1.0)):
        pl, bad = _trace_zero(f, None, (x0, direction[1] * 1e-4),
                              direction, args.step, args.max_len)
        partial |= bad
        for x, y in pl.points:
            rows.append(("f0", x, y,
                         levicivita.V_value(x, y, params, c)))
    return ["series", "x", "y", "V"], rows, partial


def _curve_czero(args, params):
    """The zero set of the boundary-curvature numerator C near the
    touching cone (position space, Standard frame)."""
    l = params.l
    f = lambda x, y: fiberwise.curvature_numerator((x, y), params)
    rows = []
    partial = False
    rep = sign_scan(f, (l - 0.35, l + 0.35, 0.02, 0.45),
                    grid=(120, 120), refine_depth=2, target="C")
    seeds = rep.witnesses[:4]
    for k, (wx, wy, _) in enumerate(seeds):
        pl, bad = _trace_zero(f, None, (wx, wy), None, args.step,
                              args.max_len)
        partial |= bad
        for x, y in pl.points:
            rows.append((f"czero-{k}", x, y, 0.0))
    for sgn, name in ((1.0, "cone+"), (-1.0, "cone-")):
        for t in np.linspace(-0.3, 0.3, args.n // 4):
            rows.append((name, l + t, sgn * math.sqrt(2.0) * t, 0.0))
    return ["series", "q1", "q2", "zero"], rows, partial


def _curve_quartic(args):
    """Both real branches of c^2 x^4 + 3 c x^3 + x^2 + 1 = 0 in the
    (x, c) plane: c = (-3x +- sqrt(5x^2 - 4)) / (2x^2), real for
    x >= 2/sqrt(5); the lower branch passes through (1, -2)."""
    xs = np.union1d(np.linspace(2.0 / math.sqrt(5.0), args.xmax, args.n),
                    [1.0])  # the lower branch's point (1, -2) exactly
    rows = []
    for name, sgn in (("upper", 1.0), ("lower", -1.0)):
        for x in xs:
            disc = 5.0 * x * x - 4.0
            cval = (-3.0 * x + sgn * math.sqrt(max(disc, 0.0))) \
                / (2.0 * x * x)
            resid = cval * cval * x ** 4 + 3.0 * cval * x ** 3 \
                + x * x + 1.0
            rows.append((name, x, cval, resid))
    return ["series", "x", "c", "residual"], rows


def _curve_c0curve(args):
    """Thresholds c0(mu) and c_J(mu) sampled over mu; they touch at
    mu = 1/2."""
    mus = np.linspace(args.mu_min, args.mu_max, args.n)
    rows = []
    for mu in mus:
        p = ProblemParams(float(mu))
        th = elliptic.thresholds(p)
        rows.append(("c0", mu, th.c0, p.c_jacobi))
    return ["series", "mu", "c0", "c_jacobi"], rows


def cmd_curve(args):
    partial = False
    if args.which in ("hill", "v0", "f0", "czero"):
        params = ProblemParams(args.mu)
        c = parse_energy(args.c, params)
    if args.which == "hill":
        header, rows = _curve_hill(args, params, c)
    elif args.which == "v0":
        header, rows, partial = _curve_v0(args, params, c)
    elif args.which == "f0":
        header, rows, partial = _curve_f0(args, params, c)
    elif args.which == "czero":
        header, rows, partial = _curve_czero(args, params)
    elif args.which == "quartic":
        header, rows = _curve_quartic(args)
    elif args.which == "c0curve":
        header, rows = _curve_c0curve(args)
    else:
        _fail(f"unknown curve {args.which!r}")
    _write_csv(args.out, header, rows)
    if partial:
        print("warning: trace terminated early; file is partial",
              file=sys.stderr)
        return 1
    return 0


# -- identities --------------------------------------------------------------

def cmd_verify_identities(args):
    if args.list:
        for name in identity_names():
            print(name)
        return 0
    results = ([verify_identity(args.only)] if args.only
               else verify_all())
    failed = 0
    for r in results:
        status = "Pass" if r.passed else "Fail"
        print(f"{r.name:<24} {status}  {r.elapsed * 1e3:8.2f} ms")
        failed += not r.passed
    print(f"{len(results) - failed}/{len(results)} identities verified")
    return 4 if failed else 0


# -- argument plumbing -------------------------------------------------------

def _add_common(sp, mu=True, c=True, out=True):
    if mu:
        sp.add_argument("--mu", type=float, required=False)
    if c:
        sp.add_argument("--c", type=str, default="cJ")
    if out:
        sp.add_argument("--out", type=str, default=None,
                        help="output path ('-' or omitted: stdout)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="euler2c",
        description="Convexity analysis of the planar two-fixed-centers "
                    "problem: constants, verdicts, figure data, and exact "
                    "identity checks.")
    ap.add_argument("--config", type=str, default=None,
                    help="key = value file preloading option defaults")
    sub = ap.add_subparsers(dest="command", required=True)
    ap._subcommand_parsers = []
    _add_parser = sub.add_parser

    def add_parser(*a, **kw):
        sp = _add_parser(*a, **kw)
        ap._subcommand_parsers.append(sp)
        return sp

    sub.add_parser = add_parser

    sp = sub.add_parser("constants", help="derived constants as JSON")
    _add_common(sp, c=False)

    sp = sub.add_parser("verdict", help="convexity verdict (theory/oracle)")
    sp.add_argument("target", choices=["elliptic", "levi", "fiberwise"])
    _add_common(sp)
    sp.add_argument("--component", choices=["earth", "moon"], default=None)
    sp.add_argument("--method", choices=["theory", "oracle", "both"],
                    default="both")
    sp.add_argument("--grid", type=int, nargs=3, default=[100, 100, 16])

    sp = sub.add_parser("curve", help="figure data as CSV")
    sp.add_argument("which", choices=["hill", "v0", "f0", "czero",
                                      "quartic", "c0curve"])
    _add_common(sp)
    sp.add_argument("--n", type=int, default=256)
    sp.add_argument("--step", type=float, default=1e-3)
    sp.add_argument("--max-len", type=float, default=3.0)
    sp.add_argument("--xmax", type=float, default=4.0)
    sp.add_argument("--mu-min", type=float, default=0.05)
    sp.add_argument("--mu-max", type=float, default=0.95)

    sp = sub.add_parser("verify-identities",
                        help="run the exact identity suite")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--only", type=str, default=None)
    return ap


def main(argv=None):
    ap = build_parser()
    # peel --config first so file values become argparse defaults
    pre, _ = ap.parse_known_args(argv)
    if getattr(pre, "config", None):
        try:
            cfg = _load_config(pre.config)
        except (OSError, ValueError) as err:
            _fail(str(err))
        ap.set_defaults(**cfg)
        for sp in ap._subcommand_parsers:
            sp.set_defaults(**cfg)
    args = ap.parse_args(argv)

    needs_mu = args.command in ("constants", "verdict") or (
        args.command == "curve"
        and args.which in ("hill", "v0", "f0", "czero"))
    if needs_mu:
        if args.mu is None:
            _fail(f"{args.command} requires --mu")
        if not 0.0 < args.mu < 1.0:
            _fail(f"mu must lie in (0, 1), got {args.mu}")

    try:
        if args.command == "constants":
            return cmd_constants(args)
        if args.command == "verdict":
            return cmd_verdict(args)
        if args.command == "curve":
            return cmd_curve(args)
        if args.command == "verify-identities":
            return cmd_verify_identities(args)
    except (Euler2CError, ValueError) as err:
        _fail(str(err))
    return 0


if __name__ == "__main__":
    sys.exit(main())
