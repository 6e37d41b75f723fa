"""Command-line front end.

Subcommands map one-to-one onto the library surface: ``steady``, ``response``,
``figure``, ``sweep``, ``verify`` and ``stability``.  Exit codes: 0 success,
1 usage/config error, 2 verification failure, 3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import response, steadystate, sweep, timedomain
from .errors import (
    ConfigError,
    DcavityError,
    NearSingular,
    NoConvergence,
    UnknownPreset,
)
from .params import ModelConfig, ReducedParams, load_config, reduce_params

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_NO_CONVERGENCE = 3

_FMT = "{:.17g}"

DEFAULT_VERIFY_N = (0.0, 0.3, 0.7, 0.9)
DEFAULT_VERIFY_X = (-0.5, -0.1, 0.0, 0.1, 0.5)


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as ConfigError instead of exiting."""

    def error(self, message):
        raise ConfigError(message)


def _reduced_from_config(cfg: ModelConfig) -> ReducedParams:
    if cfg.mode == "reduced":
        return cfg.reduced
    s = steadystate.solve_steady_state(
        cfg.physical, ignore_backaction=cfg.ignore_backaction
    )
    return reduce_params(cfg.physical, s)


def _floats(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def cmd_steady(args) -> int:
    cfg = load_config(args.config)
    if cfg.mode != "physical":
        raise ConfigError("'steady' needs a physical-mode config")
    p = cfg.physical
    ignore = cfg.ignore_backaction or args.ignore_backaction
    s = steadystate.solve_steady_state(p, ignore_backaction=ignore)
    r = reduce_params(p, s)
    from .params import single_photon_coupling

    rows = [
        ("b_s", s.b_s),
        ("|c_1s|", abs(s.c_1s)),
        ("|c_2s|", abs(s.c_2s)),
        ("Delta_1 [rad/s]", s.delta_1),
        ("Delta_2 [rad/s]", s.delta_2),
        ("g0 [rad/s]", single_photon_coupling(p)),
        ("G [rad/s]", r.g),
        ("n", r.n),
        ("Q", p.quality_factor),
        ("transparency ratio", response.transparency_ratio(r) if r.g else float("nan")),
        ("divergence ratio", response.divergence_ratio(r) if r.g else float("nan")),
    ]
    for label, value in rows:
        if isinstance(value, complex):
            # + 0.0 normalizes negative zeros out of the report
            re, im = value.real + 0.0, value.imag + 0.0
            print(f"{label} = {_FMT.format(re)} + {_FMT.format(im)}j")
        else:
            print(f"{label} = {_FMT.format(value)}")
    return EXIT_OK


def cmd_response(args) -> int:
    cfg = load_config(args.config)
    base = _reduced_from_config(cfg)
    xs = _floats(args.x)
    ns = _floats(args.n) if args.n else [base.n]
    header = (
        "x/kappa,n,re_epsT,im_epsT,abs2_b,abs2_outL,abs2_outR,"
        "outL_minus_outR,stable"
    )
    print(header)
    for n in ns:
        r = replace(base, n=n)
        stable, _ = response.is_stable(r)
        for x_over_k in xs:
            x = x_over_k * r.kappa
            try:
                a = response.fluctuation_amplitudes(r, x)
            except NearSingular:
                print(f"{x_over_k:g},{n:g},singular,,,,,,{stable}")
                continue
            abs2_out_l = abs(a.outL_plus) ** 2
            abs2_out_r = abs(a.outR_minus) ** 2
            cells = [
                f"{x_over_k:g}",
                f"{n:g}",
                _FMT.format(a.eps_T.real),
                _FMT.format(a.eps_T.imag),
                _FMT.format(abs(r.kappa * a.b_plus) ** 2),
                _FMT.format(abs2_out_l),
                _FMT.format(abs2_out_r),
                _FMT.format(abs2_out_l - abs2_out_r),
                str(stable),
            ]
            print(",".join(cells))
    return EXIT_OK


def cmd_figure(args) -> int:
    names = sweep.PRESET_NAMES if args.preset == "all" else (args.preset,)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in names:
        spec = sweep.figure_preset(name, points=args.points)
        result = sweep.run_sweep(spec)
        path = out / f"{name}.csv"
        sweep.emit_csv(result, path)
        print(f"wrote {path}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    base = _reduced_from_config(cfg)
    spec = sweep.SweepSpec(
        base=base,
        axis=args.axis,
        start=args.start,
        stop=args.stop,
        points=args.points,
        overlays=tuple({"n": n} for n in _floats(args.n)) if args.n else (),
        quantities=tuple(args.quantities.split(",")),
        fixed_x=args.fixed_x_over_kappa * base.kappa,
    )
    result = sweep.run_sweep(spec)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    sweep.emit_csv(result, out)
    print(f"wrote {out}")
    return EXIT_OK


def _parse_grid(text: str) -> tuple[list[float], list[float]]:
    ns, xs = list(DEFAULT_VERIFY_N), list(DEFAULT_VERIFY_X)
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, values = part.partition("=")
        if key.strip() == "n":
            ns = _floats(values)
        elif key.strip() == "x":
            xs = _floats(values)
        else:
            raise ConfigError(f"bad grid spec component '{part}'")
    return ns, xs


def cmd_verify(args) -> int:
    if args.config:
        base = _reduced_from_config(load_config(args.config))
    else:
        base = sweep.device_reduced(gamma_m_hz=141.0)
    ns, xs = _parse_grid(args.grid) if args.grid else (
        list(DEFAULT_VERIFY_N),
        list(DEFAULT_VERIFY_X),
    )
    tol = args.tol
    worst: dict[str, float] = {}
    failed = False
    for n in ns:
        r = replace(base, n=n)
        stable, margin = response.is_stable(r)
        if not stable or margin <= 1e-3 * r.kappa:
            for x_over_k in xs:
                print(f"n={n:g} x/kappa={x_over_k:g}: skipped: unstable")
            continue
        for x_over_k in xs:
            devs = timedomain.compare_with_closed_form(r, x_over_k * r.kappa)
            for key, dev in devs.items():
                worst[key] = max(worst.get(key, 0.0), dev)
            bad = {k: v for k, v in devs.items() if v >= tol}
            status = "FAIL" if bad else "ok"
            failed = failed or bool(bad)
            detail = " ".join(f"{k}={v:.2e}" for k, v in devs.items())
            print(f"n={n:g} x/kappa={x_over_k:g}: {status} {detail}")
    for key, dev in sorted(worst.items()):
        print(f"max deviation {key}: {dev:.3e}")
    print("FAIL" if failed else "PASS")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_stability(args) -> int:
    cfg = load_config(args.config)
    base = _reduced_from_config(cfg)
    ns = _floats(args.n) if args.n else [base.n]
    print("n,stable,margin_rad_s,transparency_ratio,divergence_ratio,max_re_eig")
    for n in ns:
        r = replace(base, n=n)
        stable, margin = response.is_stable(r)
        eig = timedomain.eigenvalues(r)[0].real
        n_star = response.transparency_ratio(r) if r.g else float("nan")
        n_div = response.divergence_ratio(r) if r.g else float("nan")
        print(
            f"{n:g},{stable},{_FMT.format(margin)},{_FMT.format(n_star)},"
            f"{_FMT.format(n_div)},{_FMT.format(eig)}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dcavity", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_steady = sub.add_parser("steady", help="solve and report the mean-field steady state")
    p_steady.add_argument("--config", required=True)
    p_steady.add_argument("--ignore-backaction", action="store_true")
    p_steady.set_defaults(func=cmd_steady)

    p_resp = sub.add_parser("response", help="closed-form response at given points")
    p_resp.add_argument("--config", required=True)
    p_resp.add_argument("--x", required=True, help="comma list of x/kappa values")
    p_resp.add_argument("--n", help="comma list of amplitude ratios")
    p_resp.set_defaults(func=cmd_response)

    p_fig = sub.add_parser("figure", help="write figure-preset CSV data")
    p_fig.add_argument("preset", help="preset name or 'all'")
    p_fig.add_argument("--out", default=".")
    p_fig.add_argument("--points", type=int, default=sweep.DEFAULT_POINTS)
    p_fig.set_defaults(func=cmd_figure)

    p_sweep = sub.add_parser("sweep", help="run a custom sweep to CSV")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--axis", choices=sweep.AXES, default="x_over_kappa")
    p_sweep.add_argument("--start", type=float, default=-1.0)
    p_sweep.add_argument("--stop", type=float, default=1.0)
    p_sweep.add_argument("--points", type=int, default=sweep.DEFAULT_POINTS)
    p_sweep.add_argument("--n", help="comma list of overlay ratios")
    p_sweep.add_argument("--quantities", default="re_epsT")
    p_sweep.add_argument("--fixed-x-over-kappa", type=float, default=0.0)
    p_sweep.add_argument("--out", required=True)
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser(
        "verify", help="check the time-domain oracle against the closed form"
    )
    p_verify.add_argument("--config")
    p_verify.add_argument("--grid", help="e.g. 'n=0,0.5;x=-0.5,0,0.5' (x in kappa units)")
    p_verify.add_argument("--tol", type=float, default=1e-6)
    p_verify.set_defaults(func=cmd_verify)

    p_stab = sub.add_parser("stability", help="stability report over ratios")
    p_stab.add_argument("--config", required=True)
    p_stab.add_argument("--n", help="comma list of amplitude ratios")
    p_stab.set_defaults(func=cmd_stability)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownPreset as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except DcavityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    raise SystemExit(main())
