"""``citecurve`` command line.

Exit codes: 0 success (including per-author exclusions), 1 I/O failure,
2 invalid input or arguments.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import approx, group, model, stats, temporal
from .errors import CiteCurveError, IoError
from .ingest import Dataset, ReportRow, emit_report_csv, parse_dataset
from .plots import emit_histogram_svg, emit_scatter_svg

FORMATS = ("long-csv", "signature-csv", "json")


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _dumps(obj):
    return json.dumps(obj, indent=2) + "\n"


def _signature(args):
    return model.CurveSignature(args.M, args.N, args.h)


def cmd_analyze(args):
    ds = parse_dataset(_read(args.input), args.format)
    rows = stats.analysis_rows(ds, cap_at_N=not args.g_uncapped)
    _write(emit_report_csv(rows), args.output)


def cmd_fit(args):
    sig = _signature(args)
    full = model.calibrate_full(sig)
    out = {
        "signature": {"M": sig.M, "N": sig.N, "h": sig.h},
        "full": {"a": full.a, "b": full.b, "c": full.c},
    }
    try:
        head = model.calibrate_head(sig.M, sig.h)
        out["head"] = {"b_head": head.b_head, "c_head": head.c_head}
    except CiteCurveError:
        out["head"] = None
    try:
        tail = model.calibrate_tail(sig.N, sig.h)
        out["tail"] = {"a_tail": tail.a_tail, "b_tail": tail.b_tail}
    except CiteCurveError:
        out["tail"] = None
    rep = approx.approx_indices(sig)
    out["approximations"] = rep.as_dict()
    out["excluded"] = dict(sorted(rep.reasons.items()))
    _write(_dumps(out), args.output)


def cmd_compare(args):
    ds = parse_dataset(_read(args.input), args.format)
    series, fit = stats.compare_index(ds, args.index)
    if args.plot:
        emit_scatter_svg(series, fit, args.plot)
    if args.report:
        rows = [ReportRow(aid, series.index_name, emp, est) for emp, est, aid in series.points]
        rows += [ReportRow(aid, series.index_name, None, None, why)
                 for aid, why in series.excluded.items()]
        _write(emit_report_csv(rows), args.report)
    summary = {
        "index": series.index_name,
        "n_points": len(series.points),
        "excluded": dict(sorted(series.excluded.items())),
        "fit": asdict(fit) if fit is not None else None,
    }
    _write(_dumps(summary), None)


def cmd_group(args):
    ds = parse_dataset(_read(args.input), args.format)
    ids = [a.strip() for a in args.authors.split(",") if a.strip()] if args.authors else ds.author_ids()
    missing = [a for a in ids if a not in ds.profiles and a not in ds.signatures]
    if missing:
        raise CiteCurveError(f"unknown authors: {', '.join(missing)}")
    members = [ds.signature(a) for a in ids]
    profiles = None
    if all(a in ds.profiles for a in ids):
        profiles = [ds.profiles[a] for a in ids]
    res = group.group_estimate(members, profiles)
    out = {"authors": ids}
    out.update(asdict(res))
    _write(_dumps(out), args.output)


def cmd_project(args):
    rates = temporal.rates_from_snapshot(_signature(args), args.t)
    sig = temporal.project(rates, args.to)
    traj = {}
    for index in temporal.TRAJECTORY_INDICES:
        try:
            traj[index] = temporal.trajectory(rates, args.to, index)
        except CiteCurveError:
            traj[index] = None
    out = {
        "rates": asdict(rates),
        "t": args.to,
        "signature": {"M": sig.M, "N": sig.N, "h": sig.h},
        "trajectory": traj,
    }
    _write(_dumps(out), args.output)


def cmd_synth(args):
    from .ingest import dump_json

    sig = _signature(args)
    profile = model.synth_profile(sig, args.mode, noise=args.noise, rng=args.seed,
                                  author_id=args.author)
    if args.out and args.out.endswith(".json"):
        text = dump_json(Dataset(profiles={profile.author_id: profile}))
    else:
        text = "author,citations\n" + "".join(f"{profile.author_id},{c}\n" for c in profile.counts)
    _write(text, args.out)


def cmd_hist(args):
    ds = parse_dataset(_read(args.input), args.format)
    values = [getattr(ds.signature(a), args.field) for a in ds.author_ids()]
    bins = stats.histogram(values, args.bins)
    if args.out and args.out.endswith(".svg"):
        emit_histogram_svg(bins, args.out, label=args.field)
    else:
        text = "bin_lower,bin_upper,count\n" + "".join(
            f"{lo:.4f},{hi:.4f},{n}\n" for lo, hi, n in bins
        )
        _write(text, args.out)


def build_parser():
    p = argparse.ArgumentParser(prog="citecurve", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def dataset_args(sp):
        sp.add_argument("--input", required=True)
        sp.add_argument("--format", choices=FORMATS, default=None,
                        help="input format (sniffed from the header when omitted)")

    def sig_args(sp):
        sp.add_argument("--M", type=float, required=True)
        sp.add_argument("--N", type=float, required=True)
        sp.add_argument("--h", type=float, required=True)

    sp = sub.add_parser("analyze", help="empirical vs closed-form report per author")
    dataset_args(sp)
    sp.add_argument("--output")
    sp.add_argument("--g-uncapped", action="store_true",
                    help="let g exceed N by padding with uncited ranks")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("fit", help="calibrate the curve for one (M, N, h)")
    sig_args(sp)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_fit)

    sp = sub.add_parser("compare", help="scatter and through-origin fit for one index")
    dataset_args(sp)
    sp.add_argument("--index", required=True, choices=sorted(stats.INDEX_PAIRS))
    sp.add_argument("--plot")
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("group", help="group h-index estimates")
    dataset_args(sp)
    sp.add_argument("--authors", help="comma separated ids (default: all)")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_group)

    sp = sub.add_parser("project", help="project a signature under linear growth")
    sig_args(sp)
    sp.add_argument("--t", type=float, required=True, help="current career length")
    sp.add_argument("--to", type=float, required=True, help="target career length")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_project)

    sp = sub.add_parser("synth", help="sample a synthetic citation profile")
    sig_args(sp)
    sp.add_argument("--mode", choices=("full", "head"), default="full")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--noise", type=float, default=0.0,
                    help="log-normal sigma applied before rounding (default 0)")
    sp.add_argument("--author", default="synthetic")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_synth)

    sp = sub.add_parser("hist", help="histogram of M, N or h over a dataset")
    dataset_args(sp)
    sp.add_argument("--field", choices=("M", "N", "h"), required=True)
    sp.add_argument("--bins", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_hist)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except IoError as exc:
        print(f"citecurve: {exc}", file=sys.stderr)
        return 1
    except CiteCurveError as exc:
        print(f"citecurve: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"citecurve: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
