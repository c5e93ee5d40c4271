"""Command line front end: fit, predict, heatmap, plan, synth.

Data goes to stdout or --out files, diagnostics to stderr; the exit
status is 0 only when no error was reported. Flag values that start
with a minus sign (negative extents, RSSI thresholds) must be passed
in --flag=value form.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .coverage import DEFAULT_REGION_TABLE, RegionTable, classify_rssi, generate_heatmap
from .fileio import ModelFile, parse_survey, read_model, write_heatmap_csv, write_model, write_survey
from .fit import fit_many
from .planner import plan_surveys
from .propagation import LogDistanceModel, predict_rssi
from .survey import ApConfig
from .synth import SynthSpec, generate_survey

DEFAULT_FREQUENCY_MHZ = 2432.0


def _extent(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"extent must be x_min,x_max,y_min,y_max, got {text!r}")
    try:
        return tuple(float(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise argparse.ArgumentTypeError(f"extent values must be numbers, got {text!r}") from None


def _rssi_floors(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            f"region thresholds must be 4 descending RSSI floors, got {text!r}"
        )
    try:
        return tuple(float(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise argparse.ArgumentTypeError(f"threshold values must be numbers, got {text!r}") from None


def _region_table(args: argparse.Namespace) -> RegionTable:
    if args.region_thresholds is None:
        return DEFAULT_REGION_TABLE
    return RegionTable(rssi_floors=args.region_thresholds)


def _cmd_fit(args: argparse.Namespace) -> int:
    ap = ApConfig(
        name="survey-ap", tx_power_dbm=args.tx_power_dbm, frequency_mhz=args.frequency_mhz
    )
    surveys = parse_survey(args.survey, ap)
    results = fit_many(surveys, d0_m=args.d0_m)

    print(
        f"{'location_id':<16} {'n':>10} {'sigma_db':>10} {'pl_d0_db':>10} "
        f"{'r_squared':>10} {'num_samples':>12}"
    )
    failed = False
    for entry in results:
        if entry.error is not None:
            failed = True
            print(f"error: location {entry.location_id!r}: {entry.error}", file=sys.stderr)
            continue
        fit = entry.result
        print(
            f"{entry.location_id:<16} {fit.model.n:>10.4f} {fit.model.sigma_db:>10.4f} "
            f"{fit.model.pl_d0_db:>10.4f} {fit.r_squared:>10.4f} {fit.num_samples:>12d}"
        )
        if args.out is not None:
            out = Path(args.out)
            if len(results) > 1:
                out = out.with_name(f"{out.stem}.{entry.location_id}{out.suffix}")
            write_model(
                out,
                ModelFile.from_fit(
                    entry.location_id, fit, args.tx_power_dbm, args.frequency_mhz
                ),
            )
    return 1 if failed else 0


def _cmd_predict(args: argparse.Namespace) -> int:
    record = read_model(args.model)
    tx = args.tx_power_dbm if args.tx_power_dbm is not None else record.tx_power_dbm
    rssi = predict_rssi(record.to_model(), tx, args.distance_m)
    region = classify_rssi(rssi, _region_table(args))
    print(f"{rssi:.2f} dBm, region {region.value}")
    return 0


def _cmd_heatmap(args: argparse.Namespace) -> int:
    record = read_model(args.model)
    tx = args.tx_power_dbm if args.tx_power_dbm is not None else record.tx_power_dbm
    grid = generate_heatmap(
        record.to_model(),
        tx,
        ap_x_m=args.ap_x,
        ap_y_m=args.ap_y,
        extent=args.extent,
        resolution_m=args.resolution,
        table=_region_table(args),
    )
    write_heatmap_csv(args.out, grid)
    return 0


def _cmd_plan(args: argparse.Namespace) -> int:
    ap = ApConfig(
        name="survey-ap",
        tx_power_dbm=args.tx_power_dbm,
        frequency_mhz=args.frequency_mhz,
        sensitivity_dbm=args.sensitivity_dbm,
    )
    surveys = parse_survey(args.survey, ap)
    report = plan_surveys(surveys, args.sensitivity_dbm, args.margin_db)

    print(f"{'location_id':<16} {'worst_rssi_dbm':>15} {'margin_db':>10} {'needs_new_ap':>13}")
    failed = False
    for entry in report.entries:
        if entry.error is not None:
            failed = True
            print(f"error: location {entry.location_id!r}: {entry.error}", file=sys.stderr)
            continue
        flag = "yes" if entry.needs_new_ap else "no"
        print(
            f"{entry.location_id:<16} {entry.worst_rssi_dbm:>15.2f} "
            f"{entry.margin_db:>10.2f} {flag:>13}"
        )
    return 1 if failed else 0


def _cmd_synth(args: argparse.Namespace) -> int:
    model = LogDistanceModel(
        pl_d0_db=args.pl_d0, d0_m=args.d0_m, n=args.n, sigma_db=args.sigma
    )
    spec = SynthSpec(
        model=model,
        tx_power_dbm=args.tx_power_dbm,
        num_samples=args.samples,
        d_min_m=args.dmin_m,
        d_max_m=args.dmax_m,
        seed=args.seed,
        location_id=args.location_id,
    )
    write_survey(args.out, [generate_survey(spec)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wlansurvey",
        description="Path-loss model fitting, RSSI prediction and AP planning for WLAN site surveys.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fit = sub.add_parser("fit", help="fit a log-distance model per surveyed location")
    p_fit.add_argument("--survey", required=True, help="survey CSV file")
    p_fit.add_argument("--tx-power-dbm", type=float, required=True)
    p_fit.add_argument("--d0-m", type=float, default=1.0, help="reference distance (default 1 m)")
    p_fit.add_argument("--frequency-mhz", type=float, default=DEFAULT_FREQUENCY_MHZ)
    p_fit.add_argument("--out", help="write model JSON (per-location suffix when several)")
    p_fit.set_defaults(func=_cmd_fit)

    p_predict = sub.add_parser("predict", help="predict RSSI and region at a distance")
    p_predict.add_argument("--model", required=True, help="model JSON file")
    p_predict.add_argument(
        "--tx-power-dbm", type=float, default=None, help="override the model file tx power"
    )
    p_predict.add_argument("--distance-m", type=float, required=True)
    p_predict.add_argument("--region-thresholds", type=_rssi_floors, default=None)
    p_predict.set_defaults(func=_cmd_predict)

    p_heatmap = sub.add_parser("heatmap", help="rasterize predicted coverage around an AP")
    p_heatmap.add_argument("--model", required=True, help="model JSON file")
    p_heatmap.add_argument(
        "--tx-power-dbm", type=float, default=None, help="override the model file tx power"
    )
    p_heatmap.add_argument("--ap-x", type=float, required=True)
    p_heatmap.add_argument("--ap-y", type=float, required=True)
    p_heatmap.add_argument("--extent", type=_extent, required=True, help="x_min,x_max,y_min,y_max")
    p_heatmap.add_argument("--resolution", type=float, required=True, help="meters per cell")
    p_heatmap.add_argument("--region-thresholds", type=_rssi_floors, default=None)
    p_heatmap.add_argument("--out", required=True, help="output grid CSV")
    p_heatmap.set_defaults(func=_cmd_heatmap)

    p_plan = sub.add_parser("plan", help="flag locations that need a new AP")
    p_plan.add_argument("--survey", required=True, help="survey CSV file")
    p_plan.add_argument("--tx-power-dbm", type=float, required=True)
    p_plan.add_argument("--sensitivity-dbm", type=float, required=True)
    p_plan.add_argument("--margin-db", type=float, default=10.0)
    p_plan.add_argument("--frequency-mhz", type=float, default=DEFAULT_FREQUENCY_MHZ)
    p_plan.set_defaults(func=_cmd_plan)

    p_synth = sub.add_parser("synth", help="generate a synthetic survey CSV")
    p_synth.add_argument("--n", type=float, required=True, help="path loss exponent")
    p_synth.add_argument("--sigma", type=float, required=True, help="shadowing std dev (dB)")
    p_synth.add_argument("--pl-d0", type=float, required=True, help="path loss at d0 (dB)")
    p_synth.add_argument("--d0-m", type=float, default=1.0)
    p_synth.add_argument("--tx-power-dbm", type=float, required=True)
    p_synth.add_argument("--samples", type=int, required=True)
    p_synth.add_argument("--dmin-m", type=float, required=True)
    p_synth.add_argument("--dmax-m", type=float, required=True)
    p_synth.add_argument("--seed", type=int, required=True)
    p_synth.add_argument("--location-id", default="synthetic")
    p_synth.add_argument("--out", required=True, help="output survey CSV")
    p_synth.set_defaults(func=_cmd_synth)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
