#!/usr/bin/env python3
"""Plot measured path loss against log-scale distance with the fitted line.

Reads a survey CSV, fits each location and renders one panel per
location: scatter of measured path loss plus the fitted mean line whose
slope is 10*n dB per decade.

Usage:
    python scripts/plot_path_loss_fit.py --survey campaign.csv \
        --tx-power-dbm 23 --out fits.png
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from wlansurvey import ApConfig, fit_log_distance, parse_survey


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--survey", required=True)
    parser.add_argument("--tx-power-dbm", type=float, required=True)
    parser.add_argument("--d0-m", type=float, default=1.0)
    parser.add_argument("--frequency-mhz", type=float, default=2432.0)
    parser.add_argument("--out", default="path_loss_fits.png")
    args = parser.parse_args()

    ap = ApConfig(
        name="plot-ap", tx_power_dbm=args.tx_power_dbm, frequency_mhz=args.frequency_mhz
    )
    surveys = parse_survey(args.survey, ap)

    fig, axes = plt.subplots(
        len(surveys), 1, figsize=(7, 3 * len(surveys)), squeeze=False, sharex=True
    )
    for axis, survey in zip(axes[:, 0], surveys):
        result = fit_log_distance(survey, d0_m=args.d0_m)
        d = np.array([s.distance_m for s in survey.samples])
        pl = args.tx_power_dbm - np.array([s.rssi_dbm for s in survey.samples])
        axis.semilogx(d, pl, "o", markersize=4, label="measured")

        span = np.logspace(np.log10(d.min()), np.log10(d.max()), 50)
        mean_line = result.model.pl_d0_db + 10.0 * result.model.n * np.log10(span / args.d0_m)
        axis.semilogx(
            span, mean_line, "-",
            label=f"fit: n={result.model.n:.2f}, sigma={result.model.sigma_db:.2f} dB",
        )
        axis.set_ylabel("path loss (dB)")
        axis.set_title(survey.location_id)
        axis.grid(True, which="both", alpha=0.3)
        axis.legend()
    axes[-1, 0].set_xlabel("distance (m, log scale)")

    fig.tight_layout()
    fig.savefig(args.out, dpi=120)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
