"""Critical orders, their residuals, and the radius at each one (which sits at 1)."""

import argparse
from dataclasses import dataclass

from ucradius.cli import rows_to_csv
from ucradius.radius import radius_uc
from ucradius.thresholds import Threshold, threshold


@dataclass(frozen=True)
class ThresholdConfig:
    tol: float = 1e-12


DUAL_KIND = {Threshold.NU1: "f", Threshold.NU2: "g", Threshold.NU3: "h"}


def table(cfg: ThresholdConfig):
    rows = []
    for which in Threshold:
        rep = threshold(which, tol=cfg.tol)
        kind = DUAL_KIND.get(which)
        r = radius_uc(kind, rep.value).radius if kind else None
        rows.append([which.value, rep.value, rep.residual, kind or "", r])
    return ["which", "value", "residual", "dual_kind", "radius_at_value"], rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--tol", type=float, default=ThresholdConfig.tol)
    args = p.parse_args()
    header, rows = table(ThresholdConfig(tol=args.tol))
    print(rows_to_csv(header, rows), end="")


if __name__ == "__main__":
    main()
