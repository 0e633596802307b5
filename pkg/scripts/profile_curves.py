"""Write the profile curves on their plotting windows as CSV, one file per kind/branch.

    python3 scripts/profile_curves.py --out-dir results/profiles
"""

import argparse
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ucradius.cli import emit_profile, rows_to_csv
from ucradius.radius import domain_hi, radius_uc


@dataclass(frozen=True)
class Curve:
    name: str
    kind: str
    nus: tuple
    r_hi: float


@dataclass(frozen=True)
class CurveConfig:
    steps: int = 200
    curves: tuple = field(default_factory=lambda: (
        Curve("f", "f", (0.5, 1.0, 1.5, 2.5), 1.0),
        Curve("g_real", "g", (-0.5, 0.0, 0.5, 1.5), 0.86),
        Curve("g_modified", "g", (-1.8, -1.5, -1.4, -1.2), 0.5),
        Curve("h_real", "h", (-0.5, 0.0, 0.5, 1.5), 1.0),
        Curve("h_modified", "h", (-1.8, -1.5, -1.4, -1.2), 0.35),
    ))


def curve_table(curve: Curve, steps: int):
    """Columns r, then one profile column per order; cells past the singularity stay empty."""
    r = np.linspace(0.0, curve.r_hi, steps)
    cols = []
    for nu in curve.nus:
        hi = domain_hi(curve.kind, nu)
        inside = r[r < hi]
        vals = dict(emit_profile(curve.kind, nu, 0.0, float(inside[-1]), len(inside)))
        cols.append([vals.get(float(x)) for x in r])
    header = ["r"] + [f"nu={nu:g}" for nu in curve.nus]
    rows = [[float(x)] + [c[i] for c in cols] for i, x in enumerate(r)]
    return header, rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out-dir", type=Path, default=Path("results/profiles"))
    p.add_argument("--steps", type=int, default=CurveConfig.steps)
    args = p.parse_args()
    cfg = CurveConfig(steps=args.steps)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for curve in cfg.curves:
        header, rows = curve_table(curve, cfg.steps)
        (args.out_dir / f"{curve.name}.csv").write_text(rows_to_csv(header, rows))
        radii = ", ".join(f"{nu:g}: {radius_uc(curve.kind, nu).radius:.6f}" for nu in curve.nus)
        print(f"{curve.name:<11} on [0, {curve.r_hi}]  radii {radii}")


if __name__ == "__main__":
    main()
