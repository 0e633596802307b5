"""Uniform-convexity radii over order grids, each certified by disk sampling.

Also lists the convexity radius of f and the first zeros it must stay below.
"""

import argparse
from dataclasses import dataclass

import numpy as np

from ucradius.cli import rows_to_csv
from ucradius.oracle import certify_radius
from ucradius.radius import radius_c_f, radius_uc
from ucradius.zero_finder import zeros


@dataclass(frozen=True)
class RadiusConfig:
    n_points: int = 12
    epsilon: float = 1e-3
    f_range: tuple = (0.25, 4.0)
    gh_range: tuple = (-1.9, 4.0)


def uc_rows(cfg: RadiusConfig):
    rows = []
    for kind, (lo, hi) in (("f", cfg.f_range), ("g", cfg.gh_range), ("h", cfg.gh_range)):
        for nu in np.linspace(lo, hi, cfg.n_points):
            nu = float(nu)
            if abs(nu + 1) < 1e-3:
                continue
            rep = radius_uc(kind, nu)
            cert = certify_radius(kind, nu, rep.radius, cfg.epsilon)
            rows.append([kind, nu, rep.branch.value, rep.radius, rep.domain_hi, cert.verdict.value])
    return ["kind", "nu", "branch", "radius", "domain_hi", "verify"], rows


def f_chain_rows(nus=(0.5, 1.0, 1.5, 2.5)):
    rows = []
    for nu in nus:
        rows.append([nu, radius_uc("f", nu).radius, radius_c_f(nu).radius,
                     zeros("jprime", nu, 1)[1], zeros("j", nu, 1)[1]])
    return ["nu", "r_uc", "r_c", "jprime_1", "j_1"], rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-points", type=int, default=RadiusConfig.n_points)
    p.add_argument("--chain", action="store_true", help="print the f radius chain instead")
    args = p.parse_args()
    header, rows = f_chain_rows() if args.chain else uc_rows(RadiusConfig(n_points=args.n_points))
    print(rows_to_csv(header, rows), end="")


if __name__ == "__main__":
    main()
