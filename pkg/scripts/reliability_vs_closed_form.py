"""Closed-form mean connectivity next to Monte Carlo for the three designs
at (20, 5, 5, 9)."""

import argparse

from resistnet.designer import DesignParams, design
from resistnet.reliability import FailureModel, closed_form_mean_connectivity, monte_carlo_mean_connectivity


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=20_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--kappa", type=float, nargs="+", default=[0.001, 0.005, 0.01, 0.02, 0.05])
    args = ap.parse_args()

    print("strategy,kappa,closed_form,mc_estimate,mc_halfwidth")
    for ratio in (3, 5, 7):
        prm = DesignParams(20, 5, 5, 9, ratio, 1)
        res = design(prm)
        for kappa in args.kappa:
            cf = closed_form_mean_connectivity(prm, res.strategy, kappa)
            mc = monte_carlo_mean_connectivity(res.network, FailureModel(kappa, args.trials, args.seed), 5, 9)
            print(f"{res.strategy.value},{kappa},{cf:.6f},{mc.estimate:.6f},{mc.halfwidth:.6f}")


if __name__ == "__main__":
    main()
