"""Print the two case studies: designs for three cost ratios at
(20, 5, 5, 9), and a k2 sweep at (20, 10, 5) with cP/cNP = 5."""

import argparse

from resistnet.designer import DesignParams, design, thresholds
from resistnet.robustness import sweep_k2


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ratios", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--k2-max", type=int, default=14)
    args = ap.parse_args()

    th = thresholds(DesignParams(20, 5, 5, 9))
    print(f"n1=20 n2=5 k1=5 k2=9  T1={th.t1} ({float(th.t1)})  T2={th.t2} ({float(th.t2)})")
    for r in args.ratios:
        res = design(DesignParams(20, 5, 5, 9, r, 1))
        print(f"  cP/cNP={r}: {res.strategy.value:6s} p={res.p:3d} m={res.m:3d} cost={res.cost}")

    print("\nn1=20 n2=10 k1=5 cP/cNP=5")
    print("k2,strategy,p,m,cost,selection,T2")
    for row in sweep_k2(20, 10, 5, 5, 1, range(5, args.k2_max + 1)):
        if row.error:
            print(f"{row.k2},error,,,,,")
            continue
        r = row.result
        print(f"{row.k2},{r.strategy.value},{r.p},{r.m},{r.cost},{r.selection},{row.t2}")


if __name__ == "__main__":
    main()
