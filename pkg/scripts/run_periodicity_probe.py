#!/usr/bin/env python3
# Scan for vertical near-periods of the kernel correlation from a base
# point, over one or more correlation targets.  Reports the first shift
# found (or a miss) per target, with wall time.

import argparse
import sys
import time

from dirichlet_rkhs.diagnostics import almost_periodicity_probe
from dirichlet_rkhs.spaces import (HARDY_DIRICHLET, WEIGHTED_DIRICHLET,
                                   HalfPlanePoint, SpaceId)


def main(argv=None):
    ap = argparse.ArgumentParser(
        description="first vertical shift reaching a kernel correlation target")
    ap.add_argument("--sigma", type=float, default=0.75)
    ap.add_argument("--t", type=float, default=0.0)
    ap.add_argument("--t-max", type=float, default=1e4)
    ap.add_argument("--target", type=float, action="append", default=None,
                    help="correlation targets (repeatable, default 0.8 0.9)")
    ap.add_argument("--alpha", type=float, default=None,
                    help="use the log-weighted space at this alpha")
    args = ap.parse_args(argv)

    targets = args.target if args.target is not None else [0.8, 0.9]
    if args.alpha is None:
        space = SpaceId(HARDY_DIRICHLET)
    else:
        space = SpaceId(WEIGHTED_DIRICHLET, alpha=args.alpha)
    s = HalfPlanePoint(args.sigma, args.t)

    print("target,tau,seconds")
    for target in sorted(targets):
        t0 = time.time()
        tau = almost_periodicity_probe(space, s, args.t_max, target)
        dt = time.time() - t0
        shown = "none" if tau is None else f"{tau:.12g}"
        print(f"{target:g},{shown},{dt:.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
