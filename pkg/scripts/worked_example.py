#!/usr/bin/env python3
"""End-to-end walkthrough on f = T(T - t)/(T - 1)^2.

Builds the skeleton spanned by the zeros, poles, and infinity, computes
F = val(f) on it, and prints the full certificate.
"""

import json

from skeletron import (
    INFINITY,
    RationalFunction,
    Type1,
    build_skeleton_tree,
    verify_slope_formula,
)
from skeletron.io_json import slope_report_to_json, tree_to_json
from skeletron.puiseux import PuiseuxElement, parse_element


def main():
    zero = PuiseuxElement.zero()
    one = PuiseuxElement.constant(1)
    t = parse_element("t")

    f = RationalFunction.make(0, [(zero, 1), (t, 1), (one, -2)])
    tree = build_skeleton_tree([Type1(zero), Type1(t), Type1(one),
                                Type1(INFINITY)])

    print("skeleton:")
    print(json.dumps(tree_to_json(tree), indent=2))

    report = verify_slope_formula(f, tree, samples=25, seed=0)
    print("\nslope-formula certificate:")
    print(json.dumps(slope_report_to_json(report), indent=2))
    print(f"\nverdict: {'pass' if report.verdict else 'fail'}")


if __name__ == "__main__":
    main()
