"""Compiled vs numpy minimum-weight enumeration on the Gray images of known codes.

Run ``python benchmarks/bench_kernels.py``; both backends must agree on the
weight and the witness combination for every case.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from f4rcodes import kernels
from f4rcodes.codes import cyclic_code, skew_cyclic_code
from f4rcodes.skewpoly import parse_poly
from f4rcodes.tables import TABLE1, TABLE2

CASES = [
    ("table1 row 1 [6,3,4]", lambda: skew_cyclic_code(parse_poly(TABLE1[0].generators[0]), 6)),
    ("table2 row 13 [17,8,8]", lambda: cyclic_code(parse_poly(TABLE2[12].generator), 17)),
    ("table2 row 8 [17,9,7]", lambda: cyclic_code(parse_poly(TABLE2[7].generator), 17)),
    ("table2 row 9 [19,10,7]", lambda: cyclic_code(parse_poly(TABLE2[8].generator), 19)),
    ("table2 row 4 [15,11,4]", lambda: cyclic_code(parse_poly(TABLE2[3].generator), 15)),
    ("table1 row 4 [22,11,8]", lambda: skew_cyclic_code(parse_poly(TABLE1[3].generators[0]), 22)),
]


def _time(fn, repeat: int) -> tuple[float, tuple[int, int]]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled_min_weight is None:
        print("compiled backend unavailable; timing the numpy fallback only")
    print(f"{'case':<26} {'log2|C|':>7} {'compiled s':>11} {'numpy s':>9} {'speedup':>8}  weight")
    for name, make in CASES:
        code = make()
        rows = [code.ambient.gray_bits(x) for x in code.basis]
        packed = kernels.pack_rows(rows, 2 * code.ambient.gray_length)
        tp, rp = _time(lambda: kernels.min_weight(packed, "python"), args.repeat)
        if kernels.compiled_min_weight is not None:
            tc, rc = _time(lambda: kernels.min_weight(np.array(packed), "compiled"), args.repeat)
            if rc != rp:
                raise SystemExit(f"{name}: backends disagree {rc} vs {rp}")
            print(f"{name:<26} {code.log2_size:>7} {tc:>11.4f} {tp:>9.4f} {tp / tc:>7.1f}x  {rc[0]}")
        else:
            print(f"{name:<26} {code.log2_size:>7} {'-':>11} {tp:>9.4f} {'-':>8}  {rp[0]}")


if __name__ == "__main__":
    main()
