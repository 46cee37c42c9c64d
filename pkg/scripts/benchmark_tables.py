"""Time every pipeline stage per quiver and print a summary table.

Stages: catalog validation, structure constants, both central series,
the vertex-simple subalgebra, and cohomology (where the budget allows).
Useful for spotting performance regressions; results are exact, so the
only thing that can drift is the clock.
"""

import argparse
import time

from preproj.catalog import load_catalog, validate_catalog
from preproj.cohomology import BudgetExceeded, build_complex, cohomology_dims
from preproj.lie import (
    compute_brackets,
    generated_subalgebra,
    lower_central_series,
    upper_central_series,
    vertex_simple_generators,
)


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def bench(n: int) -> list[tuple[str, str, float]]:
    rows = []
    catalog, dt = timed(lambda: load_catalog(n, validate=False))
    report, dt2 = timed(lambda: validate_catalog(catalog))
    rows.append(("catalog", f"{catalog.r} modules, ok={report.ok}", dt + dt2))

    L, dt = timed(lambda: compute_brackets(n))
    rows.append(("brackets", f"{len(L.c)} nonzero pairs", dt))

    lcs, dt = timed(lambda: lower_central_series(L))
    rows.append(("lower series", str([t.dim for t in lcs]), dt))
    ucs, dt = timed(lambda: upper_central_series(L))
    rows.append(("upper series", str([t.dim for t in ucs]), dt))
    g, dt = timed(lambda: generated_subalgebra(L, vertex_simple_generators(L)))
    rows.append(("vertex subalgebra", f"dim {g.dim}", dt))

    try:
        table, dt = timed(lambda: cohomology_dims(build_complex(L)))
        rows.append(("cohomology", str(list(table.marginals())), dt))
    except BudgetExceeded as exc:
        rows.append(("cohomology", f"refused: {exc}", 0.0))
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quiver", default="all",
                        help="A1..A4 or 'all' (default)")
    args = parser.parse_args()
    ns = (1, 2, 3, 4) if args.quiver == "all" else (int(args.quiver.lstrip("Aa")),)
    for n in ns:
        print(f"== A{n}")
        for stage, detail, dt in bench(n):
            print(f"  {stage:18s} {dt:8.2f}s  {detail}")


if __name__ == "__main__":
    main()
