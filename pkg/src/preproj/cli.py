"""Command-line surface: render the computed tables and verify them.

Subcommands cover the module catalog, the bracket table, the central
series, and cohomology; `verify` recomputes everything for one quiver
and diffs it against the bundled reference tables.  The reference data
is only ever diffed against, never fed back into a computation.

Output goes to stdout in one of three formats (md, csv, json), byte
deterministic for a given configuration.  A cache directory, given via
--cache or PREPROJ_CACHE, persists computed structure constants as JSON
so the expensive rank-40 bracket run happens once.

Exit codes: 0 success, 1 a computed table differs from the reference,
2 usage error, 3 an internal consistency guard fired.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from types import MappingProxyType

from .catalog import CheckResult, _as_n, load_catalog, validate_catalog
from .cohomology import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    build_complex,
    check_budget,
    cohomology_dims,
    duality_check,
)
from .exactlin import _is_prime
from .hall import CheckReport
from .lie import (
    LieData,
    bracket_constants_as_json_obj,
    compute_brackets,
    generated_subalgebra,
    lower_central_series,
    nilpotency_class,
    reference_tables,
    upper_central_series,
    vertex_simple_generators,
)

FORMATS = ("md", "csv", "json")
WHICH = ("lower", "upper", "sl")
SECTIONS = ("catalog", "brackets", "series", "cohomology")
DEFAULT_CHECK_PRIMES = (10007, 10009)
CACHE_SCHEMA = "preproj.brackets.v1"


@dataclass(frozen=True)
class RunConfig:
    """One invocation's worth of settings, validated at construction."""

    quiver: int
    command: str
    fmt: str = "md"
    which: str = "lower"
    validate: bool = False
    primes: tuple[int, ...] = DEFAULT_CHECK_PRIMES
    cache_dir: Path | None = None
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    skip: tuple[str, ...] = ()

    def __post_init__(self):
        if self.quiver not in (1, 2, 3, 4):
            raise ValueError(f"quiver must be A1..A4, got A{self.quiver}")
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.which not in WHICH:
            raise ValueError(f"--which must be one of {WHICH}")
        composite = [p for p in self.primes if not _is_prime(p)]
        if composite:
            raise ValueError(f"--primes entries must be prime: {composite}")
        if self.budget < 1:
            raise ValueError("--budget must be positive")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")
        unknown = [s for s in self.skip if s not in SECTIONS]
        if unknown:
            raise ValueError(f"unknown --skip sections: {unknown}")


# -- argument parsing -----------------------------------------------------


def _quiver_arg(text: str) -> int:
    try:
        n = _as_n(int(text) if text.isdigit() else text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if n not in (1, 2, 3, 4):
        raise argparse.ArgumentTypeError(f"A{n} is out of range (A1..A4)")
    return n


def _env_cache() -> Path | None:
    value = os.environ.get("PREPROJ_CACHE")
    return Path(value) if value else None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="preproj",
        description="Tables for the convolution algebra on nilpotent "
        "representations of a preprojective algebra of type A.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--quiver", type=_quiver_arg, required=True,
                       metavar="A1..A4")
        p.add_argument("--format", dest="fmt", choices=FORMATS, default="md")
        p.add_argument("--cache", type=Path, default=None,
                       help="cache directory (default: $PREPROJ_CACHE)")
        p.add_argument("--primes", type=int, nargs="+",
                       default=list(DEFAULT_CHECK_PRIMES),
                       help="primes for the modular rank confirmation")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="monomial budget for the cohomology complex")
        p.add_argument("--jobs", type=int, default=1,
                       help="cap on concurrent verification workers")

    p = sub.add_parser("catalog", help="list the indecomposable modules")
    common(p)
    p.add_argument("--validate", action="store_true",
                   help="print the full validation report")

    p = sub.add_parser("bracket-table",
                       help="commutator table, diffed against the reference")
    common(p)

    p = sub.add_parser("series", help="central series with spanning sets")
    common(p)
    p.add_argument("--which", choices=WHICH, default="lower")

    p = sub.add_parser("cohomology", help="graded cohomology dimensions")
    common(p)

    p = sub.add_parser("verify", help="recompute and diff every table")
    common(p)
    p.add_argument("--skip", action="append", default=[], choices=SECTIONS,
                   help="section to leave out (repeatable)")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        quiver=args.quiver,
        command=args.command,
        fmt=args.fmt,
        which=getattr(args, "which", "lower"),
        validate=getattr(args, "validate", False),
        primes=tuple(args.primes),
        cache_dir=args.cache if args.cache is not None else _env_cache(),
        budget=args.budget,
        jobs=args.jobs,
        skip=tuple(getattr(args, "skip", ())),
    )


# -- structure-constant cache ---------------------------------------------


def cache_file(cache_dir: Path, n: int) -> Path:
    return cache_dir / f"brackets_a{n}.json"


def save_lie_cache(L: LieData, path: Path) -> None:
    obj = {
        "schema": CACHE_SCHEMA,
        "quiver": f"A{L.n}",
        "r": L.r,
        "degrees": [list(d) for d in L.degrees],
        "constants": bracket_constants_as_json_obj(L),
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n",
                    encoding="utf-8")


def load_lie_cache(path: Path) -> LieData:
    obj = json.loads(path.read_text(encoding="utf-8"))
    if obj.get("schema") != CACHE_SCHEMA:
        raise RuntimeError(f"unsupported cache schema in {path}")
    c = {}
    for key, entry in obj["constants"].items():
        i, j = (int(x) for x in key.split(","))
        c[(i, j)] = MappingProxyType(
            {int(k): int(v) for k, v in sorted(entry.items(), key=lambda kv: int(kv[0]))}
        )
    return LieData(
        n=_as_n(obj["quiver"]),
        r=int(obj["r"]),
        degrees=tuple(tuple(int(x) for x in d) for d in obj["degrees"]),
        c=MappingProxyType(c),
    )


def lie_data(config: RunConfig) -> LieData:
    """Structure constants, from the cache when present.

    A miss computes and then fills the cache, so hits and misses give
    identical data by construction.
    """
    if config.cache_dir is not None:
        path = cache_file(config.cache_dir, config.quiver)
        if path.exists():
            return load_lie_cache(path)
    L = compute_brackets(config.quiver)
    if config.cache_dir is not None:
        save_lie_cache(L, cache_file(config.cache_dir, config.quiver))
    return L


# -- rendering ------------------------------------------------------------


def _linear_combo(pairs) -> str:
    """Signed sum like -u3+2u4 from (coefficient, name) pairs."""
    out = ""
    for coeff, name in pairs:
        c = Fraction(coeff)
        if not c:
            continue
        mag = abs(c)
        if mag == 1:
            text = ""
        elif mag.denominator == 1:
            text = str(mag)
        else:
            text = f"({mag})"
        if out:
            out += ("-" if c < 0 else "+") + text + name
        else:
            out = ("-" if c < 0 else "") + text + name
    return out or "0"


def _combo(entry: dict) -> str:
    return _linear_combo((v, f"u{k}") for k, v in sorted(entry.items()))


def _vector_combo(vec) -> str:
    return _linear_combo((x, f"u{k}") for k, x in enumerate(vec, start=1))


def _markdown_table(rows) -> str:
    header, *body = rows
    lines = ["| " + " | ".join(header) + " |",
             "|" + "---|" * len(header)]
    for row in body:
        row = row + [""] * (len(header) - len(row))
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=1, sort_keys=True))


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


# -- subcommands ----------------------------------------------------------


def cmd_catalog(config: RunConfig) -> int:
    catalog = load_catalog(config.quiver, validate=False)
    report = validate_catalog(catalog)

    if config.fmt == "json":
        _print_json({
            "schema": "preproj.catalog.v1",
            "quiver": catalog.quiver.name,
            "count": catalog.r,
            "entries": [e.to_json_obj() for e in catalog],
            "validation": {
                "ok": report.ok,
                "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                           for c in report.checks],
            },
        })
    elif config.fmt == "csv":
        w = _csv_writer()
        w.writerow(["id", "dimv", "total", "notes"])
        for e in catalog:
            w.writerow([e.id, " ".join(map(str, e.dimv)), e.total_dim, e.notes])
    else:
        print(f"catalog {catalog.quiver.name}: {catalog.r} indecomposable modules")
        for e in catalog:
            print(f"  U{e.id}  dimv {e.dimv}  total {e.total_dim}  {e.notes}")
        if config.validate:
            print(str(report))
        else:
            status = "ok" if report.ok else "FAILED"
            print(f"validation: {status} ({len(report.checks)} checks)")

    if not report.ok:
        for c in report.violations:
            print(f"violation: {c.name}: {c.detail}", file=sys.stderr)
        return 1
    return 0


def cmd_bracket_table(config: RunConfig) -> int:
    L = lie_data(config)
    computed = bracket_constants_as_json_obj(L)
    expected = reference_tables(config.quiver)["brackets"]
    matches = computed == expected

    if config.fmt == "json":
        _print_json({
            "schema": "preproj.brackets.v1",
            "quiver": f"A{config.quiver}",
            "r": L.r,
            "constants": computed,
            "matches_reference": matches,
        })
    elif config.fmt == "csv":
        w = _csv_writer()
        w.writerow(["i", "j", "k", "coeff"])
        for (i, j), entry in sorted(L.c.items()):
            for k, v in sorted(entry.items()):
                w.writerow([i, j, k, v])
    else:
        rows = [[""] + [f"u{j}" for j in range(1, L.r)]]
        for i in range(2, L.r + 1):
            rows.append([f"u{i}"] + [_combo(L.bracket_units(i, j))
                                     for j in range(1, i)])
        print(f"bracket table A{config.quiver}, lower triangle [u_i, u_j]")
        print(_markdown_table(rows))
        print(f"reference diff: {'match' if matches else 'MISMATCH'}")

    if not matches:
        keys = sorted(set(computed) ^ set(expected)
                      | {k for k in set(computed) & set(expected)
                         if computed[k] != expected[k]})
        print(f"bracket table differs from the reference at {keys}",
              file=sys.stderr)
        return 1
    return 0


def _series_terms(config: RunConfig, L: LieData):
    if config.which == "lower":
        return f"lower central series A{config.quiver}", lower_central_series(L), None
    if config.which == "upper":
        return f"upper central series A{config.quiver}", upper_central_series(L), None
    g = generated_subalgebra(L, vertex_simple_generators(L))
    title = f"subalgebra on the vertex simples A{config.quiver}"
    return title, g.series, g.layer_dims()


def cmd_series(config: RunConfig) -> int:
    L = lie_data(config)
    title, terms, layer_dims = _series_terms(config, L)
    dims = [t.dim for t in terms]
    spans = [[_vector_combo(row) for row in t.basis] for t in terms]

    if config.fmt == "json":
        obj = {
            "schema": "preproj.series.v1",
            "quiver": f"A{config.quiver}",
            "which": config.which,
            "dims": dims,
            "terms": [{"dim": d, "basis": basis}
                      for d, basis in zip(dims, spans)],
        }
        if layer_dims is not None:
            obj["layer_dims"] = list(layer_dims)
        _print_json(obj)
    elif config.fmt == "csv":
        w = _csv_writer()
        w.writerow(["term", "dim", "basis"])
        for idx, (d, basis) in enumerate(zip(dims, spans)):
            w.writerow([idx, d, "; ".join(basis)])
    else:
        print(title)
        print("dims: " + ", ".join(map(str, dims)))
        if layer_dims is not None:
            print("layer dims: " + ", ".join(map(str, layer_dims)))
        for idx, (d, basis) in enumerate(zip(dims, spans)):
            print(f"term {idx}: dim {d}")
            for line in basis:
                print(f"  {line}")
    return 0


def cmd_cohomology(config: RunConfig) -> int:
    catalog = load_catalog(config.quiver, validate=False)
    try:
        check_budget(catalog.r, config.budget)
    except BudgetExceeded as exc:
        if config.fmt == "json":
            _print_json({
                "schema": "preproj.cohomology.v1",
                "quiver": f"A{config.quiver}",
                "status": "exceeds budget",
                "detail": str(exc),
            })
        else:
            print(f"cohomology A{config.quiver}: exceeds budget ({exc})")
        return 0

    L = lie_data(config)
    table = cohomology_dims(build_complex(L, budget=config.budget),
                            check_primes=config.primes)
    report = duality_check(table, L.r)
    marginals = table.marginals()

    if config.fmt == "json":
        _print_json({
            "schema": "preproj.cohomology.v1",
            "quiver": f"A{config.quiver}",
            "status": "ok",
            "marginals": list(marginals),
            "entries": [{"degree": k, "grade": list(grade), "dim": d}
                        for k, grade, d in table.iter_rows()],
            "duality_ok": report.ok,
        })
    elif config.fmt == "csv":
        w = _csv_writer()
        w.writerow(["kind", "degree", "grade", "dim"])
        for k, grade, d in table.iter_rows():
            w.writerow(["entry", k, " ".join(map(str, grade)), d])
        for k, d in enumerate(marginals):
            w.writerow(["marginal", k, "", d])
    else:
        print(f"cohomology dimensions A{config.quiver}")
        print("marginals: " + ", ".join(map(str, marginals)))
        for k, grade, d in table.iter_rows():
            print(f"  H^{k} grade {grade}: {d}")
        print(str(report))

    return 0 if report.ok else 1


# -- verify ---------------------------------------------------------------


def _verify_catalog(config: RunConfig, L: LieData) -> list:
    catalog = load_catalog(config.quiver, validate=False)
    expected = reference_tables(config.quiver)["lcs_dims"][0]
    report = validate_catalog(catalog)
    return [
        CheckResult("catalog count", catalog.r == expected,
                    f"{catalog.r} modules, expected {expected}"),
        CheckResult("catalog validation", report.ok,
                    "all checks pass" if report.ok else str(report)),
    ]


def _verify_brackets(config: RunConfig, L: LieData) -> list:
    computed = bracket_constants_as_json_obj(L)
    expected = reference_tables(config.quiver)["brackets"]
    ok = computed == expected
    return [CheckResult("bracket table", ok,
                        f"{len(computed)} nonzero pairs"
                        if ok else "differs from the reference")]


def _verify_series(config: RunConfig, L: LieData) -> list:
    ref = reference_tables(config.quiver)
    checks = []
    lcs = [t.dim for t in lower_central_series(L)]
    checks.append(CheckResult("lower central series", lcs == ref["lcs_dims"],
                              f"dims {lcs}"))
    ucs = [t.dim for t in upper_central_series(L)]
    checks.append(CheckResult("upper central series", ucs == ref["ucs_dims"],
                              f"dims {ucs}"))
    checks.append(CheckResult(
        "nilpotency class",
        nilpotency_class(L) == ref["nilpotency_class"],
        f"class {nilpotency_class(L)}"))
    g = generated_subalgebra(L, vertex_simple_generators(L))
    checks.append(CheckResult("vertex subalgebra dimension",
                              g.dim == ref["sl_dim"], f"dim {g.dim}"))
    checks.append(CheckResult(
        "vertex subalgebra layers",
        list(g.layer_dims()) == ref["sl_layer_dims"],
        f"layers {g.layer_dims()}"))
    return checks


def _verify_cohomology(config: RunConfig, L: LieData) -> list:
    try:
        check_budget(L.r, config.budget)
    except BudgetExceeded as exc:
        return [CheckResult("cohomology", True, f"skipped: {exc}")]
    table = cohomology_dims(build_complex(L, budget=config.budget),
                            check_primes=config.primes)
    ref = reference_tables(config.quiver)
    checks = []
    marginals = list(table.marginals())
    checks.append(CheckResult("cohomology marginals",
                              marginals == ref["cohomology_dims"],
                              f"{marginals}"))
    report = duality_check(table, L.r)
    checks.append(CheckResult("cohomology duality", report.ok,
                              "symmetric, Euler sum 0" if report.ok
                              else str(report)))
    lcs = lower_central_series(L)
    expected_h1 = lcs[0].dim - lcs[1].dim
    checks.append(CheckResult("first cohomology vs abelianization",
                              marginals[1] == expected_h1,
                              f"dim {marginals[1]}"))
    return checks


_VERIFY_SECTIONS = {
    "catalog": _verify_catalog,
    "brackets": _verify_brackets,
    "series": _verify_series,
    "cohomology": _verify_cohomology,
}


def cmd_verify(config: RunConfig) -> int:
    L = lie_data(config)
    checks: list[CheckResult] = []
    live = [s for s in SECTIONS if s not in config.skip]
    if config.jobs > 1 and len(live) > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            futures = {s: pool.submit(_VERIFY_SECTIONS[s], config, L)
                       for s in live}
        results = {s: f.result() for s, f in futures.items()}
    else:
        results = {s: _VERIFY_SECTIONS[s](config, L) for s in live}
    for section in SECTIONS:
        if section in config.skip:
            checks.append(CheckResult(section, True, "skipped by flag"))
        else:
            checks.extend(results[section])

    report = CheckReport(f"verify A{config.quiver}", checks)
    if config.fmt == "json":
        _print_json({
            "schema": "preproj.verify.v1",
            "quiver": f"A{config.quiver}",
            "ok": report.ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                       for c in checks],
        })
    elif config.fmt == "csv":
        w = _csv_writer()
        w.writerow(["name", "ok", "detail"])
        for c in checks:
            w.writerow([c.name, "ok" if c.ok else "FAIL", c.detail])
    else:
        print(str(report))
    return 0 if report.ok else 1


_COMMANDS = {
    "catalog": cmd_catalog,
    "bracket-table": cmd_bracket_table,
    "series": cmd_series,
    "cohomology": cmd_cohomology,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return _COMMANDS[config.command](config)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
