"""Command-line behavior: formats, exit codes, caches, verification."""

import json

import pytest

import preproj.cli as cli
from preproj.cli import (
    RunConfig,
    load_lie_cache,
    main,
    save_lie_cache,
)
from preproj.lie import compute_brackets, reference_tables


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- argument handling ----------------------------------------------------


def test_invalid_quiver_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["catalog", "--quiver", "A9"])
    assert exc.value.code == 2
    assert "A1..A4" in capsys.readouterr().err


def test_unknown_skip_section_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--quiver", "A2", "--skip", "nonsense"])
    assert exc.value.code == 2


def test_composite_confirmation_prime_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["cohomology", "--quiver", "A2", "--primes", "10"])
    assert exc.value.code == 2


def test_runconfig_rejects_bad_values():
    with pytest.raises(ValueError, match="A1..A4"):
        RunConfig(quiver=5, command="catalog")
    with pytest.raises(ValueError, match="format"):
        RunConfig(quiver=2, command="catalog", fmt="xml")
    with pytest.raises(ValueError, match="jobs"):
        RunConfig(quiver=2, command="catalog", jobs=0)
    with pytest.raises(ValueError, match="skip"):
        RunConfig(quiver=2, command="verify", skip=("brackets", "bogus"))


# -- catalog --------------------------------------------------------------


def test_catalog_lists_every_module(capsys):
    code, out, _ = run(capsys, "catalog", "--quiver", "A2")
    assert code == 0
    assert "4 indecomposable modules" in out
    assert "validation: ok" in out
    assert out.count("dimv") == 4


def test_catalog_validate_flag_prints_the_full_report(capsys):
    code, out, _ = run(capsys, "catalog", "--quiver", "A2", "--validate")
    assert code == 0
    assert "catalog A2" in out
    assert out.count("ok  ") >= 5


def test_catalog_json_has_schema_and_validation(capsys):
    code, out, _ = run(capsys, "catalog", "--quiver", "A3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema"] == "preproj.catalog.v1"
    assert obj["count"] == 12
    assert obj["validation"]["ok"] is True
    assert [e["id"] for e in obj["entries"]] == list(range(1, 13))


# -- bracket table --------------------------------------------------------


def test_bracket_table_matches_the_bundled_reference(capsys):
    code, out, _ = run(capsys, "bracket-table", "--quiver", "A2",
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["matches_reference"] is True
    assert obj["constants"] == reference_tables(2)["brackets"]


def test_bracket_table_markdown_shows_the_lower_triangle(capsys):
    code, out, _ = run(capsys, "bracket-table", "--quiver", "A2")
    assert code == 0
    assert "| u2 | -u3+u4 |" in out
    assert "reference diff: match" in out


def test_bracket_table_csv_rows_are_sparse_constants(capsys):
    code, out, _ = run(capsys, "bracket-table", "--quiver", "A2",
                       "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "i,j,k,coeff"
    assert "2,1,3,-1" in lines
    assert "2,1,4,1" in lines


def test_bracket_table_mismatch_exits_one(capsys, monkeypatch):
    fake = dict(reference_tables(2))
    fake["brackets"] = {"2,1": {"3": 7}}
    monkeypatch.setattr(cli, "reference_tables", lambda n: fake)
    code, _, err = run(capsys, "bracket-table", "--quiver", "A2")
    assert code == 1
    assert "differs from the reference" in err


# -- series ---------------------------------------------------------------


def test_lower_series_dims_and_spans(capsys):
    code, out, _ = run(capsys, "series", "--quiver", "A2")
    assert code == 0
    assert "dims: 4, 1, 0" in out
    assert "term 1: dim 1" in out
    assert "u3-u4" in out


def test_upper_series_json(capsys):
    code, out, _ = run(capsys, "series", "--quiver", "A2",
                       "--which", "upper", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["dims"] == [0, 2, 4]
    assert obj["terms"][1]["basis"] == ["u3", "u4"]


def test_vertex_subalgebra_series_reports_both_dim_lists(capsys):
    code, out, _ = run(capsys, "series", "--quiver", "A2", "--which", "sl")
    assert code == 0
    assert "dims: 3, 1, 0" in out
    assert "layer dims: 2, 1, 0" in out
    assert "u3-u4" in out


# -- cohomology -----------------------------------------------------------


def test_cohomology_marginals_and_duality(capsys):
    code, out, _ = run(capsys, "cohomology", "--quiver", "A2")
    assert code == 0
    assert "marginals: 1, 3, 4, 3, 1" in out
    assert "ok   duality" in out


def test_cohomology_csv_has_entries_and_marginals(capsys):
    code, out, _ = run(capsys, "cohomology", "--quiver", "A2",
                       "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kind,degree,grade,dim"
    assert "entry,0,0 0,1" in lines
    assert "marginal,4,,1" in lines


def test_rank_forty_cohomology_refuses_fast(capsys):
    code, out, _ = run(capsys, "cohomology", "--quiver", "A4")
    assert code == 0
    assert "exceeds budget" in out


def test_refusal_is_structured_in_json(capsys):
    code, out, _ = run(capsys, "cohomology", "--quiver", "A4",
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["status"] == "exceeds budget"
    assert "2^40" in obj["detail"]


def test_budget_flag_can_force_a_refusal(capsys):
    code, out, _ = run(capsys, "cohomology", "--quiver", "A2",
                       "--budget", "8")
    assert code == 0
    assert "exceeds budget" in out


# -- verify ---------------------------------------------------------------


def test_verify_small_quiver_is_all_green(capsys):
    code, out, _ = run(capsys, "verify", "--quiver", "A2")
    assert code == 0
    assert "FAIL" not in out
    assert "ok   bracket table" in out
    assert "ok   cohomology marginals" in out


def test_verify_skip_leaves_a_note(capsys):
    code, out, _ = run(capsys, "verify", "--quiver", "A2",
                       "--skip", "cohomology")
    assert code == 0
    assert "skipped by flag" in out
    assert "cohomology marginals" not in out


def test_verify_output_is_stable_under_jobs(capsys):
    _, sequential, _ = run(capsys, "verify", "--quiver", "A2")
    _, threaded, _ = run(capsys, "verify", "--quiver", "A2", "--jobs", "4")
    assert sequential == threaded


def test_verify_reports_a_mismatch_with_exit_one(capsys, monkeypatch):
    fake = dict(reference_tables(2))
    fake["brackets"] = {}
    monkeypatch.setattr(cli, "reference_tables", lambda n: fake)
    code, out, _ = run(capsys, "verify", "--quiver", "A2",
                       "--skip", "cohomology")
    assert code == 1
    assert "FAIL bracket table" in out


# -- structure-constant cache ---------------------------------------------


def test_cache_round_trips_to_identical_data(tmp_path):
    L = compute_brackets(2)
    path = tmp_path / "brackets_a2.json"
    save_lie_cache(L, path)
    assert load_lie_cache(path) == L


def test_cache_hit_gives_byte_identical_output(capsys, tmp_path):
    args = ("bracket-table", "--quiver", "A2", "--format", "json",
            "--cache", str(tmp_path))
    code, cold, _ = run(capsys, *args)
    assert code == 0
    assert (tmp_path / "brackets_a2.json").exists()
    code, warm, _ = run(capsys, *args)
    assert code == 0
    assert cold == warm


def test_cache_dir_comes_from_the_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("PREPROJ_CACHE", str(tmp_path))
    code, _, _ = run(capsys, "series", "--quiver", "A2")
    assert code == 0
    assert (tmp_path / "brackets_a2.json").exists()


def test_verify_rank_forty_from_a_seeded_cache(capsys, tmp_path):
    """Plumbing for `verify --quiver A4 --skip cohomology`.

    Recomputing the rank-40 constants takes minutes, so this seeds the
    cache with the reference constants instead; the series and catalog
    sections then do real work on them.  That the computed constants
    equal the reference ones is certified separately, in the
    acceptance gate.
    """
    from types import MappingProxyType

    from preproj.catalog import load_catalog
    from preproj.lie import LieData

    catalog = load_catalog(4)
    c = {}
    for key, entry in reference_tables(4)["brackets"].items():
        i, j = (int(x) for x in key.split(","))
        c[(i, j)] = MappingProxyType({int(k): v for k, v in entry.items()})
    fake = LieData(n=4, r=40,
                   degrees=tuple(e.dimv for e in catalog.entries),
                   c=MappingProxyType(c))
    save_lie_cache(fake, tmp_path / "brackets_a4.json")

    code, out, _ = run(capsys, "verify", "--quiver", "A4",
                       "--skip", "cohomology", "--cache", str(tmp_path))
    assert code == 0
    assert "FAIL" not in out
    assert "dims [40, 30, 20, 10, 4, 0]" in out


def test_unreadable_cache_schema_is_an_internal_error(capsys, tmp_path):
    path = tmp_path / "brackets_a2.json"
    path.write_text('{"schema": "something.else"}', encoding="utf-8")
    code, _, err = run(capsys, "series", "--quiver", "A2",
                       "--cache", str(tmp_path))
    assert code == 3
    assert "unsupported cache schema" in err
