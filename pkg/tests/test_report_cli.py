import json

import pytest

import frlab.runners
from frlab import parse_csv, render, run_figures, run_norms, run_shatter, run_table1, run_table2
from frlab.cli import main
from frlab.errors import ParsevalError
from frlab.report import ReportDoc, to_csv, to_json, to_markdown


def docs_for_roundtrip():
    return [
        run_table1([100, 300]),
        run_table2(1000, seed=1),
        run_figures([100, 1000], seed=1),
        run_shatter(10, S_size=2, threshold=0.7, trials=8, seed=3),
        run_norms("mobius", 64),
    ]


def test_csv_round_trip_is_exact():
    for doc in docs_for_roundtrip():
        text = to_csv(doc)
        parsed = parse_csv(text)
        assert parsed.kind == doc.kind
        assert to_csv(parsed) == text  # byte-identical after a round trip


def test_csv_uses_lf_and_fixed_decimals():
    text = to_csv(run_table1([100]))
    assert "\r" not in text
    data = [line for line in text.splitlines() if not line.startswith("#")]
    assert data[0] == "R,sf_density,l2_over_sqrtR,l1_over_sqrtR,fourier_ratio,linf_over_sqrtR"
    cells = data[1].split(",")
    assert cells[0] == "100"
    assert all("." in c for c in cells[1:])
    assert len(cells[1].split(".")[1]) == 4
    assert len(cells[5].split(".")[1]) == 2  # sup-norm column keeps 2 decimals


def test_table1_single_term_row_is_trivial_in_modulus_mode():
    doc = run_table1([1], realization="modulus")
    row = doc.rows[0]
    assert row["R"] == 1
    for key in ("sf_density", "l2_over_sqrtR", "l1_over_sqrtR", "fourier_ratio"):
        assert row[key] == pytest.approx(1.0, abs=1e-12)
    assert row["linf_over_sqrtR"] == pytest.approx(1.0, abs=1e-12)


def test_table2_schema_and_labels():
    doc = run_table2(100, seed=1)
    assert [row["label"] for row in doc.rows] == list(frlab.runners.TABLE2_LABELS)
    text = to_csv(doc)
    assert "label,fourier_ratio,l2_over_sqrtR" in text


def test_figures_series_layout():
    doc = run_figures([100, 1000, 3000], seed=1)
    series = [row["series"] for row in doc.rows]
    assert series.count("fr_curve") == 3
    assert series.count("deviation") == 2  # only R >= 1000
    assert series.count("bars") == 5
    assert series.count("benchmark") == 1
    bench = [row for row in doc.rows if row["series"] == "benchmark"][0]
    assert bench["y"] == pytest.approx(frlab.runners.GAUSSIAN_BENCHMARK)
    curve = {row["x"]: row["y"] for row in doc.rows if row["series"] == "fr_curve"}
    assert abs(curve[1000] - 0.7790) <= 0.002
    for row in doc.rows:
        if row["series"] == "deviation":
            expected = abs(curve[row["x"]] - frlab.runners.GAUSSIAN_BENCHMARK)
            assert row["y"] == expected


def test_shatter_doc_carries_verdict():
    doc = run_shatter(10, S_size=2, threshold=1.01, trials=4, seed=1)
    assert doc.meta["verdict"] == "not_shattered"
    payload = json.loads(to_json(doc))
    assert payload["meta"]["verdict"] == "not_shattered"
    assert "# meta.verdict=not_shattered" in to_csv(doc)


def test_json_keeps_full_precision():
    doc = run_table1([100])
    payload = json.loads(to_json(doc))
    row = payload["rows"][0]
    assert row["fourier_ratio"] != round(row["fourier_ratio"], 4)
    assert row["R"] == 100


def test_markdown_renders_table():
    text = to_markdown(run_table1([100]))
    assert text.splitlines()[1].startswith("| R | sf_density |")
    assert "| 100 | 0.6100 |" in text


def test_render_dispatch():
    doc = run_table1([100], fmt="json")
    assert render(doc).startswith("{")
    assert render(run_table1([100], fmt="markdown")).startswith("<!--")


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        ReportDoc(kind="table9", rows=(), config_echo={})


def test_usage_validation():
    with pytest.raises(ValueError):
        run_table1([])
    with pytest.raises(ValueError):
        run_table1([0])
    with pytest.raises(ValueError):
        run_figures([])
    with pytest.raises(ValueError):
        run_shatter(10, S_size=99, threshold=0.5, trials=4)


def test_parallel_rows_are_byte_identical():
    serial = render(run_table1([100, 300, 1000], parallel=1))
    threaded = render(run_table1([100, 300, 1000], parallel=3))
    assert serial == threaded


def test_rerun_from_config_echo_is_byte_identical():
    doc = run_table1([100, 300], oversample=4)
    echo = doc.config_echo
    again = run_table1([int(r) for r in echo["rlist"].split(",")],
                       oversample=int(echo["oversample"]),
                       fmt=echo["format"], max_bytes=int(echo["max_bytes"]))
    assert render(again) == render(doc)


def test_cli_stdout_and_file_agree(tmp_path, capsys):
    assert main(["table1", "--rlist", "100"]) == 0
    stdout_text = capsys.readouterr().out
    out = tmp_path / "t1.csv"
    assert main(["table1", "--rlist", "100", "--out", str(out)]) == 0
    assert out.read_text() == stdout_text


def test_cli_exit_codes(tmp_path, capsys, monkeypatch):
    assert main(["table1", "--rlist", ""]) == 2
    assert main(["table1", "--rlist", "1000000", "--max-bytes", "1000"]) == 3
    capsys.readouterr()

    def boom(*args, **kwargs):
        raise ParsevalError("synthetic drift")

    monkeypatch.setattr(frlab.runners, "fourier_ratio", boom)
    assert main(["table1", "--rlist", "100"]) == 4
    with pytest.raises(SystemExit) as exc:
        main(["analyze-nothing"])
    assert exc.value.code == 2


def test_cli_env_var_budget(monkeypatch, capsys):
    monkeypatch.setenv("FRLAB_MAX_BYTES", "1000")
    assert main(["table1", "--rlist", "1000000"]) == 3
    capsys.readouterr()
    # explicit flag wins over the environment
    assert main(["table1", "--rlist", "1000", "--max-bytes", "100000000"]) == 0


def test_cli_resource_error_names_offending_R(capsys):
    main(["table1", "--rlist", "100,1000000", "--max-bytes", "1000000"])
    err = capsys.readouterr().err
    assert "R=1000000" in err


def test_cli_table2_and_norms(capsys):
    assert main(["table2", "--rlist", "1000"]) == 0
    out = capsys.readouterr().out
    assert "mobius" in out and "squarefree_centered" in out
    assert main(["norms", "--kind", "liouville", "--rlist", "512"]) == 0
    out = capsys.readouterr().out
    assert "l1_error_indicator" in out
