import csv
import math

import pytest

from hawking_qfi.cli import interior_peaks, main, parse_grid, parse_number, read_config
from hawking_qfi.sweep import (
    DEGENERATE,
    HEADER,
    OK,
    REJECTED,
    ConfigError,
    Grid,
    SweepConfig,
    evaluate_point,
    rows_to_csv,
    run_sweep,
)
from hawking_qfi.verify import EXPRESSIONS, run_verify

FIG_BATH = {"Q": 0.5, "gamma0": 0.5, "omega": 5.0}
HEADER_LINE = ",".join(HEADER)


def read_rows(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def test_header_is_fixed():
    assert HEADER_LINE == ("channel,theta,phi,T_C,T_H,r,Phi,Q,gamma0,omega,lambda,mu,v,"
                           "qfi_theta_closed,qfi_theta_numeric,qfi_phi_closed,qfi_phi_numeric,status,note")


def test_parse_numbers_and_grids():
    assert parse_number("pi/4") == pytest.approx(math.pi / 4)
    assert parse_number("3*pi/4") == pytest.approx(3 * math.pi / 4)
    assert parse_number("-pi") == pytest.approx(-math.pi)
    assert parse_number("2.5e-1") == 0.25
    with pytest.raises(ConfigError):
        parse_number("two")
    g = parse_grid("theta", "0:pi/2:3")
    assert g == Grid("theta", 0.0, math.pi / 2, 3)
    with pytest.raises(ConfigError):
        parse_grid("theta", "0:1")


@pytest.mark.parametrize("cfg, fragment", [
    (SweepConfig("ad"), "lambda"),
    (SweepConfig("ad", fixed={"lambda": 0.1, "mu": 0.1}), "mu"),
    (SweepConfig("gad", fixed={"r": 1.0}), "r"),
    (SweepConfig("sgad", fixed={"lambda": 0.1}), "mu"),
    (SweepConfig("sgad", fixed={"Q": 1.0}), "Q"),
    (SweepConfig("sgad", fixed={"T_H": 0.0}), "T_H"),
    (SweepConfig("sgad", vary=(Grid("T_C", 1, 2, 1),)), "count"),
    (SweepConfig("sgad", vary=(Grid("T_C", 1, 2, 2), Grid("T_C", 1, 2, 2))), "twice"),
    (SweepConfig("sgad", vary=(Grid("T_C", 1, 2, 2),), fixed={"T_C": 1.0}), "both"),
    (SweepConfig("sgad", fixed={"omega2": 1.0}), "omega2"),
    (SweepConfig("xyz"), "channel"),
])
def test_config_validation_names_the_parameter(cfg, fragment):
    with pytest.raises(ConfigError, match=fragment):
        cfg.validate()


def test_grid_order_is_lexicographic():
    cfg = SweepConfig("sgad", vary=(Grid("T_C", 1, 2, 2), Grid("T_H", 1, 3, 3)), fixed=FIG_BATH)
    points = [(p["T_C"], p["T_H"]) for p in cfg.grid()]
    assert points == [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)]
    assert cfg.size == 6


def test_rejected_rows_are_kept_with_the_coefficient_name():
    rows = run_sweep(SweepConfig("sgad", vary=(Grid("T_C", 0.5, 5, 3),)))
    assert len(rows) == 3
    assert all(r.status == REJECTED and r.note.startswith("lambda") for r in rows)
    assert all(math.isnan(r.qfi_theta_numeric) for r in rows)


def test_ok_rows_are_finite_and_non_negative():
    cfg = SweepConfig("sgad", vary=(Grid("theta", 0, math.pi, 5), Grid("T_C", 0.5, 5, 3)),
                      fixed={**FIG_BATH, "r": 1.0})
    for r in run_sweep(cfg):
        assert r.status == OK
        for v in (r.qfi_theta_closed, r.qfi_theta_numeric, r.qfi_phi_closed, r.qfi_phi_numeric):
            assert math.isfinite(v) and v >= 0
        assert r.qfi_theta_numeric == pytest.approx(r.qfi_theta_closed, abs=1e-8)
        assert r.qfi_phi_numeric == pytest.approx(r.qfi_phi_closed, abs=1e-8)


def test_non_real_squeezing_angle_is_rejected_per_point():
    # Phi only matters through mu, which needs squeezing
    cfg = SweepConfig("sgad", vary=(Grid("Phi", 0, 0.3, 2),), fixed={**FIG_BATH, "r": 1.0})
    rows = run_sweep(cfg)
    assert rows[0].status == OK
    assert rows[1].status == REJECTED and rows[1].note.startswith("Phi")


def test_spectral_method_marks_degenerate_points():
    # theta = 0 and omega / T_H -> 0 split the state evenly: two equal eigenvalues of 1/2
    cfg = SweepConfig("ad", fixed={"lambda": 0.0, "theta": 0.0, "omega": 1e-12}, method="spectral")
    row = evaluate_point(cfg.validate(), next(cfg.grid()))
    assert row.status == DEGENERATE
    assert math.isnan(row.qfi_theta_numeric) and row.qfi_theta_closed == pytest.approx(4.0)
    cfg = SweepConfig("ad", fixed={"lambda": 0.3, "theta": 0.6}, method="spectral")
    row = evaluate_point(cfg.validate(), next(cfg.grid()))
    assert row.status == OK and row.qfi_theta_numeric == pytest.approx(row.qfi_theta_closed, abs=1e-7)


def test_ad_eval_point():
    cfg = SweepConfig("ad", fixed={"lambda": 0.0, "theta": math.pi / 4}).validate()
    row = evaluate_point(cfg, next(cfg.grid()))
    assert row.qfi_phi_closed == pytest.approx(0.84464, abs=1e-5)
    assert row.qfi_phi_numeric == pytest.approx(row.qfi_phi_closed, abs=1e-6)
    assert row.params["Q"] == 1.0


def test_workers_do_not_change_output():
    cfg = SweepConfig("gad", vary=(Grid("T_C", 0.5, 5, 6), Grid("T_H", 0.5, 5, 4)), fixed=FIG_BATH)
    serial = rows_to_csv(run_sweep(cfg))
    parallel = rows_to_csv(run_sweep(SweepConfig(**{**cfg.__dict__, "workers": 3})))
    assert serial == parallel


def test_cli_sweep_is_byte_identical(tmp_path, capsys):
    outs = []
    for k in range(2):
        path = tmp_path / f"s{k}.csv"
        code = main(["sweep", "--channel", "sgad", "--set", "Q=0.5", "--set", "gamma0=0.5", "--set", "omega=5",
                     "--vary", "T_C=0.5:5:4", "--vary", "theta=0:pi/2:3", "--out", str(path)])
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    lines = outs[0].decode().splitlines()
    assert lines[0] == HEADER_LINE and len(lines) == 13


def test_cli_eval_prints_text_and_one_csv_line(capsys):
    code = main(["eval", "--channel", "ad", "--set", "lambda=0", "--set", "theta=pi/4"])
    out = capsys.readouterr().out.strip().splitlines()
    assert code == 0
    assert out[-1].startswith("ad,0.785398163397,")
    assert any(line.startswith("qfi_phi_closed") and "0.844637596503" in line for line in out)


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["eval", "--channel", "ad"]) == 1
    assert main(["sweep", "--set", "theta=0"]) == 1
    assert main(["sweep", "--vary", "T_C=1:2:3", "--out", str(tmp_path / "missing" / "x.csv")]) == 1
    with pytest.raises(SystemExit) as info:
        main(["eval", "--channel", "bogus"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["eval", "--vary", "T_C=1:2:2"])
    assert info.value.code == 1


def test_cli_numeric_failure_exit_code(monkeypatch, capsys):
    from hawking_qfi import sweep
    from hawking_qfi.errors import ConvergenceError

    def boom(*args, **kwargs):
        raise ConvergenceError("no convergence", matrix=None)

    monkeypatch.setattr(sweep, "qfi_sld", boom)
    assert main(["eval", "--channel", "ad", "--set", "lambda=0.2"]) == 3


def test_config_file_and_flag_precedence(tmp_path, capsys):
    conf = tmp_path / "run.conf"
    conf.write_text("# bath\nchannel = gad\nQ = 0.5\ngamma0 = 0.5\nomega = 5   # frequency\n"
                    "T_C = 0.5:5:3\ntheta = pi/4\n", encoding="utf-8")
    options, params = read_config(str(conf))
    assert options == {"channel": "gad"} and params["T_C"] == "0.5:5:3"
    out = tmp_path / "o.csv"
    assert main(["sweep", "--config", str(conf), "--set", "theta=0", "--out", str(out)]) == 0
    rows = read_rows(out)
    assert len(rows) == 3 and {r["theta"] for r in rows} == {"0"} and {r["channel"] for r in rows} == {"gad"}
    bad = tmp_path / "bad.conf"
    bad.write_text("frobnicate = 1\n", encoding="utf-8")
    assert main(["sweep", "--config", str(bad)]) == 1


def test_figure_recipes_complete(tmp_path, capsys):
    for n in (3, 4, 5, 6, 7, 8, 9):
        path = tmp_path / f"fig{n}.csv"
        assert main(["figure", str(n), "--out", str(path)]) == 0
        rows = read_rows(path)
        assert rows and all(r["status"] == OK for r in rows), n
        for r in rows:
            for key in HEADER[:-1]:
                assert r[key] != "" and r[key] != "nan", (n, key)
    out = capsys.readouterr().out
    assert "figure 6 recipe" in out and "interior maxima" in out


def test_figure_three_is_flat_in_hawking_temperature(tmp_path, capsys):
    path = tmp_path / "f3.csv"
    main(["figure", "3", "--out", str(path)])
    by_tc = {}
    for r in read_rows(path):
        by_tc.setdefault(r["T_C"], []).append(float(r["qfi_theta_numeric"]))
    assert len(by_tc) == 50
    for values in by_tc.values():
        assert len(values) == 50 and max(values) - min(values) <= 1e-8


def test_figure_nine_starts_at_the_pure_state_value(tmp_path, capsys):
    path = tmp_path / "f9.csv"
    main(["figure", "9", "--out", str(path)])
    start = [float(r["qfi_theta_numeric"]) for r in read_rows(path) if float(r["lambda"]) == 0.0]
    assert len(start) == 5
    assert max(start) - min(start) <= 1e-8 and start[0] == pytest.approx(4.0, abs=1e-8)


def test_interior_peaks():
    assert interior_peaks([0, 1, 2, 3, 4], [0, 2, 1, 3, 0]) == [1, 3]
    assert interior_peaks([0, 1, 2], [1, 1, 1]) == []


def test_verify_report_has_every_expression_and_is_deterministic(tmp_path, capsys):
    report = run_verify(points=20)
    text = report.text()
    verdicts = [line.split() for line in text.splitlines() if line.startswith(("PASS", "FAIL"))]
    for e in EXPRESSIONS:
        # once on the random grid, once in the identity-channel block
        assert sum(f[1] == e.label and f[2].startswith("max_dev") for f in verdicts) == 2
    assert run_verify(points=20).text() == text
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    code_a = main(["verify", "--points", "20", "--out", str(a)])
    code_b = main(["verify", "--points", "20", "--out", str(b)])
    assert code_a == code_b == 2  # the printed grouping fails
    assert a.read_bytes() == b.read_bytes()
