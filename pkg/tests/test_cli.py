import numpy as np
import pytest

from qesd.cli import CSV_HEADER, main, parse_axis


def read_rows(path):
    lines = path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    rows = []
    for line in lines[1:]:
        cols = line.split(",")
        rows.append({
            "family": cols[0],
            "alpha": float(cols[1]),
            "r": float(cols[2]),
            "p": float(cols[3]),
            "c_eigen": float(cols[4]) if cols[4] else None,
            "c_xstate": float(cols[5]) if cols[5] else None,
            "c_closed": float(cols[6]) if cols[6] else None,
            "raw": float(cols[7]),
            "deviation": float(cols[8]),
        })
    return rows


class TestParseAxis:
    def test_comma_list(self):
        assert parse_axis("0.1,0.2") == [0.1, 0.2]

    def test_grid(self):
        assert parse_axis("0:1:3") == [0.0, 0.5, 1.0]

    def test_pi_tokens(self):
        assert parse_axis("pi/4")[0] == pytest.approx(np.pi / 4)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            parse_axis(" , ")


class TestSweep:
    def test_bell_inertial_curve(self, tmp_path):
        out = tmp_path / "bell.csv"
        code = main(["sweep", "--family", "theta1", "--alpha", str(1 / np.sqrt(2)),
                     "--r", "0", "--p", "0:1:21", "--methods", "closed",
                     "--out", str(out)])
        assert code == 0
        for row in read_rows(out):
            assert row["c_closed"] == pytest.approx((1 - row["p"]) ** 2, abs=1e-12)
            assert row["c_eigen"] is None and row["c_xstate"] is None

    def test_theta2_same_curve_for_partner_alphas(self, tmp_path):
        out = tmp_path / "t2.csv"
        assert main(["sweep", "--family", "theta2", "--alpha", "0.6,0.8",
                     "--r", "0", "--p", "0:1:11", "--methods", "closed",
                     "--out", str(out)]) == 0
        rows = read_rows(out)
        by_alpha = {}
        for row in rows:
            by_alpha.setdefault(row["alpha"], []).append(row["c_closed"])
        curves = list(by_alpha.values())
        assert np.allclose(curves[0], curves[1], atol=1e-14)

    def test_cross_method_deviation_small(self, tmp_path):
        out = tmp_path / "dev.csv"
        assert main(["sweep", "--alpha", "0.3,0.8", "--r", "0,pi/6", "--p", "0:1:5",
                     "--methods", "eigen,closed", "--out", str(out)]) == 0
        for row in read_rows(out):
            assert row["deviation"] <= 1e-10

    def test_row_order_canonical(self, tmp_path):
        out = tmp_path / "ord.csv"
        assert main(["sweep", "--alpha", "0.8,0.3", "--r", "pi/6,0", "--p", "0.5,0",
                     "--methods", "closed", "--out", str(out)]) == 0
        rows = read_rows(out)
        keys = [(r["family"], r["alpha"], r["r"], r["p"]) for r in rows]
        assert keys == sorted(keys)

    def test_determinism_across_runs_and_jobs(self, tmp_path):
        args = ["sweep", "--alpha", "0.3,0.7", "--r", "0,pi/8", "--p", "0:1:5"]
        outs = []
        for name, jobs in (("a.csv", "1"), ("b.csv", "1"), ("c.csv", "2")):
            out = tmp_path / name
            assert main(args + ["--out", str(out), "--jobs", jobs]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1] == outs[2]

    def test_config_file_with_flag_precedence(self, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("family=theta1\nalpha=0.5\nr=0\np=0,1\nmethods=closed\n")
        out = tmp_path / "cfg.csv"
        assert main(["sweep", "--config", str(cfg), "--p", "0.25",
                     "--out", str(out)]) == 0
        rows = read_rows(out)
        assert len(rows) == 1
        assert rows[0]["p"] == 0.25  # flag overrides config
        assert rows[0]["family"] == "theta1"

    def test_usage_error_exit_code(self, tmp_path):
        assert main(["sweep", "--alpha", "2.0", "--out", str(tmp_path / "x.csv")]) == 2

    def test_io_error_exit_code(self, tmp_path):
        missing = tmp_path / "no" / "such" / "dir" / "out.csv"
        assert main(["sweep", "--alpha", "0.5", "--r", "0", "--p", "0",
                     "--methods", "closed", "--out", str(missing)]) == 3


class TestFig1:
    def test_panels(self, tmp_path):
        assert main(["fig1", "--out", str(tmp_path)]) == 0
        files = sorted(f.name for f in tmp_path.glob("fig1_*.csv"))
        assert len(files) == 6
        t1_r0 = (tmp_path / "fig1_theta1_r0.csv").read_text().splitlines()
        t2_r0 = (tmp_path / "fig1_theta2_r0.csv").read_text().splitlines()
        header = t1_r0[0].split(",")
        assert header[0] == "p"
        # alpha=0.9 column of the first family hits zero before P=1
        col9 = header.index([h for h in header if h.startswith("c_alpha_0.9")][0])
        vals1 = [list(map(float, line.split(","))) for line in t1_r0[1:]]
        assert any(v[col9] == 0.0 and v[0] < 1.0 for v in vals1)
        # no second-family inertial curve touches zero before P=1
        vals2 = [list(map(float, line.split(","))) for line in t2_r0[1:]]
        for v in vals2:
            if v[0] < 1.0:
                assert all(c > 0.0 for c in v[1:])
        # both families share starting values at P=0
        assert vals1[0] == vals2[0]


class TestFig2:
    def test_surfaces(self, tmp_path):
        assert main(["fig2", "--out", str(tmp_path)]) == 0
        from qesd.entanglement import concurrence_closed
        from qesd.states import Family
        for fam in Family:
            lines = (tmp_path / f"fig2_{fam.value}.csv").read_text().splitlines()
            assert lines[0] == "r,p,alpha_boundary"
            assert len(lines) == 1 + 50 * 50
            for line in lines[1:]:
                r, p, alpha = map(float, line.split(","))
                if fam is Family.THETA2 and r == 0.0:
                    assert alpha == 1.0
                if alpha < 1.0:
                    assert abs(concurrence_closed(fam, alpha, r, p).raw) <= 1e-10

    def test_theta1_inertial_full_decay_corner(self, tmp_path):
        assert main(["fig2", "--out", str(tmp_path)]) == 0
        lines = (tmp_path / "fig2_theta1.csv").read_text().splitlines()[1:]
        corner = [line for line in lines if line.startswith("0,")][-1]
        r, p, alpha = map(float, corner.split(","))
        assert p == 1.0
        assert alpha == pytest.approx(1 / np.sqrt(2), abs=1e-14)


class TestVerify:
    def test_passes_on_fresh_build(self, capsys):
        assert main(["verify"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert out.count("PASS") == 10
