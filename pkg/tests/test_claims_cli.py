import subprocess
import sys

import pytest

from wtc.claims import (
    MANIFEST,
    REGISTRY,
    run_claim,
    sweep,
)
from wtc.errors import CapExceededError, ParseError, UnknownClaimError
from wtc.fileformat import load_measure
from wtc.report import CSV_HEADER, parse_csv, plot_svg, rows_to_csv

EXPECTED_IDS = {
    "ap-not-t1", "t1-not-t2", "t2-equiv-t1", "doubling-ap-equiv",
    "cp-not-ainfty", "cp-smalldoubling-ainfty", "sawyer-ainfty",
    "ainfty-pivotal", "pivotal-not-t1", "energy-le-pivotal",
    "smalldoubling-pivotal", "gks-afrac-doubling", "doubling-energy-floor",
    "powerweight-ap",
}


class TestRegistry:
    def test_manifest_complete(self):
        assert set(MANIFEST) == EXPECTED_IDS

    def test_probe_registered_but_off_manifest(self):
        assert "dual-pivotal-probe" in REGISTRY
        assert "dual-pivotal-probe" not in MANIFEST

    def test_unknown_claim(self):
        with pytest.raises(UnknownClaimError):
            run_claim("no-such-claim")

    def test_scale_cap(self):
        with pytest.raises(CapExceededError):
            run_claim("t1-not-t2", scale=100)

    def test_energy_le_pivotal_passes(self):
        rep = run_claim("energy-le-pivotal", scale=5)
        assert rep.passed
        assert all(r.value <= 0.5 for r in rep.rows)

    def test_probe_is_inconclusive(self):
        rep = run_claim("dual-pivotal-probe", scale=4)
        assert rep.passed
        assert {r.verdict for r in rep.rows} == {"INCONCLUSIVE"}

    def test_report_carries_witnesses(self):
        rep = run_claim("t1-not-t2", scale=4)
        assert any(name == "t1_sq_sup" for (_, name) in rep.witnesses)


class TestSweep:
    def test_empty_range_is_header_only(self):
        assert rows_to_csv(sweep("energy-le-pivotal", [])) == \
            ",".join(CSV_HEADER) + "\n"

    def test_row_block_per_value(self):
        rows = sweep("dual-pivotal-probe", [4, 8])
        assert [r.param for r in rows] == [4, 4, 4, 8, 8, 8]

    def test_determinism(self):
        a = rows_to_csv(sweep("energy-le-pivotal", [5, 10]))
        b = rows_to_csv(sweep("energy-le-pivotal", [5, 10]))
        assert a == b


class TestCsv:
    def test_round_trip(self):
        text = rows_to_csv(sweep("energy-le-pivotal", [5]))
        rows = parse_csv(text)
        assert rows[0].claim == "energy-le-pivotal"
        assert rows[0].bound == 0.5
        assert rows[0].verdict == "PASS"

    def test_bad_header(self):
        with pytest.raises(ParseError):
            parse_csv("a,b,c\n1,2,3\n")

    def test_bad_field_count(self):
        with pytest.raises(ParseError) as e:
            parse_csv(",".join(CSV_HEADER) + "\nx,1,s,2\n")
        assert "line 2" in str(e.value)

    def test_bad_number(self):
        with pytest.raises(ParseError):
            parse_csv(",".join(CSV_HEADER) + "\nx,1,s,notanumber,,PASS\n")


class TestSvg:
    def test_deterministic_bytes(self):
        rows = parse_csv(rows_to_csv(sweep("energy-le-pivotal", [5, 10, 15])))
        assert plot_svg(rows) == plot_svg(rows)

    def test_single_point_chart(self):
        rows = parse_csv(",".join(CSV_HEADER) + "\nc,1,s,2.5,,NA\n")
        svg = plot_svg(rows)
        assert svg.startswith('<?xml version="1.0"')
        assert "<circle" in svg

    def test_log_scale_drops_nonpositive(self):
        rows = parse_csv(",".join(CSV_HEADER)
                         + "\nc,1,s,0,,NA\nc,2,s,10,,NA\n")
        assert "circle" in plot_svg(rows, log_scale=True)

    def test_no_plottable_rows(self):
        rows = parse_csv(",".join(CSV_HEADER) + "\nc,1,s,inf,,NA\n")
        with pytest.raises(ParseError):
            plot_svg(rows)


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "wtc.cli", *argv],
                          capture_output=True, text=True)


class TestCli:
    def test_construct_eval_round_trip(self, tmp_path):
        out = tmp_path / "m.txt"
        r = _cli("construct", "gks-cascade", "--param", "delta=1/4",
                 "--param", "depth=3", "--out", str(out))
        assert r.returncode == 0
        m = load_measure(out)
        assert m.total_mass() == 1
        r = _cli("eval", "poisson", "--omega", str(out), "--interval", "0,1")
        assert r.returncode == 0
        assert float(r.stdout) == pytest.approx(1.0)

    def test_sup_command(self, tmp_path):
        om = tmp_path / "om.txt"
        sg = tmp_path / "sg.txt"
        _cli("construct", "lebesgue", "--param", "hi=2", "--out", str(om))
        _cli("construct", "lebesgue", "--param", "hi=2", "--out", str(sg))
        r = _cli("sup", "classical", "--omega", str(om), "--sigma", str(sg),
                 "--window", "0,2", "--levels=-2..1", "--base", "2")
        assert r.returncode == 0
        assert float(r.stdout.split()[0]) == pytest.approx(1.0)

    def test_verify_pass_exit_zero(self, tmp_path):
        out = tmp_path / "rep.csv"
        r = _cli("verify", "energy-le-pivotal", "--scale", "5",
                 "--out", str(out))
        assert r.returncode == 0
        assert out.read_text().splitlines()[0] == ",".join(CSV_HEADER)

    def test_verify_unknown_exit_two(self):
        assert _cli("verify", "no-such-claim").returncode == 2

    def test_usage_error_exit_two(self):
        assert _cli("eval", "classical", "--interval", "0,1").returncode == 2
        assert _cli("sup", "classical", "--omega", "x", "--window", "0,1",
                    "--levels", "zz").returncode == 2

    def test_sweep_and_plot(self, tmp_path):
        csv_path = tmp_path / "s.csv"
        svg_path = tmp_path / "s.svg"
        r = _cli("sweep", "powerweight-ap",
                 "--param", "alphaExp=0..1/2..1/2", "--out", str(csv_path))
        assert r.returncode == 0
        rows = parse_csv(csv_path.read_text())
        assert {row.verdict for row in rows} <= {"FINITE", "PASS"}
        r = _cli("plot", str(csv_path), "--out", str(svg_path))
        assert r.returncode == 0
        first = svg_path.read_bytes()
        _cli("plot", str(csv_path), "--out", str(svg_path))
        assert svg_path.read_bytes() == first

    def test_sweep_wrong_param_name(self):
        r = _cli("sweep", "powerweight-ap", "--param", "beta=0..1")
        assert r.returncode == 2

    def test_plot_malformed_csv(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("not,a,report\n")
        r = _cli("plot", str(bad), "--out", str(tmp_path / "x.svg"))
        assert r.returncode == 2
