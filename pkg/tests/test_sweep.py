import io
from dataclasses import replace

import numpy as np
import pytest

from dcavity import errors, response, sweep
from dcavity.params import ReducedParams


def reduced(kappa=1.0, gamma_m=0.1, g=0.3, n=0.5):
    return ReducedParams(kappa=kappa, gamma_m=gamma_m, g=g, n=n)


class TestRunSweep:
    def test_transparency_crossing(self, device_broad):
        n_star = response.transparency_ratio(device_broad)
        spec = sweep.SweepSpec(
            base=device_broad,
            axis="x_over_kappa",
            start=-1.0,
            stop=1.0,
            points=101,
            overlays=({"n": n_star},),
            quantities=("re_epsT",),
        )
        result = sweep.run_sweep(spec)
        col = result.columns[f"re_epsT__n={n_star:g}"]
        mid = 50  # grid point at x = 0
        assert abs(col[mid]) < 1e-12
        assert col[mid - 1] > 0 or col[mid + 1] > 0

    def test_n_sweep_monotone_mechanical_response(self, device_narrow):
        spec = sweep.SweepSpec(
            base=device_narrow,
            axis="n",
            start=0.0,
            stop=1.0,
            points=201,
            quantities=("abs2_b",),
        )
        col = sweep.run_sweep(spec).columns["abs2_b"]
        assert np.all(np.diff(col) > 0)

    def test_n_sweep_output_boundaries(self, device_narrow):
        spec = sweep.SweepSpec(
            base=device_narrow,
            axis="n",
            start=0.0,
            stop=1.0,
            points=11,
            quantities=("abs2_outL", "abs2_outR"),
        )
        result = sweep.run_sweep(spec)
        assert result.columns["abs2_outL"][0] == pytest.approx(1.0, abs=3e-2)
        assert result.columns["abs2_outR"][0] == 0.0

    def test_singular_points_masked_not_dropped(self):
        r = reduced(kappa=1.0, gamma_m=0.0, g=0.5, n=1.0)  # divergent at x = 0
        spec = sweep.SweepSpec(
            base=r,
            axis="x_over_kappa",
            start=-0.1,
            stop=0.1,
            points=3,
            quantities=("re_epsT",),
        )
        result = sweep.run_sweep(spec)
        assert len(result.axis_values) == 3
        assert result.mask.tolist() == [False, True, False]
        assert np.isnan(result.columns["re_epsT"][1])

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            sweep.SweepSpec(base=reduced(), axis="bogus", start=0, stop=1, points=5)
        with pytest.raises(ValueError):
            sweep.SweepSpec(base=reduced(), axis="n", start=0, stop=1, points=1)
        with pytest.raises(ValueError):
            sweep.SweepSpec(
                base=reduced(), axis="n", start=0, stop=1, points=5, quantities=()
            )


class TestPresets:
    def test_fig2_layout(self):
        spec = sweep.figure_preset("fig2", points=11)
        assert spec.axis == "x_over_kappa"
        assert (spec.start, spec.stop) == (-1.0, 1.0)
        assert spec.overlays == ({"n": 0.0}, {"n": 0.7})
        assert spec.quantities == ("re_epsT",)
        assert spec.base.gamma_m == pytest.approx(2 * np.pi * 14.1e3)

    def test_fig4_layout(self):
        spec = sweep.figure_preset("fig4", points=11)
        assert [o["n"] for o in spec.overlays] == [0.0, 0.7, 0.8, 0.9]
        assert spec.quantities == ("abs2_b",)
        assert spec.base.gamma_m == pytest.approx(2 * np.pi * 141.0)

    def test_fig4_inset_peak_value(self):
        spec = sweep.figure_preset("fig4_inset", points=101)
        col = sweep.run_sweep(spec).columns["abs2_b"]
        assert 5.8e5 < np.nanmax(col) < 6.4e5

    def test_unknown_preset(self):
        with pytest.raises(errors.UnknownPreset, match="fig2"):
            sweep.figure_preset("fig7")

    @pytest.mark.parametrize("name", ["fig4", "fig5", "fig6"])
    def test_peaks_at_zero_offset(self, name):
        result = sweep.run_sweep(sweep.figure_preset(name, points=201))
        mid = np.argmin(np.abs(result.axis_values))
        for name_, col in result.columns.items():
            if name_.endswith("n=0"):
                # no amplification at n = 0: the left output dips instead of
                # peaking and the right output is identically zero
                continue
            assert col[mid] == np.nanmax(col)


def test_x_sweep_symmetry(device_narrow):
    spec = sweep.SweepSpec(
        base=device_narrow,
        axis="x_over_kappa",
        start=-1.0,
        stop=1.0,
        points=101,
        overlays=({"n": 0.6},),
        quantities=("re_epsT", "im_epsT"),
    )
    result = sweep.run_sweep(spec)
    re = result.columns["re_epsT__n=0.6"]
    im = result.columns["im_epsT__n=0.6"]
    assert np.max(np.abs(re - re[::-1])) < 1e-10 * np.max(np.abs(re))
    assert np.max(np.abs(im + im[::-1])) < 1e-10 * np.max(np.abs(im))


class TestCsv:
    def test_two_point_sweep_three_lines(self):
        spec = sweep.SweepSpec(
            base=reduced(), axis="n", start=0.0, stop=0.5, points=2,
            quantities=("re_epsT",),
        )
        buf = io.StringIO()
        sweep.emit_csv(sweep.run_sweep(spec), buf)
        lines = buf.getvalue().strip().splitlines()
        assert len(lines) == 3
        assert lines[0] == "n,re_epsT"

    def test_masked_cell_is_empty_but_row_kept(self):
        r = reduced(kappa=1.0, gamma_m=0.0, g=0.5, n=1.0)
        spec = sweep.SweepSpec(
            base=r, axis="x_over_kappa", start=-0.1, stop=0.1, points=3,
            quantities=("re_epsT",),
        )
        buf = io.StringIO()
        sweep.emit_csv(sweep.run_sweep(spec), buf)
        lines = buf.getvalue().strip().splitlines()
        assert len(lines) == 4
        assert lines[2].endswith(",")

    def test_roundtrip(self, device_narrow, tmp_path):
        spec = sweep.SweepSpec(
            base=device_narrow,
            axis="x_over_kappa",
            start=-1.0,
            stop=1.0,
            points=17,
            overlays=({"n": 0.0}, {"n": 0.9}),
            quantities=("re_epsT", "abs2_b"),
        )
        result = sweep.run_sweep(spec)
        path = tmp_path / "roundtrip.csv"
        sweep.emit_csv(result, path)
        assert sweep.read_csv(path) == result

    def test_roundtrip_with_mask(self, tmp_path):
        r = reduced(kappa=1.0, gamma_m=0.0, g=0.5, n=1.0)
        spec = sweep.SweepSpec(
            base=r, axis="x_over_kappa", start=-0.1, stop=0.1, points=5,
            quantities=("re_epsT", "im_epsT"),
        )
        result = sweep.run_sweep(spec)
        path = tmp_path / "masked.csv"
        sweep.emit_csv(result, path)
        assert sweep.read_csv(path) == result
