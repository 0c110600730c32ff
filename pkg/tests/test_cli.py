from __future__ import annotations

from fractions import Fraction

import pytest

from bidisc.main import EXIT_OK, HANDLERS, EXIT_USAGE, EXIT_NOT_CERTIFIED, run, main, parse_config, validate_config
from bidisc.utils import load_pydantic_model
from bidisc.core.errors import UsageError, DivisionByIntervalContainingZero
from bidisc.core.models.reports import DensityReport, EntropyReport, VerificationReport
from bidisc.core.models.documents import PackingDocument
from bidisc.core.models.base_enums import Command


def test_parse_config_keeps_given_flags_only():
    config, verbose = parse_config(["-v", "density", "--x", "1/2", "--k", "8"])
    assert config.command is Command.DENSITY
    assert verbose
    assert config.options == {"x": "1/2", "k": 8.0, "format": "json"}


def test_malformed_flags_exit_with_usage_status():
    with pytest.raises(SystemExit) as error:
        main(["verify"])
    assert error.value.code == EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--x", "0.4", "0.6"],
        ["verify", "--x", "0.6", "0.4"],
        ["verify", "--x", "one", "1"],
        ["census", "--x", "0.5", "--in", "packing.json"],
        ["density"],
        ["tiling", "--x", "0.3"],
        ["construct", "--x", "3/2"],
        ["plot", "--kind", "alpha"],
        ["entropy", "--alpha", "1/2", "--k", "10"],
        ["verify", "--x", "0", "0.1", "--eta", "-1"],
        ["sweep", "--subdivisions", "1"],
        ["construct", "--x", "1/2", "--extent", "0"],
        ["density", "--x", "1/2", "--k", "-5"],
    ],
)
def test_usage_errors(argv):
    config, _ = parse_config(argv)
    with pytest.raises(UsageError):
        validate_config(config)
    assert main(argv) == EXIT_USAGE


def test_missing_input_file(tmp_path):
    assert main(["density", "--in", str(tmp_path / "missing.json")]) == EXIT_USAGE


def test_construct_then_measure(out_dir):
    packing = out_dir / "grid.json"
    report = out_dir / "density.json"
    assert main(["construct", "--x", "1/2", "--extent", "30", "--out", str(packing)]) == EXIT_OK
    assert len(load_pydantic_model(PackingDocument, packing).discs) == 61 * 61 + 60 * 60
    assert main(["density", "--in", str(packing), "--k", "50", "--out", str(report)]) == EXIT_OK
    result = load_pydantic_model(DensityReport, report)
    assert result.large_fraction == pytest.approx(0.5, abs=0.05)
    assert abs(result.relative_gap) < 2e-3


def test_construct_svg(out_dir):
    target = out_dir / "hexagonal.svg"
    assert main(["construct", "--x", "0", "--extent", "3", "--out", str(target), "--format", "svg"]) == EXIT_OK
    assert target.read_text(encoding="utf-8").lstrip().startswith("<?xml")


def test_density_curve_csv(out_dir):
    target = out_dir / "curve.csv"
    assert main(["plot", "--kind", "density_curve", "--out", str(target)]) == EXIT_OK
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,delta_lo,delta_hi"
    assert len(lines) == 1002


def test_entropy_report(out_dir):
    target = out_dir / "entropy.json"
    assert main(["entropy", "--alpha", "1/2", "--k", "10", "--dodecagon-density", "0.01", "--out", str(target)]) == EXIT_OK
    report = load_pydantic_model(EntropyReport, target)
    assert report.n == report.smallest_n == 6
    assert Fraction(report.beta) == Fraction(14, 15)
    assert report.squares == 67 + 12
    assert report.dodecagon_identity
    assert report.pattern_bound == 3


def test_entropy_with_a_block_that_cannot_reach_alpha():
    assert main(["entropy", "--alpha", "1/2", "--n", "4"]) == EXIT_USAGE


def test_density_offset_is_not_certified(out_dir):
    target = out_dir / "offset.json"
    assert main(["verify", "--x", "1/2", "51/100", "--delta-offset", "1e-3", "--out", str(target)]) == EXIT_NOT_CERTIFIED
    report = load_pydantic_model(VerificationReport, target)
    assert report.stage == "identity"
    assert report.delta_offset == 1e-3
    assert report.config is not None
    assert report.config.command is Command.VERIFY


def test_theme_is_applied_not_recorded():
    config, _ = parse_config(["--theme", "plain", "entropy", "--alpha", "1/2"])
    assert "theme" not in config.options
    with pytest.raises(SystemExit):
        parse_config(["--theme", "neon", "entropy", "--alpha", "1/2"])


def test_internal_errors_are_not_usage_errors(monkeypatch):
    def broken(_config):
        msg = "unexpected state"
        raise ValueError(msg)

    monkeypatch.setitem(HANDLERS, Command.ENTROPY, broken)
    config, _ = parse_config(["entropy", "--alpha", "1/2"])
    with pytest.raises(ValueError, match="unexpected state"):
        run(config)


def test_kernel_errors_surface_from_run(monkeypatch):
    def broken(_config):
        msg = "denominator [-1, 1] contains zero"
        raise DivisionByIntervalContainingZero(msg)

    monkeypatch.setitem(HANDLERS, Command.ENTROPY, broken)
    config, _ = parse_config(["entropy", "--alpha", "1/2"])
    with pytest.raises(DivisionByIntervalContainingZero):
        run(config)
