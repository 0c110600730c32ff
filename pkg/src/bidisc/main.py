# ♥♥─── Command Line ─────────────────────────────────────────────────────────────
"""``bidisc`` command: certify, construct, measure and plot binary disc packings.

Exit status is 0 on success, 1 when a verification does not certify and 2 on
usage or file errors.
"""

from __future__ import annotations

from typing import Any
from pathlib import Path
from fractions import Fraction
import argparse

from bidisc.custom_logger import log, setup_logging
from bidisc.core.errors import (
    OutOfRange,
    UsageError,
    WordError,
    PackingError,
    DocumentError,
    StraddlesHalf,
    NonpositiveEta,
    ConstructionError,
)
from bidisc.core.interval import Interval
from bidisc.config.app_config import get_settings
from bidisc.config.app_config_model import VerificationSettings
from bidisc.core.models.reports import RunConfig, CensusReport, SweepReport, DensityReport, EntropyReport
from bidisc.core.models.documents import TilingDocument, PackingDocument
from bidisc.core.models.base_enums import Command, PlotKind, OutputFormat
from bidisc.core.models.base_model import IntervalRecord

from . import utils
from .core import certifier, constructions
from .core.packing import Packing, neighborhood_census
from .core.geometry import delta_max
from .ui.console import palettes, switch_theme
from .ui.report_view import show, sweep_view, census_view, density_view, entropy_view, verification_view


EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_USAGE = 2
POSITIVE_FLAGS = ("extent", "k", "window", "workers", "depth", "epsilon_tight", "dodecagon_density")
# Refusals of the given arguments or files; anything else is a defect.
INPUT_ERRORS = (UsageError, DocumentError, OutOfRange, WordError, PackingError, ConstructionError, StraddlesHalf, NonpositiveEta, OSError)


# ─── Parser ────────────────────────────────────────────────────────────────────
def _add_out(p: argparse.ArgumentParser, *, formats: tuple[OutputFormat, ...] = (OutputFormat.JSON,)) -> None:
    p.add_argument("--out", help="Output file or directory")
    p.add_argument("--format", choices=[f.value for f in formats], default=formats[0].value, help="Output format")


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", help="Packing JSON to read instead of constructing one")
    p.add_argument("--x", help="Proportion of large discs of the constructed packing")
    p.add_argument("--extent", type=int, help="Size parameter of the construction")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bidisc", description="Densest binary disc packings with radius ratio sqrt(2)-1.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug messages on the console")
    parser.add_argument("--theme", choices=palettes.get_available_themes(), help="Console palette")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_verification(p: argparse.ArgumentParser) -> None:
        p.add_argument("--eta", type=float, help="Extra potential around bad neighbourhoods (default 0)")
        p.add_argument("--depth", type=int, help="Depth limit of the dichotomy (default 40)")
        p.add_argument("--epsilon-tight", type=float, help="Reach of the tight-margin rule (default 1e-3)")
        p.add_argument("--precision", type=int, help="mpmath precision in bits for constants, predicates and point samples (default 53); interval endpoints stay binary64")
        p.add_argument("--sample-points", type=int, help="High-precision point checks per certified box")
        p.add_argument("--delta-offset", type=float, default=0.0, help=argparse.SUPPRESS)

    verify = sub.add_parser(Command.VERIFY, help="Certify the density bound on one interval of x")
    verify.add_argument("--x", nargs=2, metavar=("LO", "HI"), required=True, help="Interval of the proportion of large discs")
    add_verification(verify)
    _add_out(verify)

    sweep = sub.add_parser(Command.SWEEP, help="Certify every interval of a partition of [0, 1]")
    sweep.add_argument("--subdivisions", type=int, help="Number of intervals (default 100)")
    sweep.add_argument("--workers", type=int, help="Worker processes (default: logical cores)")
    add_verification(sweep)
    sweep.add_argument("--out", help="Output directory")

    construct = sub.add_parser(Command.CONSTRUCT, help="Build a densest x-packing")
    construct.add_argument("--x", required=True, help="Proportion of large discs")
    construct.add_argument("--extent", type=int, help="Size parameter (default 100)")
    _add_out(construct, formats=(OutputFormat.JSON, OutputFormat.SVG))

    census = sub.add_parser(Command.CENSUS, help="Count neighbourhood words of a packing")
    _add_source(census)
    census.add_argument("--window", type=float, help="Half-width of the counted window (default 30)")
    census.add_argument("--eta", type=float, help="Also bound the bad proportion by the density defect for this eta")
    census.add_argument("--workers", type=int, help="Worker processes")
    _add_out(census)

    density = sub.add_parser(Command.DENSITY, help="Measure the density of a packing in a square window")
    _add_source(density)
    density.add_argument("--k", type=float, help="Half-width of the window (default 50)")
    _add_out(density)

    tiling = sub.add_parser(Command.TILING, help="Build a square-triangle tiling or recover one from a packing")
    _add_source(tiling)
    _add_out(tiling, formats=(OutputFormat.JSON, OutputFormat.SVG))

    entropy = sub.add_parser(Command.ENTROPY, help="Block and dodecagon arithmetic of the pattern count")
    entropy.add_argument("--alpha", required=True, help="Target square share, e.g. 1/3")
    entropy.add_argument("--n", type=int, help="Block size (default: the smallest that works)")
    entropy.add_argument("--beta", help="Share of S blocks whose ratio f(beta, n) is reported")
    entropy.add_argument("--k", type=float, help="Pattern radius of the dodecagon bound")
    entropy.add_argument("--dodecagon-density", type=float, help="Free dodecagons per unit area")
    _add_out(entropy)

    plot = sub.add_parser(Command.PLOT, help="Emit plot data of a sweep or of the density curve")
    plot.add_argument("--kind", choices=[k.value for k in PlotKind], required=True, help="Series to emit")
    plot.add_argument("--in", dest="input", help="Sweep report JSON (alpha and boxes)")
    _add_out(plot, formats=(OutputFormat.CSV, OutputFormat.SVG))
    return parser


def parse_config(argv: list[str] | None = None) -> tuple[RunConfig, bool]:
    """Parse flags into a run configuration and the verbosity, applying ``--theme`` on the way.

    argparse exits with status 2 on malformed flags.
    """
    args = vars(build_parser().parse_args(argv))
    command = Command(args.pop("command"))
    verbose = bool(args.pop("verbose"))
    if theme := args.pop("theme"):
        switch_theme(theme)
    options = {key: value for key, value in args.items() if value is not None}
    return RunConfig(command=command, options=options), verbose


# ─── Validation ────────────────────────────────────────────────────────────────
def _fraction(value: str, name: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        msg = f"--{name} expects a decimal or a fraction, got {value!r}"
        raise UsageError(msg) from e


def validate_config(config: RunConfig) -> None:
    """Check flags that depend on each other before any computation.

    :raises UsageError: On the first missing or contradictory flag.
    """
    o = config.options
    match config.command:
        case Command.VERIFY:
            lo, hi = (_fraction(v, "x") for v in o["x"])
            if not 0 <= lo <= hi <= 1:
                msg = f"--x needs 0 <= LO <= HI <= 1, got {lo} {hi}"
                raise UsageError(msg)
            if lo < Fraction(1, 2) < hi:
                msg = "--x must not straddle 1/2; verify the two halves separately"
                raise UsageError(msg)
        case Command.CENSUS | Command.DENSITY | Command.TILING:
            if ("input" in o) == ("x" in o):
                msg = f"{config.command} needs exactly one of --in and --x"
                raise UsageError(msg)
            if "x" in o and not 0 <= _fraction(o["x"], "x") <= 1:
                msg = "--x must lie in [0, 1]"
                raise UsageError(msg)
            if config.command is Command.TILING and "x" in o and _fraction(o["x"], "x") < Fraction(1, 2):
                msg = "square-triangle tilings exist for x >= 1/2 only"
                raise UsageError(msg)
        case Command.PLOT:
            if o["kind"] != PlotKind.DENSITY_CURVE and "input" not in o:
                msg = f"plot --kind {o['kind']} needs --in with a sweep report"
                raise UsageError(msg)
        case Command.CONSTRUCT:
            if not 0 <= _fraction(o["x"], "x") <= 1:
                msg = "--x must lie in [0, 1]"
                raise UsageError(msg)
        case Command.ENTROPY:
            if "k" in o and "dodecagon_density" not in o:
                msg = "--k needs --dodecagon-density"
                raise UsageError(msg)
        case _:
            pass
    if o.get("eta", 0) < 0:
        msg = "--eta must be nonnegative"
        raise UsageError(msg)
    if o.get("subdivisions", 2) < 2:
        msg = "--subdivisions must be at least 2"
        raise UsageError(msg)
    for flag in POSITIVE_FLAGS:
        if flag in o and o[flag] <= 0:
            msg = f"--{flag.replace('_', '-')} must be positive, got {o[flag]}"
            raise UsageError(msg)


# ─── Commands ──────────────────────────────────────────────────────────────────
def _verification_settings(o: dict[str, Any]) -> VerificationSettings:
    flags = {"eta": "eta", "depth": "depth_limit", "epsilon_tight": "epsilon_tight", "precision": "precision_bits", "sample_points": "sample_points", "subdivisions": "subdivisions", "workers": "workers"}
    update = {field: o[flag] for flag, field in flags.items() if flag in o}
    return get_settings().verification.model_copy(update=update)


def _packing(o: dict[str, Any]) -> tuple[Packing, str]:
    if "input" in o:
        return utils.load_pydantic_model(PackingDocument, o["input"]).to_packing(), str(o["input"])
    x = _fraction(o["x"], "x")
    extent = o.get("extent", get_settings().construction.extent)
    return constructions.construct(x, extent), f"construction x={o['x']} extent={extent}"


def _run_verify(config: RunConfig) -> int:
    o = config.options
    settings = _verification_settings(o)
    lo, hi = (_fraction(v, "x") for v in o["x"])
    report = certifier.verify_interval((lo, hi), settings.eta, settings=settings, delta_offset=o.get("delta_offset", 0.0), config=config)
    show(verification_view(report))
    if "out" in o:
        utils.save_pydantic_model(report, o["out"])
    return EXIT_OK if report.certified else EXIT_NOT_CERTIFIED


def _run_sweep(config: RunConfig) -> int:
    o = config.options
    settings = _verification_settings(o)
    report = certifier.sweep(settings.subdivisions, settings.eta, settings.effective_workers, settings=settings, delta_offset=o.get("delta_offset", 0.0), config=config)
    show(sweep_view(report))
    if "out" in o:
        folder = Path(o["out"])
        utils.save_pydantic_model(report, folder / "sweep.json")
        for index, interval in enumerate(report.intervals):
            utils.save_pydantic_model(interval, folder / "intervals" / f"{index:04d}.json")
        for kind in (PlotKind.ALPHA, PlotKind.BOXES):
            utils.emit_plot_data(kind, folder / f"{kind}.csv", report)
    return EXIT_OK if report.all_certified else EXIT_NOT_CERTIFIED


def _run_construct(config: RunConfig) -> int:
    o = config.options
    p, source = _packing(o)
    log.info("{}: {} discs, {} large", source, len(p), p.large_count)
    if "out" in o:
        if o["format"] == OutputFormat.SVG:
            utils.render_packing_svg(p, o["out"])
        else:
            utils.save_pydantic_model(PackingDocument.from_packing(p), o["out"])
    return EXIT_OK


def _run_census(config: RunConfig) -> int:
    o = config.options
    settings = get_settings().census
    p, source = _packing(o)
    window = o.get("window", settings.window)
    result = neighborhood_census(p, window, margin=settings.margin, tile_size=settings.tile_size, workers=o.get("workers", 1))
    fraction = constructions.large_fraction(p, window)
    bound = None
    if o.get("eta"):
        bound = IntervalRecord.from_interval(certifier.defect_bound(constructions.measured_density(p, window), Interval.point(fraction), o["eta"]))
    report = CensusReport(
        source=source,
        window=window,
        interior=result.interior,
        counts=dict(sorted(result.counts.items())),
        bad_fraction={regime.value: value for regime, value in result.bad_fractions.items()},
        large_fraction=fraction,
        defect_bound=bound,
        config=config,
    )
    show(census_view(report))
    if "out" in o:
        utils.save_pydantic_model(report, o["out"])
    return EXIT_OK


def _run_density(config: RunConfig) -> int:
    o = config.options
    p, source = _packing(o)
    k = o.get("k", get_settings().construction.window_k)
    density = constructions.measured_density(p, k)
    fraction = constructions.large_fraction(p, k)
    best = delta_max(fraction)
    report = DensityReport(
        source=source,
        k=k,
        density=IntervalRecord.from_interval(density),
        large_fraction=fraction,
        delta_max=IntervalRecord.from_interval(best),
        relative_gap=(best.mid - density.mid) / best.mid,
        config=config,
    )
    show(density_view(report))
    if "out" in o:
        utils.save_pydantic_model(report, o["out"])
    return EXIT_OK


def _run_tiling(config: RunConfig) -> int:
    o = config.options
    if "input" in o:
        tiling = constructions.packing_to_tiling(utils.load_pydantic_model(PackingDocument, o["input"]).to_packing())
    else:
        tiling = constructions.column_tiling(_fraction(o["x"], "x"), o.get("extent", get_settings().construction.extent))
    tiling.validate(get_settings().construction.edge_tolerance)
    log.info("tiling with {} tiles, square fraction {:.6f}", len(tiling.tiles), constructions.square_fraction(tiling))
    if "out" in o:
        if o["format"] == OutputFormat.SVG:
            utils.render_tiling_svg(tiling, o["out"])
        else:
            utils.save_pydantic_model(TilingDocument.from_tiling(tiling), o["out"])
    return EXIT_OK


def _run_entropy(config: RunConfig) -> int:
    o = config.options
    alpha = _fraction(o["alpha"], "alpha")
    smallest = constructions.smallest_block_size(alpha)
    n = o.get("n", smallest)
    counts = constructions.block_counts(n)
    beta = constructions.solve_beta(alpha, n)
    ratio_beta = _fraction(o["beta"], "beta") if "beta" in o else beta
    bound = constructions.dodecagon_pattern_bound(o["k"], o["dodecagon_density"]) if "k" in o else None
    report = EntropyReport(
        alpha=str(alpha),
        n=n,
        beta=str(beta),
        squares=counts.s_square + counts.t_square,
        triangles=counts.s_triangle + counts.t_triangle,
        ratio=str(constructions.square_triangle_ratio(ratio_beta, n)),
        smallest_n=smallest,
        dodecagon_identity=constructions.dodecagon_area_identity(),
        pattern_bound=bound,
        config=config,
    )
    show(entropy_view(report))
    if "out" in o:
        utils.save_pydantic_model(report, o["out"])
    return EXIT_OK


def _run_plot(config: RunConfig) -> int:
    o = config.options
    kind = PlotKind(o["kind"])
    report = utils.load_pydantic_model(SweepReport, o["input"]) if "input" in o else None
    target = o.get("out", f"{kind}.{o['format']}")
    if o["format"] == OutputFormat.SVG:
        utils.render_curve_svg(kind, target, report)
    else:
        utils.emit_plot_data(kind, target, report)
    return EXIT_OK


HANDLERS = {
    Command.VERIFY: _run_verify,
    Command.SWEEP: _run_sweep,
    Command.CONSTRUCT: _run_construct,
    Command.CENSUS: _run_census,
    Command.DENSITY: _run_density,
    Command.TILING: _run_tiling,
    Command.ENTROPY: _run_entropy,
    Command.PLOT: _run_plot,
}


def run(config: RunConfig) -> int:
    """Execute one command and map its outcome to an exit status."""
    try:
        validate_config(config)
        return HANDLERS[config.command](config)
    except INPUT_ERRORS as e:
        log.error("{}: {}", type(e).__name__, e)
        return EXIT_USAGE
    except Exception:
        log.opt(exception=True).critical("{} stopped on an unexpected error", config.command)
        raise


def main(argv: list[str] | None = None) -> int:
    """Entry point of the ``bidisc`` script."""
    config, verbose = parse_config(argv)
    logging = get_settings().logging
    setup_logging("DEBUG" if verbose else logging.console_level, logging.file_level, logging.log_file, log_dir=logging.directory)
    log.debug("running {} with {}", config.command, config.options)
    log.debug("settings: {}", get_settings().get_configuration_summary())
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
