#!/usr/bin/env python
"""
dampsearch command-line front end

Regenerates spectra, probability curves, expected-iteration minima and the
reference tables and figure datasets as CSV/JSON.

Usage:
    dampsearch spectrum --spins 8
    dampsearch curve --spins 12 --lambda -9 --model damped --max-j 60
    dampsearch expected --spins 8 --lambda -5 --model damped
    dampsearch report tables --out tables.json
    dampsearch report figures --out figures/

Exit codes: 0 success, 1 computation error, 2 invalid arguments,
3 lambda is not an eigenvalue.
"""

import argparse
import logging
import sys
from pathlib import Path

from .constants import (
    DEFAULT_FIGURES_DIR,
    EXIT_CODES,
    LAMBDA_HELP,
    MODEL_DAMPED,
    MODEL_HELP,
    MODELS,
    OUTPUT_FORMATS,
    SPINS_HELP,
    SUMMARY_FILE,
    TABLES_FILE,
)
from .core import SimulationConfig
from .exceptions import InvalidArgumentError, SearchError
from .reports import (
    ReportSpec,
    curve_file,
    curve_outputs,
    expected_files,
    expected_outputs,
    figure_files,
    load_chain,
    tables_document,
)
from .serializers import (
    SerializerConfig,
    dumps_json,
    provenance_line,
    spectrum_to_csv,
    spectrum_to_json,
    write_text,
)


class _ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with the documented code"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CODES["INVALID_ARGUMENT"], f"{self.prog}: error: {message}\n")


def _emit(content: str, out: str | None) -> None:
    """Write to a file when --out is given, stdout otherwise"""
    if out:
        path = write_text(out, content)
        print(f"Wrote {path}", file=sys.stderr)
    else:
        sys.stdout.write(content)


def _emit_files(files: dict[str, str], out_dir: str) -> None:
    directory = Path(out_dir)
    for name in sorted(files):
        write_text(directory / name, files[name])
    print(f"Wrote {len(files)} file(s) to {directory}", file=sys.stderr)


def _config(args) -> SimulationConfig:
    return SimulationConfig(workers=getattr(args, "jobs", 1))


def _report_spec(args, models: list[str]) -> ReportSpec:
    return ReportSpec(
        spins=args.spins,
        models=tuple(models),
        lambda_units=args.lambda_units,
        epsilon=args.epsilon,
        j_max=args.max_j,
        cos_phi=args.cos_phi,
        output_format=args.format,
        output=args.out,
    )


def cmd_spectrum(args) -> int:
    """Write the spectrum of an n-spin chain"""
    _, levels = load_chain(args.spins, args.epsilon)
    if args.format == "json":
        content = spectrum_to_json(levels)
    else:
        content = spectrum_to_csv(levels)
    _emit(content, args.out)
    return EXIT_CODES["OK"]


def cmd_curve(args) -> int:
    """Write one success-probability curve per requested model"""
    spec = _report_spec(args, args.model or [MODEL_DAMPED])
    config = _config(args)
    serializer = SerializerConfig(config.significant_digits)
    outputs = curve_outputs(spec, config)
    if args.out:
        _emit_files(
            dict(curve_file(o, spec.output_format, serializer) for o in outputs),
            args.out,
        )
    elif len(outputs) == 1:
        (output,) = outputs
        name, content = curve_file(output, spec.output_format, serializer)
        if spec.output_format == "csv":
            # CSV has no room for provenance
            print(
                f"Curve {name}: {provenance_line(output.provenance(), serializer)}",
                file=sys.stderr,
            )
        sys.stdout.write(content)
    else:
        raise InvalidArgumentError(
            "Several curves requested; pass --out DIR to write one file per curve"
        )
    return EXIT_CODES["OK"]


def cmd_expected(args) -> int:
    """E(j) curves and minimum summaries per (lambda, model)"""
    spec = _report_spec(args, args.model or [MODEL_DAMPED])
    config = _config(args)
    outputs = expected_outputs(spec, config)
    serializer = SerializerConfig(config.significant_digits)
    if args.out:
        _emit_files(expected_files(outputs, SUMMARY_FILE, serializer), args.out)
    else:
        summaries = [output.summary() for output in outputs]
        sys.stdout.write(dumps_json({"summaries": summaries}, serializer))
    return EXIT_CODES["OK"]


def cmd_report_tables(args) -> int:
    """Minimum expected iterations for every spectral lambda of 8 and 12 spins"""
    config = _config(args)
    content = dumps_json(tables_document(config))
    if args.out and Path(args.out).is_dir():
        _emit(content, str(Path(args.out) / TABLES_FILE))
    else:
        _emit(content, args.out)
    return EXIT_CODES["OK"]


def cmd_report_figures(args) -> int:
    """Plot-ready datasets behind the probability and expected-iteration figures"""
    config = _config(args)
    _emit_files(figure_files(config), args.out)
    return EXIT_CODES["OK"]


def _create_argument_parser() -> argparse.ArgumentParser:
    """Create and configure argument parser with all subcommands"""
    parser = _ArgumentParser(
        prog="dampsearch",
        description="Grover, damped and classical search over Ising-chain eigenstates",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Workflow:
  dampsearch spectrum --spins 12
  dampsearch curve --spins 12 --lambda -9 --model grover --model damped --out curves/
  dampsearch expected --spins 12 --model damped --model classical-replace --out expected/
  dampsearch report tables --out tables.json
  dampsearch report figures --out figures/
        """,
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Enable debug logging on stderr"
    )

    subparsers = parser.add_subparsers(
        dest="command", help="Commands", parser_class=_ArgumentParser
    )
    _add_spectrum_parser(subparsers)
    _add_curve_parser(subparsers)
    _add_expected_parser(subparsers)
    _add_report_parser(subparsers)

    return parser


def _add_chain_arguments(parser) -> None:
    parser.add_argument("--spins", type=int, required=True, help=SPINS_HELP)
    parser.add_argument(
        "--epsilon",
        type=float,
        default=1.0,
        help="Interaction energy; only scales labels (default: 1)",
    )
    parser.add_argument(
        "--format", choices=OUTPUT_FORMATS, default="csv", help="Output format"
    )


def _add_model_arguments(parser, lambda_required: bool) -> None:
    parser.add_argument(
        "--lambda",
        dest="lambda_units",
        type=int,
        required=lambda_required,
        help=LAMBDA_HELP,
    )
    parser.add_argument("--model", action="append", choices=MODELS, help=MODEL_HELP)
    parser.add_argument(
        "--max-j",
        type=int,
        default=None,
        help="Iterations to evaluate (default: max(1000, ceil(50 sqrt(N/M))))",
    )
    parser.add_argument(
        "--cos-phi",
        type=float,
        default=None,
        help="Damping override in [0, 1] (default: critical damping)",
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="Worker threads for independent jobs"
    )


def _add_spectrum_parser(subparsers):
    """Add spectrum subcommand parser"""
    spectrum_parser = subparsers.add_parser(
        "spectrum", help="Eigenvalues and degeneracies of the chain"
    )
    _add_chain_arguments(spectrum_parser)
    spectrum_parser.add_argument("--out", help="Output file (default: stdout)")
    spectrum_parser.set_defaults(handler=cmd_spectrum)


def _add_curve_parser(subparsers):
    """Add curve subcommand parser"""
    curve_parser = subparsers.add_parser(
        "curve", help="Success probability per iteration"
    )
    _add_chain_arguments(curve_parser)
    _add_model_arguments(curve_parser, lambda_required=True)
    curve_parser.add_argument(
        "--out", help="Output directory, one file per model (default: stdout)"
    )
    curve_parser.set_defaults(handler=cmd_curve)


def _add_expected_parser(subparsers):
    """Add expected subcommand parser"""
    expected_parser = subparsers.add_parser(
        "expected", help="Expected iterations before success and their minima"
    )
    _add_chain_arguments(expected_parser)
    _add_model_arguments(expected_parser, lambda_required=False)
    expected_parser.add_argument(
        "--out",
        help="Output directory for E-curve CSVs and summary.json "
        "(default: summary JSON on stdout)",
    )
    expected_parser.set_defaults(handler=cmd_expected)


def _add_report_parser(subparsers):
    """Add report subcommand parser with tables and figures targets"""
    report_parser = subparsers.add_parser(
        "report", help="Regenerate reference tables or figure datasets"
    )
    targets = report_parser.add_subparsers(
        dest="target", parser_class=_ArgumentParser
    )
    targets.required = True

    tables_parser = targets.add_parser("tables", help="Minimum expected iterations")
    tables_parser.add_argument(
        "--out", help="Output file or directory (default: stdout)"
    )
    tables_parser.add_argument("--jobs", type=int, default=1)
    tables_parser.set_defaults(handler=cmd_report_tables)

    figures_parser = targets.add_parser("figures", help="Figure datasets")
    figures_parser.add_argument(
        "--out",
        default=DEFAULT_FIGURES_DIR,
        help=f"Output directory (default: {DEFAULT_FIGURES_DIR})",
    )
    figures_parser.add_argument("--jobs", type=int, default=1)
    figures_parser.set_defaults(handler=cmd_report_figures)


def _execute_command(args) -> int:
    """Execute the selected command with error handling"""
    try:
        return args.handler(args)
    except SearchError as e:
        print(f"Error: {e.message}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"Error writing output: {e}", file=sys.stderr)
        return EXIT_CODES["COMPUTATION_ERROR"]


def main(argv: list[str] | None = None) -> int:
    parser = _create_argument_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    if not args.command:
        parser.print_help()
        return EXIT_CODES["INVALID_ARGUMENT"]

    return _execute_command(args)


if __name__ == "__main__":
    sys.exit(main())
