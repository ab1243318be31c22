#!/usr/bin/env python3
"""
OrbitKit - Exact twisted moment maps for type-A flag varieties
Command-line front end for computing mu, chart transitions and the affine
action, and for running the verification suites
"""

import sys
from pathlib import Path
import argparse
import logging

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from domain.enums import LogLevel, RepresentativeKind, Suite, WorkedExample
from domain.errors import ConfigError, OrbitKitError

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: str = "INFO", log_file: str = None, log_format: str = LOG_FORMAT):
    """
    Set up application logging
    Standard output is reserved for JSON reports, so logs go to stderr
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_path, encoding='utf-8'))

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=log_format,
        handlers=handlers,
        force=True
    )

    return logging.getLogger("OrbitKit")


def parse_arguments(argv=None):
    """
    Parse command line arguments
    Options left unset stay None so that config file and settings can fill them
    """
    parser = argparse.ArgumentParser(description="OrbitKit - twisted moment maps on coadjoint orbits")
    parser.add_argument("suite", choices=[s.value for s in Suite], help="Suite to run")
    parser.add_argument("--n", type=int, help="Matrix size")
    parser.add_argument("--lambda", dest="lambda", help="Comma-separated weight, e.g. 3,1,0")
    parser.add_argument("--samples", type=int, help="Samples per check")
    parser.add_argument("--seed", type=int, help="Random seed")
    parser.add_argument("--output", help="Report path (stdout when omitted; .gz compresses)")
    parser.add_argument("--jobs", type=int, help="Worker threads (default ORBITKIT_JOBS or 1)")
    parser.add_argument("--range", help="Sampling bounds NUM,DEN")
    parser.add_argument("--complex", action="store_true", default=None, help="Sample Gaussian rationals")
    parser.add_argument("--scale", help="Also check rescaling lambda by this factor")
    parser.add_argument("--representatives", choices=[k.value for k in RepresentativeKind],
                        help="Lift of Weyl coset representatives")
    parser.add_argument("--point", help="Chart point JSON")
    parser.add_argument("--orbit-point", dest="orbit_point",
                        help="Orbit point JSON {\"F\", \"witness\"} to pull back to a chart (mu suite)")
    parser.add_argument("--min-in-chart-rate", dest="min_in_chart_rate", type=float,
                        help="Smallest share of samples per check that must land in a chart")
    parser.add_argument("--from", dest="from", help="Source chart permutation, e.g. 0,1")
    parser.add_argument("--to", help="Target chart permutation")
    parser.add_argument("--g", help="Group element JSON")
    parser.add_argument("--case", choices=[c.value for c in WorkedExample], help="Worked example")
    parser.add_argument("--config-file", help="JSON file mirroring the run configuration")
    parser.add_argument("--log-level", choices=[level.value for level in LogLevel], help="Logging level")
    parser.add_argument("--log-file", help="Also write logs to this file")

    return parser.parse_args(argv)


def main(argv=None) -> int:
    """
    Main application entry point
    """
    from infrastructure.settings.config_service import ConfigService
    from infrastructure.exporters.json_exporter import JsonExporter
    from application.run_service import RunService

    args = parse_arguments(argv)
    config_service = ConfigService()
    config = config_service.build_run_config(vars(args))

    logger = setup_logging(config.log_level.value, args.log_file,
                           config_service.get_setting("logging.format", LOG_FORMAT))
    app_name = config_service.get_setting("app.name", "OrbitKit")
    app_version = config_service.get_setting("app.version", "")
    logger.info(f"Starting {app_name} {app_version} suite {config.suite.value}")
    if config.lambda_permutation is not None:
        logger.info(f"lambda regrouped as {config.weight.to_list()} by permutation {list(config.lambda_permutation)}; "
                    "--point, --g and chart permutations refer to the regrouped coordinates")

    service = RunService(report_schema=str(config_service.get_setting("report.schema", "1")))
    exit_code, report = service.run(config)

    exporter = JsonExporter(indent=int(config_service.get_setting("report.indent", 2)))
    exporter.export(report, config.output)

    logger.info(f"Finished with exit code {exit_code}")
    return exit_code


def run_with_error_handling(argv=None) -> int:
    """
    Run main function with the exit-code contract
    """
    try:
        return main(argv)
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return 130
    except ConfigError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return 2
    except OrbitKitError as e:
        print(f"Error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except Exception as e:
        print(f"Fatal error: {e}", file=sys.stderr)
        import traceback
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(run_with_error_handling())
