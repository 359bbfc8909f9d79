"""Command-line entry point ``spamkern``."""
# License: GNU AGPLv3

import argparse
import logging
import sys

from ..exceptions import ConfigError
from .config import MODES, load_config
from .experiments import SWEEP_COLUMNS, LOWER_BOUND_COLUMNS, \
    PACKING_COLUMNS, COMPLEXITY_COLUMNS, SANDWICH_COLUMNS, run

logger = logging.getLogger('spamkern.cli')

EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 2
EXIT_RUNTIME_ERROR = 3

_EPILOG = f"""\
output columns:
  fit, sweep-n, sweep-d, sweep-s:
    {','.join(SWEEP_COLUMNS)}
  lower-bound:
    {','.join(LOWER_BOUND_COLUMNS)}
  packing:
    {','.join(PACKING_COLUMNS)}
  complexity:
    {','.join(COMPLEXITY_COLUMNS)}
  sandwich:
    {','.join(SANDWICH_COLUMNS)}

Missing values are empty cells. Failed fits have empty error columns and
failed=1.

exit status:
  0 on success, 2 on a configuration error, 3 on a runtime error.
"""


def _build_parser():
    parser = argparse.ArgumentParser(
        prog='spamkern',
        description="Fit sparse additive kernel models on synthetic data "
                    "and tabulate rates and bounds.",
        epilog=_EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('mode', choices=MODES, help="Experiment to run.")
    parser.add_argument('--config', required=True,
                        help="Path of the JSON configuration.")
    parser.add_argument('--out', default=None,
                        help="Path of the CSV output. Overrides `output` "
                             "in the configuration.")
    parser.add_argument('--threads', type=int, default=None,
                        help="Number of worker processes. Overrides "
                             "`threads` in the configuration.")
    parser.add_argument('-v', '--verbose', action='store_true',
                        help="Log solver progress.")
    return parser


def _configure_logging(verbose):
    package_logger = logging.getLogger('spamkern')
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter("%(asctime)s - [%(levelname)s] %(message)s"))
    package_logger.handlers = [handler]
    package_logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    return handler


def main(argv=None):
    """Run the command line and return its exit status."""
    args = _build_parser().parse_args(argv)
    _configure_logging(args.verbose)

    try:
        config = load_config(args.config, mode=args.mode, output=args.out,
                             threads=args.threads)
        if config.output is None:
            raise ConfigError("No output path given, use --out.")
    except ConfigError as err:
        logger.error("Invalid configuration: %s", err)
        return EXIT_CONFIG_ERROR

    try:
        run(config)
    except (ArithmeticError, OSError, RuntimeError, ValueError) as err:
        logger.error("%s failed: %s", config.mode, err)
        return EXIT_RUNTIME_ERROR
    return EXIT_SUCCESS


if __name__ == '__main__':
    sys.exit(main())
