import logging
import os
import sys

from dotenv import load_dotenv

from moserpoly.cli import COMMANDS
from moserpoly.cli import load_config
from moserpoly.cli import parse_args
from moserpoly.cli import resolve_settings
from moserpoly.cli import solvability_output
from moserpoly.errors import EnumerationLimitError
from moserpoly.errors import EXIT_INVALID
from moserpoly.errors import EXIT_OK
from moserpoly.errors import EXIT_SIZE
from moserpoly.errors import EXIT_UNSOLVABLE
from moserpoly.errors import EXIT_VERIFICATION
from moserpoly.errors import InvalidArgumentError
from moserpoly.errors import MultisetSizeError
from moserpoly.errors import RecoveryError
from moserpoly.errors import RootFindingError
from moserpoly.errors import UnsolvableError
from moserpoly.output import render


def _configure_logging(settings):
    if settings.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif settings.quiet:
        logging.getLogger().setLevel(logging.WARNING)
    elif os.getenv("MOSERPOLY_LOG_LEVEL"):
        # .env values only exist once load_dotenv has run
        logging.getLogger().setLevel(os.getenv("MOSERPOLY_LOG_LEVEL").upper())


def main(argv=None) -> int:
    load_dotenv()

    try:
        args = parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help
        return e.code if isinstance(e.code, int) else EXIT_INVALID

    # init already wrote its template
    if args is None:
        return EXIT_OK

    try:
        settings = resolve_settings(args, load_config(args.config))
    except InvalidArgumentError as e:
        logging.error(str(e))
        return EXIT_INVALID
    _configure_logging(settings)

    try:
        code, output = COMMANDS[args.command](args, settings)
    except UnsolvableError as e:
        logging.error(str(e))
        sys.stdout.write(render(solvability_output(e.report), settings.format))
        return EXIT_UNSOLVABLE
    except MultisetSizeError as e:
        logging.error(str(e))
        return EXIT_SIZE
    except (InvalidArgumentError, EnumerationLimitError) as e:
        logging.error(str(e))
        return EXIT_INVALID
    except (RecoveryError, RootFindingError) as e:
        logging.error(f"Recovery failed: {e}")
        return EXIT_VERIFICATION

    sys.stdout.write(render(output, settings.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
