"""
main.py - The entry point of the expdisk command line

This file parses the command line, sets up logging and settings, builds a
RunConfig and hands it to the matching command:

    eval      values of a special function at given points
    certify   grid certificate for membership in Pe, Se_star or Ke
    check     hypothesis report of a theorem (plus certificates with --verify)
    figure    CSV of an image curve next to the boundary of exp(disk)
    suite     the acceptance suite

stdout carries JSON or CSV only; logs go to stderr and expdisk.log.
"""

import os  # environment overrides for the settings
import sys  # exit codes and the output streams
import json  # error reports are JSON like everything else on stdout
import logging  # log levels for --verbose / --quiet
import argparse  # the command line itself

from cli.commands import EXIT_INPUT, emit_figure_csv, run_certify, run_check, run_eval
from cli.config import POLY, build_config
from cli.suite import run_suite
from geometry.certifier import KE, PE, SE_STAR
from numerics.errors import ExpdiskError
from specfun.identifiers import FAMILIES
from theorems.registry import THEOREMS
from utils.logger import LOG_FILE, get_logger, setup_logging
from utils.settings import SETTINGS_FILE, SettingsManager

logger = get_logger(__name__)

# command name -> handler
HANDLERS = {
    'eval': run_eval,
    'certify': run_certify,
    'check': run_check,
    'figure': emit_figure_csv,
    'suite': run_suite,
}

FAMILY_CHOICES = sorted(FAMILIES) + [POLY]


class ExpdiskArgumentParser(argparse.ArgumentParser):
    """argparse reports usage errors with exit 2, which means 'refuted' here; use 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_param_flags(parser):
    group = parser.add_argument_group("parameters (re or re,im; write --a=-1,2 when re is negative)")
    group.add_argument('--a', help="Kummer numerator parameter")
    group.add_argument('--c', help="Kummer denominator parameter")
    group.add_argument('--mu', help="Lommel mu")
    group.add_argument('--nu', help="Lommel nu, or the Struve / Bessel order")
    group.add_argument('--kappa', help="generalized Struve kappa")
    group.add_argument('--cparam', help="generalized Struve c")
    group.add_argument('--delta', help="delta of g_delta / h_delta")


def _add_plan_flags(parser):
    group = parser.add_argument_group("sampling plan (overrides the settings file)")
    group.add_argument('--radii', help="comma separated radii in (0, 1), ascending")
    group.add_argument('--angles', type=int, help="angles per circle")
    group.add_argument('--refine', type=int, help="refinement factor around each circle's maximum")
    group.add_argument('--save-settings', action='store_true', help="write the effective settings back")


def _add_output_flags(parser, formats=('json',)):
    parser.add_argument('--output', '-o', help="write here instead of stdout (UTF-8)")
    parser.add_argument('--format', choices=formats, help="output format")


def _add_function_flags(parser):
    parser.add_argument('--fn', dest='family', required=True, choices=FAMILY_CHOICES, help="function family")
    parser.add_argument('--coeffs', help="coefficients c0,c1,... for --fn poly")
    parser.add_argument('--class', dest='cls', choices=(PE, SE_STAR, KE), default=PE, help="class to test")
    _add_param_flags(parser)


def build_parser():
    parser = ExpdiskArgumentParser(prog='expdisk', description="Kummer, Lommel and Struve functions "
                                   "and grid certificates for subordination to e^z")
    parser.add_argument('--verbose', '-v', action='store_true', help="log at DEBUG")
    parser.add_argument('--quiet', '-q', action='store_true', help="log warnings and errors only")
    parser.add_argument('--settings', default=SETTINGS_FILE, help="settings JSON file")
    parser.add_argument('--log-file', default=LOG_FILE, help="log file ('' for none)")
    commands = parser.add_subparsers(dest='command', required=True, parser_class=ExpdiskArgumentParser)

    eval_parser = commands.add_parser('eval', help="evaluate a function")
    eval_parser.add_argument('family', choices=FAMILY_CHOICES)
    eval_parser.add_argument('--z', action='append', default=[], help="point re,im (repeatable)")
    eval_parser.add_argument('--coeffs', help="coefficients c0,c1,... for poly")
    _add_param_flags(eval_parser)
    _add_output_flags(eval_parser, ('json', 'csv'))

    certify_parser = commands.add_parser('certify', help="certify class membership on a grid")
    _add_function_flags(certify_parser)
    _add_plan_flags(certify_parser)
    _add_output_flags(certify_parser)

    check_parser = commands.add_parser('check', help="check a theorem hypothesis")
    check_parser.add_argument('theorem', choices=sorted(THEOREMS))
    check_parser.add_argument('--verify', action='store_true', help="also certify the claimed members")
    _add_param_flags(check_parser)
    _add_plan_flags(check_parser)
    _add_output_flags(check_parser)

    figure_parser = commands.add_parser('figure', help="image curve and exp boundary as CSV")
    _add_function_flags(figure_parser)
    figure_parser.add_argument('--quantity', choices=('p', 'starlike', 'convex'),
                               help="quantity to draw (default follows --class)")
    figure_parser.add_argument('--radius', type=float, help="circle |z| = r (default: largest plan radius)")
    _add_plan_flags(figure_parser)
    _add_output_flags(figure_parser, ('csv',))

    suite_parser = commands.add_parser('suite', help="run the acceptance suite")
    suite_parser.add_argument('--filter', help="run only checks whose name or tag contains this")
    _add_plan_flags(suite_parser)
    _add_output_flags(suite_parser)
    return parser


def _log_level(args):
    if args.verbose:
        return logging.DEBUG
    if args.quiet:
        return logging.WARNING
    return logging.INFO


def _report_error(error):
    payload = {'error': str(error), 'exclusion': getattr(error, 'exclusion', None)}
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    sys.stdout.flush()


def run(argv=None, environ=None):
    """parse, configure and dispatch; returns the exit code"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT

    setup_logging(_log_level(args), args.log_file or None)
    settings = SettingsManager(args.settings, os.environ if environ is None else environ)
    try:
        cfg = build_config(args, settings)
        return HANDLERS[cfg.command](cfg)
    except (ExpdiskError, ValueError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        _report_error(e)
        return EXIT_INPUT


def main():
    """
    the program entry point
    """
    try:
        code = run()
    except KeyboardInterrupt:
        # user pressed Ctrl+C
        logger.info("Interrupted by user")
        code = EXIT_INPUT
    except Exception as e:
        # something went wrong that no command anticipated
        logger.critical(f"Fatal error: {e}", exc_info=True)
        code = EXIT_INPUT
    sys.exit(code)


# this runs when the script is executed directly (not imported as a module)
if __name__ == "__main__":
    main()
