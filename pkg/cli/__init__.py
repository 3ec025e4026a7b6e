"""
cli - command-line front end: run configuration, handlers, writers and the acceptance suite
"""

from .commands import (
    EXIT_INCONCLUSIVE,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_REFUTED,
    emit_figure_csv,
    run_certify,
    run_check,
    run_eval,
)
from .config import RunConfig, build_config, parse_complex
from .suite import SUITE_CHECKS, run_suite
