"""
commands.py - The command handlers

Each handler takes a RunConfig, writes its JSON or CSV and returns the exit
code. Exit codes are the contract with scripts calling us:

    0  success / verified on the grid
    1  input error (bad parameters, excluded family member, bad flags)
    2  refuted, or a theorem hypothesis that fails
    3  inconclusive
"""

import logging

from geometry.certifier import (
    INCONCLUSIVE,
    REFUTED,
    VERIFIED,
    boundary_curve,
    class_membership,
    class_quantity,
    image_curve,
)
from numerics.series import series_eval
from theorems.hypotheses import check_hypothesis
from theorems.verification import verify_instance
from .config import POLY
from .output import CSV_HEADER, EVAL_HEADER, curve_rows, format_csv, format_json, write_text

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REFUTED = 2
EXIT_INCONCLUSIVE = 3

# certificate status -> exit code
STATUS_EXIT = {
    VERIFIED: EXIT_OK,
    REFUTED: EXIT_REFUTED,
    INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

# curve names in the figure CSV
IMAGE_CURVE = 'image'
BOUNDARY_CURVE = 'boundary'


def function_title(cfg):
    return "polynomial" if cfg.family == POLY else cfg.function.title


def describe_function(cfg):
    if cfg.family == POLY:
        return {'family': POLY, 'coeffs': list(cfg.coeffs)}
    return cfg.function.to_dict()


def _evaluator(cfg):
    """z -> f(z) for the configured function, building a series at most once"""
    if cfg.family == POLY:
        series = cfg.build_map().series
        return lambda z: series_eval(series, z)
    function = cfg.function
    if not function.has_series or function.family in ('struve-h', 'struve-l'):
        return function.evaluate
    series = function.build_series(cfg.r_ref, **cfg.series_options)
    return lambda z: series_eval(series, z)


def run_eval(cfg):
    """values of the function at every --z point"""
    evaluate = _evaluator(cfg)
    records = []
    for z in cfg.z_points:
        value = complex(evaluate(z))
        records.append({'z_re': z.real, 'z_im': z.imag, 'f_re': value.real, 'f_im': value.imag})
        logger.debug(f"{cfg.family}({z}) = {value}")
    if cfg.fmt == 'csv':
        text = format_csv(EVAL_HEADER, [tuple(record.values()) for record in records])
    else:
        text = format_json(records)
    write_text(text, cfg.output)
    return EXIT_OK


def run_certify(cfg):
    """grid certificate for the function in the chosen class"""
    logger.info(f"Certifying {function_title(cfg)} in {cfg.cls}")
    certificate = class_membership(cfg.build_map(), cfg.cls, cfg.plan)
    payload = {'function': describe_function(cfg), 'class': cfg.cls}
    payload.update(certificate.to_dict())
    write_text(format_json(payload), cfg.output)
    return STATUS_EXIT[certificate.status]


def run_check(cfg):
    """hypothesis report, plus the membership certificates with --verify"""
    if not cfg.verify:
        report = check_hypothesis(cfg.theorem, cfg.params)
        write_text(format_json(report.to_dict()), cfg.output)
        return EXIT_OK if report.all_satisfied else EXIT_REFUTED

    report, results = verify_instance(cfg.theorem, cfg.params, cfg.plan)
    payload = report.to_dict()
    payload['certificates'] = [result.to_dict() for result in results]
    write_text(format_json(payload), cfg.output)

    statuses = [result.certificate.status for result in results]
    if not report.all_satisfied or REFUTED in statuses:
        return EXIT_REFUTED
    if INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def emit_figure_csv(cfg):
    """
    image of |z| = r under the class quantity next to the boundary exp(e^{i theta})

    both curves are sampled at plan.angles + 1 angles from 0 to 2 pi, so each
    one closes on itself
    """
    p = class_quantity(cfg.build_map(), cfg.cls)
    radius = cfg.figure_radius
    angles = cfg.plan.angles
    thetas, values = image_curve(p, radius, angles)
    boundary_thetas, boundary_values = boundary_curve(angles)
    rows = curve_rows(IMAGE_CURVE, thetas, values) + curve_rows(BOUNDARY_CURVE, boundary_thetas, boundary_values)
    write_text(format_csv(CSV_HEADER, rows), cfg.output)
    logger.info(f"figure: {function_title(cfg)} as {cfg.cls} at r = {radius}, {angles} angles")
    return EXIT_OK
