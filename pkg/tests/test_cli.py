import csv
import io
import json
import math

import pytest
from scipy import special

import specfun.kummer as kummer_module
from cli.suite import SUITE_CHECKS, select_checks
from cli.config import parse_complex, parse_coefficients
from main import run
from numerics.errors import ExpdiskError, ParameterError
from numerics.series import PowerSeries

FAST = ['--radii', '0.9,0.99,0.999', '--angles', '512', '--refine', '4']


def invoke(capsys, cli_args, *argv, environ=None):
    code = run(cli_args + list(argv), environ={} if environ is None else environ)
    return code, capsys.readouterr().out


# parsing helpers

def test_parse_complex():
    assert parse_complex('2') == 2
    assert parse_complex('-1,0.5') == complex(-1, 0.5)
    for bad in ('', '1,2,3', 'x', 'nan'):
        with pytest.raises(ExpdiskError):
            parse_complex(bad)


def test_parse_coefficients():
    assert parse_coefficients('1, 0.5+2j') == (1, 0.5 + 2j)
    with pytest.raises(ParameterError):
        parse_coefficients('1,two')


# eval

def test_eval_kummer_equal_parameters(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'eval', 'kummer', '--a', '2', '--c', '2', '--z', '1')
    assert code == 0
    [record] = json.loads(out)
    assert record['f_re'] == pytest.approx(math.e, rel=1e-14)
    assert record['f_im'] == 0.0


def test_eval_struve_u_at_origin(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'eval', 'struve-u', '--kappa', '2', '--cparam', '1', '--z', '0')
    assert code == 0
    assert json.loads(out)[0]['f_re'] == 1.0


def test_eval_lommel_csv(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'eval', 'lommel', '--mu', '1', '--nu', '0',
                       '--z', '0.5', '--z', '0.25,0.25', '--format', 'csv')
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ['z_re', 'z_im', 'f_re', 'f_im']
    assert len(rows) == 3
    assert float(rows[1][2]) == pytest.approx(4 - 4 * special.jv(0, math.sqrt(0.5)), abs=1e-12)


def test_eval_needs_points(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'eval', 'kummer', '--a', '1', '--c', '2')
    assert code == 1
    assert json.loads(out)['exclusion'] == '--z given'


# certify

def test_certify_refutes_one_plus_two_z(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'certify', '--fn', 'poly', '--coeffs', '1,2', *FAST)
    assert code == 2
    payload = json.loads(out)
    assert payload['status'] == 'refuted'
    assert payload['function'] == {'family': 'poly', 'coeffs': [{'re': 1.0, 'im': 0.0}, {'re': 2.0, 'im': 0.0}]}


def test_certify_constant_one(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'certify', '--fn', 'poly', '--coeffs', '1', *FAST)
    assert code == 0
    assert json.loads(out)['max_log_mod'] == 0.0


def test_certify_kummer(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'certify', '--fn', 'kummer', '--a=-1', '--c', '3', *FAST)
    assert code == 0
    payload = json.loads(out)
    assert payload['class'] == 'Pe'
    assert payload['max_log_mod'] == pytest.approx(0.405, abs=0.01)
    assert payload['function']['family'] == 'kummer'


def test_certify_starlike_class(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'certify', '--fn', 'kummer-upsilon', '--a', '2', '--c', '3',
                       '--class', 'Se_star', *FAST)
    assert code == 0
    assert json.loads(out)['status'] == 'verified_on_grid'


def test_certify_excluded_parameter(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'certify', '--fn', 'kummer', '--a', '1', '--c=-2', *FAST)
    assert code == 1
    payload = json.loads(out)
    assert 'error' in payload
    assert 'c not in' in payload['exclusion']


def test_certify_bessel_has_no_series(capsys, cli_args):
    code, _ = invoke(capsys, cli_args, 'certify', '--fn', 'bessel-j', '--nu', '0', *FAST)
    assert code == 1


def test_usage_errors_exit_one(capsys, cli_args):
    assert run(cli_args + ['certify'], environ={}) == 1
    assert run(cli_args + ['frobnicate'], environ={}) == 1
    assert run(cli_args + ['certify', '--fn', 'poly', '--coeffs', '1', '--angles', 'many'], environ={}) == 1
    capsys.readouterr()


def test_bad_plan_is_an_input_error(capsys, cli_args):
    code, _ = invoke(capsys, cli_args, 'certify', '--fn', 'poly', '--coeffs', '1', '--radii', '0.5,1.2')
    assert code == 1


# check

def test_check_hypothesis_fails(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'check', 'CH_P', '--a', '5', '--c', '3')
    assert code == 2
    payload = json.loads(out)
    assert payload['all_satisfied'] is False
    assert payload['conditions'][0]['slack'] == pytest.approx(-4.0)


def test_check_struve(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'check', 'STR_P', '--kappa', '2', '--cparam', '1')
    assert code == 0
    assert json.loads(out)['conditions'][0]['slack'] == pytest.approx(0.39085908577047745)


def test_check_verify(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'check', 'CH_P', '--a=-100', '--c', '102', '--verify', *FAST)
    assert code == 0
    payload = json.loads(out)
    assert payload['all_satisfied'] is True
    [certificate] = payload['certificates']
    assert certificate['certificate']['margin'] > 0


def test_check_rejects_foreign_parameter(capsys, cli_args):
    code, _ = invoke(capsys, cli_args, 'check', 'CH_P', '--a', '1', '--c', '3', '--mu', '2')
    assert code == 1


# figure

def test_figure_csv(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'figure', '--fn', 'kummer-lambda', '--a', '1', '--c', '2',
                       '--quantity', 'convex', '--radius', '0.9', *FAST)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ['theta', 'curve', 're', 'im']
    image = [row for row in rows[1:] if row[1] == 'image']
    boundary = [row for row in rows[1:] if row[1] == 'boundary']
    assert len(image) == len(boundary) == 513
    assert image[0][2:] == image[-1][2:]
    assert boundary[0][2:] == boundary[-1][2:]
    assert float(boundary[0][2]) == pytest.approx(math.e)


def test_figure_is_deterministic(capsys, cli_args, tmp_path):
    argv = ['figure', '--fn', 'struve-u', '--kappa', '2', '--cparam', '1', *FAST]
    first = tmp_path / 'first.csv'
    second = tmp_path / 'second.csv'
    assert run(cli_args + argv + ['--output', str(first)], environ={}) == 0
    assert run(cli_args + argv + ['--output', str(second)], environ={}) == 0
    assert first.read_bytes() == second.read_bytes()
    assert capsys.readouterr().out == ''


def test_figure_rejects_radius_outside_disk(capsys, cli_args):
    code, _ = invoke(capsys, cli_args, 'figure', '--fn', 'poly', '--coeffs', '1', '--format', 'csv', '--radius', '1.5')
    assert code == 1


# settings

def test_angles_from_environment(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'certify', '--fn', 'poly', '--coeffs', '1',
                       environ={'EXPDISK_ANGLES': '300'})
    assert code == 0
    assert json.loads(out)['angles'] == 300


def test_flags_beat_environment(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'certify', '--fn', 'poly', '--coeffs', '1', '--angles', '512',
                       environ={'EXPDISK_ANGLES': '300'})
    assert code == 0
    assert json.loads(out)['angles'] == 512


def test_save_settings(capsys, cli_args, tmp_path):
    code, _ = invoke(capsys, cli_args, 'certify', '--fn', 'poly', '--coeffs', '1', '--angles', '600',
                     '--save-settings')
    assert code == 0
    assert json.loads((tmp_path / 'settings.json').read_text())['angles'] == 600


# suite

def test_select_checks():
    names = [check.name for _, check in select_checks('LOMMEL')]
    assert names == ['ode_residual_lommel', 'anchor_lommel_bessel', 'lommel_example']
    assert len(select_checks(None)) == len(SUITE_CHECKS)
    assert select_checks('no-such-check') == []


def test_suite_filter(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'suite', '--filter', 'lommel', *FAST)
    summary = json.loads(out)
    assert code == 0, summary['failed']
    assert summary['passed'] is True
    assert [check['name'] for check in summary['checks']] == [
        'ode_residual_lommel', 'anchor_lommel_bessel', 'lommel_example']


def test_suite_unknown_filter(capsys, cli_args):
    code, _ = invoke(capsys, cli_args, 'suite', '--filter', 'no-such-check')
    assert code == 1


def test_suite_catches_a_broken_series(capsys, cli_args, monkeypatch):
    original = kummer_module.kummer_series

    def flipped(a, c, *args, **kwargs):
        s = original(a, c, *args, **kwargs)
        coeffs = s.padded(len(s))
        coeffs[2] = -coeffs[2]
        return PowerSeries(coeffs, s.tail_bound, s.r_ref, s.tail_kind)

    monkeypatch.setattr(kummer_module, 'kummer_series', flipped)
    code, out = invoke(capsys, cli_args, 'suite', '--filter', 'ode_residual_kummer', *FAST)
    assert code != 0
    assert json.loads(out)['failed'] == ['ode_residual_kummer']


def test_delta_family_lower_endpoint_is_a_known_counterexample(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'suite', '--filter', 'delta_family')
    summary = json.loads(out)
    assert code == 0, summary['failed']
    measured = summary['checks'][0]['measured']
    lower = next(value for key, value in measured.items() if key.startswith('CH_GDELTA delta=0.71'))
    assert lower == pytest.approx(1.1333446179719728, abs=1e-6)


def test_default_suite_passes(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'suite')
    summary = json.loads(out)
    assert code == 0, summary['failed']
    assert len(summary['checks']) == len(SUITE_CHECKS)


def test_suite_output_is_deterministic(capsys, cli_args):
    _, first = invoke(capsys, cli_args, 'suite', '--filter', 'lommel', *FAST)
    _, second = invoke(capsys, cli_args, 'suite', '--filter', 'lommel', *FAST)
    assert first == second
    assert all(set(check) == {'name', 'tags', 'passed', 'measured'} for check in json.loads(first)['checks'])


def test_certify_logs_the_family_title(capsys, cli_args):
    code = run(cli_args + ['certify', '--fn', 'kummer', '--a=-1', '--c', '3', *FAST], environ={})
    assert code == 0
    assert 'Certifying Kummer function Phi(a; c; z) in Pe' in capsys.readouterr().err


def test_residual_checks_report_the_worst_point(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'suite', '--filter', 'ode_residual_struve', *FAST)
    assert code == 0
    measured = json.loads(out)['checks'][0]['measured']
    assert measured['worst']['max_abs_residual'] == measured['max_residual']
    assert measured['worst']['sample_count'] == 32 * 32
    assert abs(complex(measured['worst']['worst_z']['re'], measured['worst']['worst_z']['im'])) <= 0.99 + 1e-12


def test_kummer_transformation_holds_coefficientwise(capsys, cli_args):
    code, out = invoke(capsys, cli_args, 'suite', '--filter', 'kummer_identities', *FAST)
    assert code == 0
    assert json.loads(out)['checks'][0]['measured']['transformation_error'] <= 1e-12
