import json

import pytest

from main import HermLcdCli, parse_range, parse_vector
from utils import config
from utils.errors import UsageError

HOP9 = ['--family', 'hop', '--t', '1']


def run_cli(capsys, *argv):
    code = HermLcdCli().run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv, '--json')
    assert code == 0
    return json.loads(out)


def last_error(err):
    return json.loads(err.strip().splitlines()[-1])


def test_parse_helpers():
    assert parse_vector('1,0,3', 'x') == (1, 0, 3)
    assert parse_vector(None, 'x') is None
    assert parse_range('2:4', 'delta-range') == range(2, 5)
    with pytest.raises(UsageError):
        parse_vector('1,a', 'x')
    with pytest.raises(UsageError):
        parse_range('5:2', 'delta-range')


def test_construct_hop(capsys):
    report = run_json(capsys, 'construct', *HOP9, '--distance', 'auto')
    assert report['field'] == {'p': 2, 'k': 2}
    assert (report['n'], report['k'], report['d']) == (9, 2, 6)
    assert report['hlcd'] is True


def test_construct_without_distance(capsys):
    report = run_json(capsys, 'construct', '--family', 'g2', '--m', '4', '--delta', '5')
    assert report['k'] == 60
    assert report['d'] is None
    assert 'distance' not in report


def test_cosets(capsys):
    report = run_json(capsys, 'cosets', '--n', '9', '--base-q', '4')
    assert report['field'] == {'p': 2, 'k': 2}
    assert (report['n'], report['Q'], report['m']) == (9, 4, 3)
    assert sorted(c['leader'] for c in report['cosets']) == [0, 1, 2, 3, 6]
    assert sorted(len(c['members']) for c in report['cosets']) == [1, 1, 1, 3, 3]


def test_cosets_human(capsys):
    code, out, _ = run_cli(capsys, 'cosets', '--n', '9', '--base-q', '4')
    assert code == 0
    assert out.startswith('n=9 Q=4 m=3 (5 cosets)')
    assert 'C_3 = {3}' in out


def test_factor(capsys):
    report = run_json(capsys, 'factor', '--n', '5', '--q', '2')
    assert (report['u'], report['v']) == (1, 1)
    assert report['paired'][0]['leaders'] == [1, 2]
    assert report['self_conjugate'][0]['coeffs'] == [1, 1]


def test_enumerate(capsys):
    report = run_json(capsys, 'enumerate', '--n', '3', '--q', '2')
    assert report['count'] == 8
    assert 'codes' not in report
    listed = run_json(capsys, 'enumerate', '--n', '5', '--q', '2', '--list')
    assert sorted(c['k'] for c in listed['codes']) == [0, 1, 4, 5]


def test_survey_csv(capsys):
    code, out, _ = run_cli(capsys, 'survey', '--family', 'hop', '--t-range', '1:2')
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == 'n,q,delta,k_formula,k_actual,bch_bound,d_exact,hlcd'
    assert lines[1] == '9,2,4,2,2,6,,true'
    assert lines[2].startswith('33,2,')
    assert len(lines) == 3


def test_survey_json(capsys):
    report = run_json(capsys, 'survey', '--family', 'g2', '--m', '4', '--delta-range', '2:4')
    assert report['family'] == 'quaternary-g2'
    assert [r['delta'] for r in report['rows']] == [2, 3, 4]
    assert all(r['k_formula'] == r['k_actual'] for r in report['rows'])


def test_code_describe(capsys):
    report = run_json(capsys, 'code', 'describe', *HOP9)
    assert report['defining_set'] == [0, 1, 2, 4, 5, 7, 8]
    assert report['hermitian_lcd'] is True
    assert report['bch_bound'] == 6
    assert report['distance']['exact'] == 6


def test_code_describe_from_generator_file(capsys, tmp_path):
    path = tmp_path / 'hop9.json'
    path.write_text(json.dumps({'p': 2, 'k': 2, 'n': 9, 'generator': [1, 1, 0, 1, 1, 0, 1, 1]}))
    report = run_json(capsys, 'code', 'describe', '--generator', str(path), '--distance', 'off')
    assert (report['n'], report['k']) == (9, 2)
    assert 'distance' not in report


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv('HERMLCD_BUDGET', '4')
    config.reload_settings()
    report = run_json(capsys, 'code', 'describe', *HOP9)
    assert report['distance']['budget_exceeded'] is True
    assert report['distance']['exact'] is None
    assert report['distance']['lower'] == 6


def test_budget_flag_overrides_environment(capsys, monkeypatch):
    monkeypatch.setenv('HERMLCD_BUDGET', '4')
    config.reload_settings()
    report = run_json(capsys, 'code', 'describe', *HOP9, '--budget', '100000')
    assert report['distance']['exact'] == 6


def test_odsm_setup_text(capsys):
    code, out, _ = run_cli(capsys, 'odsm', 'setup', *HOP9)
    assert code == 0
    assert out.startswith('[9,2] over')
    assert '2 9 2 2' in out
    assert '7 9 2 2' in out


def test_odsm_setup_json(capsys):
    report = run_json(capsys, 'odsm', 'setup', *HOP9)
    assert len(report['G']) == 2
    assert len(report['H']) == 7
    assert len(report['inv_HH']) == 7


def test_odsm_mask_and_check(capsys):
    masked = run_json(capsys, 'odsm', 'mask', *HOP9, '--x', '1,2', '--y', '1,1,1,1,1,1,1')
    assert masked['z'] == [0, 3, 3, 0, 2, 3, 0, 3, 3]
    z = ','.join(map(str, masked['z']))
    check = run_json(capsys, 'odsm', 'check', *HOP9, '--z', z,
                     '--epsilon', '0,1,0,0,1,0,0,0,0', '--y', '1,1,1,1,1,1,1')
    assert check == {'field': {'p': 2, 'k': 2}, 'detected': True,
                     'recovered_y': [1, 0, 0, 1, 1, 1, 1]}
    missed = run_json(capsys, 'odsm', 'check', *HOP9, '--z', z,
                      '--epsilon', '2,0,2,2,0,2,2,0,2', '--y', '1,1,1,1,1,1,1')
    assert missed['detected'] is False


def test_odsm_mask_draws_missing_vectors(capsys):
    first = run_json(capsys, 'odsm', 'mask', *HOP9, '--seed', '3')
    second = run_json(capsys, 'odsm', 'mask', *HOP9, '--seed', '3')
    assert first == second
    assert len(first['x']) == 2
    assert len(first['y']) == 7


def test_odsm_sweep(capsys):
    report = run_json(capsys, 'odsm', 'sweep', *HOP9, '--max-weight', '2')
    assert report['d'] == 6
    assert report['budget_exceeded'] is False
    assert [(r['weight'], r['total'], r['undetected']) for r in report['rows']] == [(1, 27, 0), (2, 324, 0)]


def test_out_file(capsys, tmp_path):
    target = tmp_path / 'reports' / 'hop.json'
    code, out, _ = run_cli(capsys, 'construct', *HOP9, '--json', '--out', str(target))
    assert code == 0
    assert out == ''
    assert json.loads(target.read_text())['n'] == 9


@pytest.mark.parametrize('argv', [
    ['construct'],
    ['construct', '--family', 'hop'],
    ['construct', '--family', 'g1', '--m', '2'],
    ['odsm', 'mask', '--x', '1'],
    ['odsm', 'mask', *HOP9, '--generator', 'g.json'],
    ['survey', '--family', 'hop'],
    ['odsm', 'check', *HOP9, '--z', '1,x', '--epsilon', '0', '--y', '0'],
    ['odsm', 'sweep', *HOP9, '--max-weight', '2', '--samples', '-1'],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run_cli(capsys, *argv)
    assert code == 2


def test_domain_error_exits_1(capsys):
    code, out, err = run_cli(capsys, 'factor', '--n', '6', '--q', '2')
    assert code == 1
    assert out == ''
    assert last_error(err)['error'] == 'not_coprime'


def test_missing_generator_file(capsys, tmp_path):
    code, _, _ = run_cli(capsys, 'code', 'describe', '--generator', str(tmp_path / 'absent.json'))
    assert code == 2


def test_odsm_rejects_non_hlcd_generator(capsys, tmp_path):
    # x^2 + w x + 1 is the minimal polynomial of one of the two nontrivial cosets mod 5
    path = tmp_path / 'len5.json'
    path.write_text(json.dumps({'p': 2, 'k': 2, 'n': 5, 'generator': [1, 2, 1]}))
    code, out, err = run_cli(capsys, 'odsm', 'setup', '--generator', str(path))
    assert code == 1
    assert out == ''
    assert last_error(err)['error'] == 'not_hermitian_lcd'


def test_help_exits_0(capsys):
    code, out, _ = run_cli(capsys, '--help')
    assert code == 0
    assert 'hermlcd' in out


def test_odsm_check_rejects_long_z(capsys):
    code, _, err = run_cli(capsys, 'odsm', 'check', *HOP9, '--z', '0,3,3,0,2,3,0,3,3,3',
                           '--epsilon', '0,1,0,0,1,0,0,0,0', '--y', '1,1,1,1,1,1,1')
    assert code == 1
    assert last_error(err)['error'] == 'dimension_mismatch'
