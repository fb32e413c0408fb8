"""Tests for the command-line interface."""
import json
from unittest.mock import patch

import pandas as pd
import pytest

from src.config import (
    EXIT_BUDGET_INFEASIBLE,
    EXIT_CHECK_FAILED,
    EXIT_INSTANCE_TOO_LARGE,
    EXIT_OK,
    EXIT_OUTPUT_ERROR,
    EXIT_PARSE_ERROR,
    EXIT_UNEXPECTED_ERROR,
    EXIT_VALIDATION_ERROR,
)
from src.generators import cycle_graph, path_graph, star_graph
from src.graph_core import root_tree
from src.graph_io import read_graph, read_vertex_fn, write_graph
from src.main import main
from src.tree_vacc_dp import dyn_tree


@pytest.fixture
def files(tmp_path):
    """Writes graph and vertex-function files on demand."""
    def _write(name, content):
        path = tmp_path / name
        path.write_text(content, encoding='utf-8')
        return str(path)

    def _graph(name, g):
        return str(write_graph(g, tmp_path / name))

    _write.graph = _graph
    return _write


def run(capsys, *argv):
    code = main(['--no-log-file', *argv])
    return code, capsys.readouterr()


# --- hull ---
def test_hull_json(files, capsys):
    g = files.graph('p3.txt', path_graph(3))
    tau = files('tau.txt', 'const 1\n')
    code, out = run(capsys, 'hull', g, tau, '0', '--json')
    assert code == EXIT_OK
    payload = json.loads(out.out)
    assert payload['command'] == 'hull'
    assert payload['result'] == {'hull': [0, 1, 2], 'is_monopoly': True}


def test_hull_blocked(files, capsys):
    g = files.graph('p3.txt', path_graph(3))
    tau = files('tau.txt', '0 1\n1 2\n2 1\n')
    code, out = run(capsys, 'hull', g, tau, '0')
    assert code == EXIT_OK
    assert out.out.strip() == '0'


def test_hull_comma_seeds(files, capsys):
    g = files.graph('p3.txt', path_graph(3))
    tau = files('tau.txt', '0 1\n1 2\n2 1\n')
    code, out = run(capsys, 'hull', g, tau, '0,2')
    assert out.out.strip() == '0 1 2'


@pytest.mark.parametrize("graph_text, seeds, expected", [
    ("3 2\n0 1\n1\n", ['0'], EXIT_PARSE_ERROR),
    ("3 2\n0 1\n1 2\n", ['x'], EXIT_PARSE_ERROR),
    ("3 2\n0 1\n1 2\n", ['7'], EXIT_VALIDATION_ERROR),
    ("3 2\n0 1\n0 1\n", ['0'], EXIT_VALIDATION_ERROR),
])
def test_hull_errors(files, capsys, graph_text, seeds, expected):
    g = files('bad.txt', graph_text)
    tau = files('tau.txt', 'const 1\n')
    code, out = run(capsys, 'hull', g, tau, *seeds)
    assert code == expected
    assert out.out == ''
    assert 'ERROR' in out.err


# --- vacc ---
def test_vacc_emits_checked_increment(files, capsys, tmp_path):
    """P2 with tau = 0, iota_max = 1, b = 2 prints 1 and writes (1, 1)."""
    g = files.graph('p2.txt', path_graph(2))
    tau = files('tau.txt', 'const 0\n')
    iota_max = files('imax.txt', 'const 1\n')
    out_path = tmp_path / 'out' / 'iota.txt'
    code, out = run(capsys, 'vacc', g, tau, iota_max, '--budget', '2', '--emit-increment', str(out_path))
    assert code == EXIT_OK
    assert out.out.strip() == '1'
    assert out_path.read_text(encoding='utf-8') == '0 1\n1 1\n'


def test_vacc_increment_round_trip(files, capsys, tmp_path):
    """Re-reading the emitted increment reproduces the printed value."""
    tree = star_graph(5)
    g = files.graph('star.txt', tree)
    tau = files('tau.txt', '0 2\n1 1\n2 0\n3 1\n4 1\n')
    iota_max = files('imax.txt', 'const 2\n')
    out_path = tmp_path / 'iota.txt'
    code, out = run(capsys, 'vacc', g, tau, iota_max, '-b', '3', '--root', '2', '--emit-increment', str(out_path))
    assert code == EXIT_OK
    iota = read_vertex_fn(out_path, tree.n)
    assert iota.total() == 3
    assert dyn_tree(root_tree(read_graph(g), 0), read_vertex_fn(tau, tree.n) + iota) == int(out.out)


def test_vacc_zero_budget_is_dyn(files, capsys):
    g = files.graph('p3.txt', path_graph(3))
    tau = files('tau.txt', 'const 2\n')
    iota_max = files('imax.txt', 'const 1\n')
    code, out = run(capsys, 'vacc', g, tau, iota_max, '-b', '0')
    assert (code, out.out.strip()) == (EXIT_OK, '2')


def test_vacc_infeasible_budget(files, capsys):
    g = files.graph('p2.txt', path_graph(2))
    tau = files('tau.txt', 'const 0\n')
    iota_max = files('imax.txt', 'const 1\n')
    code, _ = run(capsys, 'vacc', g, tau, iota_max, '-b', '3')
    assert code == EXIT_BUDGET_INFEASIBLE


def test_vacc_rejects_non_tree(files, capsys):
    g = files.graph('c4.txt', cycle_graph(4))
    tau = files('tau.txt', 'const 0\n')
    code, _ = run(capsys, 'vacc', g, tau, tau, '-b', '0')
    assert code == EXIT_VALIDATION_ERROR


def test_vacc_self_check_failure_writes_nothing(files, capsys, tmp_path):
    g = files.graph('p2.txt', path_graph(2))
    tau = files('tau.txt', 'const 0\n')
    iota_max = files('imax.txt', 'const 1\n')
    out_path = tmp_path / 'iota.txt'
    with patch('src.main.dyn_tree', return_value=-1):
        code, _ = run(capsys, 'vacc', g, tau, iota_max, '-b', '2', '--emit-increment', str(out_path))
    assert code == EXIT_CHECK_FAILED
    assert not out_path.exists()


def test_vacc_json_is_stable(files, capsys):
    """Identical inputs give byte-identical JSON."""
    g = files.graph('p3.txt', path_graph(3))
    tau = files('tau.txt', 'const 1\n')
    iota_max = files('imax.txt', 'const 1\n')
    _, first = run(capsys, 'vacc', g, tau, iota_max, '-b', '1', '--json')
    _, second = run(capsys, 'vacc', g, tau, iota_max, '-b', '1', '--json')
    assert first.out == second.out
    payload = json.loads(first.out)
    assert list(payload) == ['command', 'inputs', 'result']
    assert payload['result']['vacc'] == 1


# --- dyn ---
@pytest.mark.parametrize("mode", ['exact', 'tree'])
def test_dyn_modes_agree(files, capsys, mode):
    g = files.graph('p3.txt', path_graph(3))
    tau = files('tau.txt', 'const 2\n')
    code, out = run(capsys, 'dyn', g, tau, '--mode', mode)
    assert (code, out.out.strip()) == (EXIT_OK, '2')


def test_dyn_exact_json_reports_monopoly(files, capsys):
    g = files.graph('p3.txt', path_graph(3))
    tau = files('tau.txt', 'const 2\n')
    _, out = run(capsys, 'dyn', g, tau, '--json')
    assert json.loads(out.out)['result'] == {'dyn': 2, 'mode': 'exact', 'monopoly': [0, 2]}


def test_dyn_exact_too_large(files, capsys):
    g = files.graph('p30.txt', path_graph(30))
    tau = files('tau.txt', 'const 1\n')
    code, _ = run(capsys, 'dyn', g, tau, '--mode', 'exact')
    assert code == EXIT_INSTANCE_TOO_LARGE


# --- check ---
def test_check_formula(files, capsys):
    g = files.graph('star.txt', star_graph(4))
    code, out = run(capsys, 'check', 'formula', g, '--total', '4', '--json')
    assert code == EXIT_OK
    report = json.loads(out.out)['result']['reports'][0]
    assert (report['value'], report['bruteforce'], report['holds']) == (2, 2, True)


def test_check_conjecture_on_six_cycle(files, capsys, tmp_path):
    g = files.graph('c6.txt', cycle_graph(6))
    report_path = tmp_path / 'reports' / 'c6.json'
    code, _ = run(capsys, 'check', 'conjecture1', g, '-b', '9', '--report', str(report_path))
    assert code == EXIT_OK
    saved = json.loads(report_path.read_text(encoding='utf-8'))
    assert saved['result']['holds'] is True


def test_check_theorem2_not_regular(files, capsys):
    g = files.graph('p3.txt', path_graph(3))
    code, _ = run(capsys, 'check', 'theorem2', g)
    assert code == EXIT_VALIDATION_ERROR


def test_check_khza_sweep(files, capsys):
    """Without a budget the checker sweeps 0..2m."""
    g = files.graph('p4.txt', path_graph(4))
    code, out = run(capsys, 'check', 'khza', g, '--json')
    assert code == EXIT_OK
    assert json.loads(out.out)['inputs']['budgets'] == list(range(7))


def test_check_failure_sets_exit_code(files, capsys):
    """A failing statement makes the command usable as a CI gate."""
    class _Failing:
        def to_dict(self):
            return {'budget': 0, 'holds': False}

    g = files.graph('p3.txt', path_graph(3))
    with patch.dict('src.main._CHECKERS', {'khza': lambda g, b, size_limit=None: _Failing()}):
        code, out = run(capsys, 'check', 'khza', g, '-b', '0')
    assert code == EXIT_CHECK_FAILED
    assert 'FAILS' in out.out


# --- gen / profile ---
def test_gen_path(capsys):
    code, out = run(capsys, 'gen', 'path', '3')
    assert code == EXIT_OK
    assert out.out == '3 2\n0 1\n1 2\n'


def test_gen_random_tree_to_file(capsys, tmp_path):
    path = tmp_path / 'tree.txt'
    code, _ = run(capsys, 'gen', 'random-tree', '9', '4', '-o', str(path))
    assert code == EXIT_OK
    root_tree(read_graph(path), 0)


def test_profile_csv(files, capsys, tmp_path):
    g = files.graph('star.txt', star_graph(4))
    tau = files('tau.txt', 'const 0\n')
    iota_max = files('imax.txt', '0 3\n1 1\n2 1\n3 1\n')
    csv_path = tmp_path / 'profile.csv'
    code, out = run(capsys, 'profile', g, tau, iota_max, '-b', '4', '--csv', str(csv_path))
    assert code == EXIT_OK
    df = pd.read_csv(csv_path)
    assert list(df.columns) == ['budget', 'vacc']
    assert df['vacc'].tolist()[2] == 0
    assert df['vacc'].tolist()[4] == 1
    assert out.out.splitlines()[4] == '4 1'


def test_log_file_under_data_dir(files, capsys, tmp_path):
    g = files.graph('p3.txt', path_graph(3))
    tau = files('tau.txt', 'const 1\n')
    code = main(['--data-dir', str(tmp_path / 'data'), 'dyn', g, tau])
    capsys.readouterr()
    assert code == EXIT_OK
    assert (tmp_path / 'data' / 'logs' / 'vacc_tree.log').exists()


# --- I/O failures ---
def test_non_utf8_graph_is_parse_error(files, capsys, tmp_path):
    bad = tmp_path / 'latin.txt'
    bad.write_bytes(b'1 \xff2\n')
    tau = files('tau.txt', 'const 1\n')
    code, out = run(capsys, 'hull', str(bad), tau, '0')
    assert code == EXIT_PARSE_ERROR
    assert out.out == ''


def _blocked_dir(tmp_path):
    """A regular file standing where an output directory should be."""
    blocker = tmp_path / 'blocker'
    blocker.write_text('x', encoding='utf-8')
    return blocker


def test_check_unwritable_report(files, capsys, tmp_path):
    g = files.graph('p3.txt', path_graph(3))
    report_path = _blocked_dir(tmp_path) / 'r.json'
    code, out = run(capsys, 'check', 'khza', g, '-b', '1', '--report', str(report_path))
    assert code == EXIT_OUTPUT_ERROR
    assert not report_path.exists()
    assert out.out == ''


def test_profile_unwritable_csv(files, capsys, tmp_path):
    g = files.graph('star.txt', star_graph(4))
    tau = files('tau.txt', 'const 0\n')
    iota_max = files('imax.txt', 'const 1\n')
    csv_path = _blocked_dir(tmp_path) / 'p.csv'
    code, _ = run(capsys, 'profile', g, tau, iota_max, '-b', '2', '--csv', str(csv_path))
    assert code == EXIT_OUTPUT_ERROR
    assert not csv_path.exists()


def test_vacc_unwritable_increment(files, capsys, tmp_path):
    g = files.graph('p2.txt', path_graph(2))
    tau = files('tau.txt', 'const 0\n')
    iota_max = files('imax.txt', 'const 1\n')
    out_path = _blocked_dir(tmp_path) / 'iota.txt'
    code, _ = run(capsys, 'vacc', g, tau, iota_max, '-b', '2', '--emit-increment', str(out_path))
    assert code == EXIT_OUTPUT_ERROR


def test_bare_report_goes_under_data_dir(files, capsys, tmp_path):
    g = files.graph('p3.txt', path_graph(3))
    data_dir = tmp_path / 'data'
    code = main(['--no-log-file', '--data-dir', str(data_dir), 'check', 'khza', g, '-b', '1', '--report'])
    capsys.readouterr()
    assert code == EXIT_OK
    saved = json.loads((data_dir / 'reports' / 'khza_p3.json').read_text(encoding='utf-8'))
    assert saved['inputs']['budgets'] == [1]
    assert saved['result']['holds'] is True


def test_crash_is_not_a_failed_check(files, capsys):
    """An exception inside a checker exits with its own code, not the FAILS code."""
    def _boom(g, b, size_limit=None):
        raise RuntimeError('boom')

    g = files.graph('p3.txt', path_graph(3))
    with patch.dict('src.main._CHECKERS', {'khza': _boom}):
        code, out = run(capsys, 'check', 'khza', g, '-b', '0')
    assert code == EXIT_UNEXPECTED_ERROR
    assert code != EXIT_CHECK_FAILED
    assert 'FAILS' not in out.out
