import json

import pytest

from apps.core.cli import SUBCOMMANDS, main


def test_list_prints_eleven_tilings(capsys):
    assert main(['list']) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 11
    assert lines[0].startswith('3.6.3.6')


def test_list_json(capsys):
    assert main(['list', '--json']) == 0
    names = [entry['name'] for entry in json.loads(capsys.readouterr().out)]
    assert names[-3:] == ['3^6', '4^4', '6^3']


def test_info_shows_the_cover(capsys):
    assert main(['info', '3.4.6.4']) == 0
    assert '{12, 4}' in capsys.readouterr().out


def test_info_json(capsys):
    assert main(['info', '3.4.6.4', '--json']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['cover'] == [12, 4]
    assert data['regular'] is False


def test_unknown_tiling_exits_two_and_lists_names(capsys):
    assert main(['info', '5.5.5']) == 2
    assert '4.8.8' in capsys.readouterr().err


def test_unknown_subcommand(capsys):
    assert main(['frobnicate']) == 2
    assert 'unknown subcommand' in capsys.readouterr().err


def test_missing_subcommand():
    assert main([]) == 2


def test_bad_option_is_a_usage_error():
    assert main(['verify', '4.8.8', '--range', 'many']) == 2


def test_verify_passes(capsys):
    assert main(['verify', '4.8.8', '--range', '3']) == 0
    assert '❌' not in capsys.readouterr().out


def test_verify_json_schema(capsys):
    assert main(['verify', '3.12.12', '--range', '1', '--json']) == 0
    report = json.loads(capsys.readouterr().out)
    assert report['tiling'] == '3.12.12'
    assert all(set(check) == {'name', 'pass', 'detail'} for check in report['checks'])
    assert all(check['pass'] for check in report['checks'])


def test_verify_needs_a_tiling_or_all():
    assert main(['verify']) == 2


def test_verify_regular_tiling_is_a_usage_error(capsys):
    assert main(['verify', '4^4']) == 2
    assert 'uniform tilings only' in capsys.readouterr().err


@pytest.mark.slow
def test_verify_all_at_range_three():
    assert main(['verify', '--all', '--range', '3']) == 0


def test_decompose(capsys):
    assert main(['decompose', '4^4', '--word', '(ab)^4c(ab)^4c']) == 0
    out = capsys.readouterr().out
    assert '2 factors' in out
    assert 'yes' in out


def test_decompose_rejects_an_open_walk():
    assert main(['decompose', '4^4', '--word', 'abc']) == 1


def test_decompose_rejects_bad_syntax():
    assert main(['decompose', '4^4', '--word', '(ab']) == 2


def test_witness(capsys):
    assert main(['witness', '4.8.8', '--distance', '10']) == 0
    out = capsys.readouterr().out
    assert out.startswith('sigma = ')
    assert int(out.strip().rsplit(' ', 1)[-1]) > 10


def test_spanning_tree_emits_generators(tmp_path, capsys):
    out = tmp_path / 'generators.json'
    assert main(['spanning-tree', '4^4', '--radius', '0', '--emit-generators', str(out)]) == 0
    entries = json.loads(out.read_text())
    assert len(entries) == 1
    assert set(entries[0]) == {'edge', 'word'}
    assert len(entries[0]['edge']) == 3


def test_render_writes_svg(tmp_path):
    out = tmp_path / 'patch.svg'
    assert main(['render', '3.6.3.6', '--radius', '1', '--catalog', '--out', str(out)]) == 0
    document = out.read_text(encoding='utf-8')
    assert document.startswith('<?xml')
    assert 'α1' in document


def test_export_writes_tables(tmp_path):
    assert main(['export', '4^4', '6^3', '--out', str(tmp_path)]) == 0
    assert sorted(path.name for path in tmp_path.iterdir()) == ['4-4.flags', '6-3.flags']


def test_every_subcommand_has_a_command():
    from django.core.management import load_command_class

    for app, name in SUBCOMMANDS.values():
        assert load_command_class(f'apps.{app}', name).help


def test_spanning_tree_radius_defaults_to_two():
    from django.core.management import load_command_class

    parser = load_command_class('apps.flag_graph', 'spanning_tree').create_parser('tilings', 'spanning-tree')
    assert parser.parse_args(['4^4']).radius == 2
