import pytest

from apps.core.exceptions import TableFormatError
from apps.tilings.builder import build, clear_cache, table_path
from apps.tilings.tables import dump_table, load_table


@pytest.mark.parametrize('name', ['4^4', '3.6.3.6', '4.6.12', '3.3.3.3.6'])
def test_tables_reload_exactly(name):
    system = build(name)
    loaded = load_table(dump_table(system))
    assert loaded.tiling == system.tiling
    assert loaded.adjacency == system.adjacency
    assert loaded.triangles == system.triangles
    assert loaded.basis == system.basis
    assert loaded.base_class == system.base_class
    assert loaded.convention == system.convention
    assert loaded.face_classes == system.face_classes


def test_table_header():
    text = dump_table(build('4^4'))
    assert text.splitlines()[:6] == [
        'flag-system 1', 'tiling 4^4', 'convention as-written', 'classes 8', 'base 0', 'cover 4 4',
    ]
    assert text.endswith('end\n')


def test_comments_and_blank_lines_are_ignored():
    text = dump_table(build('4^4')).replace('adjacency\n', '# reflections\n\nadjacency\n')
    assert load_table(text).class_count == 8


@pytest.mark.parametrize('mutate, line_number', [
    (lambda lines: lines.__setitem__(0, 'flag-system 9'), 1),
    (lambda lines: lines.__setitem__(2, 'convention sideways'), 3),
    (lambda lines: lines.__setitem__(3, 'classes eight'), 4),
    (lambda lines: lines.__setitem__(8, '0 1 0 0 2 0'), 9),
])
def test_malformed_tables_report_the_line(mutate, line_number):
    lines = dump_table(build('4^4')).splitlines()
    mutate(lines)
    with pytest.raises(TableFormatError) as excinfo:
        load_table('\n'.join(lines))
    assert excinfo.value.line_number == line_number


def test_truncated_table():
    text = dump_table(build('4^4'))
    with pytest.raises(TableFormatError):
        load_table(text[: len(text) // 2])


def test_build_prefers_exported_tables(tmp_path, settings):
    system = build('6^3')
    settings.TILING_TABLE_DIR = str(tmp_path)
    table_path(system.tiling).write_text(dump_table(system))
    clear_cache()
    try:
        reloaded = build('6^3')
        assert reloaded is not system
        assert reloaded.adjacency == system.adjacency
    finally:
        settings.TILING_TABLE_DIR = ''
        clear_cache()


def test_reversed_convention_loads():
    text = dump_table(build('4^4')).replace('convention as-written', 'convention reversed')
    assert load_table(text).convention == 'reversed'
