"""
Command-line entry point.

    python -m apps.core.cli <subcommand> [arguments]

Each subcommand is a management command; `main` maps the public names onto
them and returns the exit status instead of exiting.
"""
import os
import sys

SUBCOMMANDS = {
    'list': ('tilings', 'list_tilings'),
    'info': ('tilings', 'tiling_info'),
    'verify': ('stabilizer', 'verify'),
    'spanning-tree': ('flag_graph', 'spanning_tree'),
    'decompose': ('stabilizer', 'decompose'),
    'witness': ('stabilizer', 'witness'),
    'render': ('rendering', 'render'),
    'export': ('tilings', 'export_tables'),
}

USAGE = 'usage: tilings {' + ','.join(SUBCOMMANDS) + '} [arguments]'


def main(argv=None, prog='tilings'):
    """Run one subcommand; returns 0 on success, 1 when checks fail, 2 on usage errors."""
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ('-h', '--help'):
        sys.stderr.write(USAGE + '\n')
        return 0 if argv else 2
    name, rest = argv[0], argv[1:]
    if name not in SUBCOMMANDS:
        sys.stderr.write(f'{prog}: unknown subcommand {name!r}\n{USAGE}\n')
        return 2

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    import django
    from django.core.management import load_command_class

    django.setup()
    app, command_name = SUBCOMMANDS[name]
    command = load_command_class(f'apps.{app}', command_name)
    try:
        command.run_from_argv([prog, name, *rest])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
