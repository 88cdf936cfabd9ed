"""
Management command to describe the flag system of one tiling.
"""
from apps.core.management.base import TilingCommand
from apps.tilings.flags import CellKind
from apps.tilings.serializers import FlagSystemSerializer


class Command(TilingCommand):
    help = 'Show the flag system of a tiling: classes, cover, base flag and cells'

    def add_arguments(self, parser):
        self.add_tiling_argument(parser)
        parser.add_argument('--json', action='store_true', help='Print the summary as JSON')

    def handle(self, *args, **options):
        system = self.load_system(options['tiling'])
        data = FlagSystemSerializer(system, context={'detail': True}).data
        if options['json']:
            self.write_json(data)
            return

        self.heading(f'{system.tiling}')
        p, q = system.cover
        self.stdout.write(f'  flag classes:     {system.class_count}')
        self.stdout.write(f'  regular cover:    {{{p}, {q}}}')
        self.stdout.write(f'  face co-degrees:  {", ".join(str(c) for c in data["codegrees"])}')
        self.stdout.write(f'  base flag:        class {system.base_class} ({system.convention} reading)')
        for kind in CellKind:
            self.stdout.write(f'  {kind.value}-cells per lattice cell: {len(system.cells_in_cell(kind, (0, 0)))}')
        t1, t2 = data['basis']
        self.stdout.write(f'  lattice basis:    ({t1[0]:.4f}, {t1[1]:.4f}) ({t2[0]:.4f}, {t2[1]:.4f})')
        problems = system.validate()
        if problems:
            for problem in problems:
                self.stdout.write(self.style.ERROR(f'  ❌ {problem}'))
        else:
            self.stdout.write(self.style.SUCCESS('  ✅ all flag-system invariants hold'))
