"""
Management command to extract the cotree generators of a flag-graph patch.
"""
import json
from pathlib import Path

from django.conf import settings

from apps.core.exceptions import TilingError
from apps.core.management.base import TilingCommand
from apps.core.utils import log_activity
from apps.flag_graph import build_patch, cotree_generators, spanning_tree
from apps.words import format_word


class Command(TilingCommand):
    help = 'Build the BFS spanning tree of a patch and list the generators of its non-tree edges'

    def add_arguments(self, parser):
        self.add_tiling_argument(parser)
        parser.add_argument(
            '--radius', type=int, default=settings.PATCH_DEFAULT_RADIUS, help='Patch radius in lattice cells',
        )
        parser.add_argument('--emit-generators', metavar='OUT', help='Write the generators to this JSON file')

    def handle(self, *args, **options):
        if options['radius'] < 0:
            raise self.usage_error('--radius must be non-negative')
        system = self.load_system(options['tiling'])
        try:
            patch = build_patch(system, options['radius'])
            tree = spanning_tree(patch)
            generators = cotree_generators(patch, tree)
        except TilingError as exc:
            raise self.fail(exc) from None

        self.stdout.write(
            f'{system.tiling} radius {patch.radius}: {len(patch)} flags, {patch.edge_count} edges, '
            f'{len(generators)} cotree generators'
        )
        entries = [
            {'edge': [str(g.source), str(g.target), g.label], 'word': format_word(g.word)}
            for g in generators
        ]
        if options['emit_generators']:
            path = Path(options['emit_generators'])
            path.write_text(json.dumps(entries, indent=2) + '\n')
            log_activity('EXPORT', 'patch', f'cotree generators of {system.tiling}', {
                'radius': patch.radius, 'count': len(entries), 'path': str(path),
            })
            self.stdout.write(self.style.SUCCESS(f'✅ wrote {len(entries)} generators to {path}'))
