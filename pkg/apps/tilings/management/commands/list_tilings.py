"""
Management command to list the eleven tilings.
"""
from apps.core.management.base import TilingCommand
from apps.tilings.constants import TilingId


class Command(TilingCommand):
    help = 'List the eleven vertex-transitive tilings'

    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', help='Print the names as JSON')

    def handle(self, *args, **options):
        if options['json']:
            self.write_json([
                {'name': tiling.value, 'slug': tiling.slug, 'regular': tiling.is_regular}
                for tiling in TilingId
            ])
            return
        for tiling in TilingId:
            kind = 'regular' if tiling.is_regular else 'uniform'
            self.stdout.write(f'{tiling.value:12s} {kind}')
