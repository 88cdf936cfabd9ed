"""
Management command to regenerate the flag tables from geometry.
"""
from pathlib import Path

from django.conf import settings
from django.core.management.base import CommandError

from apps.core.exceptions import TilingError
from apps.core.management.base import CHECK_FAILED, TilingCommand
from apps.core.utils import log_activity
from apps.tilings.builder import derive, table_path
from apps.tilings.constants import TilingId
from apps.tilings.tables import dump_table


class Command(TilingCommand):
    help = 'Derive every flag system from geometry and write its table'

    def add_arguments(self, parser):
        parser.add_argument('tilings', nargs='*', help='Tilings to export (default: all eleven)')
        parser.add_argument(
            '--out', default=settings.TILING_TABLE_DIR or 'tables',
            help='Directory to write the .flags files to',
        )

    def handle(self, *args, **options):
        try:
            tilings = [TilingId.parse(name) for name in options['tilings']] or list(TilingId)
        except TilingError as exc:
            raise self.fail(exc) from None
        directory = Path(options['out'])
        directory.mkdir(parents=True, exist_ok=True)

        failed = []
        for tiling in tilings:
            try:
                system = derive(tiling)
            except TilingError as exc:
                raise self.fail(exc) from None
            problems = system.validate()
            if problems:
                self.stdout.write(self.style.ERROR(f'❌ {tiling}: {problems[0]}'))
                failed.append(tiling.value)
                continue
            path = table_path(tiling, directory)
            path.write_text(dump_table(system))
            log_activity('EXPORT', 'tiling', f'flag table of {tiling}', {'path': str(path)})
            self.stdout.write(self.style.SUCCESS(f'✅ {tiling}: {system.class_count} classes -> {path}'))
        if failed:
            raise CommandError(f'invalid flag systems: {", ".join(failed)}', returncode=CHECK_FAILED)
