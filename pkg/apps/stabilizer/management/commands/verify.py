"""
Management command to verify the generator catalogs of the uniform tilings.
"""
import time

from django.conf import settings
from django.core.management.base import CommandError

from apps.core.exceptions import TilingError
from apps.core.management.base import CHECK_FAILED, TilingCommand
from apps.core.utils import format_duration
from apps.stabilizer.tasks import verify_catalog_task
from apps.tilings.constants import UNIFORM_TILINGS


class Command(TilingCommand):
    help = 'Check every catalog generator against the flag action; exits 1 if any check fails'

    def add_arguments(self, parser):
        self.add_tiling_argument(parser, nargs='?')
        parser.add_argument('--all', action='store_true', help='Verify all eight uniform tilings')
        parser.add_argument(
            '--range', type=int, default=settings.VERIFY_DEFAULT_RANGE, dest='search_range',
            help='Check conjugates by beta^j gamma^k for |j|, |k| up to this bound',
        )
        parser.add_argument('--json', action='store_true', help='Print the report as JSON')

    def handle(self, *args, **options):
        if options['all'] == bool(options['tiling']):
            raise self.usage_error('give either a tiling name or --all')
        if options['search_range'] < 0:
            raise self.usage_error('--range must be non-negative')

        if options['all']:
            names = [tiling.value for tiling in UNIFORM_TILINGS]
        else:
            names = [self.load_system(options['tiling']).tiling.value]
        started = time.perf_counter()
        try:
            # one task per tiling, collected in tiling order
            results = [verify_catalog_task.delay(name, options['search_range']) for name in names]
            reports = [result.get() for result in results]
        except TilingError as exc:
            raise self.fail(exc) from None

        if options['json']:
            self.write_json(reports if options['all'] else reports[0])
        else:
            for report in reports:
                self.show_report(report, options['search_range'])
            self.stdout.write(f'{len(reports)} catalog(s) checked in {format_duration(time.perf_counter() - started)}')

        failed = [report['tiling'] for report in reports if not all(check['pass'] for check in report['checks'])]
        if failed:
            raise CommandError(f'catalog checks failed for {", ".join(failed)}', returncode=CHECK_FAILED)

    def show_report(self, report, search_range):
        self.heading(f'{report["tiling"]} (range {search_range})')
        for check in report['checks']:
            line = f'{check["name"]}: {check["detail"]}'
            if check['pass']:
                self.stdout.write(self.style.SUCCESS(f'  ✅ {line}'))
            else:
                self.stdout.write(self.style.ERROR(f'  ❌ {line}'))
        self.stdout.write('')
