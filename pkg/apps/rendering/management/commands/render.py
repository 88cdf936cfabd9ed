"""
Management command to draw a tiling patch as SVG.
"""
from pathlib import Path

from django.conf import settings

from apps.core.exceptions import TilingError
from apps.core.management.base import TilingCommand
from apps.rendering.render import RenderSpec, catalog_walks, render_svg


class Command(TilingCommand):
    help = 'Render a patch of the tiling with its flags, base flag and highlighted walks as SVG'

    def add_arguments(self, parser):
        self.add_tiling_argument(parser)
        parser.add_argument('--radius', type=int, default=settings.RENDER_DEFAULT_RADIUS)
        parser.add_argument(
            '--walk', action='append', default=[], dest='walks', metavar='WORD',
            help='Word expression to highlight; may be repeated',
        )
        parser.add_argument(
            '--catalog', action='store_true',
            help='Highlight the elliptic generators and the two translation words',
        )
        parser.add_argument('--no-base-flag', action='store_true', help='Do not mark the base flag')
        parser.add_argument('--scale', type=float, default=40.0)
        parser.add_argument('--out', help='Write the SVG here instead of standard output')

    def handle(self, *args, **options):
        system = self.load_system(options['tiling'])
        walks = list(options['walks'])
        labels = list(options['walks'])
        try:
            if options['catalog']:
                extra_walks, extra_labels = catalog_walks(system)
                walks += extra_walks
                labels += extra_labels
            spec = RenderSpec(
                tiling=system.tiling,
                radius=options['radius'],
                highlight_walks=tuple(walks),
                labels=tuple(labels),
                show_base_flag=not options['no_base_flag'],
                scale=options['scale'],
            )
        except TilingError as exc:
            raise self.usage_error(str(exc)) from None

        document = render_svg(spec)
        if options['out']:
            Path(options['out']).write_text(document, encoding='utf-8')
            self.stdout.write(self.style.SUCCESS(f'✅ wrote {options["out"]}'))
        else:
            self.stdout.write(document, ending='')
