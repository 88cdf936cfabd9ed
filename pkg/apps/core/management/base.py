"""
Base class for the tiling management commands.
"""
import json

from django.core.management.base import BaseCommand, CommandError

from apps.core.exceptions import CatalogError, UnknownTilingError
from apps.tilings.builder import build

USAGE_ERROR = 2
CHECK_FAILED = 1


class TilingCommand(BaseCommand):
    """Command taking a tiling name; unknown names and bad arguments exit with status 2."""

    requires_system_checks = []

    def add_tiling_argument(self, parser, **kwargs):
        parser.add_argument('tiling', help='Tiling name, e.g. 4.8.8 or 3^6', **kwargs)

    def load_system(self, name):
        try:
            return build(name)
        except UnknownTilingError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR) from None

    def usage_error(self, message):
        return CommandError(message, returncode=USAGE_ERROR)

    def fail(self, exc):
        """CommandError for a library error: status 2 for a tiling the command cannot take, 1 otherwise."""
        returncode = USAGE_ERROR if isinstance(exc, (UnknownTilingError, CatalogError)) else CHECK_FAILED
        return CommandError(str(exc), returncode=returncode)

    def write_json(self, data):
        self.stdout.write(json.dumps(data, indent=2, sort_keys=False))

    def heading(self, text):
        self.stdout.write(self.style.SUCCESS(text))
        self.stdout.write(self.style.SUCCESS('=' * len(text)))
