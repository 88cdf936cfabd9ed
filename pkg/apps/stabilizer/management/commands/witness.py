"""
Management command to build a stabilizer element reaching beyond a distance.
"""
from apps.core.exceptions import TilingError
from apps.core.management.base import TilingCommand
from apps.stabilizer.serializers import WitnessSerializer
from apps.stabilizer.witness import infinite_witness


class Command(TilingCommand):
    help = 'Print a stabilizer element whose walk travels farther than --distance from the base flag'

    def add_arguments(self, parser):
        self.add_tiling_argument(parser)
        parser.add_argument('--distance', type=int, default=0, help='Graph distance the walk must exceed')
        parser.add_argument('--json', action='store_true', help='Print the witness as JSON')

    def handle(self, *args, **options):
        if options['distance'] < 0:
            raise self.usage_error('--distance must be non-negative')
        system = self.load_system(options['tiling'])
        try:
            witness = infinite_witness(system, options['distance'])
        except TilingError as exc:
            raise self.fail(exc) from None

        if options['json']:
            self.write_json(WitnessSerializer(witness).data)
            return
        self.stdout.write(f'sigma = {witness.word}')
        self.stdout.write(f'face {witness.face} of co-degree {witness.codegree}, reached at distance {witness.distance}')
        self.stdout.write(f'max walk distance {witness.max_distance}')
