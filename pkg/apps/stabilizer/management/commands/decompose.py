"""
Management command to peel a closed walk into cell-loop conjugates.
"""
from apps.core.exceptions import TilingError
from apps.core.management.base import TilingCommand
from apps.stabilizer.peeling import factor_product, peel
from apps.stabilizer.serializers import PeelFactorSerializer
from apps.words import format_word, free_reduce, parse


class Command(TilingCommand):
    help = 'Decompose a closed walk at the base flag into conjugates of cell loops'

    def add_arguments(self, parser):
        self.add_tiling_argument(parser)
        parser.add_argument('--word', required=True, help='Word expression, e.g. "((ab)^4)^(cb)"')
        parser.add_argument('--json', action='store_true', help='Print the factors as JSON')

    def handle(self, *args, **options):
        system = self.load_system(options['tiling'])
        try:
            word = parse(options['word'])
        except TilingError as exc:
            raise self.usage_error(str(exc)) from None
        try:
            factors = peel(system, word)
        except TilingError as exc:
            raise self.fail(exc) from None

        if options['json']:
            self.write_json({
                'tiling': system.tiling.value,
                'word': options['word'],
                'factors': PeelFactorSerializer(factors, many=True).data,
            })
            return

        self.heading(f'{system.tiling}: {options["word"]}')
        if not factors:
            self.stdout.write('  ε (the word reduces to the empty walk)')
        for index, factor in enumerate(factors):
            self.stdout.write(f'  {index:3d}  {factor.cell.kind.value:6s}  {factor.expression}')
        residual = free_reduce(word) == factor_product(factors)
        self.stdout.write(
            f'{len(factors)} factors; product matches the reduced word: {"yes" if residual else "no"} '
            f'({format_word(free_reduce(word)) or "ε"})'
        )
