from positroids.management.base import PositroidCommand
from positroids.realize import CENSUS_KINDS, census
from positroids.serializers import dep_to_json


class Command(PositroidCommand):
    help = 'Every matroid or nice dependent set on [n]'
    reads_input = False

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Size of the ground set')
        parser.add_argument('--kind', choices=CENSUS_KINDS, default='nice')
        parser.add_argument('--slow', action='store_true', help='Allow n above POSITROID_CENSUS_LIMIT')
        super().add_arguments(parser)

    def run(self, options):
        deps = census(options['n'], options['kind'], slow=options['slow'])
        return [dep_to_json(dep, info=True) for dep in deps]
