from positroids.cells import intersection_mpos
from positroids.management.base import PositroidCommand
from positroids.serializers import dep_to_json, loads, read_dep


class Command(PositroidCommand):
    help = 'Maximal positroid cells in the intersection of closed positroid cells'
    reads_input = False

    def add_arguments(self, parser):
        parser.add_argument('files', nargs='+', help='JSON files, one nice dependent set each')
        super().add_arguments(parser)

    def run(self, options):
        deps = [read_dep(loads(self.read_text(path))) for path in options['files']]
        return [dep_to_json(dep, info=True) for dep in intersection_mpos(deps)]
