from positroids.cells import top_dimensional
from positroids.enumeration import mpos
from positroids.management.base import PositroidCommand
from positroids.serializers import dep_to_json, read_dep


class Command(PositroidCommand):
    help = 'Maximal positroids contained in the complement of a dependent set'
    accepts_jobs = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--max-dim', action='store_true',
                            help='Keep only the maximal positroids of largest dimension')

    def run(self, options):
        result = mpos(read_dep(self.read(options)), jobs=self.jobs(options))
        if options['max_dim']:
            result = top_dimensional(result)
        return [dep_to_json(dep, info=True) for dep in result]
