from positroids.cells import cell
from positroids.graph import build_graph, is_matroid, is_nice
from positroids.management.base import PositroidCommand
from positroids.serializers import read_dep

PREDICATES = ('matroid', 'positroid')


class Command(PositroidCommand):
    help = 'Decide whether the complement of a dependent set is a matroid or a positroid'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--assert', dest='predicate', choices=PREDICATES,
                            help='Exit with status 1 when the predicate does not hold')

    def run(self, options):
        dep = read_dep(self.read(options))
        _, decomposition = build_graph(dep)
        nice = is_nice(dep)
        dim = cell(dep).dim if nice else None
        return {
            'is_matroid': is_matroid(dep),
            'is_positroid': nice,
            'dim': dim,
            'loops': sorted(dep.loops),
            'components': [list(component) for component in decomposition.components],
        }

    def check_assertion(self, result, options):
        predicate = options.get('predicate')
        if predicate and not result[f'is_{predicate}']:
            self.fail_assertion(f'the complement is not a {predicate}')
