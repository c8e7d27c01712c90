from positroids.cells import boundary_codimk, dimension
from positroids.management.base import PositroidCommand
from positroids.serializers import dep_to_json, read_dep


class Command(PositroidCommand):
    help = 'Positroid cells in the boundary of a cell, at a given codimension'
    accepts_jobs = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--codim', type=int, default=1, help='Codimension of the boundary cells (default: 1)')

    def run(self, options):
        dep = read_dep(self.read(options))
        codim = options['codim']
        boundary = boundary_codimk(dep, codim, jobs=self.jobs(options))
        top = dimension(dep)

        def entry(d):
            data = dep_to_json(d, info=True)
            if data['dim'] is not None:
                data['codim_from_input'] = top - data['dim']
            return data

        return {
            'cells': [entry(d) for d in boundary.cells],
            'degenerate': [dep_to_json(d, info=True) for d in boundary.degenerate],
        }
