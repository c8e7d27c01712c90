from positroids import render
from positroids.cells import boundary_poset
from positroids.le import le_of_bases
from positroids.management.base import PositroidCommand
from positroids.serializers import diagram_from_json, read_bases, read_dep

TARGETS = ('graph', 'lediagram', 'poset')
FORMATS = ('ascii', 'dot')


class Command(PositroidCommand):
    help = 'Draw G_D, a Le diagram or a boundary poset as text or Graphviz DOT'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--target', choices=TARGETS, default='graph')
        parser.add_argument('--format', choices=FORMATS, default='ascii')
        parser.add_argument('--codim', type=int, default=1, help='poset: depth below the input cell (default: 1)')

    def run(self, options):
        data = self.read(options)
        target, fmt = options['target'], options['format']

        if target == 'graph':
            dep = read_dep(data)
            return render.render_graph_dot(dep) if fmt == 'dot' else render.render_graph_ascii(dep)

        if target == 'lediagram':
            if isinstance(data, dict) and 'fill' in data:
                diagram = diagram_from_json(data)
            else:
                diagram = le_of_bases(read_bases(data))
            return render.render_diagram_dot(diagram) if fmt == 'dot' else render.render_ascii(diagram)

        poset = boundary_poset(read_dep(data), options['codim'])
        return render.render_poset_dot(poset) if fmt == 'dot' else render.render_poset_ascii(poset)
