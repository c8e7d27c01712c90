"""Plain-text and Graphviz DOT renderings."""
import re

from .cells import BoundaryPoset, cell
from .exceptions import MalformedInputError
from .graph import build_graph
from .le import PLUS, LeDiagram, le_network
from .sets import DepSet

ROWS_PREFIX = 'rows:'
COLUMNS_PREFIX = 'columns:'


def render_ascii(diagram: LeDiagram) -> str:
    """
    The non-empty rows of the fill, top first, followed by the border labels.

    The labels line up with the fill: ``columns`` lists the column labels from
    left to right.
    """
    lines = [row for row in diagram.fill if row]
    lines.append(' '.join([ROWS_PREFIX, *map(str, diagram.row_labels)]))
    lines.append(' '.join([COLUMNS_PREFIX, *map(str, diagram.column_labels)]))
    return '\n'.join(lines) + '\n'


def _labels(line, prefix):
    try:
        return [int(token) for token in line[len(prefix):].split()]
    except ValueError:
        raise MalformedInputError(f'bad label line {line!r}')


def parse_ascii(text) -> LeDiagram:
    """Inverse of :func:`render_ascii`."""
    lines = [line.strip() for line in text.strip().splitlines()]
    if len(lines) < 2 or not lines[-2].startswith(ROWS_PREFIX) or not lines[-1].startswith(COLUMNS_PREFIX):
        raise MalformedInputError('a Le diagram ends with a "rows:" line and a "columns:" line')
    grid, rows, columns = lines[:-2], _labels(lines[-2], ROWS_PREFIX), _labels(lines[-1], COLUMNS_PREFIX)
    for line in grid:
        if not re.fullmatch(r'[+0]+', line):
            raise MalformedInputError(f'{line!r} is not a row of + and 0')

    n = len(rows) + len(columns)
    if sorted(rows + columns) != list(range(1, n + 1)):
        raise MalformedInputError(f'labels {rows} and {columns} do not partition 1..{n}')
    pluses = [
        (rows[r], columns[c])
        for r, line in enumerate(grid)
        for c, symbol in enumerate(line)
        if symbol == PLUS and c < len(columns) and r < len(rows)
    ]
    diagram = LeDiagram.from_rows(n, rows, pluses)
    if list(diagram.row_labels) != rows or list(diagram.column_labels) != columns:
        raise MalformedInputError('labels are not in border order')
    if [row for row in diagram.fill if row] != grid:
        raise MalformedInputError(f'rows {grid} do not fit the shape {list(diagram.shape)}')
    return diagram


def render_graph_ascii(dep: DepSet) -> str:
    dep_graph, decomposition = build_graph(dep)
    lines = [f'n: {dep.n}', 'loops: ' + ' '.join(map(str, sorted(dep.loops)))]
    for v, neighbours in dep_graph.adjacency.items():
        lines.append(f'{v}: ' + ' '.join(map(str, neighbours)))
    lines.append('components: ' + ' '.join('{' + ','.join(map(str, c)) + '}' for c in decomposition))
    return '\n'.join(line.rstrip() for line in lines) + '\n'


def render_graph_dot(dep: DepSet) -> str:
    """G_D with solid edges and the polygon P_{n,T} as a dashed cycle; loops are left out."""
    dep_graph, _ = build_graph(dep)
    polygon = dep_graph.polygon
    lines = ['graph G {', '  node [shape=circle];']
    lines.extend(f'  {v};' for v in polygon)
    lines.extend(f'  {i} -- {j};' for i, j in dep_graph.edges())
    if len(polygon) == 2:
        lines.append(f'  {polygon[0]} -- {polygon[1]} [style=dashed];')
    elif len(polygon) > 2:
        for index, v in enumerate(polygon):
            lines.append(f'  {v} -- {polygon[(index + 1) % len(polygon)]} [style=dashed];')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def _node(node):
    kind, *labels = node
    return '"' + kind + '_' + '_'.join(map(str, labels)) + '"'


def render_diagram_dot(diagram: LeDiagram) -> str:
    """The network Γ(L): row and column vertices on the border, one vertex per +."""
    network = le_network(diagram)
    lines = ['digraph L {', '  rankdir=LR;']
    for node in sorted(network.graph.nodes, key=_node):
        shape = 'point' if node[0] == 'box' else 'box'
        label = '' if node[0] == 'box' else f' label="{node[1]}"'
        lines.append(f'  {_node(node)} [shape={shape}{label}];')
    for u, v in sorted(network.graph.edges, key=lambda edge: (_node(edge[0]), _node(edge[1]))):
        lines.append(f'  {_node(u)} -> {_node(v)};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def _cell_label(dep):
    dim = cell(dep).dim
    return f'{dep} dim={dim if dim is not None else "-"}'


def render_poset_ascii(poset: BoundaryPoset) -> str:
    lines = []
    for codim, level in enumerate(poset.levels):
        lines.extend(f'codim {codim}: {_cell_label(dep)}' for dep in level)
    return '\n'.join(lines) + '\n'


def render_poset_dot(poset: BoundaryPoset) -> str:
    """Cells top to bottom by codimension, arcs for the codimension-one relations."""
    ids = {}
    lines = ['digraph boundary {']
    for level in poset.levels:
        lines.append('  { rank=same;')
        for dep in level:
            ids[dep] = f'c{len(ids)}'
            lines.append(f'    {ids[dep]} [label="{_cell_label(dep)}"];')
        lines.append('  }')
    lines.extend(f'  {ids[upper]} -> {ids[lower]};' for upper, lower in poset.arcs)
    lines.append('}')
    return '\n'.join(lines) + '\n'