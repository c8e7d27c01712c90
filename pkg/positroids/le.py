"""
Grassmann necklaces, Le diagrams and the network Γ(L).

These work for any rank k. For rank 2 they give an oracle for positroids that
is independent of the graph characterisation: a bases set is a positroid
exactly when necklace -> diagram -> bases reproduces it.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import networkx as nx

from .exceptions import (
    BoxOutsideShapeError,
    EmptyBasesError,
    MalformedInputError,
    NotLeError,
    OutOfRangeError,
)
from .sets import DepSet, complement, from_pairs, ground

logger = logging.getLogger(__name__)

PLUS = '+'
ZERO = '0'


@dataclass(frozen=True)
class BasesSet:
    n: int
    k: int
    bases: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.k <= self.n:
            raise MalformedInputError(f'invalid rank {self.k} on {self.n} elements')
        for basis in self.bases:
            if len(basis) != self.k or len(set(basis)) != self.k:
                raise MalformedInputError(f'{list(basis)} is not a {self.k}-subset')
            for i in basis:
                if not 1 <= i <= self.n:
                    raise OutOfRangeError(f'element {i} is outside [1, {self.n}]')

    @cached_property
    def basis_set(self) -> frozenset:
        return frozenset(self.bases)

    def __contains__(self, basis):
        return tuple(sorted(basis)) in self.basis_set

    def __len__(self):
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)


def make_bases(n, k, raw_bases) -> BasesSet:
    """Canonical BasesSet: every basis sorted, the family sorted and deduplicated."""
    try:
        bases = {tuple(sorted(basis)) for basis in raw_bases}
    except TypeError:
        raise MalformedInputError(f'bases must be lists of integers, got {raw_bases!r}')
    return BasesSet(n, k, tuple(sorted(bases)))


def bases_of(dep: DepSet) -> BasesSet:
    """The rank-2 bases family D^c."""
    return BasesSet(dep.n, 2, complement(dep).pairs)


def dependents_of(bases: BasesSet) -> DepSet:
    if bases.k != 2:
        raise MalformedInputError(f'dependent sets are defined for rank 2, got rank {bases.k}')
    return from_pairs(bases.n, (p for p in combinations(ground(bases.n), 2) if p not in bases.basis_set))


def shifted_key(i, n):
    """Sort key for the shifted order i <_i i+1 <_i ... <_i n <_i 1 <_i ... <_i i-1."""
    return lambda x: (x - i) % n


@dataclass(frozen=True)
class GrassmannNecklace:
    n: int
    entries: tuple[tuple[int, ...], ...]

    @property
    def k(self):
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, i):
        """I_i, 1-indexed."""
        return self.entries[i - 1]


def necklace_from_bases(bases: BasesSet) -> GrassmannNecklace:
    """I_i is the basis whose elements, sorted under <_i, are lexicographically least."""
    if not bases.bases:
        raise EmptyBasesError('the Grassmann necklace of an empty bases family is undefined')
    entries = []
    for i in ground(bases.n):
        key = shifted_key(i, bases.n)
        minimum = min(bases.bases, key=lambda basis: sorted(map(key, basis)))
        entries.append(minimum)
    return GrassmannNecklace(bases.n, tuple(entries))


def is_necklace(necklace: GrassmannNecklace) -> bool:
    """Whether consecutive entries satisfy I_{i+1} ⊇ I_i \\ {i}."""
    n = necklace.n
    for i in ground(n):
        current = set(necklace[i])
        following = set(necklace[i % n + 1])
        if not current - {i} <= following:
            return False
    return True


@dataclass(frozen=True)
class LeDiagram:
    """
    A {+, 0} filling of a Young shape inside the k x (n-k) box.

    ``fill`` lists the rows top to bottom, each read left to right. The border
    labels come from walking the southeast border from the northeast corner:
    vertical steps label rows, horizontal steps label columns.
    """
    n: int
    k: int
    shape: tuple[int, ...]
    fill: tuple[str, ...]

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.k <= self.n:
            raise MalformedInputError(f'invalid box {self.k} x {self.n - self.k}')
        if len(self.shape) != self.k or len(self.fill) != self.k:
            raise MalformedInputError(f'expected {self.k} rows, got shape {list(self.shape)}')
        previous = self.n - self.k
        for length, row in zip(self.shape, self.fill):
            if not 0 <= length <= previous:
                raise MalformedInputError(f'shape {list(self.shape)} is not a partition inside the box')
            if len(row) != length or set(row) - {PLUS, ZERO}:
                raise MalformedInputError(f'row {row!r} does not fill a row of length {length}')
            previous = length

    @cached_property
    def _border(self):
        rows = []
        columns = {}
        x = self.n - self.k
        label = 1
        for length in self.shape:
            while x > length:
                columns[label] = x
                label, x = label + 1, x - 1
            rows.append(label)
            label += 1
        while x > 0:
            columns[label] = x
            label, x = label + 1, x - 1
        return tuple(rows), columns

    @property
    def row_labels(self) -> tuple[int, ...]:
        """S, top row first."""
        return self._border[0]

    @property
    def column_labels(self) -> tuple[int, ...]:
        """The column labels, leftmost column first."""
        columns = self._border[1]
        return tuple(sorted(columns, key=columns.get))

    def _position(self, a, b):
        rows, columns = self._border
        if a not in rows or b not in columns:
            raise BoxOutsideShapeError(f'({a},{b}) is not a (row, column) label pair')
        r, x = rows.index(a), columns[b]
        if x > self.shape[r]:
            raise BoxOutsideShapeError(f'box ({a},{b}) lies outside the shape {list(self.shape)}')
        return r, x - 1

    def box(self, a, b) -> str:
        r, c = self._position(a, b)
        return self.fill[r][c]

    def boxes(self):
        """Every box as (row label, column label, symbol), top to bottom, left to right."""
        rows = self.row_labels
        columns = self.column_labels
        for r, row in enumerate(self.fill):
            for c, symbol in enumerate(row):
                yield rows[r], columns[c], symbol

    @classmethod
    def from_rows(cls, n, rows, pluses=()) -> 'LeDiagram':
        """The diagram with row labels ``rows`` and a + exactly in the boxes ``pluses``."""
        rows = sorted(rows)
        columns = [t for t in ground(n) if t not in rows]
        shape = tuple(sum(1 for t in columns if t > s) for s in rows)
        pluses = set(pluses)
        fill = []
        for s, length in zip(rows, shape):
            # leftmost column has the largest label
            labels = sorted((t for t in columns if t > s), reverse=True)[:length]
            fill.append(''.join(PLUS if (s, t) in pluses else ZERO for t in labels))
        return cls(n, len(rows), shape, tuple(fill))


def diagram_from_necklace(necklace: GrassmannNecklace) -> LeDiagram:
    """
    The filling prescribed by a necklace; it is returned without checking the Le condition.

    Rows are labelled by I_1. For every i >= 2, pair I_1 \\ I_i in decreasing
    order with I_i \\ I_1 in increasing order and put a + in each paired box.
    """
    n = necklace.n
    first = necklace[1] if n else ()
    rows = set(first)
    pluses = set()
    for i in range(2, n + 1):
        current = set(necklace[i])
        lost = sorted(rows - current, reverse=True)
        gained = sorted(current - rows)
        for a, b in zip(lost, gained):
            if b in rows or b <= a:
                raise BoxOutsideShapeError(f'necklace entry I_{i} asks for box ({a},{b}) outside the shape')
            pluses.add((a, b))
    return LeDiagram.from_rows(n, first, pluses)


def is_le(diagram: LeDiagram) -> bool:
    """Every 0 has only 0s to its left in its row, or only 0s above it in its column."""
    for r, row in enumerate(diagram.fill):
        for c, symbol in enumerate(row):
            if symbol != ZERO:
                continue
            left_clear = PLUS not in row[:c]
            above_clear = all(diagram.fill[above][c] == ZERO for above in range(r))
            if not (left_clear or above_clear):
                return False
    return True


def plus_count(diagram: LeDiagram) -> int:
    return sum(row.count(PLUS) for row in diagram.fill)


@dataclass(frozen=True, eq=False)
class LeNetwork:
    """
    Γ(L): a vertex per row label, per column label and per + box.

    Nodes are ('row', a), ('col', b) and ('box', a, b). Arcs join consecutive
    vertices leftward along rows and downward along columns.
    """
    graph: nx.DiGraph
    sources: tuple[int, ...]
    sinks: tuple[int, ...]


def le_network(diagram: LeDiagram) -> LeNetwork:
    graph = nx.DiGraph()
    rows = diagram.row_labels
    columns = diagram.column_labels
    graph.add_nodes_from(('row', a) for a in rows)
    graph.add_nodes_from(('col', b) for b in columns)

    for r, row in enumerate(diagram.fill):
        a = rows[r]
        chain = [('row', a)]
        for c in reversed(range(len(row))):
            if row[c] == PLUS:
                chain.append(('box', a, columns[c]))
        nx.add_path(graph, chain)

    for c, b in enumerate(columns):
        chain = [
            ('box', rows[r], b)
            for r, row in enumerate(diagram.fill)
            if c < len(row) and row[c] == PLUS
        ]
        chain.append(('col', b))
        nx.add_path(graph, chain)
    return LeNetwork(graph, rows, columns)


def _split_network(network: LeNetwork) -> nx.DiGraph:
    """Unit vertex capacities via the in/out vertex-splitting reduction."""
    flow = nx.DiGraph()
    for v in network.graph.nodes:
        flow.add_edge((v, 'in'), (v, 'out'), capacity=1)
    for u, v in network.graph.edges:
        flow.add_edge((u, 'out'), (v, 'in'), capacity=1)
    return flow


def path_system_exists(network: LeNetwork, sources, sinks, split_graph=None) -> bool:
    """Whether the row labels ``sources`` reach the column labels ``sinks`` by vertex-disjoint paths."""
    sources, sinks = list(sources), list(sinks)
    if len(sources) != len(sinks):
        return False
    if not sources:
        return True
    flow = (split_graph if split_graph is not None else _split_network(network)).copy()
    for a in sources:
        flow.add_edge('source', (('row', a), 'in'), capacity=1)
    for b in sinks:
        flow.add_edge((('col', b), 'out'), 'sink', capacity=1)
    return nx.maximum_flow_value(flow, 'source', 'sink') == len(sources)


def bases_from_le(diagram: LeDiagram) -> BasesSet:
    """B is a basis when (S \\ B, T ∩ B) admits a vertex-disjoint path system in Γ(L)."""
    if not is_le(diagram):
        raise NotLeError('bases are only defined for fillings satisfying the Le condition')
    network = le_network(diagram)
    split_graph = _split_network(network)
    rows = set(diagram.row_labels)
    bases = []
    for candidate in combinations(ground(diagram.n), diagram.k):
        chosen = set(candidate)
        if path_system_exists(network, sorted(rows - chosen), sorted(chosen - rows), split_graph):
            bases.append(candidate)
    return BasesSet(diagram.n, diagram.k, tuple(bases))


def le_of_bases(bases: BasesSet) -> LeDiagram:
    return diagram_from_necklace(necklace_from_bases(bases))


def positroid_roundtrip_check(bases: BasesSet) -> bool:
    """Whether necklace -> diagram -> bases reproduces ``bases`` exactly."""
    if not bases.bases:
        raise EmptyBasesError('the round trip needs a nonempty bases family')
    necklace = necklace_from_bases(bases)
    if not is_necklace(necklace):
        logger.info('round trip rejected: %s is not a Grassmann necklace', list(necklace.entries))
        return False
    try:
        diagram = diagram_from_necklace(necklace)
    except BoxOutsideShapeError as e:
        logger.info('round trip rejected: %s', e)
        return False
    if not is_le(diagram):
        return False
    return bases_from_le(diagram).basis_set == bases.basis_set
