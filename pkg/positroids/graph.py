"""
The graph G_D of a dependent set and the polygon P_{n,T}.

D^c is a matroid exactly when every connected component of G_D is complete,
and a positroid exactly when, in addition, every component occupies a cyclic
interval of [n] \\ T_D (D is *nice*).
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType
from typing import Mapping

import networkx as nx

from . import settings as app_settings
from .exceptions import InvariantError, NotAComponentError, SizeLimitError
from .sets import DepSet, nonloop_graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DepGraph:
    n: int
    vanishing: frozenset
    adjacency: Mapping[int, tuple[int, ...]]

    @property
    def polygon(self) -> tuple[int, ...]:
        """Vertices of P_{n,T_D}, in cyclic order."""
        return tuple(self.adjacency)

    def edges(self):
        return [(i, j) for i, neighbours in self.adjacency.items() for j in neighbours if i < j]


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[tuple[int, ...], ...]
    is_complete: tuple[bool, ...]
    is_cyclic_interval: tuple[bool, ...]

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def component_of(self, vertex):
        for component in self.components:
            if vertex in component:
                return component
        return None


@dataclass(frozen=True)
class SplitData:
    """
    The pieces of the polygon around one component C.

    ``outside`` are the components D_1..D_k of P_{n,T} \\ C, ``inside`` the
    maximal cyclic runs F_1..F_k of C along the polygon. Both are listed in
    polygon order starting from the first run of C.
    """
    component: tuple[int, ...]
    outside: tuple[tuple[int, ...], ...]
    inside: tuple[tuple[int, ...], ...]
    covers_all: bool = False

    @property
    def k(self):
        return len(self.inside)

    @property
    def connected(self):
        return len(self.outside) <= 1


def _runs(polygon, members):
    """Alternating maximal cyclic runs (inside, outside) of ``members`` along ``polygon``."""
    flags = [v in members for v in polygon]
    if all(flags):
        return [tuple(sorted(polygon))] if polygon else [], []
    if not any(flags):
        return [], [tuple(sorted(polygon))]
    size = len(polygon)
    start = next(i for i in range(size) if flags[i] and not flags[i - 1])
    inside, outside = [], []
    current, flag = [polygon[start]], True
    for step in range(1, size):
        index = (start + step) % size
        if flags[index] == flag:
            current.append(polygon[index])
            continue
        (inside if flag else outside).append(tuple(sorted(current)))
        current, flag = [polygon[index]], flags[index]
    (inside if flag else outside).append(tuple(sorted(current)))
    return inside, outside


def polygon_minus_connected(polygon, members) -> bool:
    """Whether P \\ C is connected, tested on the literal cycle graph."""
    cycle = nx.cycle_graph(list(polygon)) if len(polygon) > 1 else nx.empty_graph(list(polygon))
    rest = cycle.subgraph(v for v in polygon if v not in members)
    # the empty set and a single vertex count as connected
    return rest.number_of_nodes() <= 1 or nx.is_connected(rest)


@lru_cache(maxsize=8192)
def build_graph(dep: DepSet) -> tuple[DepGraph, ComponentDecomposition]:
    """G_D together with its components, ordered by smallest vertex."""
    graph = nonloop_graph(dep)
    adjacency = {v: tuple(sorted(graph[v])) for v in sorted(graph.nodes)}
    dep_graph = DepGraph(dep.n, dep.loops, MappingProxyType(adjacency))
    polygon = dep_graph.polygon

    components = sorted(tuple(sorted(c)) for c in nx.connected_components(graph))
    complete = []
    interval = []
    for component in components:
        size = len(component)
        edges = graph.subgraph(component).number_of_edges()
        complete.append(edges == size * (size - 1) // 2)
        inside, _ = _runs(polygon, set(component))
        interval.append(len(inside) == 1)
    decomposition = ComponentDecomposition(tuple(components), tuple(complete), tuple(interval))
    return dep_graph, decomposition


def component_count(dep: DepSet) -> int:
    """c(D), the number of connected components of G_D."""
    return len(build_graph(dep)[1])


def is_matroid(dep: DepSet) -> bool:
    return all(build_graph(dep)[1].is_complete)


def is_nice(dep: DepSet) -> bool:
    dep_graph, decomposition = build_graph(dep)
    nice = all(decomposition.is_complete) and all(decomposition.is_cyclic_interval)
    if app_settings.get_setting('CHECK_INVARIANTS'):
        for component, interval in zip(decomposition.components, decomposition.is_cyclic_interval):
            if interval != polygon_minus_connected(dep_graph.polygon, set(component)):
                raise InvariantError(f'interval and polygon tests disagree on {component} in {dep}')
    return nice


def split(dep: DepSet, component) -> SplitData:
    dep_graph, decomposition = build_graph(dep)
    component = tuple(sorted(component))
    if component not in decomposition.components:
        raise NotAComponentError(f'{list(component)} is not a component of G_D for {dep}')
    inside, outside = _runs(dep_graph.polygon, set(component))
    return SplitData(
        component=component,
        outside=tuple(outside),
        inside=tuple(inside),
        covers_all=not outside,
    )


def t_family(dep: DepSet) -> list[frozenset]:
    """
    The family 𝕋_D of vanishing sets parameterising the maximal matroids above D.

    A set T of non-loops belongs to the family when removing any one of its
    elements from T strictly lowers c(D + T). The family is not closed under
    taking subsets, so every subset is examined; c(D + T) is memoised.
    """
    limit = app_settings.get_setting('ENUMERATION_LIMIT')
    if dep.n > limit:
        raise SizeLimitError(f'n={dep.n} exceeds the enumeration limit {limit}')

    graph = nonloop_graph(dep)
    vertices = sorted(graph.nodes)
    counts = {}

    def count(vanishing):
        if vanishing not in counts:
            rest = set(vertices) - vanishing
            # a vertex joined to everything that remains becomes a loop of D + T
            grown = {v for v in rest if rest - {v} <= set(graph[v])}
            counts[vanishing] = nx.number_connected_components(graph.subgraph(rest - grown))
        return counts[vanishing]

    family = []
    for size in range(len(vertices) + 1):
        for combo in combinations(vertices, size):
            vanishing = frozenset(combo)
            current = count(vanishing)
            if all(current > count(vanishing - {i}) for i in vanishing):
                family.append(vanishing)
    logger.debug('t_family: %d of %d subsets of %d vertices', len(family), len(counts), len(vertices))
    return family

