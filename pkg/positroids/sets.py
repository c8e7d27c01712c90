"""
Ground-set arithmetic and the dependent-set operators.

A dependent set D is a collection of 2-subsets of the cyclically ordered
ground set [n] = {1, ..., n}. Every value here is immutable; every function
returns a new canonical :class:`DepSet`.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import networkx as nx

from .exceptions import (
    DegeneratePairError,
    DimensionMismatchError,
    MalformedInputError,
    OutOfRangeError,
    OverlapError,
)

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


def ground(n):
    """The elements 1..n in their cyclic order."""
    return range(1, n + 1)


def make_pair(i, j) -> Pair:
    return (i, j) if i < j else (j, i)


def all_pairs(n):
    return list(combinations(ground(n), 2))


@dataclass(frozen=True)
class DepSet:
    """
    A canonical dependent set: pairs (lo, hi) with lo < hi, sorted, no duplicates.

    Build instances with :func:`canonicalize` when the input is untrusted.
    """
    n: int
    pairs: tuple[Pair, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise MalformedInputError(f'ground set size must be >= 0, got {self.n}')

    @cached_property
    def pair_set(self) -> frozenset:
        return frozenset(self.pairs)

    @cached_property
    def loops(self) -> frozenset:
        degree = dict.fromkeys(ground(self.n), 0)
        for i, j in self.pairs:
            degree[i] += 1
            degree[j] += 1
        return frozenset(i for i, d in degree.items() if d == self.n - 1)

    def __contains__(self, pair):
        i, j = pair
        return make_pair(i, j) in self.pair_set

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def issubset(self, other: 'DepSet') -> bool:
        return self.n == other.n and self.pair_set <= other.pair_set

    def issuperset(self, other: 'DepSet') -> bool:
        return other.issubset(self)

    @property
    def sort_key(self):
        return self.pairs

    def __str__(self):
        body = ','.join(f'{i}{j}' if self.n < 10 else f'{i}-{j}' for i, j in self.pairs)
        return f'D[n={self.n}]{{{body}}}'


def from_pairs(n, pairs) -> DepSet:
    """Build a DepSet from pairs already known to be valid (lo < hi, in range)."""
    return DepSet(n, tuple(sorted(set(pairs))))


def _check_element(i, n):
    if isinstance(i, bool) or not isinstance(i, int):
        raise MalformedInputError(f'element {i!r} is not an integer')
    if not 1 <= i <= n:
        raise OutOfRangeError(f'element {i} is outside [1, {n}]')


def canonicalize(raw_pairs, n) -> DepSet:
    """
    Turn a list of integer pairs into a canonical DepSet.

    Pairs may be given in either order and may repeat; each entry must lie in
    [n] and the two entries of a pair must differ.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise MalformedInputError(f'ground set size must be a non-negative integer, got {n!r}')
    pairs = set()
    for raw in raw_pairs:
        try:
            i, j = raw
        except (TypeError, ValueError):
            raise MalformedInputError(f'{raw!r} is not a pair')
        _check_element(i, n)
        _check_element(j, n)
        if i == j:
            raise DegeneratePairError(f'pair {{{i}, {j}}} has a repeated element')
        pairs.add(make_pair(i, j))
    return from_pairs(n, pairs)


def loops(dep: DepSet) -> frozenset:
    """T_D: the elements paired with every other element."""
    return dep.loops


def complement(dep: DepSet) -> DepSet:
    return DepSet(dep.n, tuple(p for p in combinations(ground(dep.n), 2) if p not in dep.pair_set))


def _check_vertices(vertices, n):
    vertices = frozenset(vertices)
    for i in vertices:
        _check_element(i, n)
    return vertices


def add_vanishing(dep: DepSet, vanishing) -> DepSet:
    """D + T: every element of T becomes a loop."""
    vanishing = _check_vertices(vanishing, dep.n)
    if not vanishing:
        return dep
    extra = {make_pair(i, j) for i in vanishing for j in ground(dep.n) if j != i}
    return from_pairs(dep.n, dep.pair_set | extra)


def nonloop_graph(dep: DepSet) -> nx.Graph:
    """The graph G_D on [n] \\ T_D whose edges are the pairs of D among non-loops."""
    graph = nx.Graph()
    graph.add_nodes_from(i for i in ground(dep.n) if i not in dep.loops)
    graph.add_edges_from((i, j) for i, j in dep.pairs if i not in dep.loops and j not in dep.loops)
    return graph


def closure(dep: DepSet) -> DepSet:
    """
    Complete every connected component of G_D.

    Completing a component can turn its vertices into loops, which changes
    G_D, so the completion is repeated until nothing new is added.
    """
    current = dep
    while True:
        graph = nonloop_graph(current)
        added = {
            make_pair(i, j)
            for component in nx.connected_components(graph)
            for i, j in combinations(sorted(component), 2)
        }
        if added <= current.pair_set:
            return current
        current = from_pairs(current.n, current.pair_set | added)


def connect(dep: DepSet, left, right) -> DepSet:
    """C·W: join every vertex of ``left`` to every vertex of ``right``, then close."""
    left = _check_vertices(left, dep.n)
    right = _check_vertices(right, dep.n)
    overlap = left & right
    if overlap:
        raise OverlapError(f'vertex sets share {sorted(overlap)}')
    extra = {make_pair(i, j) for i in left for j in right}
    return closure(from_pairs(dep.n, dep.pair_set | extra))


def union(*deps: DepSet) -> DepSet:
    if not deps:
        raise MalformedInputError('union of no dependent sets')
    n = deps[0].n
    if any(dep.n != n for dep in deps):
        raise DimensionMismatchError(f'ground sets differ: {sorted({dep.n for dep in deps})}')
    return from_pairs(n, frozenset().union(*(dep.pair_set for dep in deps)))


@dataclass(frozen=True)
class Relabeling:
    """A bijection of [n]; ``perm[i - 1]`` is the new label of ``i``."""
    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(ground(len(self.perm))):
            raise MalformedInputError(f'{list(self.perm)} is not a permutation of 1..{len(self.perm)}')

    @property
    def n(self):
        return len(self.perm)

    def __call__(self, i):
        return self.perm[i - 1]

    @property
    def order(self) -> tuple[int, ...]:
        """The old labels listed by increasing new label."""
        return self.inverse().perm

    def inverse(self) -> 'Relabeling':
        inverse = [0] * self.n
        for old, new in enumerate(self.perm, start=1):
            inverse[new - 1] = old
        return Relabeling(tuple(inverse))

    @classmethod
    def identity(cls, n):
        return cls(tuple(ground(n)))

    @classmethod
    def cyclic_shift(cls, n, shift=1):
        return cls(tuple((i - 1 + shift) % n + 1 for i in ground(n)))

    @classmethod
    def from_order(cls, order):
        """The relabeling sending ``order[k]`` to ``k + 1``."""
        perm = [0] * len(order)
        for new, old in enumerate(order, start=1):
            if not 1 <= old <= len(order):
                raise MalformedInputError(f'{list(order)} is not an ordering of 1..{len(order)}')
            perm[old - 1] = new
        return cls(tuple(perm))


def relabel(dep: DepSet, relabeling: Relabeling) -> DepSet:
    if relabeling.n != dep.n:
        raise DimensionMismatchError(f'relabeling of {relabeling.n} elements applied to n={dep.n}')
    return from_pairs(dep.n, (make_pair(relabeling(i), relabeling(j)) for i, j in dep.pairs))
