"""
Exact witnesses and brute-force oracles.

``realize_nice`` builds a 2 x n matrix over the rationals whose minors are
positive exactly off D, and ``census`` lists every matroid or nice dependent
set of a small ground set. The test-suite checks the rest of the package
against these.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import settings as app_settings
from .cells import dimension
from .enumeration import minimal_members
from .exceptions import (
    DimensionMismatchError,
    InvariantError,
    MalformedInputError,
    NotNiceError,
    RankDeficientError,
    SizeLimitError,
)
from .graph import build_graph, component_count, is_nice
from .le import BasesSet
from .sets import DepSet, closure, from_pairs, ground, make_pair

logger = logging.getLogger(__name__)

Column = tuple[Fraction, Fraction]

ZERO_COLUMN = (Fraction(0), Fraction(0))


@dataclass(frozen=True)
class WitnessMatrix:
    n: int
    columns: tuple[Column, ...]

    def __post_init__(self):
        if len(self.columns) != self.n:
            raise DimensionMismatchError(f'expected {self.n} columns, got {len(self.columns)}')
        for column in self.columns:
            if len(column) != 2 or not all(isinstance(x, Fraction) for x in column):
                raise MalformedInputError(f'{column!r} is not a pair of rationals')

    def column(self, i) -> Column:
        return self.columns[i - 1]

    def minor(self, i, j) -> Fraction:
        """det of columns (i, j)."""
        (a, b), (c, d) = self.column(i), self.column(j)
        return a * d - b * c


def realize_nice(dep: DepSet) -> WitnessMatrix:
    """
    A totally non-negative witness for a nice set.

    Reading the polygon from the first vertex p that starts a component,
    every component gets the column (1, r) with r its rank in that reading.
    Elements before p were moved past n by the shift, so their columns are
    negated; loops get zero columns.
    """
    if not is_nice(dep):
        raise NotNiceError(f'{dep} is not nice; its complement is not a positroid')
    dep_graph, decomposition = build_graph(dep)
    if len(decomposition) < 2:
        raise RankDeficientError(f'{dep} has fewer than two components; no rank 2 witness exists')

    polygon = dep_graph.polygon
    owner = {v: component for component in decomposition for v in component}
    start = next(i for i in range(len(polygon)) if owner[polygon[i]] != owner[polygon[i - 1]])
    first = polygon[start]

    ranks = {}
    for v in polygon[start:] + polygon[:start]:
        ranks.setdefault(owner[v], len(ranks))

    columns = []
    for i in ground(dep.n):
        if i in dep.loops:
            columns.append(ZERO_COLUMN)
            continue
        sign = -1 if i < first else 1
        columns.append((Fraction(sign), Fraction(sign * ranks[owner[i]])))
    witness = WitnessMatrix(dep.n, tuple(columns))

    if app_settings.get_setting('CHECK_INVARIANTS') and not verify_witness(witness, dep):
        raise InvariantError(f'witness for {dep} has the wrong sign pattern')
    return witness


def verify_witness(witness: WitnessMatrix, dep: DepSet) -> bool:
    """Whether minor(i, j) > 0 off D and minor(i, j) = 0 on D, for all i < j."""
    if witness.n != dep.n:
        raise DimensionMismatchError(f'witness has {witness.n} columns but n={dep.n}')
    for i, j in combinations(ground(dep.n), 2):
        value = witness.minor(i, j)
        if (i, j) in dep:
            if value != 0:
                return False
        elif value <= 0:
            return False
    return True


def brute_matroid_check(bases: BasesSet) -> bool:
    """The basis exchange axiom, checked pair by pair."""
    if not bases.bases:
        return False
    family = bases.basis_set
    for first in bases.bases:
        for second in bases.bases:
            for b1 in set(first) - set(second):
                base = set(first) - {b1}
                if not any(tuple(sorted(base | {b2})) in family for b2 in set(second) - set(first)):
                    return False
    return True


def _set_partitions(elements):
    if not elements:
        yield []
        return
    head, rest = elements[0], elements[1:]
    for partition in _set_partitions(rest):
        yield [[head]] + partition
        for index in range(len(partition)):
            yield partition[:index] + [[head] + partition[index]] + partition[index + 1:]


def _cyclic_partitions(elements):
    """Partitions of a cyclic sequence into runs, one per nonempty set of cut positions."""
    size = len(elements)
    if size == 0:
        yield []
        return
    yield [list(elements)]
    for cut_count in range(1, size + 1):
        for cuts in combinations(range(size), cut_count):
            start = cuts[0] + 1
            rotated = elements[start:] + elements[:start]
            offsets = [(cut - cuts[0]) for cut in cuts[1:]] + [size]
            blocks, previous = [], 0
            for offset in offsets:
                blocks.append(rotated[previous:offset])
                previous = offset
            yield blocks


def _from_blocks(n, vanishing, blocks) -> DepSet:
    pairs = {make_pair(t, j) for t in vanishing for j in ground(n) if j != t}
    for block in blocks:
        pairs.update(combinations(sorted(block), 2))
    return closure(from_pairs(n, pairs))


CENSUS_KINDS = ('matroids', 'nice')


def census(n: int, kind: str, slow: bool = False) -> list[DepSet]:
    """
    Every matroid (or nice) dependent set on [n].

    Matroids are generated as a loop set T together with a set partition of
    [n] \\ T into complete components; nice sets restrict the partition to
    cyclic runs.
    """
    if kind not in CENSUS_KINDS:
        raise MalformedInputError(f'census kind must be one of {CENSUS_KINDS}, got {kind!r}')
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise MalformedInputError(f'ground set size must be a non-negative integer, got {n!r}')
    limit = app_settings.get_setting('CENSUS_LIMIT')
    if n > limit and not slow:
        raise SizeLimitError(f'census of n={n} exceeds the limit {limit}; pass --slow to force it')

    partitions = _set_partitions if kind == 'matroids' else _cyclic_partitions
    found = set()
    for size in range(n + 1):
        for vanishing in combinations(ground(n), size):
            rest = [i for i in ground(n) if i not in vanishing]
            for blocks in partitions(rest):
                found.add(_from_blocks(n, vanishing, blocks))
    logger.info('census(%d, %s): %d dependent sets', n, kind, len(found))
    return sorted(found, key=lambda dep: dep.sort_key)


def brute_mpos(dep: DepSet, nice_sets=None) -> list[DepSet]:
    """The inclusion-maximal positroids above D, found by scanning every nice set."""
    if nice_sets is None:
        nice_sets = census(dep.n, 'nice')
    return minimal_members(f for f in nice_sets if dep.issubset(f))


def brute_boundary(dep: DepSet, codim: int = 1, nice_sets=None) -> list[DepSet]:
    """The nice F ⊋ D with c(F) >= 2 and dim F = dim D - codim, by scanning every nice set."""
    if nice_sets is None:
        nice_sets = census(dep.n, 'nice')
    target = dimension(dep) - codim
    return sorted(
        (
            f for f in nice_sets
            if f != dep and dep.issubset(f) and component_count(f) >= 2 and dimension(f) == target
        ),
        key=lambda f: f.sort_key,
    )


def brute_matroids(n: int) -> list[DepSet]:
    """Every D ⊆ C(n,2) whose complement passes the exchange axiom, by scanning all 2^C(n,2) subsets."""
    pairs = list(combinations(ground(n), 2))
    found = []
    for mask in range(1 << len(pairs)):
        chosen = {pair for bit, pair in enumerate(pairs) if mask >> bit & 1}
        bases = BasesSet(n, 2, tuple(pair for pair in pairs if pair not in chosen))
        if brute_matroid_check(bases):
            found.append(from_pairs(n, chosen))
    return sorted(found, key=lambda dep: dep.sort_key)

