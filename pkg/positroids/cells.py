"""
Positroid cells of rank 2: dimensions, boundaries and intersections.

A nice dependent set D with c(D) >= 2 indexes the cell of dimension
n - |T_D| + c(D) - 4. Sets with fewer than two components are the empty
positroid (rank below 2); they are reported as degenerate and carry no
dimension.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import settings as app_settings
from .enumeration import mat_maximal, mpos
from .exceptions import EmptyBasesError, InvariantError, MalformedInputError, NotNiceError, RankDeficientError
from .graph import build_graph, component_count, is_nice
from .le import BasesSet
from .sets import DepSet, add_vanishing, connect, ground, union

logger = logging.getLogger(__name__)


def _sorted(deps):
    return tuple(sorted(deps, key=lambda dep: dep.sort_key))


def _require_nice(dep: DepSet):
    if not is_nice(dep):
        raise NotNiceError(f'{dep} is not nice; its complement is not a positroid')


@dataclass(frozen=True)
class PositroidCell:
    dep: DepSet
    loops: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    dim: Optional[int]

    @property
    def degenerate(self) -> bool:
        return self.dim is None


def cell(dep: DepSet) -> PositroidCell:
    _require_nice(dep)
    _, decomposition = build_graph(dep)
    components = decomposition.components
    dim = dep.n - len(dep.loops) + len(components) - 4 if len(components) >= 2 else None
    return PositroidCell(dep, tuple(sorted(dep.loops)), components, dim)


def dimension(dep: DepSet) -> int:
    """n - |T_D| + c(D) - 4."""
    result = cell(dep).dim
    if result is None:
        raise RankDeficientError(f'{dep} has fewer than two components; the positroid has rank below 2')
    return result


def top_dimensional(deps) -> list[DepSet]:
    """The members of a list of nice sets with the largest cell dimension; degenerate members never qualify."""
    cells = [cell(dep) for dep in deps]
    dims = [c.dim for c in cells if c.dim is not None]
    if not dims:
        return []
    best = max(dims)
    return list(_sorted(c.dep for c in cells if c.dim == best))


@dataclass(frozen=True)
class Boundary:
    """Boundary cells of one codimension, with the empty-positroid members kept apart."""
    cells: tuple[DepSet, ...]
    degenerate: tuple[DepSet, ...] = ()

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)


def boundary_codim1(dep: DepSet) -> Boundary:
    """
    ∂Pos₁(D): merge two cyclically consecutive components, or make one vertex
    of a component with at least two vertices a loop.
    """
    dimension(dep)
    _, decomposition = build_graph(dep)
    # components are ordered by smallest vertex, which is their cyclic order for nice sets
    components = decomposition.components
    count = len(components)

    candidates = set()
    for i in range(count if count > 2 else 1):
        candidates.add(connect(dep, components[i], components[(i + 1) % count]))
    for component in components:
        if len(component) > 1:
            candidates.update(add_vanishing(dep, {j}) for j in component)

    cells, degenerate = [], []
    for candidate in candidates:
        (cells if component_count(candidate) >= 2 else degenerate).append(candidate)
    if app_settings.get_setting('CHECK_INVARIANTS'):
        expected = dimension(dep) - 1
        for candidate in cells:
            if dimension(candidate) != expected:
                raise InvariantError(f'boundary cell {candidate} of {dep} has dimension {dimension(candidate)}')
    return Boundary(_sorted(cells), _sorted(degenerate))


def _check_codim(codim):
    if isinstance(codim, bool) or not isinstance(codim, int) or codim < 1:
        raise MalformedInputError(f'codimension must be a positive integer, got {codim!r}')


def boundary_codimk(dep: DepSet, codim: int, jobs=None) -> Boundary:
    """Iterate ``boundary_codim1`` ``codim`` times; degenerate members are collected, not expanded."""
    _check_codim(codim)
    dimension(dep)
    jobs = jobs or app_settings.get_setting('JOBS')

    level = {dep}
    degenerate = set()
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for step in range(codim):
            mapper = executor.map if executor else map
            following = set()
            for boundary in mapper(boundary_codim1, _sorted(level)):
                following.update(boundary.cells)
                degenerate.update(boundary.degenerate)
            logger.debug('boundary_codimk: codim %d has %d cells', step + 1, len(following))
            level = following
            if not level:
                break
    finally:
        if executor:
            executor.shutdown()
    return Boundary(_sorted(level), _sorted(degenerate))


@dataclass(frozen=True)
class BoundaryPoset:
    """
    The cells of codimension 0..k below D.

    ``levels[i]`` holds the cells of codimension i; ``arcs`` are the
    codimension-one relations (upper, lower) between consecutive levels.
    """
    levels: tuple[tuple[DepSet, ...], ...]
    arcs: tuple[tuple[DepSet, DepSet], ...]

    def codim_of(self, dep):
        for codim, level in enumerate(self.levels):
            if dep in level:
                return codim
        return None


def boundary_poset(dep: DepSet, codim: int) -> BoundaryPoset:
    _check_codim(codim)
    dimension(dep)
    levels = [(dep,)]
    arcs = []
    for _ in range(codim):
        following = set()
        for upper in levels[-1]:
            lower_cells = boundary_codim1(upper).cells
            following.update(lower_cells)
            arcs.extend((upper, lower) for lower in lower_cells)
        if not following:
            break
        levels.append(_sorted(following))
    arcs.sort(key=lambda arc: (arc[0].sort_key, arc[1].sort_key))
    return BoundaryPoset(tuple(levels), tuple(arcs))


def intersection_mpos(deps) -> list[DepSet]:
    """
    The maximal positroids in the intersection of the closed cells of nice sets.

    For nice inputs MPos of the union coincides with Mat of the union.
    """
    deps = list(deps)
    for dep in deps:
        _require_nice(dep)
    combined = union(*deps)
    result = mat_maximal(combined)
    if app_settings.get_setting('CHECK_INVARIANTS'):
        if result != mpos(combined):
            raise InvariantError(f'Mat and MPos of {combined} differ')
        for member in result:
            _require_nice(member)
    return result


def dualize(bases: BasesSet) -> BasesSet:
    """The dual matroid: every basis replaced by its complement, rank n - k."""
    if not bases.bases:
        raise EmptyBasesError('the dual of an empty bases family is undefined')
    complements = {tuple(i for i in ground(bases.n) if i not in basis) for basis in bases.bases}
    return BasesSet(bases.n, bases.n - bases.k, tuple(sorted(complements)))
