"""
Maximal matroids and maximal positroids above a dependent set.

Everything here works with dependent sets, so "maximal matroid" means an
inclusion-minimal dependent set whose complement is a matroid.
"""
import logging
from concurrent.futures import ProcessPoolExecutor

from . import settings as app_settings
from .exceptions import DimensionMismatchError, InvariantError, NotAMatroidError
from .graph import build_graph, is_matroid, is_nice, split, t_family
from .sets import DepSet, Relabeling, add_vanishing, closure, connect, relabel

logger = logging.getLogger(__name__)


def _sorted(deps):
    return sorted(deps, key=lambda dep: dep.sort_key)


def minimal_members(deps) -> list[DepSet]:
    """The members of ``deps`` that strictly contain no other member."""
    deps = set(deps)
    return _sorted(
        dep for dep in deps
        if not any(other.pair_set < dep.pair_set for other in deps)
    )


def _check_antichain(deps):
    for dep in deps:
        for other in deps:
            if other is not dep and other.pair_set < dep.pair_set:
                raise InvariantError(f'{dep} strictly contains {other}')


def mat_maximal(dep: DepSet) -> list[DepSet]:
    """Mat(D): the closures of D + T for T in the family 𝕋_D."""
    closures = {closure(add_vanishing(dep, vanishing)) for vanishing in t_family(dep)}
    result = minimal_members(closures)
    if len(result) != len(closures):
        dropped = sorted(str(d) for d in closures.difference(result))
        logger.warning('mat_maximal(%s): dropped non-maximal closures %s', dep, dropped)
    if app_settings.get_setting('CHECK_INVARIANTS'):
        _check_antichain(result)
    return result


def expand(dep: DepSet) -> tuple[bool, list[DepSet]]:
    """
    One step of the worklist for a matroid dependent set F.

    Returns ``(True, [])`` when F is nice. Otherwise, for every component C
    that leaves k > 1 pieces of the polygon behind, the children are
    closure(F ∪ C·D_i) for each outside piece and closure(F + F_i) for each
    run of C.
    """
    _, decomposition = build_graph(dep)
    children = []
    for component in decomposition.components:
        data = split(dep, component)
        if data.connected:
            continue
        for piece in data.outside:
            children.append(connect(dep, component, piece))
        for run in data.inside:
            children.append(closure(add_vanishing(dep, run)))
    if not children:
        return True, []
    for child in children:
        if not child.pair_set > dep.pair_set:
            raise InvariantError(f'worklist child {child} does not grow {dep}')
    return False, children


def pos_enumerate(dep: DepSet, jobs=None) -> list[DepSet]:
    """
    Pos(D) for a matroid dependent set D.

    The worklist is processed breadth first; with ``jobs > 1`` each level is
    expanded in worker processes. A visited set keeps every dependent set
    from being expanded twice, and the result is sorted canonically, so the
    output does not depend on ``jobs``.
    """
    if not is_matroid(dep):
        raise NotAMatroidError(f'{dep} does not have complete components')
    jobs = jobs or app_settings.get_setting('JOBS')

    visited = {dep}
    level = [dep]
    emitted = []
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        depth = 0
        while level:
            mapper = executor.map if executor else map
            following = []
            for current, (nice, children) in zip(level, mapper(expand, level)):
                if nice:
                    emitted.append(current)
                for child in children:
                    if child not in visited:
                        visited.add(child)
                        following.append(child)
            logger.debug('pos_enumerate: level %d expanded %d sets, %d new', depth, len(level), len(following))
            level = _sorted(following)
            depth += 1
    finally:
        if executor:
            executor.shutdown()

    logger.info('pos_enumerate(%s): %d positroids from %d visited sets', dep, len(emitted), len(visited))
    return _sorted(emitted)


def mpos(dep: DepSet, jobs=None) -> list[DepSet]:
    """MPos(D): the inclusion-maximal positroids whose dependent sets contain D."""
    candidates = set()
    for vanishing in t_family(dep):
        candidates.update(pos_enumerate(closure(add_vanishing(dep, vanishing)), jobs=jobs))
    result = minimal_members(candidates)
    logger.info('mpos(%s): %d maximal of %d candidates', dep, len(result), len(candidates))
    return result


def includes(dep: DepSet, other: DepSet) -> bool:
    """
    Whether D ⊆ F for matroid dependent sets, decided on the graphs.

    D ⊆ F exactly when T_D ⊆ T_F and every component of G_D, once the loops
    of F are removed, lies inside a single component of G_F.
    """
    if dep.n != other.n:
        raise DimensionMismatchError(f'ground sets differ: n={dep.n} and n={other.n}')
    for d in (dep, other):
        if not is_matroid(d):
            raise NotAMatroidError(f'{d} does not have complete components')

    _, decomposition = build_graph(dep)
    _, other_decomposition = build_graph(other)
    result = dep.loops <= other.loops
    if result:
        for component in decomposition.components:
            remaining = [v for v in component if v not in other.loops]
            if len({other_decomposition.component_of(v) for v in remaining}) > 1:
                result = False
                break

    if app_settings.get_setting('CHECK_INVARIANTS') and result != dep.issubset(other):
        raise InvariantError(f'graph inclusion test disagrees with subset test for {dep} and {other}')
    return result


def positroid_order(dep: DepSet) -> Relabeling:
    """A relabeling that makes a matroid dependent set nice: components consecutively, loops last."""
    if not is_matroid(dep):
        raise NotAMatroidError(f'{dep} does not have complete components')
    _, decomposition = build_graph(dep)
    order = [v for component in decomposition.components for v in component]
    order.extend(sorted(dep.loops))
    relabeling = Relabeling.from_order(order)
    if not is_nice(relabel(dep, relabeling)):
        raise InvariantError(f'relabeling {order} does not make {dep} nice')
    return relabeling
