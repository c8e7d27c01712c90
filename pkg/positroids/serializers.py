"""
JSON interchange.

Every object has one JSON form; ``dumps`` writes it compactly with keys in a
fixed order so repeated runs produce byte-identical output.
"""
import json
from fractions import Fraction

from .cells import cell
from .exceptions import MalformedInputError
from .graph import build_graph, is_nice
from .le import BasesSet, GrassmannNecklace, LeDiagram, bases_of, dependents_of, make_bases
from .realize import WitnessMatrix
from .sets import DepSet, Relabeling, canonicalize


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(f'invalid JSON: {e}')


def dumps(data) -> str:
    return json.dumps(data, separators=(',', ':'), ensure_ascii=False)


def _require(data, *keys):
    if not isinstance(data, dict):
        raise MalformedInputError(f'expected a JSON object, got {type(data).__name__}')
    missing = [key for key in keys if key not in data]
    if missing:
        raise MalformedInputError(f'missing keys {missing}')
    return [data[key] for key in keys]


def _integer(value, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInputError(f'{name} must be an integer, got {value!r}')
    return value


def _list(value, name):
    if not isinstance(value, list):
        raise MalformedInputError(f'{name} must be a list, got {value!r}')
    return value


def dep_to_json(dep: DepSet, info=False) -> dict:
    """{"n", "dependent"}, plus loops, components and dim when ``info`` is set."""
    data = {'n': dep.n, 'dependent': [list(pair) for pair in dep.pairs]}
    if info:
        _, decomposition = build_graph(dep)
        data['loops'] = sorted(dep.loops)
        data['components'] = [list(component) for component in decomposition.components]
        data['dim'] = cell(dep).dim if is_nice(dep) else None
    return data


def dep_from_json(data) -> DepSet:
    n, dependent = _require(data, 'n', 'dependent')
    return canonicalize(_list(dependent, 'dependent'), _integer(n, 'n'))


def bases_to_json(bases: BasesSet) -> dict:
    return {'n': bases.n, 'k': bases.k, 'bases': [list(basis) for basis in bases.bases]}


def bases_from_json(data) -> BasesSet:
    n, k, bases = _require(data, 'n', 'k', 'bases')
    for basis in _list(bases, 'bases'):
        _list(basis, 'basis')
        for i in basis:
            _integer(i, 'basis element')
    return make_bases(_integer(n, 'n'), _integer(k, 'k'), bases)


def read_dep(data) -> DepSet:
    """A dependent set given either directly or as a rank-2 bases family."""
    if isinstance(data, dict) and 'bases' in data and 'dependent' not in data:
        return dependents_of(bases_from_json(data))
    return dep_from_json(data)


def read_bases(data) -> BasesSet:
    """A bases family given either directly or as a dependent set."""
    if isinstance(data, dict) and 'dependent' in data and 'bases' not in data:
        return bases_of(dep_from_json(data))
    return bases_from_json(data)


def diagram_to_json(diagram: LeDiagram) -> dict:
    return {'n': diagram.n, 'k': diagram.k, 'shape': list(diagram.shape), 'fill': list(diagram.fill)}


def diagram_from_json(data) -> LeDiagram:
    n, k, shape, fill = _require(data, 'n', 'k', 'shape', 'fill')
    shape = [_integer(length, 'shape entry') for length in _list(shape, 'shape')]
    fill = _list(fill, 'fill')
    if not all(isinstance(row, str) for row in fill):
        raise MalformedInputError('fill rows must be strings of + and 0')
    return LeDiagram(_integer(n, 'n'), _integer(k, 'k'), tuple(shape), tuple(fill))


def necklace_to_json(necklace: GrassmannNecklace) -> dict:
    return {'n': necklace.n, 'necklace': [list(entry) for entry in necklace.entries]}


def format_rational(value: Fraction) -> str:
    return f'{value.numerator}/{value.denominator}'


def parse_rational(text) -> Fraction:
    if not isinstance(text, str):
        raise MalformedInputError(f'rationals are written as "p/q" strings, got {text!r}')
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise MalformedInputError(f'{text!r} is not a rational number')


def witness_to_json(witness: WitnessMatrix) -> dict:
    return {
        'n': witness.n,
        'columns': [[format_rational(x) for x in column] for column in witness.columns],
    }


def witness_from_json(data) -> WitnessMatrix:
    n, columns = _require(data, 'n', 'columns')
    parsed = []
    for column in _list(columns, 'columns'):
        if not isinstance(column, list) or len(column) != 2:
            raise MalformedInputError(f'{column!r} is not a column of two entries')
        parsed.append(tuple(parse_rational(x) for x in column))
    return WitnessMatrix(_integer(n, 'n'), tuple(parsed))


def relabeling_to_json(relabeling: Relabeling) -> dict:
    return {'n': relabeling.n, 'order': list(relabeling.order), 'perm': list(relabeling.perm)}
