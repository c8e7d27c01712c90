from positroids.sets import add_vanishing, all_pairs, canonicalize, connect


def dep(n, *pairs):
    """dep(6, 12, 45) or dep(10, (4, 10)): two-digit integers are read as pairs of digits."""
    raw = [divmod(p, 10) if isinstance(p, int) else p for p in pairs]
    return canonicalize(raw, n)


def star(n, *vertices):
    """The pairs {v, i} for every listed vertex v."""
    return add_vanishing(canonicalize([], n), vertices)


# two crossing triangles and a loop at 7
CROSSING = dep(8, 12, 14, 24, 35, 36, 56, 17, 27, 37, 47, 57, 67, 78)

# three components, one of them a triangle
SMALL = dep(6, 12, 13, 23, 45)

SMALL_BASES = [
    (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 6), (5, 6),
]

SMALL_ASCII = '+0++\n++\nrows: 1 4\ncolumns: 6 5 3 2\n'


def crossing_pos():
    """The eleven sets returned by the worklist on CROSSING."""
    f = add_vanishing(CROSSING, {1, 2})
    f_prime = add_vanishing(CROSSING, {5, 6})
    return {
        connect(CROSSING, {1, 2, 4}, {3}),
        dep(8, *all_pairs(8)),
        add_vanishing(CROSSING, {4}),
        add_vanishing(CROSSING, {3}),
        connect(f, {3, 5, 6}, {4}),
        connect(f, {3, 5, 6}, {8}),
        add_vanishing(CROSSING, {1, 2, 3}),
        add_vanishing(CROSSING, {1, 2, 5, 6}),
        connect(f_prime, {1, 2, 4}, {3}),
        connect(f_prime, {1, 2, 4}, {8}),
        add_vanishing(CROSSING, {4, 5, 6}),
    }


def crossing_mpos():
    """The minimal members of crossing_pos(): the maximal positroids above CROSSING."""
    f = add_vanishing(CROSSING, {1, 2})
    f_prime = add_vanishing(CROSSING, {5, 6})
    return {
        connect(CROSSING, {1, 2, 4}, {3}),
        add_vanishing(CROSSING, {4}),
        add_vanishing(CROSSING, {3}),
        connect(f, {3, 5, 6}, {8}),
        add_vanishing(CROSSING, {1, 2, 5, 6}),
        connect(f_prime, {1, 2, 4}, {8}),
    }
