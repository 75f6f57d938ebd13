"""Seeded random monomial ideals, optionally generic.

Same parameters and seed always produce the same set.  Because the sampled
vectors are minimalized, the delivered generator count may fall short of the
request; the actual count is whatever survives.

Generic sampling draws distinct nonzero degrees per variable (zeros may
repeat) and pairs the first two variables in opposite sorted order, the
shape of a genuine staircase surface.  Uncorrelated random points in few
variables almost always dominate each other, so without that coupling large
generic antichains would be unreachable.
"""

import random

from .core import GeneratorSet, is_generic

# Chance that a sampled coordinate is zeroed out; moderate sparsity keeps the
# staircases interesting without collapsing the antichain.
ZERO_PROB = 0.25

_MAX_ATTEMPTS = 100


def _generic_rows(rng, n, p, maxdeg):
    if n == 1:
        # a zero in the only variable would be the monomial 1; sample
        # however many distinct degrees exist and let p shrink
        return [(v,) for v in rng.sample(range(1, maxdeg + 1), min(p, maxdeg))]
    columns = []
    for u in range(n):
        vals = rng.sample(range(1, maxdeg + 1), min(p, maxdeg))
        vals += [0] * (p - len(vals))
        if u == 0:
            vals.sort()        # a padded zero lands where the next column peaks
        elif u == 1:
            vals.sort(reverse=True)
        else:
            rng.shuffle(vals)
        columns.append(vals)
    rows = []
    for i in range(p):
        row = [columns[u][i] for u in range(n)]
        for u in range(2, n):
            if row[u] and rng.random() < ZERO_PROB:
                row[u] = 0
        rows.append(tuple(row))
    return rows


def _plain_rows(rng, n, p, maxdeg):
    rows = []
    for _ in range(p):
        for _ in range(_MAX_ATTEMPTS):
            row = [rng.randint(0, maxdeg) for _ in range(n)]
            for u in range(n):
                if row[u] and rng.random() < ZERO_PROB:
                    row[u] = 0
            if any(row):
                break
        else:
            raise RuntimeError("could not sample a nonzero exponent vector")
        rows.append(tuple(row))
    return rows


def gen_random(n, p, maxdeg, seed, generic=False):
    """Seeded random generator set with ``p`` sampled vectors, minimalized.

    With ``generic`` set, no variable receives the same nonzero degree twice,
    which requires ``p - 1 <= maxdeg``.
    """
    if n < 1 or p < 1 or maxdeg < 1:
        raise ValueError("need n >= 1, p >= 1 and maxdeg >= 1")
    if generic and p - 1 > maxdeg:
        raise ValueError(f"generic sampling of {p} generators needs maxdeg >= {p - 1}")
    rng = random.Random(seed)
    rows = _generic_rows(rng, n, p, maxdeg) if generic else _plain_rows(rng, n, p, maxdeg)
    g = GeneratorSet.from_vectors(n, rows)
    if generic:
        assert is_generic(g)
    return g
