"""Exponent vectors, partial orders, antichains, and Artinian closure.

Monomials in ``n`` variables are plain length-``n`` tuples of nonnegative
integer exponents.  Irreducible components use the same tuples except that a
coordinate may be ``INF``, meaning the component places no bound on that
variable.  Componentwise ``<=`` is exactly monomial divisibility, so a single
partial order drives everything in this package.
"""

import math
from dataclasses import dataclass

INF = math.inf

# Exponents are validated against this bound so sums and lcms stay exact
# and finite values always sort below INF.
MAX_EXPONENT = 2 ** 32


def is_finite(e):
    return e != INF


def leq(a, b):
    """True iff ``a <= b`` componentwise, i.e. X^a divides X^b."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def strictly_below(a, b):
    """True iff every coordinate of ``a`` is strictly less than in ``b``."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(x < y for x, y in zip(a, b))


def lex_key(v):
    """Sort key for the lex order that compares the last coordinate first."""
    return tuple(reversed(v))


def lex_cmp(a, b):
    """Three-way lex comparison: -1, 0 or 1 as ``a`` is below, equal, above."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    ka, kb = lex_key(a), lex_key(b)
    return (ka > kb) - (ka < kb)


def _domination_order(v):
    # A vector can only dominate another with smaller (sum, lex) key, so
    # scanning in this order lets minimalize keep a single growing antichain.
    return (sum(v), lex_key(v))


def minimalize(vectors, counter=None):
    """Minimal elements of ``vectors`` under ``leq``, deduplicated, lex-sorted.

    Every input vector is >= some output vector, and no output vector divides
    another.  Each pairwise comparison is charged to ``counter``.
    """
    distinct = sorted(set(map(tuple, vectors)), key=_domination_order)
    kept = []
    comparisons = 0
    for v in distinct:
        dominated = False
        for m in kept:
            comparisons += 1
            if leq(m, v):
                dominated = True
                break
        if not dominated:
            kept.append(v)
    if counter is not None:
        counter.add(comparisons)
    return sorted(kept, key=lex_key)


def maximalize(vectors, counter=None):
    """Maximal elements of ``vectors`` under ``leq``; dual of ``minimalize``."""
    distinct = sorted(set(map(tuple, vectors)), key=_domination_order, reverse=True)
    kept = []
    comparisons = 0
    for v in distinct:
        dominated = False
        for m in kept:
            comparisons += 1
            if leq(v, m):
                dominated = True
                break
        if not dominated:
            kept.append(v)
    if counter is not None:
        counter.add(comparisons)
    return sorted(kept, key=lex_key)


def decrement(b):
    """Lower every finite coordinate by one; INF stays INF."""
    if any(x < 1 for x in b):
        raise ValueError(f"cannot decrement a zero coordinate: {b}")
    return tuple(x - 1 for x in b)


def increment(v):
    """Raise every finite coordinate by one; INF stays INF."""
    return tuple(x + 1 for x in v)


def replace_coord(b, j, e):
    """Copy of ``b`` with coordinate ``j`` (0-based) replaced by ``e``."""
    if not 0 <= j < len(b):
        raise IndexError(f"coordinate {j} out of range for length {len(b)}")
    return b[:j] + (e,) + b[j + 1:]


def lcm_vector(a, b):
    """Exponent vector of lcm(X^a, X^b): the componentwise maximum."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(map(max, a, b))


def unit_vector(n, i, e):
    """Length-``n`` vector that is ``e`` at position ``i`` and 0 elsewhere."""
    return tuple(e if j == i else 0 for j in range(n))


def _validate_generator_vector(n, v):
    if len(v) != n:
        raise ValueError(f"generator {v} has length {len(v)}, expected {n}")
    for e in v:
        if not isinstance(e, int) or isinstance(e, bool):
            raise ValueError(f"generator exponent {e!r} is not an integer")
        if e < 0 or e > MAX_EXPONENT:
            raise ValueError(f"generator exponent {e} outside [0, 2^32]")


@dataclass(frozen=True)
class GeneratorSet:
    """Finite antichain of all-finite exponent vectors: the minimal generators
    of a monomial ideal in ``n`` variables.  Input order is preserved."""

    n: int
    gens: tuple
    names: tuple = None

    @classmethod
    def from_vectors(cls, n, vectors, names=None, minimal=True):
        """Validate, deduplicate and (by default) minimalize ``vectors``."""
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"variable count must be a positive integer, got {n!r}")
        vs = [tuple(v) for v in vectors]
        for v in vs:
            _validate_generator_vector(n, v)
        if names is not None:
            names = tuple(names)
            if len(names) != n:
                raise ValueError(f"expected {n} variable names, got {len(names)}")
        keep = set(minimalize(vs)) if minimal else set(vs)
        seen = set()
        out = []
        for v in vs:
            if v in keep and v not in seen:
                seen.add(v)
                out.append(v)
        return cls(n, tuple(out), names)

    @property
    def p(self):
        return len(self.gens)

    def is_zero(self):
        """No generators: the zero ideal."""
        return not self.gens

    def is_unit(self):
        """The monomial 1 generates: the whole ring."""
        return any(not any(v) for v in self.gens)


@dataclass(frozen=True)
class ComponentSet:
    """Finite antichain of component vectors (coordinates >= 1 or INF),
    stored in lex order so that emission is byte-stable."""

    n: int
    comps: tuple

    @classmethod
    def from_vectors(cls, n, vectors):
        vs = []
        for v in vectors:
            v = tuple(v)
            if len(v) != n:
                raise ValueError(f"component {v} has length {len(v)}, expected {n}")
            for e in v:
                if e != INF and (not isinstance(e, int) or e < 1 or e > MAX_EXPONENT):
                    raise ValueError(f"component exponent {e!r} outside N-bar")
            vs.append(v)
        return cls(n, tuple(sorted(vs, key=lex_key)))

    def __len__(self):
        return len(self.comps)

    def __iter__(self):
        return iter(self.comps)

    def validate(self):
        """Raise ValueError unless the components form an irredundant antichain."""
        seen = set(self.comps)
        if len(seen) != len(self.comps):
            raise ValueError("duplicate components")
        for a in self.comps:
            for b in self.comps:
                if a is not b and leq(a, b):
                    raise ValueError(f"redundant component: {a} <= {b}")


@dataclass(frozen=True)
class ArtinianizedIdeal:
    """A generator set closed up with a pure power of every variable.

    ``bounds[i]`` is one more than the largest degree of variable ``i`` over
    the original generators; ``added[i]`` says whether ``x_i^bounds[i]`` was
    injected (it is exactly when no pure power of ``x_i`` was present).
    ``gens`` is the minimalized closure, lex-sorted.
    """

    base: GeneratorSet
    bounds: tuple
    added: tuple
    gens: tuple

    @property
    def n(self):
        return self.base.n

    def pure_degrees(self):
        """Degree of the unique pure power of each variable in ``gens``."""
        degs = [None] * self.n
        for v in self.gens:
            nz = [i for i, e in enumerate(v) if e]
            if len(nz) == 1:
                degs[nz[0]] = v[nz[0]]
        if any(d is None for d in degs):
            raise ValueError("generator set is not Artinian (is it the unit ideal?)")
        return tuple(degs)

    def alphas(self):
        """The non-pure generators, in lex order."""
        return tuple(v for v in self.gens if sum(1 for e in v if e) != 1)


def artinianize(g):
    """Inject ``x_i^(maxdeg_i + 1)`` for every variable lacking a pure power.

    The bound is the smallest that keeps the component correspondence exact;
    for a variable absent from every generator the injected power is x_i^1.
    """
    n = g.n
    maxdeg = [0] * n
    has_pure = [False] * n
    for v in g.gens:
        nz = [i for i, e in enumerate(v) if e]
        for i in nz:
            if v[i] > maxdeg[i]:
                maxdeg[i] = v[i]
        if len(nz) == 1:
            has_pure[nz[0]] = True
    bounds = tuple(d + 1 for d in maxdeg)
    added = tuple(not h for h in has_pure)
    injected = [unit_vector(n, i, bounds[i]) for i in range(n) if added[i]]
    gens = minimalize(list(g.gens) + injected)
    return ArtinianizedIdeal(g, bounds, added, tuple(gens))


def deartinianize(c, art):
    """Map components of the Artinian closure back to the original ideal.

    Any coordinate equal to an injected bound becomes INF; coordinates of the
    closure's components can never exceed the bounds.
    """
    out = []
    for beta in c.comps:
        v = list(beta)
        for i in range(art.n):
            if v[i] == INF:
                continue
            if v[i] > art.bounds[i]:
                raise RuntimeError(f"component coordinate {v[i]} exceeds bound {art.bounds[i]}")
            if art.added[i] and v[i] == art.bounds[i]:
                v[i] = INF
        out.append(tuple(v))
    maxed = maximalize(out)
    if len(maxed) != len(out):
        raise RuntimeError("deartinianize produced a non-antichain")
    return ComponentSet.from_vectors(c.n, out)


def is_generic(g):
    """True iff no variable has the same nonzero degree in two generators."""
    for i in range(g.n):
        seen = set()
        for v in g.gens:
            e = v[i]
            if e:
                if e in seen:
                    return False
                seen.add(e)
    return True


def ideal_sum(g1, g2):
    """Minimal generators of the sum of two monomial ideals."""
    if g1.n != g2.n:
        raise ValueError("ideals live in different variable counts")
    return GeneratorSet.from_vectors(g1.n, list(g1.gens) + list(g2.gens))


def ideal_intersection(g1, g2):
    """Minimal generators of the intersection: pairwise lcms, minimalized."""
    if g1.n != g2.n:
        raise ValueError("ideals live in different variable counts")
    lcms = [lcm_vector(a, b) for a in g1.gens for b in g2.gens]
    return GeneratorSet.from_vectors(g1.n, lcms)
