"""Incremental decomposition: absorb one generator at a time.

The component list of the ideal generated so far is maintained as an
antichain.  A new generator exponent ``alpha`` splits it in two: components
whose open corner does not contain ``alpha`` survive untouched, while each
component strictly above ``alpha`` is replaced by up to ``n`` lowered copies,
one per variable.  A lowered copy survives exactly when its new exponent
clears the blocking degree computed from the generators dividing the
component, so no reduction pass over the whole list is ever needed.

Engines run on the finite Artinian closure (every internal comparison is
between integers) and the injected bounds are mapped back to INF at the end.
The individual operations also accept vectors with INF coordinates, where a
generator containing INF stands for the zero polynomial and divides nothing.
"""

from dataclasses import dataclass

from .core import (ComponentSet, INF, artinianize, deartinianize, leq,
                   lex_key, maximalize, replace_coord, strictly_below,
                   unit_vector)


class DegreeIndex:
    """Per-variable buckets of generators keyed by exact degree.

    Every generator lands in exactly one bucket per variable, so membership
    candidates for a component are found by probing one bucket per variable
    instead of scanning the whole generator list.
    """

    __slots__ = ("n", "_buckets")

    def __init__(self, n):
        self.n = n
        self._buckets = {}

    def add(self, m):
        for u in range(self.n):
            self._buckets.setdefault((u, m[u]), []).append(m)

    def bucket(self, u, d):
        return self._buckets.get((u, d), [])

    def buckets(self):
        """All (variable, degree) -> generators entries, for inspection."""
        return dict(self._buckets)


def build_degree_index(g):
    """Index the generators of ``g`` by per-variable degree."""
    index = DegreeIndex(g.n)
    for m in g.gens:
        index.add(m)
    return index


def partition_components(comps, alpha, counter=None):
    """Split components by whether ``alpha`` sits strictly below them.

    Returns ``(untouched, affected)``: the untouched components already
    contain X^alpha and survive as they are; the affected ones must be
    lowered.  One comparison per component is charged.
    """
    untouched, affected = [], []
    for beta in comps:
        (affected if strictly_below(alpha, beta) else untouched).append(beta)
    if counter is not None:
        counter.add(len(comps))
    return untouched, affected


def dividing_generators(beta, index, counter=None):
    """Generators dividing X^beta, probed through the degree index.

    Correct whenever ``beta`` is a current component: every divisor of such a
    component matches its degree in at least one variable, hence shows up in
    a probed bucket.  Generators with an INF coordinate divide nothing.
    """
    n = len(beta)
    candidates, seen = [], set()
    for u in range(n):
        for m in index.bucket(u, beta[u]):
            if m not in seen:
                seen.add(m)
                candidates.append(m)
    out = []
    for m in candidates:
        if all(e != INF for e in m) and leq(m, beta):
            out.append(m)
    if counter is not None:
        counter.add(len(candidates))
    return out


def match_variables(m, beta):
    """Variables (0-based) where the degree of ``m`` meets that of ``beta``."""
    return tuple(u for u in range(len(beta)) if m[u] == beta[u])


def lowering_limits(beta, divisors, counter=None):
    """Per-variable blocking degrees for lowering component ``beta``.

    For each variable ``u`` the limit is the largest, over the other
    variables ``k``, of the smallest ``x_u``-degree among divisors that match
    ``beta`` in ``x_k`` alone.  The lowered component with new exponent ``a``
    at ``u`` survives exactly when ``a`` exceeds the limit, i.e.
    ``limit < a``.  Variables with no single-variable matcher contribute
    nothing (the limit of an empty set is -INF).
    """
    n = len(beta)
    min_only = [None] * n  # per matched variable k: coordinatewise min of its lone matchers
    for m in divisors:
        prof = match_variables(m, beta)
        if len(prof) == 1:
            k = prof[0]
            if min_only[k] is None:
                min_only[k] = list(m)
            else:
                row = min_only[k]
                for u in range(n):
                    if m[u] < row[u]:
                        row[u] = m[u]
    if counter is not None:
        counter.add(len(divisors))
    if divisors and n > 1 and all(row is None for row in min_only):
        raise RuntimeError(f"no generator matches {beta} in a single variable; "
                           "it cannot be a component of the current ideal")
    limits = []
    for u in range(n):
        best = -INF
        for k in range(n):
            if k != u and min_only[k] is not None and min_only[k][u] > best:
                best = min_only[k][u]
        limits.append(best)
    return limits


@dataclass
class TraceStep:
    """Record of one absorbed generator, in the external trace shape."""

    step: int
    alpha: tuple
    t1_size: int
    t2_size: int
    kept: list       # (beta, u, limit, candidate) tuples, u 0-based
    rejected: list

    def record(self, render=None):
        """External dict form; ``u`` is reported 1-based."""
        r = render if render is not None else (lambda v: v)

        def entry(e):
            beta, u, limit, cand = e
            return {"beta": list(r(beta)), "u": u + 1, "d": limit,
                    "candidate": list(r(cand))}

        return {"step": self.step, "alpha": list(self.alpha),
                "t1_size": self.t1_size, "t2_size": self.t2_size,
                "kept": [entry(e) for e in self.kept],
                "rejected": [entry(e) for e in self.rejected]}


class IncrementalState:
    """Single-owner state of one incremental run.

    Holds the generators absorbed so far (an antichain), their degree index,
    and the current components, which always equal the decomposition of the
    ideal the absorbed generators span.
    """

    def __init__(self, n, components, generators, counter=None):
        self.n = n
        self.components = sorted((tuple(c) for c in components), key=lex_key)
        self.generators = [tuple(m) for m in generators]
        self.index = DegreeIndex(n)
        for m in self.generators:
            self.index.add(m)
        self.counter = counter
        self.steps = 0

    @classmethod
    def start(cls, art, counter=None):
        """State for an Artinian closure before any non-pure generator.

        The lone component is the vector of pure-power degrees; the pure
        powers themselves are the generators already absorbed.
        """
        degs = art.pure_degrees()
        gens = [unit_vector(art.n, i, degs[i]) for i in range(art.n)]
        return cls(art.n, [degs], gens, counter)

    def add_generator(self, alpha, trace=None, cross_check=False):
        """Absorb one generator and update the components exactly.

        ``alpha`` must extend the current minimal generating set (divide and
        be divided by none of it).  When ``cross_check`` is set, the update is
        recomputed as a full reduction of all lowered candidates and both
        routes are asserted equal.
        """
        alpha = tuple(alpha)
        if len(alpha) != self.n:
            raise ValueError(f"generator {alpha} has length {len(alpha)}, expected {self.n}")
        for m in self.generators:
            if leq(m, alpha) or leq(alpha, m):
                raise ValueError(f"{alpha} does not extend the minimal set: comparable to {m}")

        untouched, affected = partition_components(self.components, alpha, self.counter)
        kept, rejected = [], []
        new = list(untouched)
        for beta in affected:
            divisors = dividing_generators(beta, self.index, self.counter)
            limits = lowering_limits(beta, divisors, self.counter)
            for u in range(self.n):
                cand = replace_coord(beta, u, alpha[u])
                # a zero exponent would denote the unit ideal, never a component
                if alpha[u] >= 1 and limits[u] < alpha[u]:
                    kept.append((beta, u, limits[u], cand))
                    new.append(cand)
                else:
                    rejected.append((beta, u, limits[u], cand))

        if cross_check:
            candidates = [e[3] for e in kept] + [e[3] for e in rejected]
            reduced = maximalize(untouched + [c for c in candidates if min(c) >= 1])
            assert sorted(reduced, key=lex_key) == sorted(new, key=lex_key), \
                "exact update disagrees with full reduction"

        assert len(set(new)) == len(new), "lowered candidates must be distinct"
        self.components = sorted(new, key=lex_key)
        self.generators.append(alpha)
        self.index.add(alpha)
        self.steps += 1
        if trace is not None:
            trace.append(TraceStep(self.steps, alpha, len(untouched),
                                   len(affected), kept, rejected))
        return self


def decompose_incremental(g, *, order="lex", counter=None, trace=None,
                          t_sizes=None, cross_check=False):
    """Decompose a generator set by absorbing generators one at a time.

    Generators are absorbed in lex order by default; ``order="input"`` keeps
    the caller's order instead, which voids the guarantee that the component
    count never shrinks on generic input.  ``trace`` (a list) receives one
    external-form record per step; ``t_sizes`` (a list) receives the
    component count before any step and after each one.
    """
    if order not in ("lex", "input"):
        raise ValueError(f"unknown insertion order {order!r}")
    if g.is_unit():
        return ComponentSet.from_vectors(g.n, [])
    art = artinianize(g)
    state = IncrementalState.start(art, counter)
    if t_sizes is not None:
        t_sizes.append(len(state.components))

    alphas = art.alphas()
    if order == "input":
        chosen = set(alphas)
        alphas = tuple(v for v in g.gens if v in chosen)

    raw_trace = [] if trace is not None else None
    for alpha in alphas:
        state.add_generator(alpha, trace=raw_trace, cross_check=cross_check)
        if t_sizes is not None:
            t_sizes.append(len(state.components))

    result = deartinianize(ComponentSet.from_vectors(g.n, state.components), art)
    if trace is not None:
        def render(v):
            return tuple(INF if art.added[i] and e == art.bounds[i] else e
                         for i, e in enumerate(v))
        trace.extend(step.record(render) for step in raw_trace)
    return result
