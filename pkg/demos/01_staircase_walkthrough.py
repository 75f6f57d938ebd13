"""Decompose a three-variable staircase step by step.

The ideal generated by x^4, y^4, x^3y^2z^2, xy^3z^2, x^2yz^3 is the running
example of this library: five generators, six irreducible components, two of
them unbounded in z.
"""

from monideal import GeneratorSet, artinianize, decompose_recursive
from monideal.trie import build, dump, top_slices

gens = [(4, 0, 0), (0, 4, 0), (3, 2, 2), (1, 3, 2), (2, 1, 3)]
g = GeneratorSet.from_vectors(3, gens, names=("x", "y", "z"))

# The generators, drawn as a prefix tree: each root-to-leaf path reads the
# exponents from z down to x.
t = build(3, g.gens)
print("generator trie (labels from z down to x):")
print(dump(t))

# Slicing below the root groups the generators by their z-degree.  These are
# the coefficient ideals the recursive engine works through.
print("z-degrees and their coefficient vectors:")
for d, sub in top_slices(t):
    from monideal.trie import paths
    print(f"  z^{d}: {paths(sub)}")

# The engine needs a power of every variable; the closure injects z^4 (one
# more than the largest z-degree) and remembers that it did.
art = artinianize(g)
print("\nartinian closure adds:", [v for v, a in zip(("x", "y", "z"), art.added) if a],
      "with bounds", art.bounds)

# Decompose.  Components unbounded in z come back with an inf coordinate.
comps = decompose_recursive(g)
print("\nirreducible components:")
for beta in comps:
    factors = [f"{name}^{e}" for name, e in zip(("x", "y", "z"), beta)
               if e != float("inf")]
    print(f"  {beta}  ->  <{', '.join(factors)}>")
