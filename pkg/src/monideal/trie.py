"""Prefix-tree encoding of exponent-vector sets.

A set of length-``n`` vectors is stored as a tree of height ``n`` whose
root-to-leaf paths read the coordinates from position ``n-1`` down to
position 0.  Sibling nodes are kept in increasing label order (INF last), so
a depth-first walk enumerates the stored vectors in lex order.  Tries are
immutable once built; all merge operations return new tries.
"""

from itertools import groupby

from .core import maximalize, minimalize


class Node:
    __slots__ = ("label", "children")

    def __init__(self, label, children=()):
        self.label = label
        self.children = list(children)


class Trie:
    """Rooted tree of a fixed height; the root carries no label."""

    __slots__ = ("height", "root")

    def __init__(self, height, root):
        self.height = height
        self.root = root

    def __eq__(self, other):
        if not isinstance(other, Trie):
            return NotImplemented
        return self.height == other.height and paths(self) == paths(other)

    def __len__(self):
        return len(paths(self))

    def __repr__(self):
        return f"Trie(height={self.height}, paths={len(self)})"


def _forest(keys, height):
    # keys are distinct, sorted, reversed vectors of length == height
    if height == 0:
        return []
    nodes = []
    for label, group in groupby(keys, key=lambda k: k[0]):
        nodes.append(Node(label, _forest([k[1:] for k in group], height - 1)))
    return nodes


def build(n, vectors):
    """Trie containing exactly the distinct vectors of ``vectors``."""
    keys = set()
    for v in vectors:
        v = tuple(v)
        if len(v) != n:
            raise ValueError(f"vector {v} has length {len(v)}, expected {n}")
        keys.add(tuple(reversed(v)))
    return Trie(n, Node(None, _forest(sorted(keys), n)))


def paths(t):
    """The stored vectors, in lex order."""
    out = []

    def walk(node, depth, acc):
        if depth == t.height:
            out.append(tuple(reversed(acc)))
            return
        for ch in node.children:
            acc.append(ch.label)
            walk(ch, depth + 1, acc)
            acc.pop()

    walk(t.root, 0, [])
    return out


def _common_height(tries):
    heights = {t.height for t in tries}
    if len(heights) != 1:
        raise ValueError(f"cannot merge tries of different heights: {sorted(heights)}")
    return heights.pop()


def merge(*tries):
    """Union of the path sets, repetitions ignored, no reduction performed."""
    h = _common_height(tries)
    out = []
    for t in tries:
        out.extend(paths(t))
    return build(h, out)


def min_merge(*tries, counter=None):
    """Union reduced to its minimal elements: generators of the ideal sum."""
    h = _common_height(tries)
    out = []
    for t in tries:
        out.extend(paths(t))
    return build(h, minimalize(out, counter))


def max_merge(*tries, counter=None):
    """Union reduced to its maximal elements: components of the intersection."""
    h = _common_height(tries)
    out = []
    for t in tries:
        out.extend(paths(t))
    return build(h, maximalize(out, counter))


def top_slices(t):
    """Split below the root: pairs (label, subtree of height n-1).

    The labels are the distinct last coordinates of the stored vectors, in
    increasing order; each subtree holds the matching vectors with that
    coordinate dropped.
    """
    if t.height < 2:
        raise ValueError(f"cannot slice a trie of height {t.height}")
    return [(ch.label, Trie(t.height - 1, Node(None, ch.children)))
            for ch in t.root.children]


def dump(t):
    """Indented text rendering, one node per line, for golden tests."""
    lines = []

    def walk(node, depth):
        for ch in node.children:
            lines.append("  " * depth + str(ch.label))
            walk(ch, depth + 1)

    walk(t.root, 0)
    return "\n".join(lines) + ("\n" if lines else "")
