"""Independent brute-force reference computations used by the test suite.

Nothing here imports the library's algorithms; inputs are plain Python
lists of blocks over ``range(n)``.
"""

import itertools
import math
from collections import Counter

import numpy as np


def bell_recursion(n):
    """B_{k+1} = sum_j C(k, j) B_j, B_0 = 1."""
    bell = [1]
    for k in range(n):
        bell.append(sum(math.comb(k, j) * bell[j] for j in range(k + 1)))
    return bell[n]


def all_set_partitions(elements):
    """Recursive enumeration: place the first element into each block of a partition of the rest."""
    elements = list(elements)
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for smaller in all_set_partitions(rest):
        for k in range(len(smaller)):
            yield smaller[:k] + [[first] + smaller[k]] + smaller[k + 1 :]
        yield [[first]] + smaller


def refines_naive(p, s):
    return all(any(set(c) <= set(d) for d in s) for c in p)


def lower_upper_naive(blocks, a):
    a = set(a)
    lower = set().union(*[set(c) for c in blocks if set(c) <= a])
    upper = set().union(*[set(c) for c in blocks if set(c) & a])
    return lower, upper


def isomorphic_by_search(p, s, n):
    """Search all bijections of range(n) for one mapping blocks into blocks both ways."""
    s_sets = [frozenset(d) for d in s]
    p_sets = [frozenset(c) for c in p]
    for perm in itertools.permutations(range(n)):
        inv = {perm[i]: i for i in range(n)}
        fwd = all(any({perm[x] for x in c} <= d for d in s_sets) for c in p_sets)
        back = all(any({inv[y] for y in d} <= c for c in p_sets) for d in s_sets)
        if fwd and back:
            return True
    return False


def _description_length(matrix):
    rows = [tuple(r) for r in matrix]
    counts = Counter(rows)
    total = len(rows)
    return -sum(math.log2(counts[r] / total) for r in rows)


def connectivity_bruteforce(blocks, n):
    """con(G) from explicit incidence matrices of the equivalence-relation graph.

    Edges are the ordered pairs of the relation, loops included; entry (v, e)
    is 1 iff v is an endpoint of e.  The subgraph of v keeps every vertex and
    only the edges leaving v.
    """
    label = {}
    for k, block in enumerate(blocks):
        for x in block:
            label[x] = k
    edges = [(x, y) for x in range(n) for y in range(n) if label[x] == label[y]]

    def incidence(edge_list):
        m = np.zeros((n, len(edge_list)), dtype=np.int8)
        for e, (x, y) in enumerate(edge_list):
            m[x, e] = 1
            m[y, e] = 1
        return m

    whole = _description_length(incidence(edges))
    parts = sum(_description_length(incidence([(x, y) for (x, y) in edges if x == v])) for v in range(n))
    return parts - whole
