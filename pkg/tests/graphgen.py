"""Random plumbing graphs for property tests.

Everything takes a ``random.Random``-like object so the same generators
serve seeded loops (acceptance) and ``hypothesis.strategies.randoms()``.
"""
from plumblink import Arrow, Edge, PlumbingMultilink, Vertex, is_negative_definite
from plumblink import intersection_matrix


def random_graph(rng, max_vertices=12, euler=(-6, -1), mult=(-5, 5),
                 max_arrows=4, genus_rate=0.15, extra_edges=2, family=None):
    """Connected graph: random spanning tree, a few extra (possibly parallel) edges."""
    n = rng.randint(1, max_vertices)
    ids = [f"v{i}" for i in range(n)]
    vertices = [
        Vertex(vid, rng.randint(*euler), 1 if rng.random() < genus_rate else 0)
        for vid in ids
    ]
    edges = [Edge(ids[rng.randrange(i)], ids[i]) for i in range(1, n)]
    if n > 1:
        for _ in range(rng.randint(0, extra_edges)):
            a, b = rng.sample(ids, 2)
            edges.append(Edge(a, b))
    arrows = [
        Arrow(rng.choice(ids), rng.randint(*mult), family)
        for _ in range(rng.randint(0, max_arrows))
    ]
    return PlumbingMultilink("rand", vertices, edges, arrows)


def random_negdef_graph(rng, attempts=1000, **kw):
    for _ in range(attempts):
        g = random_graph(rng, **kw)
        if is_negative_definite(intersection_matrix(g)):
            return g
    raise RuntimeError("no negative definite graph found")


def random_positive_family(rng, g, family, max_arrows=3, max_mult=5):
    """Nonempty list of positive arrows tagged ``family``."""
    ids = g.ids
    return [
        Arrow(rng.choice(ids), rng.randint(1, max_mult), family)
        for _ in range(rng.randint(1, max_arrows))
    ]


def random_symmetric(rng, r, lo=-4, hi=4):
    m = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    return tuple(tuple(row) for row in m)
