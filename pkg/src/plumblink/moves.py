"""Leaf blow-up and blow-down.

Only the leaf moves are provided: they never need edge signs, so they stay
inside the positive-plumbing convention.
"""
from dataclasses import replace

from plumblink.errors import NotBlowDownable
from plumblink.model import Edge, Vertex, valence

__all__ = ["fresh_id", "blow_up_leaf", "blow_down_leaf"]


def fresh_id(g):
    """Smallest unused token of the form ``b<n>``, n >= 1."""
    taken = set(g.ids)
    n = 1
    while f"b{n}" in taken:
        n += 1
    return f"b{n}"


def blow_up_leaf(g, v):
    """Attach a new (-1)-vertex to ``v`` and lower e(v) by one.

    The new vertex goes last in the ordering.  Returns the new graph.
    """
    i = g.index(v)
    w = fresh_id(g)
    old = g.vertices[i]
    vertices = list(g.vertices)
    vertices[i] = replace(old, euler=old.euler - 1)
    vertices.append(Vertex(w, -1, 0))
    return replace(g, vertices=vertices, edges=g.edges + (Edge(v, w),))


def blow_down_leaf(g, w):
    vert = g.vertex(w)
    if vert.euler != -1:
        raise NotBlowDownable(f"{w} has Euler number {vert.euler}, need -1")
    if vert.genus != 0:
        raise NotBlowDownable(f"{w} has genus {vert.genus}, need 0")
    if any(a.attached_to == w for a in g.arrows):
        raise NotBlowDownable(f"{w} carries arrows")
    if valence(g, w) != 1:
        raise NotBlowDownable(f"{w} has valence {valence(g, w)}, need 1")

    (edge,) = [e for e in g.edges if w in e.endpoints]
    neighbour = edge.b if edge.a == w else edge.a
    vertices = []
    for v in g.vertices:
        if v.id == w:
            continue
        if v.id == neighbour:
            v = replace(v, euler=v.euler + 1)
        vertices.append(v)
    edges = tuple(e for e in g.edges if e is not edge)
    return replace(g, vertices=vertices, edges=edges)
