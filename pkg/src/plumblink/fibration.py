"""Fibredness of plumbing multilinks and the f*conj(g) isolated-critical-value test.

With M the intersection matrix and b(L) the per-vertex sum of arrow
multiplicities, put m = -M^{-1} b.  L is fibred iff every m_i is an integer
and m_j != 0 at every rupture vertex j.

For a pair of germs f, g on a resolution graph of fg the same machinery
gives the germ multiplicities m^f, m^g; 0 is an isolated critical value of
f*conj(g) iff m^f_j != m^g_j at every rupture vertex, equivalently iff the
multilink L_f - L_g is fibred.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from plumblink import linalg
from plumblink.errors import (
    EmptyFamily,
    NonPositiveMultiplicity,
    UntaggedArrow,
    ZeroDenominatorQuotient,
)
from plumblink.model import Arrow, intersection_matrix, rupture_vertices

__all__ = [
    "FibredVerdict",
    "GermData",
    "FgBarReport",
    "boundary_vector",
    "multiplicity_vector",
    "is_fibred",
    "germ_multiplicities",
    "difference_multilink",
    "fgbar_report",
    "scale_to_fibred",
]

FIBRED = "Fibred"
NON_INTEGRAL = "NonIntegral"
ZERO_AT_RUPTURE = "ZeroAtRupture"


@dataclass(frozen=True)
class FibredVerdict:
    fibred: bool
    reason: str
    vertices: tuple  # offending vertex ids, empty when fibred
    m: tuple
    rupture: frozenset

    def describe(self):
        if self.fibred:
            return "fibred"
        where = ", ".join(self.vertices)
        if self.reason == NON_INTEGRAL:
            return f"not fibred: non-integral at {where}"
        return f"not fibred: zero at rupture vertex {where}"


@dataclass(frozen=True)
class GermData:
    family: str
    b: tuple
    m: tuple
    realizable: bool


@dataclass(frozen=True)
class FgBarReport:
    germ_f: GermData
    germ_g: GermData
    rupture: frozenset
    contact_quotients: dict
    ratio_set: frozenset
    condition_iii: bool
    difference_verdict: FibredVerdict
    isolated_critical_value: bool


def boundary_vector(g, family=None):
    """b_i = sum of multiplicities of the arrows at vertex i (optionally one family)."""
    b = [0] * len(g.vertices)
    for a in g.arrows:
        if family is None or a.family == family:
            b[g.index(a.attached_to)] += a.multiplicity
    return tuple(Fraction(x) for x in b)


def _solve_m(g, b):
    return linalg.solve(intersection_matrix(g), tuple(-x for x in b))


def multiplicity_vector(g, family=None):
    """Exact m with M.m = -b.  Raises SingularError if det M = 0."""
    return _solve_m(g, boundary_vector(g, family))


def _verdict(g, m, rupture=None):
    if rupture is None:
        rupture = rupture_vertices(g)
    ids = g.ids
    bad = tuple(ids[i] for i, x in enumerate(m) if x.denominator != 1)
    if bad:
        return FibredVerdict(False, NON_INTEGRAL, bad, m, rupture)
    zeros = tuple(ids[i] for i, x in enumerate(m) if x == 0 and ids[i] in rupture)
    if zeros:
        return FibredVerdict(False, ZERO_AT_RUPTURE, zeros, m, rupture)
    return FibredVerdict(True, FIBRED, (), m, rupture)


def is_fibred(g):
    """Decide fibredness of the multilink carried by all arrows of ``g``."""
    return _verdict(g, multiplicity_vector(g))


def germ_multiplicities(g, family):
    arrows = [a for a in g.arrows if a.family == family]
    if not arrows:
        raise EmptyFamily(family)
    bad = [a for a in arrows if a.multiplicity <= 0]
    if bad:
        raise NonPositiveMultiplicity(
            f"family {family} has non-positive multiplicity at "
            + ", ".join(a.attached_to for a in bad)
        )
    b = boundary_vector(g, family)
    m = _solve_m(g, b)
    realizable = all(x.denominator == 1 and x > 0 for x in m)
    return GermData(family, b, m, realizable)


def difference_multilink(g):
    """L_f - L_g on the same graph: g-arrows get their sign flipped, tags dropped."""
    arrows = []
    for a in g.arrows:
        n = -a.multiplicity if a.family == "g" else a.multiplicity
        arrows.append(Arrow(a.attached_to, n))
    return g.with_arrows(arrows)


def fgbar_report(g):
    """Joint report for f*conj(g) on a graph whose arrows are tagged f or g.

    Rupture vertices are taken with every arrow counted.  Raises
    ZeroDenominatorQuotient (carrying the partial report) if m^g vanishes at
    a rupture vertex.
    """
    untagged = [a.attached_to for a in g.arrows if a.family is None]
    if untagged:
        raise UntaggedArrow(
            "every arrow needs family=f or family=g; untagged at " + ", ".join(untagged)
        )
    germ_f = germ_multiplicities(g, "f")
    germ_g = germ_multiplicities(g, "g")
    rupture = rupture_vertices(g)
    ids = g.ids

    quotients = {}
    undefined = []
    condition_iii = True
    for i, vid in enumerate(ids):
        if vid not in rupture:
            continue
        mf, mg = germ_f.m[i], germ_g.m[i]
        if mf == mg:
            condition_iii = False
        if mg == 0:
            undefined.append(vid)
        else:
            quotients[vid] = mf / mg

    diff = difference_multilink(g)
    m_diff = tuple(a - b for a, b in zip(germ_f.m, germ_g.m))
    report = FgBarReport(
        germ_f=germ_f,
        germ_g=germ_g,
        rupture=rupture,
        contact_quotients=quotients,
        ratio_set=frozenset(quotients.values()),
        condition_iii=condition_iii,
        difference_verdict=_verdict(diff, m_diff, rupture),
        isolated_critical_value=condition_iii,
    )
    if undefined:
        raise ZeroDenominatorQuotient(undefined, report)
    return report


def scale_to_fibred(g):
    """Least k > 0 with k*L fibred, or None when m vanishes at a rupture vertex.

    k is the lcm of the denominators of m; it always divides |det M|.
    """
    m = multiplicity_vector(g)
    rupture = rupture_vertices(g)
    if any(x == 0 for vid, x in zip(g.ids, m) if vid in rupture):
        return None
    return lcm(*(x.denominator for x in m))
