from fractions import Fraction

from plumblink.errors import ExponentTooSmall

__all__ = ["brieskorn_isolated_critical_value"]


def brieskorn_isolated_critical_value(exponents):
    """For f = z_1^a_1 + ... + z_n^a_n and g = conj(z_1 ... z_n): is 0 an
    isolated critical value of f*conj(g)?  True iff sum(1/a_i) != 1.
    """
    a = [int(x) for x in exponents]
    if len(a) < 2:
        raise ExponentTooSmall(f"need at least two exponents, got {len(a)}")
    small = [x for x in a if x < 2]
    if small:
        raise ExponentTooSmall(f"exponents must be >= 2, got {small}")
    return sum(Fraction(1, x) for x in a) != 1
