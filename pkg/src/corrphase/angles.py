"""Wrapped-phase arithmetic on the interval (-pi, pi]."""

import math

TWO_PI = 2.0 * math.pi


def wrap_phase(x: float) -> float:
    """Wrap an angle to the canonical interval (-pi, pi].

    IEEE remainder lands in [-pi, pi]; the lower endpoint is folded up so
    that -pi and +pi share the single representative +pi.
    """
    r = math.remainder(x, TWO_PI)
    if r <= -math.pi:
        r += TWO_PI
    return r


def wrapped_distance(a: float, b: float) -> float:
    """Circular distance |a - b| mod 2*pi, in [0, pi]."""
    return abs(math.remainder(a - b, TWO_PI))


def phases_close(a: float, b: float, tol: float) -> bool:
    return wrapped_distance(a, b) <= tol
