"""Adjacency spectral radius and the closed-form eigenvalue algebra.

The radius is computed by power iteration on A + I.  The shift makes the
dominant eigenvalue of the iterated matrix unique in magnitude (bipartite
graphs otherwise oscillate between +mu and -mu), and the all-ones start
vector has positive overlap with the nonnegative dominant eigenspace, so
the Rayleigh quotient converges from any simple graph.  For a symmetric
matrix the residual norm bounds the eigenvalue error directly, which gives
a stopping rule an order of magnitude inside the requested tolerance.

Alongside the iterative solver: the two degree-based envelope bounds
(sqrt(2m - n + 1) above, needing connectivity; the degree-square mean
below), the closed-form radius of a double star, and the small fixed
family of characteristic polynomials used to compare candidate extremal
graphs without any numerics beyond root finding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .core import Graph, _bits, is_connected
from .errors import ConnectivityError, ConvergenceError

DEFAULT_TOL = 1e-9

_MAX_ITER = 200_000
_EIGH_FALLBACK_ORDER = 32


@dataclass(frozen=True)
class SpectralResult:
    """Radius estimate with its error bound and the degree-based envelope.

    ``upper_bound`` is None when the graph is disconnected or empty, where
    the sqrt(2m - n + 1) bound does not apply.  ``biregular`` reports the
    degree pair (low, high) when the graph has exactly two distinct degrees
    and every edge joins one of each; it is descriptive, not a certificate.
    """

    mu: float
    tol: float
    upper_bound: Optional[float]
    lower_bound: float
    regular: bool
    biregular: Optional[tuple[int, int]]


def _dense_adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.order, g.order))
    for v, row in enumerate(g.rows):
        for u in _bits(row):
            a[v, u] = 1.0
    return a


def _power_mu(g: Graph, tol: float, max_iter: int) -> float:
    n = g.order
    b = _dense_adjacency(g)
    b[np.diag_indices(n)] = 1.0
    x = np.full(n, 1.0 / math.sqrt(n))
    target = tol / 10.0
    rho = 1.0
    for _ in range(max_iter):
        y = b @ x
        rho = float(x @ y)
        if float(np.linalg.norm(y - rho * x)) <= target:
            return rho - 1.0
        x = y / float(np.linalg.norm(y))
    if n <= _EIGH_FALLBACK_ORDER:
        return float(np.linalg.eigvalsh(b)[-1]) - 1.0
    raise ConvergenceError(
        f"residual above {target:.3e} after {max_iter} iterations on order {n}",
        best_estimate=rho - 1.0,
    )


def _biregular_pair(g: Graph, degs: tuple[int, ...]) -> Optional[tuple[int, int]]:
    vals = sorted(set(degs))
    if len(vals) != 2:
        return None
    for u, v in g.edges():
        if degs[u] == degs[v]:
            return None
    return (vals[0], vals[1])


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = _MAX_ITER) -> SpectralResult:
    """Largest adjacency eigenvalue of g, within an absolute error of tol."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    n = g.order
    degs = g.degrees()
    regular = len(set(degs)) <= 1
    biregular = _biregular_pair(g, degs)
    lower = math.sqrt(sum(d * d for d in degs) / n) if n else 0.0
    upper = None
    if n and is_connected(g):
        upper = math.sqrt(2 * g.edge_count() - n + 1)
    mu = 0.0 if g.edge_count() == 0 else _power_mu(g, tol, max_iter)
    return SpectralResult(mu, tol, upper, lower, regular, biregular)


def bound_upper(g: Graph) -> float:
    """sqrt(2m - n + 1), an upper bound on the radius of a connected graph."""
    if g.order == 0 or not is_connected(g):
        raise ConnectivityError("the sqrt(2m - n + 1) bound needs a nonempty connected graph")
    return math.sqrt(2 * g.edge_count() - g.order + 1)


def bound_lower(g: Graph) -> float:
    """Root-mean-square degree, a lower bound on the radius of any graph."""
    if g.order == 0:
        return 0.0
    return math.sqrt(sum(d * d for d in g.degrees()) / g.order)


def double_star_mu(a: int, b: int) -> float:
    """Radius of the double star with a and b leaves (order a + b + 2), closed form."""
    if a < 1 or b < 1:
        raise ValueError(f"leaf counts must be at least 1, got ({a}, {b})")
    s = a + b
    return math.sqrt(2 + 2 * s + 2 * math.sqrt(2 * s + 1 + (a - b) ** 2)) / 2


@dataclass(frozen=True)
class CharPolyParams:
    """Parameters of the three fixed characteristic polynomials.

    a, b, c are the leaf/branch counts of the three compared graphs; lam is
    the evaluation point.  In the double-star reading, a + b + 2 is one
    less than the host order and c plays no role in the quartic.
    """

    a: int
    b: int
    c: int
    lam: float = 0.0

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.c < 0:
            raise ValueError(f"parameters must be nonnegative, got {(self.a, self.b, self.c)}")


def _hpoly_coeffs(which: str, a: int, b: int, c: int) -> tuple[float, ...]:
    # descending-degree coefficients, exactly as the quintics/quartic are stated
    if which == "g":
        return (1.0, 0.0, -(b + 2 * c + a + 1), -2 * c, a * b + a * c + b * c, 0.0)
    if which == "h":
        return (1.0, 0.0, -(b + 2 * c + a + 1), -(2 * c - 2), a * b + a * c + b * c + 2 * c - 1, 0.0)
    if which == "f":
        return (1.0, 0.0, -b - 1 - a, 0.0, float(a * b))
    raise ValueError(f"unknown polynomial {which!r}; expected one of g, h, f")


def hpoly_eval(which: str, params: CharPolyParams) -> float:
    """Evaluate one of the three fixed polynomials at params.lam."""
    val = 0.0
    for coeff in _hpoly_coeffs(which, params.a, params.b, params.c):
        val = val * params.lam + coeff
    return val


def hpoly_identity_check(params: CharPolyParams) -> float:
    """Defect of the identity g - h = -lam * (2c - 1 + 2 lam); zero for all params.

    Both sides are evaluated independently from their stated forms, in exact
    rational arithmetic.  The float evaluation point converts to a fraction
    losslessly, so a mis-stated coefficient cannot hide inside rounding noise.
    """
    lam = Fraction(params.lam)

    def horner(coeffs):
        val = Fraction(0)
        for coeff in coeffs:
            val = val * lam + Fraction(coeff)
        return val

    g = horner(_hpoly_coeffs("g", params.a, params.b, params.c))
    h = horner(_hpoly_coeffs("h", params.a, params.b, params.c))
    rhs = -lam * (2 * params.c - 1 + 2 * lam)
    return float(g - h - rhs)


def hpoly_largest_root(which: str, params: CharPolyParams) -> float:
    """Largest real root of the chosen polynomial; params.lam is ignored."""
    coeffs = _hpoly_coeffs(which, params.a, params.b, params.c)
    roots = np.roots(coeffs)
    real = [r.real for r in roots if abs(r.imag) <= 1e-9 * max(1.0, abs(r))]
    if not real:
        raise ValueError(f"{which} has no real roots at {params}")
    return max(real)
