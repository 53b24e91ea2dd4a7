"""Growth rate estimates from degree distributions.

The counting argument behind these bounds encodes a triangulation drawing
by the multiset of vertex degrees it uses, with degrees clamped to the
range 2..6.  A distribution over that range, written alpha =
(a2, a3, a4, a5, a6), yields roughly

    2 ** ((a3 + a5 + a4*log2(3) + H(alpha)) / 8)

drawings per vertex, where H is the base 2 entropy.  This module keeps
the objective, its gradient, a deterministic maximizer over the simplex
under optional linear side constraints, and an exact multinomial check
that the entropy term is the right large-n stand-in for the counting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

DEGREES = (2, 3, 4, 5, 6)
_LOG2_3 = math.log2(3.0)
# per coordinate linear weight of the exponent, indexed like alpha
_C = (0.0, 1.0, _LOG2_3, 1.0, 0.0)
_INV_LN2 = 1.0 / math.log(2.0)


def entropy(probs: Sequence[float], tol: float = 1e-9) -> float:
    """Base 2 entropy of a probability vector; zero entries contribute 0."""
    total = 0.0
    for p in probs:
        if p < 0:
            raise ValueError("negative probability")
        total += p
    if abs(total - 1.0) > tol:
        raise ValueError(f"probabilities sum to {total}, not 1")
    return -sum(p * math.log2(p) for p in probs if p > 0)


@dataclass(frozen=True)
class AlphaVector:
    """Distribution over clamped degrees 2..6, in that order."""

    alpha: tuple[float, float, float, float, float]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(float(a) for a in self.alpha))
        if len(self.alpha) != 5:
            raise ValueError("alpha has 5 entries, one per degree 2..6")
        if any(a < 0 for a in self.alpha):
            raise ValueError("alpha entries must be nonnegative")
        if abs(sum(self.alpha) - 1.0) > 1e-9:
            raise ValueError("alpha must sum to 1")

    def __iter__(self):
        return iter(self.alpha)

    def mean_degree(self) -> float:
        return sum(d * a for d, a in zip(DEGREES, self.alpha))


def exponent_rate(alpha: Sequence[float]) -> float:
    """Linear term plus entropy, before the 1/8 scaling.

    Defined for any nonnegative vector (no sum check), which keeps the
    function differentiable coordinate by coordinate for gradient tests.
    """
    lin = sum(c * a for c, a in zip(_C, alpha))
    ent = -sum(a * math.log2(a) for a in alpha if a > 0)
    return lin + ent


def exponent_rate_gradient(alpha: Sequence[float]) -> tuple[float, ...]:
    """Analytic partials of exponent_rate: c_i - log2(alpha_i) - 1/ln 2."""
    return tuple(
        c - math.log2(a) - _INV_LN2 for c, a in zip(_C, alpha)
    )


def growth_objective(alpha: AlphaVector | Sequence[float]) -> float:
    """Per vertex growth factor 2 ** (exponent_rate / 8)."""
    if not isinstance(alpha, AlphaVector):
        alpha = AlphaVector(tuple(alpha))
    return 2.0 ** (exponent_rate(alpha.alpha) / 8.0)


class ConstraintKind(Enum):
    """Optional linear side condition on the degree distribution.

    DEGREE_MASS balances degree weighted mass below 4 against above 4
    (2*a2 + 3*a3 = 5*a5 + 6*a6).  MEAN_DEGREE pins the mean clamped
    degree to 4 (2*a2 + a3 = a5 + 2*a6).  FREE imposes nothing beyond
    the simplex.
    """

    DEGREE_MASS = "degree-mass"
    MEAN_DEGREE = "mean-degree"
    FREE = "free"


_CONSTRAINT_ROWS: dict[ConstraintKind, tuple[float, ...] | None] = {
    ConstraintKind.DEGREE_MASS: (2.0, 3.0, 0.0, -5.0, -6.0),
    ConstraintKind.MEAN_DEGREE: (2.0, 1.0, 0.0, -1.0, -2.0),
    ConstraintKind.FREE: None,
}


# -- tiny dense linear algebra, enough for 5 dimensional problems -----------


def _solve(a: list[list[float]], b: list[float]) -> list[float]:
    n = len(b)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(m[r][col]))
        if abs(m[piv][col]) < 1e-14:
            raise ArithmeticError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = 1.0 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def _null_basis(rows: list[tuple[float, ...]]) -> list[tuple[float, ...]]:
    # orthonormalize the rows, then project the standard basis and keep
    # the independent remainders
    dim = len(rows[0])
    ortho: list[list[float]] = []
    for row in rows:
        v = list(row)
        for u in ortho:
            d = sum(x * y for x, y in zip(v, u))
            v = [x - d * y for x, y in zip(v, u)]
        norm = math.sqrt(sum(x * x for x in v))
        if norm > 1e-12:
            ortho.append([x / norm for x in v])
    basis: list[tuple[float, ...]] = []
    kept: list[list[float]] = []
    for i in range(dim):
        v = [1.0 if j == i else 0.0 for j in range(dim)]
        for u in ortho:
            d = sum(x * y for x, y in zip(v, u))
            v = [x - d * y for x, y in zip(v, u)]
        for u in kept:
            d = sum(x * y for x, y in zip(v, u))
            v = [x - d * y for x, y in zip(v, u)]
        norm = math.sqrt(sum(x * x for x in v))
        if norm > 1e-9:
            unit = [x / norm for x in v]
            kept.append(unit)
            basis.append(tuple(unit))
    return basis


def optimize_growth(
    constraint: ConstraintKind | None = ConstraintKind.FREE,
    tolerance: float = 1e-12,
) -> tuple[AlphaVector, float]:
    """Maximize growth_objective over the simplex, optionally constrained.

    Damped Newton ascent in the affine feasible subspace.  The objective
    is strictly concave there (linear term plus entropy), so the method
    is deterministic and lands on the unique maximizer; tolerance bounds
    the final projected gradient norm.
    """
    if constraint is None:
        constraint = ConstraintKind.FREE
    extra = _CONSTRAINT_ROWS[constraint]
    rows: list[tuple[float, ...]] = [(1.0,) * 5]
    rhs = [1.0]
    if extra is not None:
        rows.append(extra)
        rhs.append(0.0)
    # feasible interior start: least squares projection of the uniform point
    k = len(rows)
    alpha = [0.2] * 5
    for _ in range(50):
        resid = [sum(r[i] * alpha[i] for i in range(5)) - rhs[j] for j, r in enumerate(rows)]
        gram = [[sum(ra[i] * rb[i] for i in range(5)) for rb in rows] for ra in rows]
        lam = _solve(gram, resid)
        alpha = [alpha[i] - sum(lam[j] * rows[j][i] for j in range(k)) for i in range(5)]
        if min(alpha) > 1e-6:
            break
        alpha = [max(a, 1e-4) for a in alpha]
    if min(alpha) <= 0:
        raise ArithmeticError("no strictly positive feasible point found")
    basis = _null_basis(rows)
    for _ in range(500):
        grad = exponent_rate_gradient(alpha)
        g = [sum(b[i] * grad[i] for i in range(5)) for b in basis]
        if max(abs(x) for x in g) < tolerance:
            break
        # reduced Hessian of exponent_rate: diag(-1 / (alpha ln 2))
        h = [
            [
                sum(-bu[i] * bv[i] / (alpha[i] * math.log(2.0)) for i in range(5))
                for bv in basis
            ]
            for bu in basis
        ]
        step = _solve(h, [-x for x in g])
        delta = [sum(step[j] * basis[j][i] for j in range(len(basis))) for i in range(5)]
        base_val = exponent_rate(alpha)
        s = 1.0
        while s > 1e-18:
            cand = [a + s * d for a, d in zip(alpha, delta)]
            if min(cand) > 0 and exponent_rate(cand) >= base_val:
                alpha = cand
                break
            s *= 0.5
        else:
            break
    total = sum(alpha)
    alpha = [a / total for a in alpha]  # side rows are homogeneous, unaffected
    vec = AlphaVector(tuple(alpha))
    return vec, growth_objective(vec)


# -- exact multinomial cross check -------------------------------------------


def largest_remainder_parts(n: int, alpha: Sequence[float]) -> tuple[int, ...]:
    """Split n into integer parts proportional to alpha.

    Floors first, then hands the leftover units to the largest fractional
    remainders (ties to the lower index), so the parts always sum to n.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    raw = [a * n for a in alpha]
    parts = [int(math.floor(r)) for r in raw]
    missing = n - sum(parts)
    order = sorted(range(len(alpha)), key=lambda i: (parts[i] - raw[i], i))
    for i in order[:missing]:
        parts[i] += 1
    return tuple(parts)


def _log2_big(x: int) -> float:
    e = max(x.bit_length() - 53, 0)
    return math.log2(x >> e) + e


def multinomial_rate_check(n: int, alpha: AlphaVector | Sequence[float]) -> float:
    """Exact log2(n choose parts)/n for the rounded split of n by alpha.

    Converges to entropy(alpha) as n grows; the gap at finite n measures
    how much the entropy shorthand overstates the exact count.
    """
    if not isinstance(alpha, AlphaVector):
        alpha = AlphaVector(tuple(alpha))
    parts = largest_remainder_parts(n, alpha.alpha)
    num = math.factorial(n)
    den = 1
    for p in parts:
        den *= math.factorial(p)
    coeff = num // den
    assert coeff * den == num
    return _log2_big(coeff) / n
