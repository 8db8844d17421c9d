"""Coefficient extraction through the series ladder g_{k+1} - g_k =
alpha_k t g_{k+r+1}.

The ladder is seeded with g_0 = 1 and the moment generating functions g_1 ..
g_r of the normalised functionals.  Each step reads alpha_k off the linear
coefficient of g_{k+1} - g_k and, when the ladder must grow, inverts the
relation by dividing by alpha_k t, which costs exactly one trusted order.
The ratios g_{k+1}/g_k (the branched-continued-fraction convergents) are
never materialised; the ladder itself carries all the information.

Each inversion loses one order and the series r steps back is reused, so
producing alpha_0 .. alpha_K needs the seeds trusted to roughly (K+1)/r
orders; one extra order of margin is provisioned, and every coefficient read
still asserts (never assumes) that it is in range.
"""

from __future__ import annotations

from fractions import Fraction

from .alphas import AlphaSequence
from .errors import NoBidiagonalFactorisation
from .series import TruncatedSeries
from .systems import SystemSpec, moment


def seed_order(count: int, r: int) -> int:
    """Moment order required of the seed series for alpha_0 .. alpha_count."""
    return -((count + 1) // -r) + 1


def euler_gauss(spec: SystemSpec, count: int) -> AlphaSequence:
    """Compute alpha_0 .. alpha_count for the system's recurrence matrix."""
    if count < 0:
        raise ValueError("coefficient count must be a natural number")
    r = spec.r
    depth = seed_order(count, r)
    ladder: dict[int, TruncatedSeries] = {0: TruncatedSeries.constant_one(depth)}
    for j in range(1, r + 1):
        ladder[j] = TruncatedSeries.from_coeffs(
            moment(spec, j, n) for n in range(depth + 1)
        )
    values: list[Fraction] = []
    for k in range(count + 1):
        step = ladder[k + 1].sub(ladder[k])
        alpha = step.coefficient(1)
        if alpha == 0:
            raise NoBidiagonalFactorisation(k)
        values.append(alpha)
        if k + r + 1 <= count + 1:
            ladder[k + r + 1] = step.div_ct(alpha)
        del ladder[k]
    return AlphaSequence(tuple(values), "euler-gauss", count)
