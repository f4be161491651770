"""Paired fractional bootstrap weights for training and auto-validation.

One uniform draw per run feeds an inverse exponential CDF twice: the
training weight uses u, the auto-validation weight uses 1 - u. Both margins
are Exp(mean 1), and within a draw the two vectors are perfectly
anti-correlated in rank, which is what lets the same runs act as a virtual
validation set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Uniform draws are nudged away from {0, 1} so both logs stay finite.
_U_CLAMP = 1e-12


@dataclass
class WeightPair:
    """Training/auto-validation weights plus the uniforms that produced them."""

    w_train: np.ndarray
    w_valid: np.ndarray
    u: np.ndarray

    @property
    def n(self) -> int:
        return self.u.shape[0]


def draw_weights(n: int, rng: np.random.Generator) -> WeightPair:
    """Draw one paired fractional weight vector of length n.

    w_train[i] = -ln(1 - u[i]) and w_valid[i] = -ln(u[i]) with u uniform on
    (0, 1); both margins have mean 1 and the pair is rank-anti-correlated.
    """
    if n < 1:
        raise ValueError("weight vectors need at least one entry")
    u = rng.uniform(0.0, 1.0, size=n)
    u = np.clip(u, _U_CLAMP, 1.0 - _U_CLAMP)
    return WeightPair(w_train=-np.log1p(-u), w_valid=-np.log(u), u=u)
