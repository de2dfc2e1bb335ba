"""Polynomial drive of the diabatic energy separation.

The two-level model is driven by v(t) = sum_k c_k t^k (no constant term),
so every drive crosses v = 0. The constant coupling strength is carried
alongside the coefficients because almost every operation needs both.
Units: hbar = 1, energies dimensionless.
"""

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class DriveParams:
    """Drive coefficients (c1..cn) plus the constant coupling strength.

    ``coeffs[k]`` multiplies t^(k+1); the named drives are
    linear (alpha*t), parabolic (alpha*t + beta*t^2) and
    super-parabolic (alpha*t + gamma3*t^3).
    """

    coeffs: tuple = field()
    coupling: float = field()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        object.__setattr__(self, "coupling", float(self.coupling))
        if self.coupling < 0:
            raise ValueError("coupling must be nonnegative")
        if not self.coeffs or all(c == 0.0 for c in self.coeffs):
            raise ValueError("drive needs at least one nonzero coefficient")

    @classmethod
    def linear(cls, alpha, coupling):
        return cls((alpha,), coupling)

    @classmethod
    def parabolic(cls, alpha, beta, coupling):
        return cls((alpha, beta), coupling)

    @classmethod
    def superparabolic(cls, alpha, gamma3, coupling):
        return cls((alpha, 0.0, gamma3), coupling)

    @property
    def alpha(self):
        return self.coeffs[0] if len(self.coeffs) >= 1 else 0.0

    @property
    def beta(self):
        return self.coeffs[1] if len(self.coeffs) >= 2 else 0.0

    @property
    def gamma3(self):
        return self.coeffs[2] if len(self.coeffs) >= 3 else 0.0

    @property
    def degree(self):
        """Degree n of the highest nonzero coefficient."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0.0:
                return k + 1
        raise ValueError("zero drive")  # unreachable after __post_init__

    def poly_coeffs(self):
        """Ascending coefficients (0, c1, ..., cn) of v as a plain polynomial."""
        return (0.0,) + self.coeffs

    def value(self, t):
        """v(t) by Horner evaluation; accepts scalars or arrays."""
        acc = np.zeros_like(np.asarray(t, dtype=float)) if np.ndim(t) else 0.0
        for c in reversed(self.coeffs):
            acc = (acc + c) * t
        return acc

    def derivative(self, t):
        """dv/dt = sum_k k c_k t^(k-1)."""
        acc = np.zeros_like(np.asarray(t, dtype=float)) if np.ndim(t) else 0.0
        for k in range(len(self.coeffs), 0, -1):
            acc = acc * t + k * self.coeffs[k - 1]
        return acc

    def antiderivative(self, t):
        """V(t) = int_0^t v(s) ds, the closed-form polynomial primitive."""
        acc = np.zeros_like(np.asarray(t, dtype=float)) if np.ndim(t) else 0.0
        for k in range(len(self.coeffs), 0, -1):
            acc = (acc + self.coeffs[k - 1] / (k + 1)) * t
        return acc * t
