from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class ChebyshevValues:
    """[−1, 1] 上的 Chebyshev 泛函 T(h,h) = ½‖h‖₂² − ¼(∫h)² 及 σ(h) = 2T(h,h)。"""

    T: float
    sigma: float
    norm2_sq: float
    mean_integral: float

    @property
    def clamped_sigma(self) -> float:
        return max(self.sigma, 0.0)
