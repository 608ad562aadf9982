"""Input signal, plant simulation and IIR filter response."""

from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter

from core.errors import DimensionMismatch, InvalidParameter
from core.rng import make_rng

ORDER = 10
N_COEFFS = 2 * ORDER + 1

# Plant alpha(z) / beta(z), coefficients of z^0 .. z^-10
PLANT_NUMERATOR = np.array([0.0, 1.0, -0.4, 0.08, -0.032, 0.0816, 0.0326, 0.0288, -0.0115, 0.1296, -0.0518])
PLANT_DENOMINATOR = np.array([1.0, 0.0, 1.08, 0.0, 0.8726, 0.0, 0.6227, 0.0, 0.4694, 0.0, 0.1266])


@dataclass(frozen=True)
class FilterCoeffs:
    """Numerator a_0..a_10 and feedback b_1..b_10 of the filter recursion."""
    a: np.ndarray
    b: np.ndarray

    def pack(self) -> np.ndarray:
        """x = [a_0, ..., a_10, b_1, ..., b_10]."""
        return np.concatenate([self.a, self.b])

    @classmethod
    def unpack(cls, x: np.ndarray) -> 'FilterCoeffs':
        x = np.asarray(x, dtype=float)
        if x.shape[0] != N_COEFFS:
            raise DimensionMismatch(N_COEFFS, x.shape[0])
        return cls(x[:ORDER + 1], x[ORDER + 1:])

    @classmethod
    def plant(cls) -> 'FilterCoeffs':
        """Coefficients under which the recursion reproduces the plant exactly."""
        return cls(PLANT_NUMERATOR.copy(), -PLANT_DENOMINATOR[1:])


@dataclass(frozen=True)
class SignalPair:
    """Frozen input u and plant output d shared by every evaluation."""
    u: np.ndarray
    d: np.ndarray
    T: float
    phi: float
    noise_seed: int

    @property
    def n_samples(self) -> int:
        return int(self.u.shape[0])


def generate_input(N: int = 1000, T: float = 0.001, phi: float = np.pi / 3, noise_seed: int = 0,
                   noise_amplitude: float = 0.01, start: int = 1) -> np.ndarray:
    """
    u(k) = 1 + 5 sin(0.5 pi k T) + 0.25 sin(4 pi k T + phi) + amplitude * rand(0, 1).

    Args:
        N: Number of samples
        T: Sampling period in seconds
        phi: Phase of the second harmonic
        noise_seed: Seed of the uniform noise stream
        noise_amplitude: Scale of the noise term
        start: Index of the first sample

    Returns:
        u(start), ..., u(start + N - 1)
    """
    if N < 1:
        raise InvalidParameter(f"N must be positive, got {N}")
    if T <= 0:
        raise InvalidParameter(f"T must be positive, got {T}")
    t = np.arange(start, start + N) * T
    noise = make_rng(noise_seed).random(N)
    return 1.0 + 5.0 * np.sin(0.5 * np.pi * t) + 0.25 * np.sin(4.0 * np.pi * t + phi) + noise_amplitude * noise


def simulate_plant(u: np.ndarray) -> np.ndarray:
    """Plant response to u from zero initial conditions."""
    return lfilter(PLANT_NUMERATOR, PLANT_DENOMINATOR, u)


def filter_response(coeffs: FilterCoeffs, u: np.ndarray) -> np.ndarray:
    """y(k) = sum_i b_i y(k - i) + sum_i a_i u(k - i), zero pre-history."""
    return lfilter(coeffs.a, np.concatenate([[1.0], -coeffs.b]), u)


def make_signals(N: int = 1000, T: float = 0.001, phi: float = np.pi / 3,
                 noise_seed: int = 0) -> SignalPair:
    u = generate_input(N, T, phi, noise_seed)
    return SignalPair(u=u, d=simulate_plant(u), T=T, phi=phi, noise_seed=noise_seed)
