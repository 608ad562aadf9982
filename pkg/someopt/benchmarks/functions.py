"""Objective kernels of the test suite.

Every kernel reduces over the last axis, so it accepts one point of shape
(n,) or a batch of shape (..., n). Shifts and rotations are applied by the
caller; kernels see the transformed vector z.
"""

from typing import Tuple

import numpy as np


def sphere(z: np.ndarray) -> np.ndarray:
    return np.sum(z ** 2, axis=-1)


def schwefel_1_2(z: np.ndarray) -> np.ndarray:
    return np.sum(np.cumsum(z, axis=-1) ** 2, axis=-1)


def rosenbrock(z: np.ndarray) -> np.ndarray:
    head, tail = z[..., :-1], z[..., 1:]
    return np.sum(100.0 * (tail - head ** 2) ** 2 + (1.0 - head) ** 2, axis=-1)


def ackley(z: np.ndarray) -> np.ndarray:
    n = z.shape[-1]
    spread = np.sqrt(np.sum(z ** 2, axis=-1) / n)
    ripple = np.sum(np.cos(2.0 * np.pi * z), axis=-1) / n
    return -20.0 * np.exp(-0.2 * spread) - np.exp(ripple) + 20.0 + np.e


def griewank(z: np.ndarray) -> np.ndarray:
    i = np.arange(1, z.shape[-1] + 1)
    return np.sum(z ** 2, axis=-1) / 4000.0 - np.prod(np.cos(z / np.sqrt(i)), axis=-1) + 1.0


def rastrigin(z: np.ndarray) -> np.ndarray:
    n = z.shape[-1]
    return 10.0 * n + np.sum(z ** 2 - 10.0 * np.cos(2.0 * np.pi * z), axis=-1)


def round_half_away(x: np.ndarray) -> np.ndarray:
    """Round to nearest integer, ties away from zero."""
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def noncontinuous_rastrigin(z: np.ndarray) -> np.ndarray:
    y = np.where(np.abs(z) < 0.5, z, round_half_away(2.0 * z) / 2.0)
    return rastrigin(y)


def schwefel(z: np.ndarray) -> np.ndarray:
    n = z.shape[-1]
    return 418.9829 * n - np.sum(z * np.sin(np.sqrt(np.abs(z))), axis=-1)


def schwefel_2_22(z: np.ndarray) -> np.ndarray:
    magnitude = np.abs(z)
    return np.sum(magnitude, axis=-1) + np.prod(magnitude, axis=-1)


def schwefel_2_21(z: np.ndarray) -> np.ndarray:
    return np.max(np.abs(z), axis=-1)


def penalty_u(x: np.ndarray, a: float, k: float, m: float) -> np.ndarray:
    """Zero on |x| <= a, k * (|x| - a)^m outside."""
    excess = np.maximum(np.abs(x) - a, 0.0)
    return np.where(np.abs(x) > a, k * excess ** m, 0.0)


def penalized_1(x: np.ndarray) -> np.ndarray:
    n = x.shape[-1]
    y = 1.0 + (x + 1.0) / 4.0
    body = (
        10.0 * np.sin(np.pi * y[..., 0]) ** 2
        + np.sum((y - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y) ** 2), axis=-1)
        + (y[..., -1] - 1.0) ** 2
    )
    return np.pi / n * body + np.sum(penalty_u(x, 10.0, 100.0, 4.0), axis=-1)


def penalized_2(x: np.ndarray) -> np.ndarray:
    last = x[..., -1]
    body = (
        np.sin(3.0 * np.pi * x[..., 0]) ** 2
        + np.sum((x[..., :-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[..., 1:]) ** 2), axis=-1)
        + (last - 1.0) * (1.0 + np.sin(2.0 * np.pi * last)) ** 2
    )
    return 0.1 * body + np.sum(penalty_u(x, 5.0, 100.0, 4.0), axis=-1)


def schwefel_2_6(x: np.ndarray, a_matrix: np.ndarray, b_vector: np.ndarray) -> np.ndarray:
    """max_i |A_i x - B_i| with B = A o."""
    return np.max(np.abs(x @ a_matrix.T - b_vector), axis=-1)


def weierstrass(z: np.ndarray, a: float = 0.5, b: float = 3.0, k_max: int = 20) -> np.ndarray:
    n = z.shape[-1]
    k = np.arange(k_max + 1)
    weights = a ** k
    freqs = b ** k
    inner = np.cos(2.0 * np.pi * freqs * (z[..., None] + 0.5)) @ weights
    offset = n * np.sum(weights * np.cos(np.pi * freqs))
    return np.sum(inner, axis=-1) - offset


def schwefel_2_13_terms(x: np.ndarray, a_matrix: np.ndarray, b_matrix: np.ndarray) -> np.ndarray:
    """B_i(x) = sum_j a_ij sin x_j + b_ij cos x_j."""
    return np.sin(x) @ a_matrix.T + np.cos(x) @ b_matrix.T


def schwefel_2_13(x: np.ndarray, a_matrix: np.ndarray, b_matrix: np.ndarray,
                  target: np.ndarray) -> np.ndarray:
    """sum_i (A_i - B_i(x))^2 where target holds A_i = B_i(alpha)."""
    return np.sum((target - schwefel_2_13_terms(x, a_matrix, b_matrix)) ** 2, axis=-1)


def michalewicz(x: np.ndarray, m: int = 10) -> np.ndarray:
    i = np.arange(1, x.shape[-1] + 1)
    return -np.sum(np.sin(x) * np.sin(i * x ** 2 / np.pi) ** (2 * m), axis=-1)


def twist(y: np.ndarray) -> np.ndarray:
    return 4.0 * (y ** 4 - 2.0 * y ** 3 + y ** 2)


def doubledip(x: np.ndarray, c: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Sixth-order bump of height s at c, zero outside the open window c +/- 0.5."""
    u = x - c
    bump = (-6144.0 * u ** 6 + 3088.0 * u ** 4 - 392.0 * u ** 2 + 1.0) * s
    return np.where((u > -0.5) & (u < 0.5), bump, 0.0)


def fractal_dips(seed: int, depth: int = 3) -> Tuple[np.ndarray, np.ndarray]:
    """
    Centres and scales of every doubledip term of fractal1D.

    Level k has 2^(k-1) cells; each cell holds ran2 in {0, 1, 2} dips with
    centre ran1 and scale 1 / (2^(k-1) * (2 - ran1)). Each cell draws from
    its own stream keyed on (seed, k, cell).
    """
    centres, scales = [], []
    for k in range(1, depth + 1):
        cells = 2 ** (k - 1)
        for cell in range(1, cells + 1):
            rng = np.random.default_rng([seed, k, cell])
            for _ in range(int(rng.integers(0, 3))):
                centres.append(rng.random())
                scales.append(1.0 / (cells * (2.0 - rng.random())))
    return np.asarray(centres, dtype=float), np.asarray(scales, dtype=float)


def fast_fractal(x: np.ndarray, centres: np.ndarray, scales: np.ndarray) -> np.ndarray:
    """sum_i fractal1D(x_i + twist(x_{(i mod n) + 1}))."""
    args = x + twist(np.roll(x, -1, axis=-1))
    dips = doubledip(args[..., None], centres, scales)
    return np.sum(dips, axis=(-2, -1))
