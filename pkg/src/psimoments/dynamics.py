"""The rational map psi(z) = z - 1/z on the Riemann sphere and its real inverse branch."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sequences import LambdaTable, rho

OVERFLOW = 1e150
TINY = 1e-300


@dataclass(frozen=True)
class ExtendedComplex:
    """A point of C u {oo}.  ``value`` is meaningless when ``at_infinity``."""

    value: complex = 0j
    at_infinity: bool = False

    @classmethod
    def of(cls, z) -> "ExtendedComplex":
        """Wrap a number (or pass through), collapsing huge or non-finite values to oo."""
        if isinstance(z, ExtendedComplex):
            return z
        if z is None:
            return INFINITY
        mag = abs(z)
        if not mag <= OVERFLOW:  # also catches nan
            return INFINITY
        return cls(z, False)

    @property
    def is_finite(self) -> bool:
        return not self.at_infinity

    def __complex__(self) -> complex:
        if self.at_infinity:
            return complex(math.inf, 0.0)
        return complex(self.value)

    def __repr__(self) -> str:
        return "ExtendedComplex(oo)" if self.at_infinity else f"ExtendedComplex({self.value!r})"


INFINITY = ExtendedComplex(0j, True)


def _step(w):
    if abs(w) < TINY:
        return None
    w = w - 1 / w
    if not abs(w) <= OVERFLOW:
        return None
    return w


def psi(z) -> ExtendedComplex:
    """z - 1/z, with psi(0) = psi(oo) = oo."""
    z = ExtendedComplex.of(z)
    if z.at_infinity:
        return INFINITY
    return ExtendedComplex.of(_step(z.value))


def iterate(w, n: int):
    """Apply psi ``n`` times to a finite number.

    Returns ``(result, smallest)`` where ``result`` is ``None`` once the orbit
    reaches oo and ``smallest`` is the least modulus among the points fed to
    psi (a small value there means the orbit passed next to a pole).
    """
    smallest = math.inf
    for _ in range(n):
        a = abs(w)
        if a < smallest:
            smallest = a
        if a < TINY:
            return None, float(smallest)
        w = w - 1 / w
        if not abs(w) <= OVERFLOW:
            return None, float(smallest)
    return w, float(smallest)


def psi_iter(z, n: int) -> ExtendedComplex:
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    z = ExtendedComplex.of(z)
    if z.at_infinity:
        return INFINITY
    w, _ = iterate(z.value, n)
    return ExtendedComplex.of(w)


def phi(x, sqrt=math.sqrt):
    """Positive root y of psi(y) = x.

    For negative x the root is formed as 2/(sqrt(x**2+4) - x), which avoids
    the cancellation in x + sqrt(x**2 + 4).
    """
    r = sqrt(x * x + 4)
    if x >= 0:
        return (x + r) / 2
    return 2 / (r - x)


def phi_iter(x, k: int, sqrt=math.sqrt):
    if k < 0:
        raise ValueError("iteration count must be non-negative")
    for _ in range(k):
        x = phi(x, sqrt)
    return x


@dataclass(frozen=True)
class DiscCert:
    """Claim psi(D(lambda_n, c*rho_{n,N})) is inside D(lambda_{n-1}, c*rho_{n-1,N})."""

    n: int
    N: int
    c: float
    center: float
    radius: float

    def __post_init__(self):
        if not 0 < self.c <= 1:
            raise ValueError(f"c must lie in (0, 1], got {self.c}")
        if not 1 <= self.N < self.n:
            raise ValueError(f"need 1 <= N < n, got n={self.n}, N={self.N}")
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    @classmethod
    def build(cls, table: LambdaTable, n: int, N: int, c: float) -> "DiscCert":
        if not 1 <= N < n:
            raise ValueError(f"need 1 <= N < n, got n={n}, N={N}")
        return cls(n, N, c, float(table[n]), c * float(rho(table, n, N)))


def check_disc_step(cert: DiscCert, table: LambdaTable, samples: int, seed: int,
                    slack: float = 1e-12) -> bool:
    """Sample the source disc and test that every psi-image lands in the target disc."""
    n, N = cert.n, cert.N
    if abs(cert.center - float(table[n])) > 1e-12 * cert.center:
        raise ValueError("certificate center does not match lambda_n of the table")
    rng = np.random.default_rng(seed)
    r = cert.radius * np.sqrt(rng.random(samples))
    theta = rng.uniform(0.0, 2 * np.pi, samples)
    z = cert.center + r * np.exp(1j * theta)
    image = z - 1 / z
    target_center = float(table[n - 1])
    target_radius = cert.c * float(rho(table, n - 1, N))
    dist = np.abs(image - target_center)
    return bool(np.all(dist < target_radius + slack * max(1.0, target_radius)))
