"""Closed forms for the dissipative free particle and damped harmonic oscillator.

Both models are quadratic, so the reduced state of the distinguished
coordinate is Gaussian and everything follows from second moments.  Units:
hbar = 1, mass = 1; the Ohmic friction coefficient eta has energy units.

For the oscillator the dimensionless friction is kappa = eta / (2*omega0);
the coupling strength used on sweep axes is alpha = eta / (2*pi*omega0)
= kappa / pi, so the underdamped/overdamped crossover kappa = 1 sits at
alpha = 1/pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, RegimeError

__all__ = [
    "FreeParticleParams",
    "FreeParticleResult",
    "OscillatorParams",
    "GaussianKernel",
    "MomentPair",
    "free_particle_kernel_width",
    "free_particle_entropy",
    "oscillator_f",
    "oscillator_moments",
    "oscillator_entropy_expansion",
    "oscillator_entropy",
    "kernel_from_moments",
    "kappa_from_alpha",
    "alpha_from_kappa",
]

# local window around kappa = 1 where the direct formulas lose precision
_KAPPA_SERIES_WINDOW = 1e-8


def kappa_from_alpha(alpha: float) -> float:
    return math.pi * alpha


def alpha_from_kappa(kappa: float) -> float:
    return kappa / math.pi


@dataclass(frozen=True)
class FreeParticleParams:
    """Dissipative free particle: friction eta, bath cutoff omega_c,
    box regulator L (the entropy is only defined relative to L) and
    spatial dimension d."""

    eta: float
    omega_c: float
    length: float
    dim: int = 1

    def __post_init__(self):
        if not self.eta > 0:
            raise DomainError(f"eta must be > 0, got {self.eta}")
        if not self.omega_c > 0:
            raise DomainError(f"omega_c must be > 0, got {self.omega_c}")
        if not self.length > 0:
            raise DomainError(f"length must be > 0, got {self.length}")
        if self.dim < 1:
            raise DomainError(f"dim must be >= 1, got {self.dim}")


@dataclass(frozen=True)
class FreeParticleResult:
    entropy: float
    a_l2: float  # a * L**2, the argument of the leading logarithm


def free_particle_kernel_width(p: FreeParticleParams) -> float:
    """Width coefficient a of the reduced kernel exp(-a (x - x')**2) / L,

        a = (1/4) (eta / pi) ln(1 + omega_c**2 / eta**2).
    """
    return 0.25 * (p.eta / math.pi) * math.log1p((p.omega_c / p.eta) ** 2)


def free_particle_entropy(p: FreeParticleParams) -> FreeParticleResult:
    """Specific entropy of the dissipative free particle,

        S = (d/2) * (ln(a L**2) + 1 - ln pi),

    returned together with a*L**2 for diagnostics.  S is only positive for
    a L**2 > pi / e; the formula is evaluated for any positive a L**2.
    """
    a = free_particle_kernel_width(p)
    a_l2 = a * p.length**2
    s = 0.5 * p.dim * (math.log(a_l2) + 1.0 - math.log(math.pi))
    return FreeParticleResult(entropy=s, a_l2=a_l2)


@dataclass(frozen=True)
class OscillatorParams:
    """Damped harmonic oscillator: frequency omega0, Ohmic friction eta,
    bath cutoff omega_c (must exceed omega0 for the moment formulas)."""

    omega0: float
    eta: float
    omega_c: float

    def __post_init__(self):
        if not self.omega0 > 0:
            raise DomainError(f"omega0 must be > 0, got {self.omega0}")
        if self.eta < 0:
            raise DomainError(f"eta must be >= 0, got {self.eta}")
        if not self.omega_c > 0:
            raise DomainError(f"omega_c must be > 0, got {self.omega_c}")

    @property
    def kappa(self) -> float:
        return self.eta / (2.0 * self.omega0)


def oscillator_f(kappa: float) -> float:
    """Ground-state position-variance function f(kappa), with
    <q^2> = f(kappa) / (2 omega0).

    Overdamped branch (kappa > 1):

        f = (1/pi) ln[(kappa + sqrt(kappa^2-1)) / (kappa - sqrt(kappa^2-1))]
            / sqrt(kappa^2-1)

    which continues analytically to kappa < 1 as

        f = (2/pi) arctan(sqrt(1-kappa^2)/kappa) / sqrt(1-kappa^2).

    The continuation is forced: <q^2> is real and kappa -> 0 must recover
    the undamped ground state (f = 1).  The point kappa = 1 is a removable
    singularity with limit 2/pi; within |kappa-1| < 1e-8 a short Taylor
    series is used because both closed forms lose precision there.
    """
    if kappa < 0:
        raise DomainError(f"kappa must be >= 0, got {kappa}")
    t = kappa - 1.0
    if abs(t) < _KAPPA_SERIES_WINDOW:
        return (2.0 / math.pi) * (1.0 - t / 3.0 + 2.0 * t * t / 15.0)
    if kappa < 1.0:
        root = math.sqrt((1.0 - kappa) * (1.0 + kappa))
        return (2.0 / math.pi) * math.atan2(root, kappa) / root
    root = math.sqrt((kappa - 1.0) * (kappa + 1.0))
    return (1.0 / math.pi) * math.log((kappa + root) / (kappa - root)) / root


@dataclass(frozen=True)
class MomentPair:
    """Second moments of the reduced oscillator state.

    nu = sqrt(<q^2><p^2>) is the symplectic eigenvalue (>= 1/2, with
    equality only for the pure undamped ground state), eps = 1/nu and

        eps_tilde = eps * sqrt(1 - eps) / sqrt(1 - eps^2 / 4)

    enter the large-(a/b) entropy expansion; a/b = 4 <q^2><p^2> = 4 nu^2.
    """

    q2: float
    p2: float

    def __post_init__(self):
        if not self.q2 > 0:
            raise DomainError(f"<q^2> must be > 0, got {self.q2}")
        if not self.p2 > 0:
            raise DomainError(f"<p^2> must be > 0, got {self.p2}")
        if self.nu < 0.5 - 1e-12:
            raise DomainError(f"nu = {self.nu} violates the Heisenberg bound 1/2")

    @property
    def nu(self) -> float:
        return math.sqrt(self.q2 * self.p2)

    @property
    def eps(self) -> float:
        return 1.0 / self.nu

    @property
    def eps_tilde(self) -> float:
        e = self.eps
        if e >= 1.0:
            raise RegimeError(f"eps_tilde needs eps < 1, got eps = {e}")
        return e * math.sqrt(1.0 - e) / math.sqrt(1.0 - 0.25 * e * e)

    @property
    def a_over_b(self) -> float:
        return 4.0 * self.q2 * self.p2


def oscillator_moments(p: OscillatorParams) -> MomentPair:
    """T = 0 moments of the damped oscillator in the large-cutoff regime,

        <q^2> = f(kappa) / (2 omega0)
        <p^2> = omega0^2 (1 - 2 kappa^2) <q^2> + (2 omega0 kappa / pi) ln(omega_c/omega0).

    The <p^2> formula is a large-cutoff approximation; a non-positive result
    means it was used outside its regime and raises RegimeError rather than
    being clamped.
    """
    if p.omega_c <= p.omega0:
        raise RegimeError(
            f"moment formulas need omega_c > omega0 (got {p.omega_c} <= {p.omega0})"
        )
    k = p.kappa
    q2 = oscillator_f(k) / (2.0 * p.omega0)
    p2 = p.omega0**2 * (1.0 - 2.0 * k * k) * q2 + (
        2.0 * p.omega0 * k / math.pi
    ) * math.log(p.omega_c / p.omega0)
    if p2 <= 0:
        raise RegimeError(
            f"<p^2> = {p2} <= 0: the large-cutoff formula is invalid at kappa={k}, "
            f"omega_c/omega0={p.omega_c / p.omega0}"
        )
    return MomentPair(q2=q2, p2=p2)


def oscillator_entropy_expansion(m: MomentPair) -> float:
    """Entropy from the eps-expansion of the replica trace,

        S = -[(eps_tilde/eps) ln eps_tilde + (eps_tilde/eps^2) ln(1 - eps)],

    valid for eps = 1/nu < 1 (intended regime a/b >> 1).  Raises RegimeError
    at eps >= 1; use the exact Gaussian entropy there instead.
    """
    e = m.eps
    if e >= 1.0:
        raise RegimeError(
            f"entropy expansion needs eps < 1 (nu > 1), got eps = {e}; "
            "use the exact Gaussian entropy"
        )
    et = m.eps_tilde
    return -((et / e) * math.log(et) + (et / (e * e)) * math.log1p(-e))


def oscillator_entropy(p: OscillatorParams, method: str = "exact") -> float:
    """Ground-state entanglement entropy of the damped oscillator.

    method="exact" evaluates the single-mode Gaussian entropy S(nu);
    method="expansion" applies the eps-expansion (RegimeError if nu <= 1).
    Sweeps report both so the approximation gap is visible.
    """
    from .oracles import gaussian_entropy

    m = oscillator_moments(p)
    if method == "exact":
        return gaussian_entropy(m.nu)
    if method == "expansion":
        return oscillator_entropy_expansion(m)
    raise DomainError(f"unknown method {method!r}; expected 'exact' or 'expansion'")


@dataclass(frozen=True)
class GaussianKernel:
    """Parameters (a, b) of the normalised Gaussian kernel

        rho(x, x') = sqrt(4 b / pi) exp(-a (x-x')^2 - b (x+x')^2),

    a valid density operator requires a > b > 0.  From oscillator moments:
    a = <p^2>/2, b = 1/(8 <q^2>).
    """

    a: float
    b: float

    def __post_init__(self):
        if not self.b >= 0:
            raise DomainError(f"b must be >= 0, got {self.b}")
        if not self.a > self.b:
            raise DomainError(f"need a > b for a valid state, got a={self.a}, b={self.b}")

    @property
    def a_over_b(self) -> float:
        if self.b == 0:
            raise DomainError("a/b undefined for b = 0")
        return self.a / self.b


def kernel_from_moments(m: MomentPair) -> GaussianKernel:
    return GaussianKernel(a=0.5 * m.p2, b=1.0 / (8.0 * m.q2))
