"""Dimension counts for pencils with prescribed ramification, and nodal-curve
nonemptiness numerology.

Everything here is integer arithmetic on small inputs.  The central quantity is
the adjusted expected dimension for a degree-k pencil on a genus-g curve with
prescribed ramification orders e_1..e_n at n marked points,

    rho_tilde = 2k - 2 - g - sum(e_i) + n,

which specializes to the classical rho(g, 1, k) = 2k - 2 - g when n = 0.
Severi-style nonemptiness for nodal curves of arithmetic genus p with delta
nodes cut by degree-k pencils is decided by a floor-divided Brill-Noether
inequality; two algebraically equivalent formulations are both evaluated and
compared on every call.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

from .errors import FormulationMismatch, RiemannHurwitzViolation

#: Inputs are capped at this magnitude.  Python integers cannot overflow, so the
#: cap is an interface guard, not an arithmetic necessity.
MAGNITUDE_CAP = 2**31


class UpwardClosureWarning(UserWarning):
    """Nonemptiness failed for some delta above the least nonempty one."""


def _check_magnitude(**values: int) -> None:
    for name, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"{name} must be an integer, got {value!r}")
        if abs(value) > MAGNITUDE_CAP:
            raise ValueError(f"{name} exceeds the 2^31 input cap: {value}")


def brill_noether_number(g: int, r: int, d: int) -> int:
    """Classical rho(g, r, d) = g - (r+1)(g - d + r)."""
    _check_magnitude(g=g, r=r, d=d)
    if g < 0 or r < 0:
        raise ValueError("g and r must be nonnegative")
    return g - (r + 1) * (g - d + r)


@dataclass(frozen=True)
class RamificationProfile:
    """A genus, a pencil degree and ramification orders at marked points.

    e is the tuple of prescribed orders, one per marked point; each order lies
    in 2..k.  The profile must satisfy the Riemann-Hurwitz bound
    sum(e_i) <= 2(k - 1 + g) + n, otherwise no cover exists and the
    constructor raises RiemannHurwitzViolation.  Genus 0 is allowed (the
    classical range is g >= 1; see `classical`).
    """

    g: int
    k: int
    e: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(self.e))
        _check_magnitude(g=self.g, k=self.k)
        for i, ei in enumerate(self.e):
            _check_magnitude(**{f"e[{i}]": ei})
        if self.g < 0:
            raise ValueError("genus must be nonnegative")
        if self.k < 2:
            raise ValueError("pencil degree k must be at least 2")
        for ei in self.e:
            if not 2 <= ei <= self.k:
                raise ValueError(f"ramification order {ei} outside 2..k={self.k}")
        if self.total_ramification > 2 * (self.k - 1 + self.g) + self.n:
            raise RiemannHurwitzViolation(
                f"sum(e)={self.total_ramification} exceeds "
                f"2(k-1+g)+n={2 * (self.k - 1 + self.g) + self.n}"
            )

    @property
    def n(self) -> int:
        return len(self.e)

    @property
    def total_ramification(self) -> int:
        return sum(self.e)

    @property
    def classical(self) -> bool:
        """Whether the profile sits in the usual g >= 1 range."""
        return self.g >= 1


def adjusted_rho(profile: RamificationProfile) -> int:
    """2k - 2 - g - sum(e_i) + n."""
    return (
        2 * profile.k
        - 2
        - profile.g
        - profile.total_ramification
        + profile.n
    )


def simple_branch_count(profile: RamificationProfile) -> int:
    """Number of residual simple branch points, 2(k-1+g) + n - sum(e_i)."""
    r = 2 * (profile.k - 1 + profile.g) + profile.n - profile.total_ramification
    if r < 0:
        # unreachable through the validating constructor; kept as a hard check
        raise RiemannHurwitzViolation(f"negative simple branch count {r}")
    return r


def hurwitz_dimension(profile: RamificationProfile) -> int:
    """Dimension (3g - 3 + n) + rho_tilde of the space of covers with this profile."""
    return 3 * profile.g - 3 + profile.n + adjusted_rho(profile)


def expected_codimension(profile: RamificationProfile) -> int:
    """max(0, -rho_tilde): expected codimension of the locus in moduli."""
    return max(0, -adjusted_rho(profile))


def expected_pencil_dimension(profile: RamificationProfile) -> int:
    """max(0, rho_tilde): expected dimension of the space of such pencils on a fixed curve."""
    return max(0, adjusted_rho(profile))


class VerdictTag(str, Enum):
    DOMINANT = "Dominant"
    GENERICALLY_FINITE = "GenericallyFinite"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class HurwitzVerdict:
    """Behaviour of the cover space -> moduli-of-curves forgetful map."""

    tag: VerdictTag
    rho_tilde: int
    n_plus_rho: int


def hurwitz_to_moduli_verdict(profile: RamificationProfile) -> HurwitzVerdict:
    """Dominant iff n + rho_tilde >= 0, generically finite otherwise.

    Both verdicts are only certified when rho_tilde >= -g; below that the
    answer is out of range and the tag is Unknown.
    """
    rho = adjusted_rho(profile)
    n_plus_rho = profile.n + rho
    if rho < -profile.g:
        tag = VerdictTag.UNKNOWN
    elif n_plus_rho >= 0:
        tag = VerdictTag.DOMINANT
    else:
        tag = VerdictTag.GENERICALLY_FINITE
    return HurwitzVerdict(tag=tag, rho_tilde=rho, n_plus_rho=n_plus_rho)


def severi_alpha(p: int, delta: int, k: int) -> int:
    """floor((p - delta) / (2(k-1))), the pivot index of the nonemptiness test."""
    _check_magnitude(p=p, delta=delta, k=k)
    if k < 2:
        raise ValueError("k must be at least 2")
    if p < 2:
        raise ValueError("polarization genus p must be at least 2")
    if not 0 <= delta < p:
        raise ValueError("delta must lie in 0..p-1")
    return (p - delta) // (2 * (k - 1))


def severi_nonempty(p: int, delta: int, k: int) -> bool:
    """Whether genus-(p - delta) curves with delta nodes cut by degree-k pencils exist.

    Evaluates rho(p, alpha, k*alpha + delta) >= 0 with alpha = severi_alpha and,
    independently, the equivalent inequality
    delta >= alpha * (p - delta - (k-1)(alpha+1)); a disagreement would be an
    implementation bug and raises FormulationMismatch.
    """
    alpha = severi_alpha(p, delta, k)
    via_rho = brill_noether_number(p, alpha, k * alpha + delta) >= 0
    via_inequality = delta >= alpha * (p - delta - (k - 1) * (alpha + 1))
    if via_rho != via_inequality:
        raise FormulationMismatch(
            f"rho form gave {via_rho}, inequality form gave {via_inequality} "
            f"at (p={p}, delta={delta}, k={k})"
        )
    return via_rho


def delta_zero(p: int, k: int, check_upward_closure: bool = True) -> int | None:
    """Least delta in 0..p-1 with severi_nonempty(p, delta, k), or None.

    Nonemptiness is expected to be upward-closed in delta; that is checked on
    the remaining range rather than assumed, and a violation triggers an
    UpwardClosureWarning.
    """
    _check_magnitude(p=p, k=k)
    least = None
    for delta in range(p):
        if severi_nonempty(p, delta, k):
            least = delta
            break
    if least is not None and check_upward_closure:
        for delta in range(least + 1, p):
            if not severi_nonempty(p, delta, k):
                warnings.warn(
                    f"nonemptiness not upward-closed at (p={p}, k={k}): "
                    f"holds at delta={least} but fails at delta={delta}",
                    UpwardClosureWarning,
                    stacklevel=2,
                )
        # the delta = p boundary (rational curves) is outside the contract range
    return least


def profile_report(profile: RamificationProfile) -> dict:
    """Flat JSON-ready summary of every numerical invariant of the profile."""
    verdict = hurwitz_to_moduli_verdict(profile)
    return {
        "g": profile.g,
        "k": profile.k,
        "n": profile.n,
        "e": list(profile.e),
        "rho": brill_noether_number(profile.g, 1, profile.k),
        "rho_tilde": adjusted_rho(profile),
        "r": simple_branch_count(profile),
        "hurwitz_dim": hurwitz_dimension(profile),
        "codim": expected_codimension(profile),
        "verdict": verdict.tag.value,
    }
