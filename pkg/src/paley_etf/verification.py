"""Numerical checks for equiangularity, tightness and Gram spectra.

Checks never raise on a mathematical failure: they return a
:class:`VerificationReport` with the measured deviation so that negative
outcomes can be recorded. Exceptions are reserved for malformed input.
Everything is recomputed from the synthesis matrix.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, InvalidDimensions, NotHermitian
from .frames import Frame
from .linalg import hermitian_eig, is_hermitian, max_abs

FORMAT_VERSION = 1


class GramVerdict(str, enum.Enum):
    EQUAL = "Equal"
    CONJUGATE_EQUAL = "ConjugateEqual"
    DIFFERENT = "Different"


@dataclass(frozen=True)
class Check:
    name: str
    target: float
    measured: float
    tolerance: float
    passed: bool

    @property
    def deviation(self) -> float:
        return abs(self.measured - self.target)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "target": self.target,
            "measured": self.measured,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    subject: dict
    checks: list[Check] = field(default_factory=list)
    extra: GramVerdict | None = None
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, target: float, measured: float, tolerance: float) -> Check:
        target, measured = float(target), float(measured)
        if not (math.isfinite(target) and math.isfinite(measured)):
            raise ValueError(f"check {name!r} produced a non-finite value")
        check = Check(name, target, measured, tolerance, abs(measured - target) <= tolerance)
        self.checks.append(check)
        return check

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        return self

    def failing(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        out = {
            "format_version": FORMAT_VERSION,
            "subject": self.subject,
            "checks": [c.to_dict() for c in self.checks],
            "verdict": self.verdict,
        }
        if self.extra is not None:
            out["extra"] = self.extra.value
        if self.details:
            out["details"] = self.details
        return out


def welch_target_fraction(n: int, d: int) -> Fraction:
    """Exact squared-overlap target (n - d) / (d (n - 1))."""
    if n < 2 or d < 1 or n < d:
        raise InvalidDimensions(f"need n >= 2 and 1 <= d <= n, got n={n}, d={d}")
    return Fraction(n - d, d * (n - 1))


def welch_target(n: int, d: int) -> float:
    return float(welch_target_fraction(n, d))


def check_equiangular(f: Frame, tol: float = 1e-9) -> VerificationReport:
    """Compare every pairwise squared overlap against the Welch target.

    The ``equiangular`` check's ``measured`` value is the squared overlap
    farthest from the target; ``unit_norm`` reports the worst column norm.
    """
    report = VerificationReport(subject=f.describe())
    n, d = f.n, f.d
    target = welch_target(n, d)
    G = f.gram()
    norms = np.sqrt(np.abs(np.diag(G).real))
    worst_norm = norms[np.argmax(np.abs(norms - 1.0))]
    report.add("unit_norm", 1.0, worst_norm, tol)
    iu = np.triu_indices(n, k=1)
    overlaps = np.abs(G[iu]) ** 2
    worst = overlaps[np.argmax(np.abs(overlaps - target))]
    report.add("equiangular", target, worst, tol)
    return report


def check_tight(f: Frame, tol: float = 1e-9) -> VerificationReport:
    """Measure ``max |T T* - (n/d) I|``."""
    report = VerificationReport(subject=f.describe())
    S = f.frame_operator()
    dev = max_abs(S - (f.n / f.d) * np.eye(f.d))
    report.add("tight", 0.0, dev, tol)
    return report


def check_gram_spectrum(G, n: int, d: int, tol: float = 1e-8) -> VerificationReport:
    """Compare the sorted spectrum of ``G`` with ``(n/d) x d, 0 x (n-d)``."""
    G = np.asarray(G, dtype=np.complex128)
    if G.shape != (n, n):
        raise DimensionMismatch(f"expected a {n}x{n} Gram matrix, got {G.shape}")
    if not is_hermitian(G):
        raise NotHermitian("Gram matrix is not Hermitian")
    evals = hermitian_eig(G).eigenvalues
    expected = np.zeros(n)
    expected[:d] = n / d
    report = VerificationReport(subject={"n": n, "d": d})
    report.add("spectrum", 0.0, float(np.max(np.abs(evals - expected))), tol)
    report.details["eigenvalues"] = [float(x) for x in evals]
    return report


@dataclass(frozen=True)
class GramComparison:
    verdict: GramVerdict
    deviation: float
    conjugate_deviation: float

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "deviation": self.deviation,
            "conjugate_deviation": self.conjugate_deviation,
        }


def gram_equal_up_to_conjugation(G1, G2, tol: float = 1e-9) -> GramComparison:
    G1, G2 = np.asarray(G1), np.asarray(G2)
    if G1.shape != G2.shape:
        raise DimensionMismatch(f"cannot compare {G1.shape} with {G2.shape}")
    dev = max_abs(G1 - G2)
    cdev = max_abs(G1 - G2.conj())
    if dev <= tol:
        verdict = GramVerdict.EQUAL
    elif cdev <= tol:
        verdict = GramVerdict.CONJUGATE_EQUAL
    else:
        verdict = GramVerdict.DIFFERENT
    return GramComparison(verdict, dev, cdev)


def verify_frame(f: Frame, tol: float = 1e-9) -> VerificationReport:
    """Equiangularity and tightness in one report."""
    return check_equiangular(f, tol).merge(check_tight(f, tol))
