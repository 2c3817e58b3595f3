"""Dense complex matrices and a Hermitian Jacobi eigensolver.

Matrices are plain ``numpy`` complex128 arrays. The eigensolver is a
two-sided complex Jacobi method: each rotation zeroes one off-diagonal pair
after first rotating its phase onto the real axis. Pivots are visited in a
fixed round-robin schedule, so one sweep is ``n - 1`` rounds of disjoint
pairs and each round is applied as a single vectorised update. Every pair
is visited exactly once per sweep, and the schedule does not depend on the
matrix, so results are bit-for-bit reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NegativeEigenvalue, NoConvergence, NotHermitian

__all__ = [
    "EigenDecomposition",
    "as_matrix",
    "is_hermitian",
    "hermitian_eig",
    "multiply",
    "adjoint",
    "scale",
    "add",
    "frobenius_distance",
    "max_abs",
    "inv_sqrt_psd",
]

HERMITIAN_TOL = 1e-12
EIG_TOL = 1e-13
# rotations allowed per decomposition, in units of n^2
ROTATION_BUDGET = 100


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in descending order and matching eigenvector columns."""

    eigenvalues: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        V = self.vectors
        return (V * self.eigenvalues) @ V.conj().T


def as_matrix(M) -> np.ndarray:
    """Copy ``M`` into a finite 2-D complex128 array."""
    A = np.array(M, dtype=np.complex128)
    if A.ndim != 2 or 0 in A.shape:
        raise DimensionMismatch(f"expected a non-empty 2-D matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def max_abs(M) -> float:
    M = np.asarray(M)
    return float(np.max(np.abs(M))) if M.size else 0.0


def is_hermitian(M, tol: float = HERMITIAN_TOL) -> bool:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return False
    return max_abs(M - M.conj().T) <= tol * max(1.0, max_abs(M))


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Rounds of disjoint index pairs covering every pair once (circle method)."""
    players = list(range(n)) + ([-1] if n % 2 else [])
    N = len(players)
    rounds = []
    for _ in range(N - 1):
        P, Q = [], []
        for i in range(N // 2):
            a, b = players[i], players[N - 1 - i]
            if a >= 0 and b >= 0:
                P.append(min(a, b))
                Q.append(max(a, b))
        rounds.append((np.array(P, dtype=np.intp), np.array(Q, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_max(M: np.ndarray) -> float:
    off = np.abs(M)
    np.fill_diagonal(off, 0.0)
    return float(off.max())


def hermitian_eig(M, tol: float = EIG_TOL) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.

    Iterates until every off-diagonal magnitude is at most
    ``tol * ||M||_F``. Eigenvalues come back in descending order; exact ties
    keep their original diagonal order.

    Raises
    ------
    NotHermitian
        If ``M`` is not square or ``max|M - M*| > 1e-12 * max(1, max|M|)``.
    NoConvergence
        If more than ``100 n^2`` rotations are needed.
    """
    A = as_matrix(M)
    if not is_hermitian(A):
        raise NotHermitian("matrix is not Hermitian")
    n = A.shape[0]
    A = 0.5 * (A + A.conj().T)
    V = np.eye(n, dtype=np.complex128)
    threshold = tol * float(np.linalg.norm(A))
    rounds = _round_robin(n) if n > 1 else []
    budget = ROTATION_BUDGET * n * n
    rotations = 0
    while n > 1 and _off_max(A) > threshold:
        for P, Q in rounds:
            c = A[P, Q]
            r = np.abs(c)
            active = r > threshold
            if not active.any():
                continue
            P, Q, c, r = P[active], Q[active], c[active], r[active]
            rotations += len(P)
            if rotations > budget:
                raise NoConvergence(f"Jacobi exceeded {budget} rotations")
            a = A[P, P].real
            b = A[Q, Q].real
            phase = c.conj() / r
            theta = (b - a) / (2.0 * r)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            cs = 1.0 / np.hypot(t, 1.0)
            sn = t * cs
            # U restricted to (p, q): [[cs, sn], [-sn * phase, cs * phase]]
            u_pp, u_pq = cs, sn
            u_qp, u_qq = -sn * phase, cs * phase
            for X in (A, V):
                xp, xq = X[:, P], X[:, Q]
                X[:, P] = xp * u_pp + xq * u_qp
                X[:, Q] = xp * u_pq + xq * u_qq
            rp, rq = A[P, :], A[Q, :]
            A[P, :] = np.conj(u_pp)[:, None] * rp + np.conj(u_qp)[:, None] * rq
            A[Q, :] = np.conj(u_pq)[:, None] * rp + np.conj(u_qq)[:, None] * rq
            A[P, Q] = 0.0
            A[Q, P] = 0.0
            A[P, P] = A[P, P].real
            A[Q, Q] = A[Q, Q].real
    evals = A.diagonal().real.copy()
    order = sorted(range(n), key=lambda i: (-evals[i], i))
    return EigenDecomposition(evals[order], V[:, order])


def _conform(A, B, what: str) -> tuple[np.ndarray, np.ndarray]:
    A, B = np.asarray(A), np.asarray(B)
    if what == "mul" and A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    if what == "same" and A.shape != B.shape:
        raise DimensionMismatch(f"shape {A.shape} does not match {B.shape}")
    return A, B


def multiply(A, B) -> np.ndarray:
    A, B = _conform(A, B, "mul")
    return A @ B


def adjoint(A) -> np.ndarray:
    return np.asarray(A).conj().T


def scale(A, s: complex) -> np.ndarray:
    return s * np.asarray(A)


def add(A, B) -> np.ndarray:
    A, B = _conform(A, B, "same")
    return A + B


def frobenius_distance(A, B) -> float:
    A, B = _conform(A, B, "same")
    return float(np.linalg.norm(A - B))


def inv_sqrt_psd(S, rank_tol: float = 1e-9) -> np.ndarray:
    """Pseudo-inverse square root of a Hermitian PSD matrix.

    Eigenvalues at or below ``rank_tol * lambda_max`` are treated as zero and
    map to zero.
    """
    S = as_matrix(S)
    if not is_hermitian(S, 1e-10):
        raise NotHermitian("frame operator is not Hermitian")
    eig = hermitian_eig(S)
    lam = eig.eigenvalues
    lam_max = max(float(lam[0]), 0.0)
    if lam[-1] < -1e-9 * lam_max:
        raise NegativeEigenvalue(f"smallest eigenvalue {lam[-1]:.3e} is negative")
    keep = lam > rank_tol * lam_max
    w = np.zeros_like(lam)
    w[keep] = lam[keep] ** -0.5
    V = eig.vectors
    return (V * w) @ V.conj().T
