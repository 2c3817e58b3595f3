"""Equiangular tight frame constructions.

Sign matrices (tournament adjacency matrices and skew conference matrices)
are exact ``int64`` numpy arrays and every identity on them is checked in
integer arithmetic. Gram matrices and frames are complex128.

Routes to ``(n, d)`` frames:

* ``paley_adjacency`` / ``extract_core(conference_skew(k))`` give a sign
  matrix ``A`` with ``A^2 = J - nI``; ``gram_upper`` and ``gram_lower`` turn
  it into Gram matrices of ``(n, (n+1)/2)`` and ``(n, (n-1)/2)`` frames and
  ``frame_from_gram`` factors them.
* ``zauner_frame`` writes down a ``(q+1, (q+1)/2)`` frame from quadratic
  residues directly; ``drop_one_canonical`` removes a vector and rescales
  the rest into a tight frame.
* ``conference_etf`` uses a skew conference matrix of order ``2^k`` as the
  imaginary part of a Gram matrix.
"""

from __future__ import annotations

import math

import numpy as np

from .characters import additive_character_table, quadratic_character_table, residues
from .errors import (
    BadBorder,
    CoreIdentityFailed,
    EvenCharacteristic,
    IndexOutOfRange,
    InvalidDimensions,
    NotConference,
    NotHermitian,
    OrderTooLarge,
    RankDeficient,
    SpectrumMismatch,
    WrongResidueClass,
)
from .finite_field import DEFAULT_MAX_ORDER, FiniteField
from .frames import Frame
from .linalg import as_matrix, hermitian_eig, inv_sqrt_psd, is_hermitian
from .verification import (
    VerificationReport,
    check_equiangular,
    check_tight,
    gram_equal_up_to_conjugation,
)

__all__ = [
    "paley_adjacency",
    "conference_skew",
    "extract_core",
    "core_identities_hold",
    "gram_upper",
    "gram_lower",
    "frame_from_gram",
    "zauner_frame",
    "reduced_frame_operator",
    "drop_one_canonical",
    "conference_etf",
    "conjecture_experiment",
    "paley_frame",
    "conference_frame",
]

MIN_SIZE = 3


# -- sign matrices ------------------------------------------------------------

def paley_adjacency(F: FiniteField) -> np.ndarray:
    """Tournament matrix ``A[j, k] = chi(a_j - a_k)`` in canonical element order."""
    if F.p == 2:
        raise EvenCharacteristic(f"no Paley tournament over {F!r}")
    if F.q % 4 != 3:
        raise WrongResidueClass(f"q = {F.q} is not 3 mod 4; the Paley matrix would be symmetric")
    chi = quadratic_character_table(F)
    idx = np.arange(F.q)
    A = chi[F.sub_vec(idx[:, None], idx[None, :])]
    if not core_identities_hold(A):
        raise CoreIdentityFailed(f"Paley matrix of {F!r} fails A^2 = J - qI")
    return A


def conference_skew(k: int, max_size: int = DEFAULT_MAX_ORDER) -> np.ndarray:
    """Skew conference matrix of order ``2^k`` from the doubling recursion.

    ``C_2 = [[0, -1], [1, 0]]`` and ``C_2m = [[C, C - I], [C + I, -C]]``.
    """
    if k < 1:
        raise InvalidDimensions(f"k must be >= 1, got {k}")
    if 2**k > max_size:
        raise OrderTooLarge(f"2^{k} exceeds the size bound {max_size}")
    C = np.array([[0, -1], [1, 0]], dtype=np.int64)
    for _ in range(k - 1):
        I = np.eye(len(C), dtype=np.int64)
        C = np.block([[C, C - I], [C + I, -C]])
    return C


def core_identities_hold(A: np.ndarray) -> bool:
    """Exact test of ``A^T = -A``, ``A e = 0`` and ``A^2 = J - nI``."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or not np.issubdtype(A.dtype, np.integer):
        return False
    n = len(A)
    if not np.array_equal(A.T, -A):
        return False
    if np.any(A.sum(axis=1) != 0):
        return False
    target = np.ones((n, n), dtype=np.int64) - n * np.eye(n, dtype=np.int64)
    return np.array_equal(A @ A, target)


def extract_core(C: np.ndarray) -> np.ndarray:
    """Lower-right block of a conference matrix bordered by ``(0, -e^T; e, .)``."""
    C = np.asarray(C)
    if C.ndim != 2 or C.shape[0] != C.shape[1] or len(C) < 2:
        raise BadBorder(f"expected a square matrix of order >= 2, got shape {C.shape}")
    if C[0, 0] != 0 or np.any(C[0, 1:] != -1) or np.any(C[1:, 0] != 1):
        raise BadBorder("first row must be (0, -1, ..., -1) and first column (0, 1, ..., 1)")
    A = np.array(C[1:, 1:], dtype=np.int64)
    if not core_identities_hold(A):
        raise CoreIdentityFailed("core fails A^T = -A, A e = 0 or A^2 = J - nI")
    return A


# -- Gram matrices and Lemma-1 style factorisation ----------------------------

def _checked_core(A, n: int | None) -> tuple[np.ndarray, int]:
    A = np.asarray(A)
    if n is None:
        n = len(A)
    if A.shape != (n, n):
        raise CoreIdentityFailed(f"core has shape {A.shape}, expected {n}x{n}")
    if n < MIN_SIZE:
        raise InvalidDimensions(f"n = {n} is below the minimum size {MIN_SIZE}")
    if not core_identities_hold(A):
        raise CoreIdentityFailed("core fails A^T = -A, A e = 0 or A^2 = J - nI")
    return A, n


def gram_upper(A: np.ndarray, n: int | None = None) -> np.ndarray:
    """``(J + nI + i sqrt(n) A) / 2d`` with ``d = (n + 1) / 2``."""
    A, n = _checked_core(A, n)
    d = (n + 1) // 2
    J = np.ones((n, n))
    return (J + n * np.eye(n) + 1j * math.sqrt(n) * A) / (2 * d)


def gram_lower(A: np.ndarray, n: int | None = None) -> np.ndarray:
    """``(nI - J + i sqrt(n) A) / 2(d - 1)`` with ``d = (n + 1) / 2``."""
    A, n = _checked_core(A, n)
    d = (n + 1) // 2
    J = np.ones((n, n))
    return (n * np.eye(n) - J + 1j * math.sqrt(n) * A) / (2 * (d - 1))


def frame_from_gram(G, n: int, d: int, spectrum_tol: float = 1e-8, **provenance) -> Frame:
    """Factor ``G = T* T`` with ``T = sqrt(n/d) V_d*``.

    ``V_d`` holds the eigenvectors of the ``d`` leading eigenvalues. The
    spectrum must be ``n/d`` with multiplicity ``d`` and zero otherwise.
    Keyword arguments are passed to :class:`Frame` as provenance.

    The factor is unique only up to a ``d x d`` unitary; the basis chosen
    within the degenerate eigenspace is whatever the Jacobi sweeps produce,
    which is deterministic.
    """
    G = as_matrix(G)
    if G.shape != (n, n):
        raise InvalidDimensions(f"Gram matrix has shape {G.shape}, expected {n}x{n}")
    if not 1 <= d <= n:
        raise InvalidDimensions(f"need 1 <= d <= n, got d={d}, n={n}")
    if not is_hermitian(G):
        raise NotHermitian("Gram matrix is not Hermitian")
    eig = hermitian_eig(G)
    expected = np.zeros(n)
    expected[:d] = n / d
    dev = float(np.max(np.abs(eig.eigenvalues - expected)))
    if dev > spectrum_tol:
        raise SpectrumMismatch(
            f"spectrum deviates from ({n}/{d} x{d}, 0 x{n - d}) by {dev:.3e}")
    T = math.sqrt(n / d) * eig.vectors[:, :d].conj().T
    return Frame(T, **provenance)


def paley_frame(F: FiniteField, upper: bool = True) -> Frame:
    """Paley-tournament frame: ``(q, (q+1)/2)`` if ``upper`` else ``(q, (q-1)/2)``."""
    A = paley_adjacency(F)
    n = F.q
    if upper:
        G, d, tag = gram_upper(A, n), (n + 1) // 2, "paley-upper"
    else:
        G, d, tag = gram_lower(A, n), (n - 1) // 2, "paley-lower"
    return frame_from_gram(G, n, d, construction=tag, field=F.descriptor())


def conference_frame(k: int, upper: bool = True) -> Frame:
    """Same as :func:`paley_frame` but with the core of ``conference_skew(k)``."""
    A = extract_core(conference_skew(k))
    n = len(A)
    if upper:
        G, d, tag = gram_upper(A, n), (n + 1) // 2, "conference-upper"
    else:
        G, d, tag = gram_lower(A, n), (n - 1) // 2, "conference-lower"
    return frame_from_gram(G, n, d, construction=tag, parameters={"conference_k": k})


# -- quadratic residue frames -------------------------------------------------

def zauner_frame(F: FiniteField, c=None) -> Frame:
    """``(q+1, (q+1)/2)`` frame from the quadratic residues of an odd field.

    Column 0 is the first basis vector. Column ``j > 0`` is
    ``(1, sqrt2 psi_c(b_1 a), ..., sqrt2 psi_c(b_L a)) / sqrt(q)`` for the
    field element ``a = a_{j-1}`` and the residues ``b_l`` in canonical order.
    """
    if F.p == 2:
        raise EvenCharacteristic(f"no quadratic residue frame over {F!r}")
    c = F.one if c is None else F(c)
    if not c:
        raise ValueError("character parameter c must be nonzero")
    q = F.q
    d = (q + 1) // 2
    psi = additive_character_table(F, c)
    b = np.array([r.value for r in residues(F)], dtype=np.int64)
    a = np.arange(q)
    T = np.zeros((d, q + 1), dtype=np.complex128)
    T[0, 0] = 1.0
    T[0, 1:] = 1 / math.sqrt(q)
    T[1:, 1:] = math.sqrt(2 / q) * psi[F.mul_vec(b[:, None], a[None, :])]
    return Frame(T, construction="zauner", field=F.descriptor(),
                 parameters={"character_c": c.value})


def reduced_frame_operator(f: Frame, index: int = 0) -> np.ndarray:
    """Frame operator ``T' T'*`` of ``f`` with column ``index`` removed."""
    if not 0 <= index < f.n:
        raise IndexOutOfRange(f"index {index} out of range for {f.n} vectors")
    T = np.delete(f.synthesis, index, axis=1)
    return T @ T.conj().T


def drop_one_canonical(f: Frame, index: int = 0, rank_tol: float = 1e-9) -> Frame:
    """Remove one vector and return the canonical tight frame of the rest.

    Each remaining vector is mapped through ``S^{-1/2}`` (``S`` the reduced
    frame operator) and then normalised to unit length.
    """
    S = reduced_frame_operator(f, index)
    lam = hermitian_eig(S).eigenvalues
    rank = int(np.sum(lam > rank_tol * max(lam[0], 0.0))) if lam[0] > 0 else 0
    if rank < f.d:
        raise RankDeficient(
            f"removing vector {index} leaves rank {rank} < d = {f.d}")
    if f.n - 1 < f.d:
        raise RankDeficient("fewer vectors than dimensions after removal")
    T = inv_sqrt_psd(S, rank_tol) @ np.delete(f.synthesis, index, axis=1)
    T = T / np.linalg.norm(T, axis=0)
    params = dict(f.parameters)
    params["dropped_index"] = index
    return Frame(T, construction="drop-one-canonical", field=f.field, parameters=params)


# -- conference route ---------------------------------------------------------

def conference_etf(C: np.ndarray, spectrum_tol: float = 1e-10) -> Frame:
    """``(n, n/2)`` frame with Gram ``I + i C / sqrt(n - 1)``."""
    C = np.asarray(C)
    if C.ndim != 2 or C.shape[0] != C.shape[1] or not np.issubdtype(C.dtype, np.integer):
        raise NotConference("expected a square integer matrix")
    n = len(C)
    if n < MIN_SIZE + 1 or n % 2:
        raise NotConference(f"order {n} is not an even order >= {MIN_SIZE + 1}")
    if not np.array_equal(C.T, -C) or np.any(np.diag(C) != 0):
        raise NotConference("matrix is not skew with zero diagonal")
    if not np.array_equal(C @ C.T, (n - 1) * np.eye(n, dtype=np.int64)):
        raise NotConference("C C^T != (n - 1) I")
    G = np.eye(n) + 1j * C / math.sqrt(n - 1)
    params = {}
    if n & (n - 1) == 0:
        params["conference_k"] = n.bit_length() - 1
    return frame_from_gram(G, n, n // 2, spectrum_tol=spectrum_tol,
                           construction="conference-etf", parameters=params)


def conjecture_experiment(k: int, tol: float = 1e-9) -> VerificationReport:
    """Drop one vector from the ``(2^k, 2^(k-1))`` conference frame and compare.

    The canonical tight frame of the remaining ``n = 2^k - 1`` vectors is
    checked for equiangularity and tightness, and its Gram matrix is
    compared with ``(J + nI + i sqrt(n) A) / 2d`` built from the core ``A`` of
    the same conference matrix. The comparison verdict is recorded in
    ``report.extra``; it is data, not a check.
    """
    if k < 2:
        raise InvalidDimensions(f"k = {k} gives fewer than {MIN_SIZE} vectors")
    C = conference_skew(k)
    derived = drop_one_canonical(conference_etf(C), 0)
    n = 2**k - 1
    report = check_equiangular(derived, tol).merge(check_tight(derived, tol))
    report.subject = derived.describe()
    cmp = gram_equal_up_to_conjugation(derived.gram(), gram_upper(extract_core(C), n), tol)
    report.extra = cmp.verdict
    report.details.update({"k": k, "n": n, "d": derived.d, **cmp.to_dict()})
    return report
