#!/usr/bin/env python3
"""
CORE LINALG - Dense complex linear algebra for registers of at most 6 qubits
Products, Kronecker products, partial trace, Hermitian eigensystems, square roots

OPERATIONS:
✅ kron: Kronecker product, qubit 1 is the leftmost (most significant) factor
✅ partial_trace: keep a 1-based subset of qubits of a DensityMatrix
✅ herm_eigh / herm_eigvals: cyclic complex Jacobi rotations, descending order
✅ mat_sqrt_psd: principal square root of a Hermitian PSD matrix

TOLERANCES:
- 1e-12 entrywise for algebraic identities (matrices_close default)
- 1e-10 for Hermiticity checks and spectra
- Eigenvalues in [-1e-10, 0) are clamped to 0 before square roots
- mat_sqrt_psd treats eigenvalues below 1e-14 (relative) as exact zeros

All functions are pure; inputs are never mutated and outputs are read-only.
"""

from typing import TYPE_CHECKING, Iterable, List, Tuple

import numpy as np
import numpy.typing as npt

from entanglement_filter.exceptions import ContractViolationError

if TYPE_CHECKING:
    from entanglement_filter.core.models.quantum import DensityMatrix

ComplexMatrix = npt.NDArray[np.complex128]

MAX_QUBITS = 6
MATRIX_ATOL = 1e-12
HERMITIAN_ATOL = 1e-10
CLAMP_ATOL = 1e-10
SQRT_ZERO_RTOL = 1e-14
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


def as_matrix(a: npt.ArrayLike) -> ComplexMatrix:
    """Copy `a` into a read-only square complex matrix"""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ContractViolationError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ContractViolationError("matrix entries must be finite")
    m.setflags(write=False)
    return m


def identity(dim: int) -> ComplexMatrix:
    """dim×dim identity"""
    return as_matrix(np.eye(dim))


def matrices_close(a: npt.ArrayLike, b: npt.ArrayLike, atol: float = MATRIX_ATOL) -> bool:
    """Entrywise absolute comparison; shapes must match"""
    a_arr = np.asarray(a)
    b_arr = np.asarray(b)
    if a_arr.shape != b_arr.shape:
        return False
    return bool(np.all(np.abs(a_arr - b_arr) <= atol))


def dagger(a: npt.ArrayLike) -> ComplexMatrix:
    """Conjugate transpose"""
    return as_matrix(np.conj(np.asarray(a)).T)


def is_hermitian(a: npt.ArrayLike, atol: float = HERMITIAN_ATOL) -> bool:
    m = np.asarray(a)
    return bool(np.all(np.abs(m - np.conj(m).T) <= atol))


def kron(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    """Kronecker product; result dim is a.dim * b.dim"""
    return as_matrix(np.kron(as_matrix(a), as_matrix(b)))


def kron_all(factors: Iterable[npt.ArrayLike]) -> ComplexMatrix:
    """Left-to-right Kronecker product of a non-empty sequence"""
    result = None
    for factor in factors:
        result = as_matrix(factor) if result is None else kron(result, factor)
    if result is None:
        raise ContractViolationError("kron_all needs at least one factor")
    return result


def partial_trace_matrix(mat: npt.ArrayLike, n_qubits: int, keep: Iterable[int]) -> ComplexMatrix:
    """
    Trace out every qubit not in `keep` from a 2^n × 2^n matrix

    Args:
        mat: Operator on n_qubits qubits
        n_qubits: Register size
        keep: 1-based qubit indices to keep; must be a nonempty proper subset

    Returns:
        Reduced operator on the kept qubits, in ascending qubit order
    """
    keep_sorted = sorted(set(keep))
    all_qubits = set(range(1, n_qubits + 1))
    if not keep_sorted or set(keep_sorted) == all_qubits:
        raise ContractViolationError(
            f"keep must be a nonempty proper subset of 1..{n_qubits}, got {keep_sorted}"
        )
    if not set(keep_sorted) <= all_qubits:
        raise ContractViolationError(f"keep indices out of range 1..{n_qubits}: {keep_sorted}")

    m = as_matrix(mat)
    if m.shape[0] != 1 << n_qubits:
        raise ContractViolationError(f"matrix dim {m.shape[0]} does not match {n_qubits} qubits")

    kept_axes = [q - 1 for q in keep_sorted]
    traced_axes = [q - 1 for q in sorted(all_qubits - set(keep_sorted))]
    d_keep = 1 << len(kept_axes)
    d_trace = 1 << len(traced_axes)

    # (row qubits..., column qubits...) → (kept, traced | kept, traced)
    tensor = m.reshape([2] * (2 * n_qubits))
    order = kept_axes + traced_axes
    tensor = tensor.transpose(order + [n_qubits + a for a in order])
    tensor = tensor.reshape(d_keep, d_trace, d_keep, d_trace)
    return as_matrix(np.trace(tensor, axis1=1, axis2=3))


def partial_trace(rho: "DensityMatrix", keep: Iterable[int]) -> "DensityMatrix":
    """Reduced density matrix on the 1-based qubits in `keep`"""
    from entanglement_filter.core.models.quantum import DensityMatrix

    keep_set = set(keep)
    reduced = partial_trace_matrix(rho.mat, rho.n_qubits, keep_set)
    return DensityMatrix(n_qubits=len(keep_set), mat=reduced)


def _jacobi_rotation(app: float, aqq: float, apq: complex) -> np.ndarray:
    """2×2 unitary block that zeroes the (p, q) entry of a Hermitian pivot"""
    magnitude = abs(apq)
    phase = apq / magnitude
    phi = (aqq - app) / (2.0 * magnitude)
    t = 1.0 / (abs(phi) + np.sqrt(phi * phi + 1.0))
    if phi < 0.0:
        t = -t
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    # diag(1, conj(phase)) followed by the real rotation [[c, s], [-s, c]]
    return np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=np.complex128)


def herm_eigh(a: npt.ArrayLike, atol: float = HERMITIAN_ATOL) -> Tuple[np.ndarray, ComplexMatrix]:
    """
    Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations

    Args:
        a: Hermitian matrix (within `atol`)

    Returns:
        (eigenvalues descending, eigenvectors as columns in the same order)

    Raises:
        ContractViolationError: non-Hermitian input or no convergence
    """
    m = as_matrix(a)
    if not is_hermitian(m, atol):
        raise ContractViolationError("herm_eigh requires a Hermitian matrix")

    n = m.shape[0]
    work = np.array((m + np.conj(m).T) / 2.0, dtype=np.complex128)
    vecs = np.eye(n, dtype=np.complex128)
    scale = max(1.0, float(np.linalg.norm(work)))

    # pivots already below this contribute nothing measurable to the off-norm
    skip = JACOBI_TOL * scale / n
    for _ in range(JACOBI_MAX_SWEEPS):
        off = float(np.linalg.norm(work - np.diag(np.diag(work))))
        if off < JACOBI_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(work[p, q]) < skip:
                    continue
                g = _jacobi_rotation(work[p, p].real, work[q, q].real, work[p, q])
                idx = [p, q]
                work[:, idx] = work[:, idx] @ g
                work[idx, :] = np.conj(g).T @ work[idx, :]
                work[p, q] = work[q, p] = 0.0
                work[p, p] = work[p, p].real
                work[q, q] = work[q, q].real
                vecs[:, idx] = vecs[:, idx] @ g
    else:
        raise ContractViolationError("Jacobi eigensolver did not converge")

    vals = np.real(np.diag(work))
    order = np.argsort(-vals, kind="stable")
    eigvecs = vecs[:, order]
    eigvecs.setflags(write=False)
    return vals[order], eigvecs


def herm_eigvals(a: npt.ArrayLike) -> List[float]:
    """Real eigenvalues of a Hermitian matrix, descending"""
    vals, _ = herm_eigh(a)
    return [float(v) for v in vals]


def clamp_eigenvalues(vals: npt.ArrayLike, atol: float = CLAMP_ATOL) -> np.ndarray:
    """Zero out roundoff negatives; anything below -atol is a contract violation"""
    arr = np.array(vals, dtype=float)
    if np.any(arr < -atol):
        raise ContractViolationError(
            f"matrix is not positive semidefinite (eigenvalue {arr.min():.3e})"
        )
    arr[arr < 0.0] = 0.0
    return arr


def mat_sqrt_psd(a: npt.ArrayLike) -> ComplexMatrix:
    """
    Principal square root r of a Hermitian PSD matrix, r @ r == a

    Eigenvalues below 1e-14 of the largest are set to exactly 0 first.
    """
    vals, vecs = herm_eigh(a)
    clamped = clamp_eigenvalues(vals)
    clamped[clamped <= SQRT_ZERO_RTOL * max(1.0, float(clamped.max(initial=0.0)))] = 0.0
    roots = np.sqrt(clamped)
    r = (vecs * roots) @ np.conj(vecs).T
    return as_matrix((r + np.conj(r).T) / 2.0)


def trace(a: npt.ArrayLike) -> complex:
    return complex(np.trace(np.asarray(a)))


__all__ = [
    "ComplexMatrix",
    "as_matrix",
    "identity",
    "matrices_close",
    "dagger",
    "is_hermitian",
    "kron",
    "kron_all",
    "partial_trace_matrix",
    "partial_trace",
    "herm_eigh",
    "herm_eigvals",
    "clamp_eigenvalues",
    "mat_sqrt_psd",
    "trace",
]
