"""Small shared linear-algebra helpers for canonical (symplectic) structure."""

import numpy as np


def canonical_j(dof):
    """Canonical symplectic matrix J of size 2*dof, block form [[0, I], [-I, 0]]."""
    n = int(dof)
    j = np.zeros((2 * n, 2 * n))
    j[:n, n:] = np.eye(n)
    j[n:, :n] = -np.eye(n)
    return j


J6 = canonical_j(3)
J8 = canonical_j(4)
J4 = canonical_j(2)


def symplectic_defect(m):
    """max-norm of M^T J M - J for a square matrix of even size."""
    m = np.asarray(m, dtype=float)
    j = canonical_j(m.shape[0] // 2)
    return float(np.max(np.abs(m.T @ j @ m - j)))


def omega(a, b):
    """Canonical symplectic product a^T J b (size inferred from a)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    n = a.shape[0] // 2
    return float(a[:n] @ b[n:] - a[n:] @ b[:n])
