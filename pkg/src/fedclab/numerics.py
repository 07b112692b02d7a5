"""Deterministic vector math and seeded pseudo-randomness used everywhere else.

All reductions run through numpy's fixed-order summation, so repeated runs on
the same platform produce bit-identical results. Randomness comes from PCG64
(a permuted-congruential generator) seeded through ``numpy.random.SeedSequence``;
child streams are derived by hashing ``(root_seed, *tags)``, which makes every
consumer of randomness addressable by a stable name instead of by draw order.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .errors import ZeroVector

# Norms below this are treated as directionless (degenerate) vectors.
ZERO_TOL = 1e-12


def l2_normalize(v: np.ndarray) -> np.ndarray:
    """Scale a vector to unit Euclidean norm, preserving direction.

    Raises ZeroVector if the norm is below ZERO_TOL: such a vector has no
    usable direction and signals a degenerate prototype upstream.
    """
    v = np.asarray(v, dtype=np.float64)
    norm = float(np.linalg.norm(v))
    if norm < ZERO_TOL:
        raise ZeroVector(f"cannot normalize vector with norm {norm:.3e}")
    return v / norm


def l2_normalize_rows(m: np.ndarray) -> np.ndarray:
    """Row-wise unit normalization of a 2-D array; raises ZeroVector on any degenerate row."""
    m = np.asarray(m, dtype=np.float64)
    norms = np.linalg.norm(m, axis=1)
    if np.any(norms < ZERO_TOL):
        bad = int(np.argmin(norms))
        raise ZeroVector(f"row {bad} has norm {norms[bad]:.3e}")
    return m / norms[:, None]


def l2_normalize_backward(raw: np.ndarray, grad_unit: np.ndarray) -> np.ndarray:
    """Chain a gradient taken w.r.t. z = raw/||raw|| back to the raw vector(s).

    Works on a single vector or row-wise on a 2-D batch. The Jacobian is
    (I - z z^T)/||raw||, i.e. the tangent-space projection scaled by the
    inverse norm, so any component of ``grad_unit`` along z is discarded.
    """
    raw = np.asarray(raw, dtype=np.float64)
    grad_unit = np.asarray(grad_unit, dtype=np.float64)
    if raw.ndim == 1:
        return l2_normalize_backward(raw[None, :], grad_unit[None, :])[0]
    norms = np.linalg.norm(raw, axis=1, keepdims=True)
    if np.any(norms < ZERO_TOL):
        raise ZeroVector("degenerate embedding in normalization backward")
    z = raw / norms
    radial = np.sum(grad_unit * z, axis=1, keepdims=True)
    return (grad_unit - radial * z) / norms


def cosine_sim(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine similarity of two nonzero vectors; result clipped into [-1, 1]."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na < ZERO_TOL or nb < ZERO_TOL:
        raise ZeroVector("cosine similarity of a near-zero vector is undefined")
    return float(np.clip(np.dot(a, b) / (na * nb), -1.0, 1.0))


def softmax(logits: np.ndarray, axis: int = -1) -> np.ndarray:
    """Numerically stable softmax (max-subtracted, hence shift-invariant)."""
    logits = np.asarray(logits, dtype=np.float64)
    shifted = logits - np.max(logits, axis=axis, keepdims=True)
    e = np.exp(shifted)
    return e / np.sum(e, axis=axis, keepdims=True)


def _tag_to_int(tag) -> int:
    """Map a stream tag to a stable 64-bit integer (sha256 for strings)."""
    if isinstance(tag, (int, np.integer)):
        return int(tag) & 0xFFFFFFFFFFFFFFFF
    if isinstance(tag, str):
        digest = hashlib.sha256(tag.encode("utf-8")).digest()
        return int.from_bytes(digest[:8], "little")
    raise TypeError(f"stream tag must be int or str, got {type(tag).__name__}")


class Rng:
    """Seeded random stream with platform-independent draws.

    Thin wrapper over ``numpy.random.Generator(PCG64)``. Equal seeds give
    identical draw sequences. Instances are single-owner: never share one
    across concurrent workers; derive per-worker children with `derive`.
    """

    def __init__(self, seed, _entropy=None):
        self.seed = seed
        entropy = _entropy if _entropy is not None else [_tag_to_int(seed)]
        self.gen = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))

    def derive(self, *tags) -> "Rng":
        """Child stream keyed by ``(this seed, *tags)``; independent of draw order."""
        entropy = [_tag_to_int(self.seed)] + [_tag_to_int(t) for t in tags]
        child = Rng(self.seed, _entropy=entropy)
        return child

    def __getattr__(self, name):
        # Delegate draw methods (normal, permutation, dirichlet, ...) to numpy.
        return getattr(self.gen, name)

    def __repr__(self):
        return f"Rng(seed={self.seed!r})"


def derive(seed: int, *tags) -> Rng:
    """Stream for ``(seed, *tags)``, e.g. derive(7, 'client', round_idx, client_id)."""
    return Rng(seed).derive(*tags)
