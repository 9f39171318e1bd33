"""Min-plus semiring arithmetic and exponential quantisation maps.

The tropical carrier is the reals extended with +inf, with ``min`` as
addition and ``+`` as multiplication. +inf is the additive identity and
the multiplicative absorber; 0 is the multiplicative identity. IEEE
infinity implements +inf exactly, so all tropical computations here are
exact (no epsilon on the tropical side).

The quantisation map q_h(x) = exp(-x/h) and its inverse d_h(x) = -h*ln(x)
carry tropical values into the nonnegative reals and back. They are exact
homomorphisms for multiplication and approximate ones for addition, with
the approximation tightening as h shrinks. q_h underflows to 0 (tropical
"unreachable") once x/h passes ~745 in double precision, so round-trip
guarantees are restricted to the precision radius 700*h.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import GraphInstance

TROP_ZERO = np.inf   # additive identity / multiplicative absorber
TROP_ONE = 0.0       # multiplicative identity

PRECISION_RADIUS_FACTOR = 700.0


@dataclass(frozen=True)
class MaslovParams:
    """Quantisation temperature h > 0 and its usable precision radius."""

    h: float

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError("h must be positive")

    @property
    def radius(self) -> float:
        """Largest x for which d_h(q_h(x)) is trusted to round-trip."""
        return PRECISION_RADIUS_FACTOR * self.h


def trop_add(a, b):
    """Tropical addition: min(a, b). +inf is the identity."""
    return np.minimum(a, b)


def trop_mul(a, b):
    """Tropical multiplication: a + b. +inf absorbs, 0 is the identity."""
    return np.add(a, b)


def maslov_q(x, h: float):
    """Quantise: exp(-x/h), sending +inf to 0. Defined for any real x."""
    if not h > 0:
        raise ValueError("h must be positive")
    return np.exp(np.negative(x) / h)


def maslov_d(x, h: float):
    """Dequantise: -h*ln(x), sending 0 to +inf. Requires x >= 0."""
    if not h > 0:
        raise ValueError("h must be positive")
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise ValueError("dequantisation needs nonnegative input")
    with np.errstate(divide="ignore"):
        out = -h * np.log(arr)
    return out if out.ndim else float(out)


def h_semiring_add(a, b, h: float):
    """Smoothed minimum d_h(q_h(a) + q_h(b)).

    Within the precision radius this lies in [min(a,b) - h*ln 2, min(a,b)]
    up to float rounding; with both operands past the radius the sum
    underflows and the result degrades to +inf (unreachable).
    """
    return maslov_d(maslov_q(a, h) + maslov_q(b, h), h)


def h_semiring_mul(a, b, h: float):
    """d_h(q_h(a) * q_h(b)); equals a + b exactly in real arithmetic."""
    return maslov_d(maslov_q(a, h) * maslov_q(b, h), h)


def trop_identity(n: int) -> np.ndarray:
    """Tropical identity matrix: 0 on the diagonal, +inf elsewhere."""
    m = np.full((n, n), TROP_ZERO)
    np.fill_diagonal(m, TROP_ONE)
    return m


def trop_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Min-plus matrix product: out[i, j] = min_k A[i, k] + B[k, j]."""
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
        raise ValueError(f"dimension mismatch: {A.shape} x {B.shape}")
    out = np.empty((A.shape[0], B.shape[1]))
    # Row-at-a-time keeps the intermediate at O(n^2) for desk-scale n.
    for i in range(A.shape[0]):
        out[i] = np.min(A[i][:, None] + B, axis=0)
    return out


def trop_vecmat(v: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Row vector times matrix in min-plus: out[j] = min_i v[i] + M[i, j]."""
    v = np.asarray(v, dtype=float)
    M = np.asarray(M, dtype=float)
    if v.shape[0] != M.shape[0]:
        raise ValueError("dimension mismatch")
    return np.min(v[:, None] + M, axis=0)


def trop_matpow(W: np.ndarray, k: int) -> np.ndarray:
    """k-fold min-plus power; k = 0 gives the tropical identity.

    Evaluated as a left-to-right product so entries accumulate edge costs
    in walk order, matching the relaxation recurrences of the executors.
    """
    W = np.asarray(W, dtype=float)
    if W.ndim != 2 or W.shape[0] != W.shape[1]:
        raise ValueError("square matrix required")
    if k < 0:
        raise ValueError("k must be >= 0")
    out = trop_identity(W.shape[0])
    for _ in range(k):
        out = trop_matmul(out, W)
    return out


def indicator_vector(n: int, s: int) -> np.ndarray:
    """Tropical one-hot: 0 at position s, +inf elsewhere."""
    if not 0 <= s < n:
        raise ValueError("source out of range")
    v = np.full(n, TROP_ZERO)
    v[s] = TROP_ONE
    return v


def weight_matrix_tropical(g: GraphInstance) -> np.ndarray:
    """Weighted tropical adjacency: w_uv on edges, 0 diagonal, +inf off."""
    return g.weight_matrix()


def adjacency_matrix_tropical(g: GraphInstance) -> np.ndarray:
    """Unweighted tropical adjacency: 0 on edges and diagonal, +inf off."""
    m = np.full((g.n, g.n), TROP_ZERO)
    np.fill_diagonal(m, TROP_ONE)
    for (u, v) in g.edges:
        m[u, v] = TROP_ONE
    return m


def tropical_sssp(g: GraphInstance, s: int) -> np.ndarray:
    """Single-source shortest-path distances via n tropical relaxations.

    Computes the indicator of s times the n-th min-plus power of the
    weight matrix, one vector-matrix product per step. Entry v is the
    exact distance d(s, v), +inf when v is unreachable.
    """
    if np.any(np.asarray(g.weights) < 0):
        raise ValueError("nonnegative weights required")
    W = weight_matrix_tropical(g)
    d = indicator_vector(g.n, s)
    for _ in range(g.n):
        d = trop_vecmat(d, W)
    return d


def tropical_bfs(g: GraphInstance, s: int) -> np.ndarray:
    """Reachability vector: 0 where a directed path from s exists, else +inf."""
    A = adjacency_matrix_tropical(g)
    r = indicator_vector(g.n, s)
    for _ in range(g.n):
        r = trop_vecmat(r, A)
    return r


def trop_matrix_to_json_dict(M: np.ndarray) -> dict:
    """JSON object {"n", "entries"} with "+inf" as the infinity sentinel."""
    M = np.asarray(M, dtype=float)
    entries = ["+inf" if np.isinf(x) else float(x) for x in M.ravel()]
    return {"n": int(M.shape[0]), "entries": entries}


def trop_matrix_from_json_dict(obj: dict) -> np.ndarray:
    n = int(obj["n"])
    flat = [np.inf if e == "+inf" else float(e) for e in obj["entries"]]
    if len(flat) != n * n:
        raise ValueError("entry count does not match dimension")
    return np.array(flat).reshape(n, n)
