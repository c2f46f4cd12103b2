"""Generalized hypergeometric ladder operators on truncated Fock space.

The lowering operator U maps |n+1> to f(n) |n> with

    f(n) = sqrt[(n+1) prod(n + b_j) / prod(n + a_i)],   f(-1) = 0,

so every state of the family is an eigenstate of U with eigenvalue z, and
rho(n) = (f(0) f(1) ... f(n-1))^2 ties the operator back to the state's
moments.  For p < q+1 these generalize the harmonic-oscillator a/a^dagger
(f(n) = sqrt(n+1) when p = q = 0); for p = q+1 they generalize the
exponential phase operator, whose a -> 1 limit has f = 1.
"""

from __future__ import annotations

import math
import threading

import numpy as np

from .errors import ConvergenceError, ParameterError
from .states import FockVector, ParameterSet, StateSpec, fock_vector

_f_cache: dict = {}
_f_lock = threading.Lock()


def f_coeff(params: ParameterSet, n: int) -> float:
    """Ladder coefficient f(n) >= 0; f(-1) = 0 by definition."""
    if n < -1:
        raise ValueError("ladder coefficient index must be >= -1")
    if n == -1:
        return 0.0
    cache = _f_cache.setdefault(params, [])
    if len(cache) <= n:
        with _f_lock:
            while len(cache) <= n:
                k = len(cache)
                num = 1.0 + 0.0j
                for bj in params.b:
                    num *= k + bj
                den = 1.0 + 0.0j
                for ai in params.a:
                    den *= k + ai
                val = (k + 1.0) * num / den
                if abs(val.imag) > 1e-12 * abs(val.real) or val.real <= 0.0:
                    raise ParameterError(f"f({k})^2 = {val} is not a positive real")
                cache.append(math.sqrt(val.real))
    return cache[n]


class LadderCoefficients:
    """Memoized f-sequence for one parameter set (read-only after build)."""

    def __init__(self, params: ParameterSet):
        self.params = params

    def __call__(self, n: int) -> float:
        return f_coeff(self.params, n)


def apply_lowering(params: ParameterSet, v: FockVector) -> FockVector:
    """(U v)_n = f(n) v_{n+1}; the cutoff drops by one.

    The propagated tail bound scales the input tail by the boundary rate
    f(N)^2 (an estimate, not a sup bound: f grows without bound for plane
    families, but the certified tails decay much faster than f^2 grows).
    """
    n_max = v.cutoff
    if n_max == 0:
        return FockVector(np.zeros(1, dtype=complex), 0.0, False)
    f = np.array([f_coeff(params, n) for n in range(n_max)])
    coeffs = f * v.coeffs[1:]
    tail = v.tail_bound * f_coeff(params, n_max) ** 2 if math.isfinite(v.tail_bound) else math.inf
    return FockVector(coeffs, tail, False)


def apply_raising(params: ParameterSet, v: FockVector,
                  max_cutoff: int = 16384) -> FockVector:
    """(U^dagger v)_{n+1} = f(n) v_n; the cutoff grows by one."""
    n_max = v.cutoff
    if n_max + 1 > max_cutoff:
        raise ConvergenceError(f"raising would exceed the cutoff cap {max_cutoff}")
    f = np.array([f_coeff(params, n) for n in range(n_max + 1)])
    coeffs = np.concatenate(([0.0 + 0.0j], f * v.coeffs))
    tail = v.tail_bound * f_coeff(params, n_max + 1) ** 2 if math.isfinite(v.tail_bound) else math.inf
    return FockVector(coeffs, tail, False)


def commutator_diagonal(params: ParameterSet, n: int) -> float:
    """<n| [U, U^dagger] |n> = f(n)^2 - f(n-1)^2 (noncanonical in general)."""
    if n < 0:
        raise ValueError("diagonal index must be non-negative")
    fn = f_coeff(params, n)
    fm = f_coeff(params, n - 1)
    return fn * fn - fm * fm


def eigenvalue_residual(spec: StateSpec, tol: float = 1e-14) -> float:
    """|| U v - z v ||_2 for the truncated state v.

    Interior components cancel exactly through rho(n+1) = rho(n) f(n)^2;
    what remains is the truncation boundary, so the residual is of order
    |z| sqrt(tail) <= |z| sqrt(tol).
    """
    v = fock_vector(spec, tol=tol)
    z = complex(spec.z)
    n_max = v.cutoff
    acc = 0.0
    for n in range(n_max):
        d = f_coeff(spec.params, n) * v.coeffs[n + 1] - z * v.coeffs[n]
        acc += abs(d) ** 2
    acc += abs(z * v.coeffs[n_max]) ** 2  # dropped boundary row
    return math.sqrt(acc)


def hermitian_matrices(params: ParameterSet, n_cutoff: int):
    """Dense truncated quadrature/phase combinations in the Fock basis.

    Returns (Q, P, C, S) with Q = (U^dag + U)/sqrt2, P = i(U^dag - U)/sqrt2,
    C = (U^dag + U)/2, S = i(U^dag - U)/2, each of shape
    (n_cutoff+1, n_cutoff+1).  The row coupling past the cutoff is dropped.
    """
    if n_cutoff < 1:
        raise ValueError("need at least a 2-dimensional truncation")
    dim = n_cutoff + 1
    low = np.zeros((dim, dim), dtype=complex)
    for n in range(dim - 1):
        low[n, n + 1] = f_coeff(params, n)
    raise_ = low.conj().T
    q = (raise_ + low) / math.sqrt(2.0)
    p = 1j * (raise_ - low) / math.sqrt(2.0)
    c = (raise_ + low) / 2.0
    s = 1j * (raise_ - low) / 2.0
    return q, p, c, s
