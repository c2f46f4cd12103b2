"""Parameter validation, convergence-domain classification, and truncated
Fock-space construction of generalized hypergeometric (coherent) states.

A state |p; q; z> is determined by numerator parameters (a_1..a_p),
denominator parameters (b_1..b_q) and a complex point z:

    |p; q; z> = N(|z|^2)^{-1/2} sum_n z^n / sqrt(rho(n)) |n>,

with rho(n) = n! (b_1)_n...(b_q)_n / [(a_1)_n...(a_p)_n] and N = pFq.
Depending on (p, q) and eta = Re(sum a - sum b) the states live on the
whole plane, the open unit disk, or the unit circle (normalized for
eta < 0, otherwise only as 1/sqrt(2 pi)-prefactored unnormalizable states).
"""

from __future__ import annotations

import cmath
import math
import threading
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import specfun
from .errors import ConvergenceError, DivergenceError, ParameterError

DEFAULT_FOCK_TOL = 1e-12
MAX_CUTOFF = 4096

_INT_TOL = 1e-12


def _canon(v):
    """Collapse numerically-real complex entries to float."""
    if isinstance(v, complex):
        if v.imag == 0.0 or abs(v.imag) <= 1e-15 * abs(v.real):
            return float(v.real)
        return complex(v)
    return float(v)


def _sort_key(v):
    c = complex(v)
    return (c.real, c.imag)


@dataclass(frozen=True)
class ParameterSet:
    """Validated numerator/denominator parameter lists.

    Entries are stored in canonical sorted order, so permutation-equivalent
    inputs produce bit-identical downstream results.  Construct through
    validate(); the constructor itself only normalizes.
    """

    a: tuple
    b: tuple

    def __init__(self, a=(), b=()):
        object.__setattr__(self, "a", tuple(sorted((_canon(v) for v in a), key=_sort_key)))
        object.__setattr__(self, "b", tuple(sorted((_canon(v) for v in b), key=_sort_key)))

    @property
    def p(self) -> int:
        return len(self.a)

    @property
    def q(self) -> int:
        return len(self.b)

    @property
    def eta(self) -> float:
        return float(
            sum(complex(v).real for v in self.a) - sum(complex(v).real for v in self.b)
        )

    def shifted(self, k: int) -> "ParameterSet":
        """Every entry incremented by k (factorial-moment parameter shift)."""
        return ParameterSet([v + k for v in self.a], [v + k for v in self.b])

    def appended(self, *values) -> "ParameterSet":
        """Same values appended to both lists (coalescing extension)."""
        return ParameterSet(self.a + tuple(values), self.b + tuple(values))

    def label(self) -> str:
        fmt = lambda v: f"{v:g}" if not isinstance(v, complex) else f"{v.real:g}{v.imag:+g}i"
        return f"({','.join(map(fmt, self.a))};{','.join(map(fmt, self.b))})"


class DomainKind(Enum):
    PLANE = "plane"
    UNIT_DISK = "unit_disk"
    CIRCLE_NORMALIZED = "circle_normalized"
    CIRCLE_UNNORMALIZABLE = "circle_unnormalizable"


@dataclass(frozen=True)
class DomainClass:
    kind: DomainKind
    eta: float


def _is_nonpositive_integer(v) -> bool:
    c = complex(v)
    if abs(c.imag) > 1e-14 * max(1.0, abs(c.real)):
        return False
    r = round(c.real)
    return r <= 0 and abs(c.real - r) <= _INT_TOL * max(1.0, abs(c.real))


def validate(a=(), b=()) -> ParameterSet:
    """Check the positivity constraints and return a ParameterSet.

    Acceptance rules for the combined lists:
      * no entry may be zero or a negative integer;
      * complex entries must occur in conjugate pairs within their own list;
      * real negative entries must be even in number and pair up with equal
        negative integer parts.  Since only the sign of the product ratio
        prod(b_j + n)/prod(a_i + n) is constrained, a pair may span the two
        lists (both factors flip sign at the same n either way).

    Raises ParameterError naming the first offending entry and rule.
    """
    lists = {"a": [_canon(v) for v in a], "b": [_canon(v) for v in b]}
    negatives = []  # (flip index, which, idx)
    for which, vals in lists.items():
        complex_pool = {}
        for idx, v in enumerate(vals):
            if _is_nonpositive_integer(v):
                raise ParameterError(
                    f"{which}[{idx}] = {v}: zero and negative integer parameters are excluded",
                    which=which, index=idx, rule="nonpositive-integer",
                )
            if isinstance(v, complex):
                key = (v.real, abs(v.imag))
                complex_pool[key] = complex_pool.get(key, 0) + (1 if v.imag > 0 else -1)
            elif v < 0:
                negatives.append((math.ceil(-v), which, idx))
        for (re, im), balance in complex_pool.items():
            if balance != 0:
                idx = next(
                    i for i, v in enumerate(vals)
                    if isinstance(v, complex) and (v.real, abs(v.imag)) == (re, im)
                )
                raise ParameterError(
                    f"{which}[{idx}] = {vals[idx]}: complex entries must occur in "
                    f"conjugate pairs within the same list",
                    which=which, index=idx, rule="conjugate-pair",
                )
    if len(negatives) % 2 == 1:
        _, which, idx = negatives[-1]
        raise ParameterError(
            f"{which}[{idx}] = {lists[which][idx]}: odd number of real negative "
            f"parameters (the sign of the defining ratio would flip)",
            which=which, index=idx, rule="negative-pairing",
        )
    groups = {}
    for flip, which, idx in negatives:
        groups.setdefault(flip, []).append((which, idx))
    for flip, members in sorted(groups.items()):
        if len(members) % 2 == 1:
            which, idx = members[-1]
            raise ParameterError(
                f"{which}[{idx}] = {lists[which][idx]}: negative parameters must pair "
                f"up with equal negative integer parts (unpaired sign flip at n = {flip})",
                which=which, index=idx, rule="negative-integer-part-pairing",
            )
    return ParameterSet(lists["a"], lists["b"])


def classify(params: ParameterSet) -> DomainClass:
    """Convergence domain of the family: plane for p < q+1; for p = q+1 the
    open unit disk, extending to a normalized state on the unit circle
    exactly when eta < 0."""
    eta = params.eta
    if params.p < params.q + 1:
        return DomainClass(DomainKind.PLANE, eta)
    if params.p == params.q + 1:
        if eta < 0:
            return DomainClass(DomainKind.CIRCLE_NORMALIZED, eta)
        return DomainClass(DomainKind.UNIT_DISK, eta)
    raise ParameterError(
        f"p = {params.p} > q + 1 = {params.q + 1}: the normalization series "
        f"diverges for every z != 0",
        rule="p-exceeds-q-plus-1",
    )


@dataclass(frozen=True)
class StateSpec:
    """A parameter set together with a complex point z in its domain."""

    params: ParameterSet
    z: complex

    def domain_kind(self) -> DomainKind:
        dom = classify(self.params)
        az = abs(self.z)
        if dom.kind is DomainKind.PLANE:
            if not math.isfinite(az):
                raise DivergenceError("plane states need finite z")
            return DomainKind.PLANE
        on_circle = abs(az - 1.0) <= 1e-14
        if az < 1.0 and not on_circle:
            return DomainKind.UNIT_DISK
        if on_circle:
            if dom.eta < 0:
                return DomainKind.CIRCLE_NORMALIZED
            return DomainKind.CIRCLE_UNNORMALIZABLE
        raise DivergenceError(
            f"|z| = {az:g} lies outside the unit disk closure for p = q + 1"
        )


# rho caches: params -> growing list of log rho(n); the lock keeps the
# lazy growth consistent under concurrent readers
_log_rho_cache: dict = {}
_rho_lock = threading.Lock()


def _ratio(params: ParameterSet, n: int) -> float:
    """prod(b_j + n) / prod(a_i + n), real and strictly positive for valid sets."""
    num = 1.0 + 0.0j
    for bj in params.b:
        num *= bj + n
    den = 1.0 + 0.0j
    for ai in params.a:
        den *= ai + n
    r = num / den
    if abs(r.imag) > 1e-12 * abs(r.real):
        raise ParameterError(f"ratio at n={n} has imaginary residue {r.imag:g}")
    rr = r.real
    if rr <= 0.0:
        raise ParameterError(f"ratio at n={n} is non-positive ({rr:g})")
    return rr


def log_rho(params: ParameterSet, n: int) -> float:
    """log rho(n), accumulated through the defining recurrence
    rho(n+1) = rho(n) (n+1) prod(b_j+n)/prod(a_i+n), rho(0) = 1."""
    if n < 0:
        raise ValueError("rho order must be non-negative")
    cache = _log_rho_cache.setdefault(params, [0.0])
    if len(cache) <= n:
        with _rho_lock:
            while len(cache) <= n:
                k = len(cache) - 1
                cache.append(cache[k] + math.log(k + 1.0) + math.log(_ratio(params, k)))
    return cache[n]


def rho(params: ParameterSet, n: int) -> float:
    """Parameter function rho(n) > 0; raises OverflowError when it exceeds
    double range (use log_rho for large n)."""
    lr = log_rho(params, n)
    if lr > 709.0:
        raise OverflowError(f"rho({n}) exceeds double range (log = {lr:.3g})")
    return math.exp(lr)


def log_rho_gamma(params: ParameterSet, nu: float):
    """log rho at arbitrary (e.g. half-integer) order via the gamma form
    log Gamma(nu+1) + sum[lnG(b+nu) - lnG(b)] - sum[lnG(a+nu) - lnG(a)]."""
    total = complex(specfun.ln_gamma(nu + 1.0))
    for bj in params.b:
        total += complex(specfun.ln_gamma(bj + nu)) - complex(specfun.ln_gamma(bj))
    for ai in params.a:
        total -= complex(specfun.ln_gamma(ai + nu)) - complex(specfun.ln_gamma(ai))
    if abs(total.imag) > 1e-10 * max(1.0, abs(total.real)):
        raise ParameterError(f"log rho({nu}) has imaginary residue {total.imag:g}")
    return total.real


def normalization(params: ParameterSet, x: float, tol: float = specfun.DEFAULT_TOL) -> float:
    """Normalization function pFq(a; b; x) at x = |z|^2 >= 0.

    Unit-circle families evaluated at x = 1 require eta < 0; the (2;1)
    family then uses the closed gamma formula for 2F1 at unit argument
    (the raw series converges only like n^eta there).
    """
    if x < 0:
        raise ValueError("normalization argument is |z|^2 >= 0")
    dom = classify(params)
    on_circle = params.p == params.q + 1 and abs(x - 1.0) <= 1e-14
    if on_circle and dom.eta >= 0:
        raise DivergenceError(
            f"normalization diverges at |z| = 1 for eta = {dom.eta:g} >= 0"
        )
    if (params.p, params.q) == (2, 1) and not any(
        isinstance(v, complex) for v in params.a + params.b
    ):
        # the Gauss evaluator keeps full accuracy near and at the disk edge,
        # where the raw series slows to a crawl
        x_eff = 1.0 if on_circle else x
        return complex(
            specfun.gauss_2f1(params.a[0], params.a[1], params.b[0], x_eff, tol=tol).value
        ).real
    value = specfun.pfq(params.a, params.b, x, tol=tol).value
    return complex(value).real


@dataclass(frozen=True)
class FockVector:
    """Truncated number-basis coefficients c_0..c_N with a certified bound
    on the discarded squared tail sum."""

    coeffs: np.ndarray
    tail_bound: float
    normalized: bool

    @property
    def cutoff(self) -> int:
        return len(self.coeffs) - 1

    def norm_sq(self) -> float:
        return float(np.vdot(self.coeffs, self.coeffs).real)

    def inner(self, other: "FockVector") -> complex:
        n = min(len(self.coeffs), len(other.coeffs))
        return complex(np.vdot(self.coeffs[:n], other.coeffs[:n]))


def fock_basis_vector(n: int) -> FockVector:
    c = np.zeros(n + 1, dtype=complex)
    c[n] = 1.0
    return FockVector(c, 0.0, True)


def fock_from_coeffs(coeffs, normalize: bool = True) -> FockVector:
    c = np.asarray(coeffs, dtype=complex)
    if normalize:
        c = c / math.sqrt(float(np.vdot(c, c).real))
    nrm = float(np.vdot(c, c).real)
    return FockVector(c, 0.0, abs(nrm - 1.0) < 1e-12)


_RATIO_WINDOW = 16


def fock_vector(spec: StateSpec, tol: float = DEFAULT_FOCK_TOL,
                max_cutoff: int = MAX_CUTOFF) -> FockVector:
    """Truncated Fock representation c_n = z^n / sqrt(rho(n) N(|z|^2)).

    The cutoff is certified: for plane/disk states the squared-coefficient
    ratios are bounded by a geometric rate (window maximum joined with the
    n -> inf limit), for normalized circle states by a power-law comparison
    (the ratios tend to 1, so no geometric rate exists).  Unnormalizable
    circle states get the 1/sqrt(2 pi) prefactor, tail_bound = inf, and a
    RuntimeWarning (their squared norm diverges).
    """
    params = spec.params
    z = complex(spec.z)
    kind = spec.domain_kind()

    if kind is DomainKind.CIRCLE_UNNORMALIZABLE:
        warnings.warn(
            "unnormalizable circle state: coefficients carry 1/sqrt(2 pi), "
            "the squared norm diverges (conditional convergence only)",
            RuntimeWarning,
        )
        phases = []
        n = 0
        ln_c0_sq = -math.log(2.0 * math.pi)
        while True:
            lcn = ln_c0_sq - log_rho(params, n)
            phases.append(0.5 * lcn)
            if lcn < math.log(tol) + ln_c0_sq or n >= max_cutoff:
                break
            n += 1
        phase = cmath.phase(z)
        coeffs = np.array(
            [math.exp(lc) * cmath.exp(1j * phase * k) for k, lc in enumerate(phases)]
        )
        return FockVector(coeffs, math.inf, False)

    if abs(z) == 0.0:
        return FockVector(np.array([1.0 + 0.0j]), 0.0, True)

    x = abs(z) ** 2
    ln_n = math.log(normalization(params, x))
    phase = cmath.phase(z)
    ln_az = math.log(abs(z))

    def lc_sq(n: int) -> float:  # log |c_n|^2
        return 2.0 * n * ln_az - log_rho(params, n) - ln_n

    def ratio_sq(n: int) -> float:  # |c_{n+1}|^2 / |c_n|^2
        return math.exp(lc_sq(n + 1) - lc_sq(n))

    n = max(8, int(2.0 * x) + 8)
    while True:
        if n > max_cutoff:
            raise ConvergenceError(
                f"fock_vector cutoff cap {max_cutoff} reached before tail <= {tol:g}"
            )
        if kind is DomainKind.CIRCLE_NORMALIZED:
            # power-law bound: |c_{k+1}|^2/|c_k|^2 <= ((k+1)/(k+2))^s for k >= n
            s_window = min(
                -math.log(ratio_sq(k)) / math.log((k + 2.0) / (k + 1.0))
                for k in range(n, n + _RATIO_WINDOW)
            )
            s = min(s_window, 1.0 - params.eta)
            if s > 1.0:
                tail = math.exp(lc_sq(n + 1)) * (n + 2.0) / (s - 1.0)
                if tail <= tol:
                    break
        else:
            r_limit = x if kind is DomainKind.UNIT_DISK else 0.0
            r_bar = max(
                max(ratio_sq(k) for k in range(n, n + _RATIO_WINDOW)), r_limit
            )
            if r_bar < 1.0:
                tail = math.exp(lc_sq(n + 1)) / (1.0 - r_bar)
                if tail <= tol:
                    break
        n = min(max_cutoff + 1, max(n + 8, int(1.5 * n)))

    coeffs = np.array(
        [math.exp(0.5 * lc_sq(k)) * cmath.exp(1j * phase * k) for k in range(n + 1)]
    )
    return FockVector(coeffs, tail, True)


def overlap(params: ParameterSet, z: complex, z2: complex,
            tol: float = specfun.DEFAULT_TOL) -> complex:
    """<p;q;z | p;q;z2> = N(z* z2) / sqrt(N(|z|^2) N(|z2|^2))."""
    for point in (z, z2):
        StateSpec(params, complex(point)).domain_kind()  # domain check
    num = specfun.pfq(params.a, params.b, complex(z).conjugate() * complex(z2), tol=tol).value
    den = math.sqrt(
        normalization(params, abs(z) ** 2, tol=tol)
        * normalization(params, abs(z2) ** 2, tol=tol)
    )
    return complex(num) / den


def coalesce(params: ParameterSet, tol: float = 1e-12) -> ParameterSet:
    """Optional reduction: drop numerator/denominator pairs equal within tol."""
    a = list(params.a)
    b = list(params.b)
    i = 0
    while i < len(a):
        hit = next(
            (j for j, bj in enumerate(b) if abs(complex(a[i]) - complex(bj)) <= tol),
            None,
        )
        if hit is not None:
            a.pop(i)
            b.pop(hit)
        else:
            i += 1
    return ParameterSet(a, b)
