import cmath
import math
import warnings

import numpy as np
import pytest

from ghcs import states as st
from ghcs.errors import ConvergenceError, DivergenceError, ParameterError

CS = st.validate([], [])

# families reused across property tests
PARAM_MATRIX = [
    st.validate([], []),
    st.validate([], [0.2]),
    st.validate([], [5.0]),
    st.validate([2.0], [4.0]),
    st.validate([4.0], [2.0]),
    st.validate([2.0], []),
    st.validate([3.0, 3.0], [2.0]),
    st.validate([-1.5, -1.2], [2.0]),
    st.validate([1 + 2j, 1 - 2j], [0.5]),
    st.validate([0.3, 0.4], [1.5]),
]


# ---------------------------------------------------------------- validate

def test_validate_all_positive():
    p = st.validate([], [2.5])
    assert (p.p, p.q) == (0, 1)


def test_validate_negative_pair_same_integer_part():
    p = st.validate([-1.5, -1.2], [])
    assert p.p == 2


def test_validate_rejects_negative_integer():
    with pytest.raises(ParameterError) as ei:
        st.validate([-2.0], [])
    assert ei.value.rule == "nonpositive-integer"
    assert ei.value.which == "a" and ei.value.index == 0


def test_validate_rejects_zero():
    with pytest.raises(ParameterError):
        st.validate([1.0], [0.0])


def test_validate_rejects_unpaired_negative():
    with pytest.raises(ParameterError) as ei:
        st.validate([-2.5], [])
    assert ei.value.rule == "negative-pairing"


def test_validate_rejects_mismatched_integer_parts():
    with pytest.raises(ParameterError) as ei:
        st.validate([-1.5, -2.2], [])
    assert ei.value.rule == "negative-integer-part-pairing"


def test_validate_conjugate_pair():
    p = st.validate([1 + 2j, 1 - 2j], [0.5])
    assert p.p == 2


def test_validate_rejects_lone_complex():
    with pytest.raises(ParameterError) as ei:
        st.validate([1 + 2j], [1.0])
    assert ei.value.rule == "conjugate-pair"


def test_validate_rejects_cross_list_conjugates():
    with pytest.raises(ParameterError):
        st.validate([1 + 2j], [1 - 2j])


def test_validate_cross_list_negative_pair():
    # the positivity condition constrains only the ratio's sign, so a
    # negative pair may span the two lists
    p = st.validate([-1.5], [-1.2])
    assert (p.p, p.q) == (1, 1)


# ---------------------------------------------------------------- classify

def test_classify_plane():
    dom = st.classify(CS)
    assert dom.kind is st.DomainKind.PLANE and dom.eta == 0.0


def test_classify_disk():
    dom = st.classify(st.validate([2.0], []))
    assert dom.kind is st.DomainKind.UNIT_DISK and dom.eta == 2.0


def test_classify_circle_normalized():
    dom = st.classify(st.validate([0.3, 0.4], [1.5]))
    assert dom.kind is st.DomainKind.CIRCLE_NORMALIZED
    assert dom.eta == pytest.approx(-0.8, abs=1e-15)


def test_state_kind_resolution():
    disk = st.validate([2.0], [])
    assert st.StateSpec(disk, 0.5).domain_kind() is st.DomainKind.UNIT_DISK
    assert st.StateSpec(disk, cmath.exp(1j)).domain_kind() is st.DomainKind.CIRCLE_UNNORMALIZABLE
    circ = st.validate([0.3, 0.4], [1.5])
    assert st.StateSpec(circ, cmath.exp(1j)).domain_kind() is st.DomainKind.CIRCLE_NORMALIZED
    with pytest.raises(DivergenceError):
        st.StateSpec(disk, 1.2).domain_kind()


# --------------------------------------------------------------------- rho

def test_rho_factorial():
    assert st.rho(CS, 3) == pytest.approx(6.0, rel=1e-14)


def test_rho_seed():
    for p in PARAM_MATRIX:
        assert st.rho(p, 0) == 1.0


def test_rho_hand_value():
    # (1;0) a=2: rho(2) = 2!/(2)_2 = 1/3
    assert st.rho(st.validate([2.0], []), 2) == pytest.approx(1.0 / 3.0, rel=1e-14)


@pytest.mark.parametrize("params", PARAM_MATRIX, ids=lambda p: p.label())
def test_rho_positivity_to_200(params):
    for n in range(201):
        assert st.log_rho(params, n) == st.log_rho(params, n)  # finite, defined
    assert st.log_rho(params, 200) > -math.inf


@pytest.mark.parametrize("params", PARAM_MATRIX, ids=lambda p: p.label())
def test_rho_recurrence_consistency(params):
    for n in range(0, 60):
        ratio = math.exp(st.log_rho(params, n + 1) - st.log_rho(params, n))
        num = 1.0 + 0.0j
        for bj in params.b:
            num *= bj + n
        den = 1.0 + 0.0j
        for ai in params.a:
            den *= ai + n
        expected = (n + 1.0) * (num / den).real
        assert ratio == pytest.approx(expected, rel=1e-13)


def test_rho_gamma_form_agreement():
    p = st.validate([1 + 2j, 1 - 2j], [0.5])
    for n in (0, 1, 7, 23):
        assert st.log_rho_gamma(p, n) == pytest.approx(st.log_rho(p, n), abs=1e-11)


def test_rho_overflow_error():
    with pytest.raises(OverflowError):
        st.rho(CS, 400)


# ------------------------------------------------------ symmetry/coalesce

def test_parameter_permutation_bit_identical():
    p1 = st.validate([2.0, 0.7, 3.3], [1.1, 4.4])
    p2 = st.validate([3.3, 2.0, 0.7], [4.4, 1.1])
    assert p1 == p2
    assert st.rho(p1, 17) == st.rho(p2, 17)
    assert st.normalization(p1, 0.8) == st.normalization(p2, 0.8)


@pytest.mark.parametrize("params", PARAM_MATRIX[:6], ids=lambda p: p.label())
def test_coalescence_invariance(params):
    ext = params.appended(2.7)
    for n in (1, 5, 40):
        assert st.rho(ext, n) == pytest.approx(st.rho(params, n), rel=1e-12)
    x = 0.5
    assert st.normalization(ext, x) == pytest.approx(
        st.normalization(params, x), rel=1e-12
    )
    v1 = st.fock_vector(st.StateSpec(params, 0.5), tol=1e-13)
    v2 = st.fock_vector(st.StateSpec(ext, 0.5), tol=1e-13)
    k = min(len(v1.coeffs), len(v2.coeffs))
    assert np.max(np.abs(v1.coeffs[:k] - v2.coeffs[:k])) < 1e-12


def test_coalesce_reduction_helper():
    p = st.coalesce(st.validate([2.0, 0.7], [0.7]))
    assert (p.p, p.q) == (1, 0) and p.a == (2.0,)


# ----------------------------------------------------------- normalization

def test_normalization_exponential():
    for x in (0.0, 0.3, 9.0):
        assert st.normalization(CS, x) == pytest.approx(math.exp(x), rel=1e-12)


def test_normalization_binomial():
    assert st.normalization(st.validate([2.0], []), 0.5) == pytest.approx(4.0, rel=1e-12)


def test_normalization_circle_gauss_constant():
    p = st.validate([0.3, 0.4], [1.5])
    ref = math.gamma(1.5) * math.gamma(0.8) / (math.gamma(1.2) * math.gamma(1.1))
    assert st.normalization(p, 1.0) == pytest.approx(ref, rel=1e-12)


def test_normalization_circle_divergence():
    with pytest.raises(DivergenceError):
        st.normalization(st.validate([2.0], []), 1.0)


# ------------------------------------------------------------- fock_vector

def test_fock_vacuum():
    v = st.fock_vector(st.StateSpec(CS, 0.0))
    assert v.cutoff == 0 and v.coeffs[0] == 1.0 and v.tail_bound == 0.0


def test_fock_coherent_phase_state():
    # (1;0) at a = 1: c_n = sqrt(1 - eps^2) eps^n
    eps = 0.6
    v = st.fock_vector(st.StateSpec(st.validate([1.0], []), eps), tol=1e-14)
    pref = math.sqrt(1.0 - eps * eps)
    for n in range(v.cutoff + 1):
        assert v.coeffs[n].real == pytest.approx(pref * eps**n, abs=1e-13)


def test_fock_norm_certificate():
    v = st.fock_vector(st.StateSpec(st.validate([], [1.0]), 3.0), tol=1e-12)
    assert v.normalized
    assert abs(v.norm_sq() - 1.0) <= 2.0 * v.tail_bound + 1e-13


def test_fock_circle_normalized():
    p = st.validate([0.5, 0.5], [16.0])
    v = st.fock_vector(st.StateSpec(p, cmath.exp(0.7j)), tol=1e-13)
    assert abs(v.norm_sq() - 1.0) <= 2.0 * v.tail_bound + 1e-13


def test_fock_circle_cap_for_shallow_eta():
    # eta = -0.8 decays like n^{-1.8}: a 1e-14 tail needs n far beyond the cap
    p = st.validate([0.3, 0.4], [1.5])
    with pytest.raises(ConvergenceError):
        st.fock_vector(st.StateSpec(p, cmath.exp(0.3j)), tol=1e-14)


def test_fock_unnormalizable_circle_warns():
    p = st.validate([2.0], [])
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        v = st.fock_vector(st.StateSpec(p, cmath.exp(1.0j)), tol=1e-10)
    assert any(issubclass(w.category, RuntimeWarning) for w in rec)
    assert not v.normalized and math.isinf(v.tail_bound)
    assert abs(abs(v.coeffs[0]) - 1.0 / math.sqrt(2.0 * math.pi)) < 1e-14


def test_fock_tail_bound_is_honest():
    # compare the certified bound against a run at much tighter tolerance
    spec = st.StateSpec(st.validate([2.0], [4.0]), 2.0)
    v = st.fock_vector(spec, tol=1e-8)
    ref = st.fock_vector(spec, tol=1e-15)
    true_tail = float(np.sum(np.abs(ref.coeffs[v.cutoff + 1:]) ** 2))
    assert true_tail <= v.tail_bound


# ----------------------------------------------------------------- overlap

def test_overlap_self_is_one():
    assert st.overlap(st.validate([2.0], []), 0.3 + 0.1j, 0.3 + 0.1j) == pytest.approx(1.0)


def test_overlap_coherent_formula():
    a1, a2 = 0.8 + 0.2j, -0.3 + 0.9j
    ref = cmath.exp(a1.conjugate() * a2 - abs(a1) ** 2 / 2 - abs(a2) ** 2 / 2)
    assert st.overlap(CS, a1, a2) == pytest.approx(ref, rel=1e-12)


def test_overlap_cauchy_schwarz():
    rng = np.random.default_rng(3)
    families = [CS, st.validate([], [1.5]), st.validate([2.0], [])]
    for _ in range(100):
        params = families[rng.integers(len(families))]
        scale = 2.0 if params.p < params.q + 1 else 0.95
        z1 = scale * (rng.uniform(-0.5, 0.5) + 1j * rng.uniform(-0.5, 0.5))
        z2 = scale * (rng.uniform(-0.5, 0.5) + 1j * rng.uniform(-0.5, 0.5))
        assert abs(st.overlap(params, z1, z2)) <= 1.0 + 1e-12
