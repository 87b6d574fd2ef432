"""Fermionic matrix product states at finite bond dimension.

An even state is specified by bond matrices v indexed by on-site Fock
occupations, a faithful fixed-point density matrix D of the dual transfer
map, and a bond grading Theta; an odd state replaces Theta by a parity
offset sigma0.  Expectation values of strings of fermionic matrix units
pick up Koszul sign factors, and the module provides an independent
Jordan-Wigner density-matrix oracle against which those signs are checked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fock
from .cocycle import cocycle_of_rep
from .errors import (
    DegenerateFixedPoint,
    DimensionMismatch,
    GradingActionIndeterminate,
    InvalidMPS,
    NoConsistentQ,
    NotPositive,
    SizeTooLarge,
    SymmetryViolated,
)
from .group import FiniteGroup, Z2Hom, all_z2_homs, validate_hom_z2
from .invariant import SPTIndex
from .linalg import sign_match
from .rep import ProjectiveRep, adjoint_action
from .fock import subset_parity

_SZ = np.diag([1.0, -1.0]).astype(complex)

SiteWord = list[tuple[int, int]]  # [(mu_mask, nu_mask)] per site


def transfer_matrix(v: np.ndarray) -> np.ndarray:
    """Row-major matrix of x -> sum_mu v_mu x v_mu^dag on M_m."""
    return sum(np.kron(a, a.conj()) for a in v)


def dual_transfer_matrix(v: np.ndarray) -> np.ndarray:
    """Row-major matrix of x -> sum_mu v_mu^dag x v_mu."""
    return sum(np.kron(a.conj().T, a.T) for a in v)


def transfer_fixed_point(v: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """The unique positive trace-one solution of sum v^dag D v = D.

    Raises DegenerateFixedPoint when eigenvalue 1 of the dual transfer map
    is not simple, and NotPositive when the fixed point fails positivity.
    """
    v = np.asarray(v, dtype=complex)
    m = v.shape[-1]
    evals, evecs = np.linalg.eig(dual_transfer_matrix(v))
    at_one = np.abs(evals - 1.0) < 1e-8
    if int(at_one.sum()) != 1:
        raise DegenerateFixedPoint(
            f"eigenvalue 1 of the dual transfer map has multiplicity {int(at_one.sum())}"
        )
    d = evecs[:, np.nonzero(at_one)[0][0]].reshape(m, m)
    d = (d + d.conj().T) / 2.0
    tr = np.trace(d).real
    if abs(tr) < tol:
        raise NotPositive("fixed point has vanishing trace")
    d = d / tr
    w = np.linalg.eigvalsh(d)
    if w.min() < -1e-10 * max(1.0, w.max()):
        raise NotPositive(f"fixed point has negative eigenvalue {w.min():.3e}")
    return d


@dataclass(frozen=True, eq=False)
class FermionicMPS:
    """Validated even/odd fermionic MPS data.

    v has shape (2^d, m, m), indexed by the occupation bitmask.  Build
    through :func:`even_mps` / :func:`odd_mps`.
    """

    kind: str            # "even" | "odd"
    d: int
    m: int
    v: np.ndarray
    D: np.ndarray
    theta: np.ndarray | None = None  # even kind
    sigma0: int = 0

    @property
    def nloc(self) -> int:
        return 1 << self.d

    def site_parities(self) -> np.ndarray:
        return np.array([subset_parity(mask) for mask in fock.fock_masks(self.d)])


def _validate_common(kind, d, v, D, tol):
    v = np.asarray(v, dtype=complex)
    nloc = 1 << d
    if v.ndim != 3 or v.shape[0] != nloc or v.shape[1] != v.shape[2]:
        raise DimensionMismatch(
            f"v must have shape ({nloc}, m, m), got {v.shape}"
        )
    m = v.shape[1]
    gram = sum(a @ a.conj().T for a in v)
    if np.linalg.norm(gram - np.eye(m)) > tol * m:
        scale = np.trace(gram).real / m
        raise InvalidMPS(
            "normalization sum_mu v_mu v_mu^dag = 1 fails; if the defect is a "
            f"uniform scale, rescale every v_mu by 1/sqrt({scale:.6g})"
        )
    if D is None:
        D = transfer_fixed_point(v)
    else:
        D = np.asarray(D, dtype=complex)
        if D.shape != (m, m):
            raise DimensionMismatch(f"D must be {m} x {m}")
        if abs(np.trace(D) - 1.0) > tol:
            raise InvalidMPS("D must have unit trace")
        w = np.linalg.eigvalsh((D + D.conj().T) / 2.0)
        if w.min() < -1e-10:
            raise NotPositive("D is not positive semidefinite")
        resid = sum(a.conj().T @ D @ a for a in v) - D
        if np.linalg.norm(resid) > tol:
            raise InvalidMPS("D is not a fixed point of the dual transfer map")
    w = np.linalg.eigvalsh((D + D.conj().T) / 2.0)
    if w.min() <= 1e-12 * w.max():
        raise NotPositive("D is not faithful")
    # purity: the peripheral spectrum of the transfer map must be {1}, simple
    evals = np.linalg.eigvals(transfer_matrix(v))
    at_one = np.abs(evals - 1.0) < 1e-8
    peripheral = np.abs(evals) > 1.0 - 1e-8
    if int(at_one.sum()) != 1 or int(peripheral.sum()) != 1:
        raise DegenerateFixedPoint(
            "transfer map is not primitive (peripheral spectrum is not {1})"
        )
    return v, D, m


def even_mps(d: int, v, theta, D=None, tol: float = 1e-8) -> FermionicMPS:
    """Validate and build an even fermionic MPS."""
    v, D, m = _validate_common("even", d, v, D, tol)
    theta = np.asarray(theta, dtype=complex)
    if theta.shape != (m, m):
        raise DimensionMismatch(f"Theta must be {m} x {m}")
    if np.linalg.norm(theta - theta.conj().T) > tol * m or np.linalg.norm(
        theta @ theta - np.eye(m)
    ) > tol * m:
        raise InvalidMPS("Theta must be a self-adjoint unitary")
    sigma0 = None
    parities = [subset_parity(mask) for mask in fock.fock_masks(d)]
    for mask, a in enumerate(v):
        if np.linalg.norm(a) <= tol:
            continue
        s = sign_match(theta @ a @ theta, a, tol)
        if s is None:
            raise InvalidMPS(f"v[{mask}] is not homogeneous under Ad_Theta")
        offset = (s + parities[mask]) % 2
        if sigma0 is None:
            sigma0 = offset
        elif sigma0 != offset:
            raise InvalidMPS("no single parity offset sigma0 fits all v_mu")
    if np.linalg.norm(theta @ D @ theta - D) > tol:
        raise InvalidMPS("D must commute with Theta")
    return FermionicMPS("even", d, m, v, D, theta, sigma0 or 0)


def odd_mps(d: int, v, sigma0: int, D=None, tol: float = 1e-8) -> FermionicMPS:
    """Validate and build an odd fermionic MPS (sigma0 is input data)."""
    v, D, m = _validate_common("odd", d, v, D, tol)
    return FermionicMPS("odd", d, m, v, D, None, int(sigma0) % 2)


def hatted_v(mps: FermionicMPS) -> np.ndarray:
    """Odd-kind doubled matrices v_mu (x) sigma_z^(sigma0 + |mu|)."""
    out = []
    for mask, a in enumerate(mps.v):
        power = (mps.sigma0 + subset_parity(mask)) % 2
        out.append(np.kron(a, _SZ if power else np.eye(2, dtype=complex)))
    return np.stack(out)


def transfer_apply(mps: FermionicMPS, x: np.ndarray) -> np.ndarray:
    """One application of the transfer map.

    Even kind: x -> sum v x v^dag on M_m.  Odd kind: the doubled map on
    M_m (x) span{1, sigma_x}, using the hatted matrices.
    """
    x = np.asarray(x, dtype=complex)
    mats = mps.v if mps.kind == "even" else hatted_v(mps)
    dim = mats.shape[-1]
    if x.shape != (dim, dim):
        raise DimensionMismatch(f"expected {dim} x {dim}, got {x.shape}")
    return sum(a @ x @ a.conj().T for a in mats)


def _word_sign_exponent(mps: FermionicMPS, word: SiteWord) -> int:
    offset = mps.sigma0 if mps.kind == "odd" else 0
    expo = 0
    acc = 0  # running sum of (offset + |nu_j|) over j < k
    for k, (mu, nu) in enumerate(word):
        if k > 0:
            expo += (subset_parity(mu) + subset_parity(nu)) * acc
        acc += offset + subset_parity(nu)
    return expo % 2


def expectation(mps: FermionicMPS, word: SiteWord) -> complex:
    """The state evaluated on E^(0)_{mu0,nu0} ... E^(l)_{mul,nul}.

    Equals a Koszul sign times Tr(D v_mu0 ... v_mul v_nul^dag ... v_nu0^dag);
    odd-kind words of odd total parity vanish identically.
    """
    word = list(word)
    if mps.kind == "odd":
        total = sum(subset_parity(mu) + subset_parity(nu) for mu, nu in word)
        if total % 2:
            return 0.0 + 0.0j
    left = np.eye(mps.m, dtype=complex)
    right = np.eye(mps.m, dtype=complex)
    for mu, nu in word:
        left = left @ mps.v[mu]
        right = mps.v[nu].conj().T @ right
    tr = np.trace(mps.D @ left @ right)
    sign = -1.0 if _word_sign_exponent(mps, word) else 1.0
    return complex(sign * tr)


def density_matrix(mps: FermionicMPS, l: int) -> np.ndarray:
    """Reduced density matrix on sites 0..l under the Jordan-Wigner map.

    Assembles rho = sum_B expectation(B) jw_word(B)^dag over all site words
    B.  Each jw_word(B) is a string sign times a plain product matrix unit,
    so rho is filled entrywise: rho[nu_vec, mu_vec] = sign * expectation.
    The checks that make this an oracle (positivity, unit trace, parity
    invariance, restriction consistency) live in the test-suite callers.
    """
    sites = l + 1
    if mps.d * sites > 14:
        raise SizeTooLarge(f"chain of {sites} sites at d={mps.d} is too large")
    nloc = mps.nloc
    total = nloc ** sites

    # products v_mu0 ... v_mul for every occupation sequence, big-endian
    prods = np.eye(mps.m, dtype=complex)[None]
    for _ in range(sites):
        prods = np.einsum("aij,mjk->amik", prods, mps.v).reshape(-1, mps.m, mps.m)

    # Gram-style core: Tr(D P_a P_b^dag) via a D^(1/2) square root
    w, u = np.linalg.eigh((mps.D + mps.D.conj().T) / 2.0)
    droot = (u * np.sqrt(np.clip(w, 0.0, None))) @ u.conj().T
    flat = (droot[None] @ prods).reshape(total, -1)
    core = flat @ flat.conj().T  # core[a, b] = Tr(D P_a P_b^dag)

    # per-site parities of each sequence index (big-endian digit order)
    digits = np.zeros((total, sites), dtype=int)
    seq = np.arange(total)
    for k in reversed(range(sites)):
        digits[:, k] = seq % nloc
        seq = seq // nloc
    par = mps.site_parities()[digits]  # (total, sites)
    cums = np.cumsum(par, axis=1) - par  # sum_{j<k} |nu_j|

    # expectation sign exponent, with the odd-kind offset folded in
    offset = mps.sigma0 if mps.kind == "odd" else 0
    shift = offset * np.arange(sites)
    expo = par @ (cums + shift).T + ((par * (cums + shift)).sum(axis=1))[None, :]
    # Jordan-Wigner string sign of the embedded word
    jw = par @ cums.T + (par * cums).sum(axis=1)[None, :]
    sign = np.where((expo + jw) % 2, -1.0, 1.0)

    value = sign * core
    if mps.kind == "odd":
        tot = par.sum(axis=1) % 2
        value = value * (tot[:, None] == tot[None, :])
    return value.T  # rows are nu sequences, columns mu sequences


@dataclass(frozen=True, eq=False)
class OnSiteSymmetry:
    """On-site one-particle action U and bond action W of a finite group."""

    rep_site: ProjectiveRep   # d x d one-particle (anti-)unitaries
    rep_bond: ProjectiveRep   # m x m bond (anti-)unitaries
    q: Z2Hom | None = None    # odd kind only; searched when absent

    @property
    def group(self) -> FiniteGroup:
        return self.rep_site.group

    @property
    def twist(self) -> Z2Hom:
        return self.rep_site.twist


@dataclass(frozen=True, eq=False)
class SymmetryPhases:
    """Result of a symmetry check: one phase per group element."""

    c: np.ndarray            # complex, per group element
    residuals: np.ndarray    # per group element
    q: Z2Hom | None          # odd kind: the parity character that fit


def _covariance_residual(mps, sym, g, qval, tol):
    """Fit c_g in sum_mu F[mu,nu] v_mu = c_g W_g v_nu W_g^-1 over all nu."""
    fmat, _ = fock.second_quantize(sym.rep_site.op(g)[0], sym.twist(g))
    lhs = np.einsum("mn,mij->nij", fmat, mps.v)
    if mps.kind == "odd" and qval:
        signs = np.where(mps.site_parities() % 2, -1.0, 1.0)
        lhs = lhs * signs[:, None, None]
    rhs = np.stack([adjoint_action(sym.rep_bond.op(g), a) for a in mps.v])
    denom = np.vdot(rhs, rhs)
    c = np.vdot(rhs, lhs) / denom if abs(denom) > 0 else 0.0
    resid = np.linalg.norm(lhs - c * rhs) / max(1.0, np.linalg.norm(lhs))
    return complex(c), float(resid)


def check_symmetry(
    mps: FermionicMPS, sym: OnSiteSymmetry, tol: float = 1e-8
) -> SymmetryPhases:
    """Extract the phases c_g; for the odd kind also the character q.

    Raises SymmetryViolated when no phase fits within tolerance, and
    NoConsistentQ when the odd-kind sign character cannot be realized.
    """
    if sym.rep_site.dim != mps.d or sym.rep_bond.dim != mps.m:
        raise DimensionMismatch("symmetry dimensions do not match the MPS")
    group = sym.group
    if mps.kind == "even":
        candidates = [None]
    elif sym.q is not None:
        candidates = [sym.q]
    else:
        candidates = all_z2_homs(group)
    last_error = None
    for q in candidates:
        cs, resids = [], []
        ok = True
        for g in group.elements():
            qval = q(g) if q is not None else 0
            c, resid = _covariance_residual(mps, sym, g, qval, tol)
            if resid > tol:
                ok = False
                last_error = SymmetryViolated(
                    f"covariance fails at group element {g}: residual {resid:.3e}"
                )
                break
            cs.append(c)
            resids.append(resid)
        if ok:
            return SymmetryPhases(np.array(cs), np.array(resids), q)
    if mps.kind == "odd" and sym.q is None:
        raise NoConsistentQ("no parity character satisfies the covariance relation")
    raise last_error


def fmps_index(mps: FermionicMPS, sym: OnSiteSymmetry, tol: float = 1e-8) -> SPTIndex:
    """The SPT index carried by a symmetric fermionic MPS.

    kappa is the kind; q comes from the action on the bond grading (even)
    or from the validated sign character (odd); the class is that of the
    bond representation.
    """
    phases = check_symmetry(mps, sym, tol)
    group = sym.group
    if mps.kind == "even":
        qvals = []
        for g in group.elements():
            s = sign_match(adjoint_action(sym.rep_bond.op(g), mps.theta), mps.theta, tol)
            if s is None:
                raise GradingActionIndeterminate(
                    f"bond action of {g} sends Theta to neither +/- itself"
                )
            qvals.append(s)
        q = validate_hom_z2(group, qvals)
        kappa = 0
    else:
        q = phases.q
        kappa = 1
    cls = cocycle_of_rep(sym.rep_bond, tol)
    return SPTIndex(kappa, q, cls)
