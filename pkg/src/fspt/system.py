"""Graded symmetry systems, their classification, and stacking.

A :class:`GradedSystem` is the finite-dimensional avatar of a balanced,
central, type-I graded dynamical system: a *-algebra with an ambient
grading unitary and a projective (anti-)unitary group action compatible
with the grading.  Classification decides whether the algebra is a factor
(kappa = 0, marker = the self-adjoint unitary generating the even-part
center) or has an odd central self-adjoint unitary (kappa = 1, marker =
that unitary); the index is then read off the action.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import (
    OperatorAlgebra,
    algebra_closure,
    center_within,
    find_odd_selfadjoint_unitary,
    full_matrix_algebra,
    graded_split,
    graded_tensor,
    grading_implementer,
    selfadjoint_unitary_from,
)
from .cocycle import cocycle_of_rep, snap_cocycle
from .errors import (
    CentralityViolation,
    GradingActionIndeterminate,
    GroupMismatch,
    InvalidSystem,
    MarkerNotFound,
    NotBalanced,
)
from .group import FiniteGroup, Z2Hom
from .invariant import SPTIndex
from .linalg import sign_match
from .rep import ProjectiveRep, pair

_SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SZ = np.diag([1.0, -1.0]).astype(complex)


@dataclass(frozen=True, eq=False)
class GradedSystem:
    """(algebra, grading unitary, projective action) on a common space."""

    algebra: OperatorAlgebra
    gamma: np.ndarray
    action: ProjectiveRep
    form: str = "generators"

    def __post_init__(self):
        n = self.algebra.ambient
        g = np.asarray(self.gamma, dtype=complex)
        if g.shape != (n, n) or self.action.dim != n:
            raise InvalidSystem("grading/action dimensions do not match the algebra")
        if not linalg.is_selfadjoint_unitary(g, 1e-10):
            raise InvalidSystem("grading operator is not a self-adjoint unitary")
        self._validate_action()

    @property
    def group(self) -> FiniteGroup:
        return self.action.group

    @property
    def twist(self) -> Z2Hom:
        return self.action.twist

    def _validate_action(self, tol: float = 1e-8):
        """The action must preserve the algebra and commute with the grading.

        Both conditions are multiplicative, so checking generators suffices.
        """
        for g in self.group.elements():
            for x in self.algebra.generators:
                moved = self.action.act(g, x)
                if not self.algebra.contains(moved, tol):
                    raise InvalidSystem(f"action of {g} does not preserve the algebra")
                swap = self.gamma @ moved @ self.gamma
                other = self.action.act(g, self.gamma @ x @ self.gamma)
                if np.linalg.norm(swap - other) > tol * max(1.0, np.linalg.norm(swap)):
                    raise InvalidSystem(
                        f"action of {g} does not commute with the grading"
                    )

    def homogeneous_generators(self) -> list[tuple[np.ndarray, int]]:
        """Nonzero homogeneous parts of the generators, with degrees."""
        out = []
        for x in self.algebra.generators:
            swap = self.gamma @ x @ self.gamma
            for mat, deg in (((x + swap) / 2.0, 0), ((x - swap) / 2.0, 1)):
                if np.linalg.norm(mat) > 1e-10 * max(1.0, np.linalg.norm(x)):
                    out.append((mat, deg))
        return out

    def conjugated(self, t: np.ndarray) -> "GradedSystem":
        """Transport the whole system by a unitary t (an equivalence)."""
        return GradedSystem(
            algebra=self.algebra.conjugated(t),
            gamma=t @ self.gamma @ t.conj().T,
            action=self.action.conjugated(t),
            form="generators",
        )


def r0_system(action: ProjectiveRep, k_dim: int) -> GradedSystem:
    """Standard form with kappa = 0: all of M_{2K}, graded by 1_K (x) sigma_z."""
    if action.dim != 2 * k_dim:
        raise InvalidSystem(f"action dimension {action.dim} != 2 * {k_dim}")
    algebra = full_matrix_algebra(2 * k_dim)
    gamma = np.kron(np.eye(k_dim, dtype=complex), _SZ)
    return GradedSystem(algebra, gamma, action, form="R0")


def r1_system(action: ProjectiveRep, k_dim: int) -> GradedSystem:
    """Standard form with kappa = 1: B(K) (x) span{1, sigma_x}."""
    if action.dim != 2 * k_dim:
        raise InvalidSystem(f"action dimension {action.dim} != 2 * {k_dim}")
    n = 2 * k_dim
    units = full_matrix_algebra(k_dim).basis
    basis = np.concatenate(
        [
            np.stack([np.kron(u, np.eye(2, dtype=complex)) for u in units]),
            np.stack([np.kron(u, _SX) for u in units]),
        ]
    ) / np.sqrt(2.0)
    gens = [np.kron(g, np.eye(2, dtype=complex)) for g in full_matrix_algebra(k_dim).generators]
    gens.append(np.kron(np.eye(k_dim, dtype=complex), _SX))
    algebra = OperatorAlgebra(basis, np.stack(gens), n)
    gamma = np.kron(np.eye(k_dim, dtype=complex), _SZ)
    return GradedSystem(algebra, gamma, action, form="R1")


def system_from_generators(
    generators, gamma, action: ProjectiveRep
) -> GradedSystem:
    algebra = algebra_closure(generators)
    return GradedSystem(algebra, np.asarray(gamma, dtype=complex), action)


def classify(sys: GradedSystem, tol: float = 1e-8) -> tuple[int, np.ndarray]:
    """Decide kappa and produce the marker unitary.

    kappa = 1: the center contains an odd self-adjoint unitary b (marker).
    kappa = 0: the algebra is a factor; the marker is the self-adjoint
    unitary generating the center of the even subalgebra, found as the
    in-algebra implementer of the grading.
    """
    even, odd = graded_split(sys.algebra, sys.gamma, tol)
    if odd.shape[0] == 0:
        raise NotBalanced("trivially graded: no odd elements at all")

    z = center_within(sys.algebra)
    zconj = np.einsum("ij,bjk,kl->bil", sys.gamma, z, sys.gamma)
    z_even = linalg.orthonormal_matrices((z + zconj) / 2.0, floor=1.0)
    z_odd = linalg.orthonormal_matrices((z - zconj) / 2.0, floor=1.0)
    if z_even.shape[0] > 1:
        raise CentralityViolation(
            f"even center has dimension {z_even.shape[0]} > 1"
        )

    if z_odd.shape[0] >= 1:
        if z_odd.shape[0] > 1:
            raise CentralityViolation(
                f"odd center has dimension {z_odd.shape[0]} > 1"
            )
        b = selfadjoint_unitary_from(z_odd[0], tol)
        if b is None:
            raise MarkerNotFound("odd center admits no self-adjoint unitary")
        return 1, b

    u = grading_implementer(sys.algebra, sys.gamma)
    if u is None:
        raise MarkerNotFound(
            "even-part center is not two-dimensional: no grading implementer"
        )
    marker = selfadjoint_unitary_from(u, tol)
    if marker is None:
        raise MarkerNotFound("grading implementer is not scalable to a unitary")
    if find_odd_selfadjoint_unitary(sys.algebra, sys.gamma, tol) is None:
        raise NotBalanced("no odd self-adjoint unitary found in the algebra")
    return 0, marker


def _factor_matrix_units(
    algebra: OperatorAlgebra, tol: float = 1e-8, attempts: int = 6
) -> np.ndarray:
    """Ambient matrix units E_ij of a factor M, shape (N, N, n, n).

    H decomposes as C^N (x) C^r with M = M_N (x) 1.  A generic self-adjoint
    element of M has N eigenvalue clusters of ambient multiplicity r; its
    spectral projections are minimal in M, and a second generic element
    supplies the connecting partial isometries.
    """
    k = algebra.dim
    n = algebra.ambient
    N = round(np.sqrt(k))
    if N * N != k or n % N:
        raise MarkerNotFound(f"algebra of dimension {k} on C^{n} is not a factor")
    r = n // N
    rng = np.random.default_rng(0x5EED)

    def random_element():
        c = rng.standard_normal(k) + 1j * rng.standard_normal(k)
        return np.einsum("k,kij->ij", c, algebra.basis)

    for _ in range(attempts):
        h = random_element()
        h = h + h.conj().T
        evals, evecs = np.linalg.eigh(h)
        splits = np.nonzero(np.diff(evals) > 1e-6 * max(1.0, evals[-1] - evals[0]))[0]
        groups = np.split(np.arange(n), splits + 1)
        if len(groups) != N or any(len(g) != r for g in groups):
            continue
        projections = [evecs[:, g] @ evecs[:, g].conj().T for g in groups]
        if not all(algebra.contains(p, tol) for p in projections):
            continue
        x = random_element()
        isometries = []
        ok = True
        for p in projections:
            u = p @ x @ projections[0]
            lam = np.trace(u.conj().T @ u).real / r
            if lam < tol or np.linalg.norm(
                u.conj().T @ u - lam * projections[0]
            ) > tol * max(1.0, lam) * n:
                ok = False
                break
            isometries.append(u / np.sqrt(lam))
        if not ok:
            continue
        units = np.empty((N, N, n, n), dtype=complex)
        for i in range(N):
            for j in range(N):
                units[i, j] = isometries[i] @ isometries[j].conj().T
        total = sum(units[i, i] for i in range(N))
        if np.linalg.norm(total - np.eye(n)) > tol * n:
            continue
        return units
    raise MarkerNotFound("could not build matrix units for the factor")


def _implement_on_factor(
    units: np.ndarray, sys: GradedSystem, tol: float = 1e-8
) -> ProjectiveRep:
    """Wigner implementers of the action transported to the abstract M_N.

    phi(x)[i,j] = Tr(E_ij^dag x)/r is the factor isomorphism; for each g
    the transported automorphism is implemented by the one-dimensional
    solution space of beta(y) W = W conj^p(y) over two generators y.
    """
    N = units.shape[0]
    r = np.trace(units[0, 0]).real
    flat = units.reshape(N * N, -1)

    def phi(x: np.ndarray) -> np.ndarray:
        return (flat.conj() @ x.reshape(-1)).reshape(N, N) / r

    def phi_inv(y: np.ndarray) -> np.ndarray:
        return np.einsum("ij,ijab->ab", y, units)

    if N == 1:
        gens_std = [np.eye(1, dtype=complex)]
    else:
        shift = np.roll(np.eye(N, dtype=complex), 1, axis=1)
        clock = np.diag(np.exp(2j * np.pi * np.arange(N) / N))
        gens_std = [shift, clock]

    eye_n = np.eye(N, dtype=complex)
    ops = []
    for g in sys.group.elements():
        flag = sys.twist(g)
        blocks = []
        for y in gens_std:
            beta_y = phi(sys.action.act(g, phi_inv(y)))
            rhs = np.conj(y) if flag else y
            blocks.append(np.kron(beta_y, eye_n) - np.kron(eye_n, rhs.T))
        rows = linalg.nullspace_rows(np.concatenate(blocks, axis=0))
        if rows.shape[0] != 1:
            raise MarkerNotFound(
                f"transported action of {g} has no unique implementer"
            )
        w = rows[0].reshape(N, N)
        scale = np.trace(w.conj().T @ w).real / N
        w = w / np.sqrt(scale)
        # determinant gauge: pins the cocycle onto the N-th root lattice
        if g == sys.group.identity:
            w = eye_n
        else:
            w = w / np.exp(np.log(np.linalg.det(w)) / N)
        resid = max(
            np.linalg.norm(
                phi(sys.action.act(g, phi_inv(y)))
                - w @ (np.conj(y) if flag else y) @ w.conj().T
            )
            for y in gens_std
        )
        if resid > tol * N:
            raise MarkerNotFound(
                f"implementer for {g} fails to reproduce the action ({resid:.2e})"
            )
        ops.append(pair(w, flag))
    return ProjectiveRep(sys.group, sys.twist, tuple(ops))


def compute_index(sys: GradedSystem, tol: float = 1e-8) -> SPTIndex:
    """The (kappa, q, class) invariant of a graded system.

    The cohomology class is always read off implementers of the action on
    the abstract factor (all of M for kappa = 0, the even part for kappa =
    1, matching the reduced representation on K); this stays correct when
    the ambient realization carries multiplicity, e.g. after stacking.
    """
    kappa, marker = classify(sys, tol)
    qvals = []
    for g in sys.group.elements():
        s = sign_match(sys.action.act(g, marker), marker, tol)
        if s is None:
            raise GradingActionIndeterminate(
                f"action of {g} sends the marker to neither +/- itself"
            )
        qvals.append(s)
    from .group import validate_hom_z2

    q = validate_hom_z2(sys.group, qvals)
    if kappa == 0:
        target = sys.algebra
    else:
        even, _ = graded_split(sys.algebra, sys.gamma, tol)
        target = OperatorAlgebra(even, even, sys.algebra.ambient)
    units = _factor_matrix_units(target, tol)
    implementers = _implement_on_factor(units, sys, tol)
    cls = snap_cocycle(cocycle_of_rep(implementers, tol), units.shape[0], 1e-6)
    return SPTIndex(kappa, q, cls)


def _gamma_commutation_sign(sys: GradedSystem, g: int, tol: float = 1e-8) -> int:
    s = sign_match(sys.action.act(g, sys.gamma), sys.gamma, tol)
    if s is None:
        raise GradingActionIndeterminate(
            f"action of {g} sends the grading unitary to neither +/- itself"
        )
    return s


def stack_systems(s1: GradedSystem, s2: GradedSystem) -> GradedSystem:
    """Graded tensor product of two systems over the same (G, p).

    The algebra is generated by the Koszul-signed products a (x)^ b; the
    action is implemented by V1_g (x) V2_g Gamma2^(nu1(g)), with nu1(g) the
    commutation sign of V1_g against Gamma1.
    """
    if not s1.group.same_as(s2.group) or not s1.twist.same_as(s2.twist):
        raise GroupMismatch("systems live on different (G, p)")
    n1, n2 = s1.algebra.ambient, s2.algebra.ambient
    eye1 = np.eye(n1, dtype=complex)
    eye2 = np.eye(n2, dtype=complex)

    gens = [np.kron(a, eye2) for a in s1.algebra.generators]
    for b, deg in s2.homogeneous_generators():
        gens.append(graded_tensor(eye1, s1.gamma, b, deg))

    # seed the closure with the full span of signed elementary tensors
    even1, odd1 = graded_split(s1.algebra, s1.gamma)
    even2, odd2 = graded_split(s2.algebra, s2.gamma)
    seed = []
    for mats1 in (even1, odd1):
        for mats2, deg2 in ((even2, 0), (odd2, 1)):
            if mats1.shape[0] == 0 or mats2.shape[0] == 0:
                continue
            left = mats1 @ s1.gamma if deg2 else mats1
            seed.append(
                np.einsum("aij,bkl->abikjl", left, mats2).reshape(
                    -1, n1 * n2, n1 * n2
                )
            )
    algebra = algebra_closure(np.stack(gens), seed=np.concatenate(seed))

    ops = []
    for g in s1.group.elements():
        nu1 = _gamma_commutation_sign(s1, g)
        m2, f = s2.action.op(g)
        if nu1:
            g2 = np.conj(s2.gamma) if f else s2.gamma
            m2 = m2 @ g2
        ops.append(pair(np.kron(s1.action.op(g)[0], m2), f))
    action = ProjectiveRep(s1.group, s1.twist, tuple(ops))
    return GradedSystem(algebra, np.kron(s1.gamma, s2.gamma), action)
