"""Structural verdicts: irreducibility and the exterior-square rank test.

Verdicts are three-valued.  Certified and Refuted carry checkable
evidence; Unknown carries whatever partial information the search
produced.  Nothing here ever guesses: the real-field case with a
deficient algebra dimension but no real invariant subspace found stays
Unknown by design.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .bounds import bounds
from .config import DEFAULTS, pick
from .errors import InputError
from .tuples import MatrixTuple, exterior_square_tuple


@dataclass(frozen=True)
class PropertyVerdict:
    status: str  # "Certified" | "Refuted" | "Unknown"
    evidence: dict

    def to_json_dict(self) -> dict:
        return {"status": self.status, "evidence": self.evidence}


def _flat(a: np.ndarray) -> np.ndarray:
    return np.asarray(a).reshape(-1)


def _try_extend(basis: list[np.ndarray], candidate: np.ndarray, drop_tol: float) -> bool:
    """Orthonormal span extension with a relative drop tolerance."""
    v = _flat(candidate).astype(complex if np.iscomplexobj(candidate) else float)
    scale = np.linalg.norm(v)
    if scale == 0.0:
        return False
    for _ in range(2):  # re-orthogonalize once for numerical safety
        for q in basis:
            v = v - np.vdot(q, v) * q
    residual = np.linalg.norm(v)
    if residual <= drop_tol * scale:
        return False
    basis.append(v / residual)
    return True


def algebra_basis(t: MatrixTuple, drop_tol: float | None = None) -> list[np.ndarray]:
    """Orthonormal basis (as d x d matrices) of span {identity and all products}.

    Closure under left multiplication by the slots, seeded with the
    identity, reaches every word product.
    """
    drop_tol = pick(drop_tol, DEFAULTS.span_drop_tol)
    d = t.d
    dtype = np.complex128 if t.field == "complex" else np.float64
    flat_basis: list[np.ndarray] = []
    mats: list[np.ndarray] = []
    queue = [np.eye(d, dtype=dtype)]
    while queue:
        cand = queue.pop(0)
        if _try_extend(flat_basis, cand, drop_tol):
            added = flat_basis[-1].reshape(d, d)
            mats.append(added)
            if len(flat_basis) == d * d:
                break
            for a in t.matrices:
                queue.append(a @ added)
    return mats


def algebra_dimension(t: MatrixTuple, drop_tol: float | None = None) -> int:
    """Dimension over the tuple's field of the unital product span (at most d^2)."""
    return len(algebra_basis(t, drop_tol))


def _orbit_subspace(basis: list[np.ndarray], v: np.ndarray, d: int, drop_tol: float):
    """Span of {B v} for B over the algebra basis; returns (rank, orthonormal columns)."""
    stack = np.stack([b @ v for b in basis])
    u, s, vh = np.linalg.svd(stack, full_matrices=False)
    if s.size == 0 or s[0] <= 0.0:
        return 0, None
    rank = int(np.count_nonzero(s > drop_tol * s[0]))
    return rank, vh[:rank].conj().T


def _invariance_residual(t: MatrixTuple, w: np.ndarray) -> float:
    worst = 0.0
    for a in t.matrices:
        image = a @ w
        proj = w @ (w.conj().T @ image)
        denom = max(1.0, linalg.op_norm(a))
        worst = max(worst, float(np.linalg.norm(image - proj)) / denom)
    return worst


def _real_eigenvectors(a: np.ndarray) -> list[np.ndarray]:
    vals, vecs = np.linalg.eig(a)
    out = []
    for lam, v in zip(vals, vecs.T):
        if abs(lam.imag) > 1e-9 * max(1.0, abs(lam)):
            continue
        # rotate the phase so a genuinely real eigenvector becomes real
        pivot = v[np.argmax(np.abs(v))]
        if abs(pivot) == 0.0:
            continue
        v = v * (pivot.conjugate() / abs(pivot))
        if np.max(np.abs(v.imag)) <= 1e-8 * max(np.max(np.abs(v.real)), 1e-30):
            out.append(np.real(v))
    return out


def is_irreducible(
    t: MatrixTuple,
    *,
    drop_tol: float | None = None,
    seed: int | None = None,
    rounds: int | None = None,
) -> PropertyVerdict:
    """Common-invariant-subspace test.

    Full algebra dimension d^2 certifies irreducibility.  Otherwise the
    search looks for a nonzero proper subspace invariant under every
    slot, trying standard basis vectors, slot eigenvectors, and orbits
    of eigenvectors of random algebra elements.  Over the complex field
    a deficient dimension guarantees such a subspace exists, so the
    search continues until one is found; over the reals an unsuccessful
    search returns Unknown.
    """
    drop_tol = pick(drop_tol, DEFAULTS.span_drop_tol)
    seed = pick(seed, DEFAULTS.seed)
    rounds = pick(rounds, DEFAULTS.witness_rounds)
    d = t.d
    basis = algebra_basis(t, drop_tol)
    dim = len(basis)
    if dim == d * d:
        return PropertyVerdict("Certified", {"algebra_dimension": dim})

    complex_field = t.field == "complex"
    dtype = np.complex128 if complex_field else np.float64

    def check(v: np.ndarray) -> PropertyVerdict | None:
        v = np.asarray(v, dtype=dtype)
        nrm = np.linalg.norm(v)
        if nrm == 0.0:
            return None
        rank, w = _orbit_subspace(basis, v / nrm, d, drop_tol)
        if w is None or not 0 < rank < d:
            return None
        if _invariance_residual(t, w) > 1e-8:
            return None
        evidence = {
            "algebra_dimension": dim,
            "subspace_dimension": rank,
            "basis": _subspace_to_json(w, complex_field),
        }
        return PropertyVerdict("Refuted", evidence)

    for k in range(d):
        found = check(np.eye(d, dtype=dtype)[:, k])
        if found:
            return found
    for a in t.matrices:
        if complex_field:
            _, vecs = np.linalg.eig(a)
            candidates = list(vecs.T)
        else:
            candidates = _real_eigenvectors(a)
        for v in candidates:
            found = check(v)
            if found:
                return found

    rng = np.random.default_rng(seed)
    for _ in range(rounds):
        coeffs = rng.standard_normal(dim)
        if complex_field:
            coeffs = coeffs + 1j * rng.standard_normal(dim)
        x = sum(c * b for c, b in zip(coeffs, basis))
        if complex_field:
            _, vecs = np.linalg.eig(x)
            candidates = list(vecs.T)
        else:
            candidates = _real_eigenvectors(x) + [rng.standard_normal(d)]
        for v in candidates:
            found = check(v)
            if found:
                return found
    note = (
        "deficient algebra dimension but no complex witness found within the round cap"
        if complex_field
        else "real field: algebra dimension is deficient but no real invariant subspace was found"
    )
    return PropertyVerdict("Unknown", {"algebra_dimension": dim, "note": note})


def _subspace_to_json(w: np.ndarray, complex_field: bool) -> list:
    cols = []
    for j in range(w.shape[1]):
        col = w[:, j]
        if complex_field:
            cols.append([[float(x.real), float(x.imag)] for x in col])
        else:
            cols.append([float(x.real) for x in col])
    return cols


def rank_one_property(
    t: MatrixTuple,
    depth: int,
    *,
    tol: float | None = None,
    budget: int | None = None,
) -> PropertyVerdict:
    """Exterior-square criterion at a given certification depth.

    The joint spectral radius of the exterior square never exceeds the
    square of the original one; strict inequality is the rank-one
    property.  Certified when the wedge upper bound sits below the
    squared lower bound (or every wedge product vanished outright,
    assuming relative product boundedness of the input); Refuted when
    the wedge lower bound forces equality; Unknown otherwise.
    """
    if t.d < 2:
        raise InputError("rank-one test needs dimension >= 2")
    tol = pick(tol, DEFAULTS.rank_one_tol)
    b = bounds(t, depth, budget=budget)
    bw = bounds(exterior_square_tuple(t), depth, budget=budget)
    evidence = {
        "bounds": b.to_json_dict(),
        "wedge_bounds": bw.to_json_dict(),
        "depth": depth,
    }
    if bw.upper == 0.0:
        status = "Certified"
    elif bw.upper < b.lower ** 2 * (1.0 - tol):
        status = "Certified"
    elif bw.lower >= b.upper ** 2 * (1.0 - tol):
        status = "Refuted"
    else:
        status = "Unknown"
    return PropertyVerdict(status, evidence)


def eigen_separation_heuristic(t: MatrixTuple, gap_tol: float | None = None) -> bool:
    """True when every 2x2 slot has eigenvalues of distinct modulus.

    A pointwise check used to flag tuples whose slots all sit in the
    generic distinct-modulus regime; only defined for d = 2.
    """
    if t.d != 2:
        raise InputError("eigenvalue separation heuristic is defined for d = 2 only")
    gap_tol = pick(gap_tol, DEFAULTS.eigen_gap_tol)
    for a in t.matrices:
        moduli = sorted(np.abs(np.linalg.eigvals(a)), reverse=True)
        if moduli[0] <= 0.0:
            return False
        if (moduli[0] - moduli[1]) / moduli[0] <= gap_tol:
            return False
    return True
