"""Gradient-norm bound underpinning the decay rate.

`eval_F` is the closed-form L1 norm of the gradient of the transformed
occupation recurrence for the essential block graph (two disjoint
edges; its complement, a 4-cycle, dominates the complements of all
block graphs, so this single graph's bound covers them all).  Variables
are ordered (z1, z2, z3, z4, z14, z13, z23, z24): one per block vertex
and one per non-edge pair.  The decay rate 49/50 is justified by
max F < 0.971 on [0,1]^8, which `maximize_F` both locates numerically
(grid scan + coordinate ascent + restarts) and certifies.

Certification route (floating-point, not formally rounded):

1. N and D (numerator and the base of the denominator of
   F = N/4 * D^(-5/4)) are coordinate-wise increasing with increasing
   partials, so corner evaluations bound anything monotone on a cell.
2. A branch-and-bound pass certifies N(z) <= 5.6 * D(z) on the box.
   That constant makes every pair-variable partial of F nonnegative:
   dF/dz_p has the sign of D*dN_p - 1.25*N*dD_p, which after using
   z^3 >= z^4 on [0,1] is at least sigma * z_p^2 * (6*D*(1-z_p) +
   z_p*(14*D - 2.5*N)) >= 0.  Hence the maximum lies on the face with
   all four pair variables equal to 1.
3. On that face F depends on the vertex variables only through
   s3 = sum z_v^3 and s4 = sum z_v^4, namely (2*s3 + s4)*(1+2*s4)^(-5/4),
   increasing in s3; by power-mean s3 <= 4^(1/4)*s4^(3/4), so the face
   maximum is bounded by the one-dimensional
   G(s) = (2*4^(1/4)*s^(3/4) + s) * (1+2*s)^(-5/4) on [0,4],
   certified below the threshold by interval bisection.

For activity weights lam != 1 the transform pair h(s) = s^4/lam,
g(s) = (lam*s)^(1/4) leaves the inner expression unchanged, so the
gradient-norm function is lam^(1/4) * F(z) on the rescaled box
[0, lam^(1/4)]^8; `sweep_lambda` maximizes it per grid point (search
only: at the far end of the proven activity range the margin below 1 is
a few 1e-5, too thin to certify by cells).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: pair-variable index -> its two vertex-variable indices
_PAIR_VERTS = {4: (0, 3), 5: (0, 2), 6: (1, 2), 7: (1, 3)}
#: vertex-variable index -> its two pair-variable indices
_VERT_PAIRS = {0: (4, 5), 1: (6, 7), 2: (5, 6), 3: (4, 7)}

#: N <= RATIO_C * D on the box implies dF/dz_p >= 0 for all pair variables.
RATIO_C = 5.6

#: Certified threshold for the lam = 1 bound.
F_THRESHOLD = 0.971


def _D(z):
    z4 = z ** 4
    d = 1.0 + z4[..., 0] + z4[..., 1] + z4[..., 2] + z4[..., 3]
    for p, (i, j) in _PAIR_VERTS.items():
        d = d + 0.5 * z4[..., p] * (z4[..., i] + z4[..., j])
    return d


def _N(z):
    z3, z4 = z ** 3, z ** 4
    n = 0.0
    for v, (p, q) in _VERT_PAIRS.items():
        n = n + 2.0 * z3[..., v] * (2.0 + z4[..., p] + z4[..., q])
    for p, (i, j) in _PAIR_VERTS.items():
        n = n + 2.0 * z3[..., p] * (z4[..., i] + z4[..., j])
    return n


def _dN(z):
    z2, z3, z4 = z ** 2, z ** 3, z ** 4
    out = np.zeros_like(z)
    for v, (p, q) in _VERT_PAIRS.items():
        out[..., v] = 6.0 * z2[..., v] * (2.0 + z4[..., p] + z4[..., q]) + 8.0 * z3[
            ..., v
        ] * (z3[..., p] + z3[..., q])
    for p, (i, j) in _PAIR_VERTS.items():
        out[..., p] = 8.0 * z3[..., p] * (z3[..., i] + z3[..., j]) + 6.0 * z2[
            ..., p
        ] * (z4[..., i] + z4[..., j])
    return out


def _dD(z):
    z3, z4 = z ** 3, z ** 4
    out = np.zeros_like(z)
    for v, (p, q) in _VERT_PAIRS.items():
        out[..., v] = 4.0 * z3[..., v] * (1.0 + 0.5 * (z4[..., p] + z4[..., q]))
    for p, (i, j) in _PAIR_VERTS.items():
        out[..., p] = 2.0 * z3[..., p] * (z4[..., i] + z4[..., j])
    return out


def _F(z):
    return 0.25 * _N(z) * _D(z) ** -1.25


def eval_F(z) -> float:
    """The closed-form gradient norm at a point of [0,1]^8."""
    z = np.asarray(z, dtype=float)
    if z.shape != (8,):
        raise ValueError("expected an 8-vector (z1,z2,z3,z4,z14,z13,z23,z24)")
    if (z < 0).any() or (z > 1).any():
        raise ValueError("coordinates must lie in [0, 1]")
    return float(_F(z))


def eval_F_batch(points) -> np.ndarray:
    """Vectorized eval_F over an array of shape (..., 8)."""
    z = np.asarray(points, dtype=float)
    if z.shape[-1] != 8:
        raise ValueError("last axis must have length 8")
    if (z < 0).any() or (z > 1).any():
        raise ValueError("coordinates must lie in [0, 1]")
    return _F(z)


def eval_F_lambda(z, lam: float) -> float:
    """Gradient norm for activity lam on the rescaled box [0, lam^(1/4)]^8."""
    if lam <= 0:
        raise ValueError("lam must be positive")
    z = np.asarray(z, dtype=float)
    if z.shape != (8,):
        raise ValueError("expected an 8-vector")
    scale = lam ** 0.25
    if (z < 0).any() or (z > scale + 1e-15).any():
        raise ValueError(f"coordinates must lie in [0, {scale}]")
    return float(scale * _F(z))


def symmetry_images(z) -> list[tuple[float, ...]]:
    """The 8 images of a point under the automorphisms of the essential
    block graph (swap within either edge, swap the two edges); eval_F is
    invariant on each."""
    z1, z2, z3, z4, z14, z13, z23, z24 = z
    base = [
        (z1, z2, z3, z4, z14, z13, z23, z24),
        (z2, z1, z3, z4, z24, z23, z13, z14),
        (z1, z2, z4, z3, z13, z14, z24, z23),
        (z2, z1, z4, z3, z23, z24, z14, z13),
    ]
    out = list(base)
    for (a1, a2, a3, a4, a14, a13, a23, a24) in base:
        # swap the two edges: (1,2) <-> (3,4) via 1<->3, 2<->4;
        # {1,4}->{2,3}, {2,3}->{1,4}, while {1,3} and {2,4} are fixed
        out.append((a3, a4, a1, a2, a23, a13, a14, a24))
    return out


@dataclass(frozen=True)
class BoundReport:
    """Search and certification outcome for one activity value."""

    max_value: float
    argmax: tuple[float, ...]
    margin: float
    threshold: float
    lam: float
    certified: bool
    grid_steps: int
    restarts: int
    tol: float
    cert_cells: int


# -- search ------------------------------------------------------------


def _grid_scan(scale: float, grid_steps: int, top: int = 12):
    """Best `top` points of the symmetric-reduced uniform grid on
    [0, scale]^8."""
    axis = np.linspace(0.0, scale, grid_steps)
    best_vals: list[float] = []
    best_pts: list[np.ndarray] = []
    tail = np.stack(
        np.meshgrid(*([axis] * 5), indexing="ij"), axis=-1
    ).reshape(-1, 5)
    for z1 in axis:
        for z2 in axis:
            if z1 > z2:  # symmetry: swap within edge (1,2)
                continue
            for z3 in axis:
                if z1 > z3:  # symmetry: swap the two edges
                    continue
                chunk = np.empty((tail.shape[0], 8))
                chunk[:, 0] = z1
                chunk[:, 1] = z2
                chunk[:, 2] = z3
                chunk[:, 3:] = tail
                keep = chunk[:, 2] <= chunk[:, 3]  # swap within edge (3,4)
                chunk = chunk[keep]
                vals = _F(chunk)
                take = np.argsort(vals)[-top:]
                best_vals.extend(vals[take])
                best_pts.extend(chunk[take])
    order = np.argsort(best_vals)[-top:]
    return [best_pts[i] for i in order], max(best_vals)


def _ascend(z: np.ndarray, scale: float, tol: float, sweeps: int = 60):
    """Cyclic coordinate ascent with per-coordinate golden-section polish."""
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    z = z.copy()
    fz = float(_F(z))
    probes = np.linspace(0.0, scale, 17)
    for _ in range(sweeps):
        improved = 0.0
        for k in range(8):
            samples = np.repeat(z[None, :], 17, axis=0)
            samples[:, k] = probes
            vals = _F(samples)
            j = int(np.argmax(vals))
            a = probes[max(j - 1, 0)]
            b = probes[min(j + 1, 16)]
            # golden-section maximization on [a, b]
            c, d = b - invphi * (b - a), a + invphi * (b - a)
            zc, zd = z.copy(), z.copy()
            while b - a > 1e-7:
                zc[k], zd[k] = c, d
                if float(_F(zc)) > float(_F(zd)):
                    b, d = d, c
                    c = b - invphi * (b - a)
                else:
                    a, c = c, d
                    d = a + invphi * (b - a)
            zc[k] = 0.5 * (a + b)
            fc = float(_F(zc))
            if fc > fz:
                improved += fc - fz
                z, fz = zc.copy(), fc
        if improved < tol:
            break
    return z, fz


def _search_max(scale: float, grid_steps: int, restarts: int, tol: float, seed: int):
    """Grid scan plus polished restarts; returns (argmax, max) with the
    max being the largest value over every probe evaluated."""
    starts, grid_best = _grid_scan(scale, grid_steps)
    rng = np.random.default_rng(seed)
    starts.extend(rng.random((restarts, 8)) * scale)
    best_z, best_f = None, -1.0
    for z0 in starts:
        z, f = _ascend(np.asarray(z0, dtype=float), scale, tol)
        if f > best_f:
            best_z, best_f = z, f
    best_f = max(best_f, grid_best)
    return best_z, best_f


# -- certification -----------------------------------------------------


def _certify_ratio(max_cells: int, batch: int = 100_000):
    """Branch-and-bound proof of N(z) <= RATIO_C * D(z) on [0,1]^8.

    Per cell: interval bounds on each partial of the slack N - c*D give
    a coordinate-wise Lipschitz estimate; certified-sign coordinates are
    collapsed onto the maximizing face, hot cells split along the
    largest L*width coordinate.
    """
    lo = np.zeros((1, 8))
    hi = np.ones((1, 8))
    processed = 0
    while lo.shape[0]:
        cl, ch = lo[:batch].copy(), hi[:batch].copy()
        lo, hi = lo[batch:], hi[batch:]
        processed += cl.shape[0]
        if processed > max_cells:
            return False, processed
        for _ in range(2):
            g_hi = _dN(ch) - RATIO_C * _dD(cl)
            g_lo = _dN(cl) - RATIO_C * _dD(ch)
            cl = np.where(g_lo > 0, ch, cl)
            ch = np.where(g_hi < 0, cl, ch)
        width = ch - cl
        lips = np.maximum(np.abs(g_hi), np.abs(g_lo))
        mid = 0.5 * (cl + ch)
        u_center = _N(mid) - RATIO_C * _D(mid) + 0.5 * np.sum(lips * width, axis=1)
        u_corner = _N(ch) - RATIO_C * _D(cl)
        hot = np.minimum(u_center, u_corner) > 0
        if not hot.any():
            continue
        hl, hh, hw, hL = cl[hot], ch[hot], width[hot], lips[hot]
        score = hL * hw
        split = np.argmax(score, axis=1)
        flat = score[np.arange(len(split)), split] <= 0
        split[flat] = np.argmax(hw[flat], axis=1)
        mids = hl[np.arange(len(split)), split] + 0.5 * hw[np.arange(len(split)), split]
        left_hi = hh.copy()
        left_hi[np.arange(len(split)), split] = mids
        right_lo = hl.copy()
        right_lo[np.arange(len(split)), split] = mids
        lo = np.concatenate([lo, hl, right_lo])
        hi = np.concatenate([hi, left_hi, hh])
    return True, processed


def _certify_face(threshold: float, max_cells: int = 1_000_000):
    """Interval bisection proof of G(s) < threshold on [0,4], where
    G(s) = (2*4^(1/4) s^(3/4) + s)(1+2s)^(-5/4) dominates F on the
    all-ones pair face."""
    root2 = 2.0 * np.sqrt(2.0)
    a = np.array([0.0])
    b = np.array([4.0])
    processed = 0
    while a.shape[0]:
        processed += a.shape[0]
        if processed > max_cells:
            return False, processed
        upper = (root2 * b ** 0.75 + b) * (1.0 + 2.0 * a) ** -1.25
        hot = upper >= threshold
        a, b = a[hot], b[hot]
        m = 0.5 * (a + b)
        a, b = np.concatenate([a, m]), np.concatenate([m, b])
    return True, processed


def certify_below(threshold: float = F_THRESHOLD, max_cells: int = 20_000_000):
    """Certify max F < threshold on [0,1]^8; returns (ok, cells used)."""
    ok_ratio, cells_ratio = _certify_ratio(max_cells)
    if not ok_ratio:
        return False, cells_ratio
    ok_face, cells_face = _certify_face(threshold, max_cells)
    return ok_face, cells_ratio + cells_face


# -- public maximizers -------------------------------------------------


def maximize_F(
    grid_steps: int = 6,
    restarts: int = 64,
    tol: float = 1e-8,
    seed: int = 0,
    certify: bool = True,
) -> BoundReport:
    """Locate and certify the maximum of F over [0,1]^8."""
    if grid_steps < 2:
        raise ValueError("grid_steps must be at least 2")
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    argmax, _ = _search_max(1.0, grid_steps, restarts, tol, seed)
    max_value = eval_F(argmax)  # independent scalar re-evaluation
    certified, cells = certify_below(F_THRESHOLD) if certify else (False, 0)
    return BoundReport(
        max_value=max_value,
        argmax=tuple(float(x) for x in argmax),
        margin=F_THRESHOLD - max_value,
        threshold=F_THRESHOLD,
        lam=1.0,
        certified=certified,
        grid_steps=grid_steps,
        restarts=restarts,
        tol=tol,
        cert_cells=cells,
    )


def default_lambda_grid(points: int = 32) -> list[float]:
    """Log-spaced activity grid over (0.01, 1.077]."""
    return [float(x) for x in np.geomspace(0.01, 1.077, points + 1)[1:]]


def maximize_F_lambda(
    lam: float,
    grid_steps: int = 5,
    restarts: int = 16,
    tol: float = 1e-8,
    seed: int = 0,
) -> BoundReport:
    """Search-only maximization of the lam-weighted gradient norm over
    its natural box [0, lam^(1/4)]^8; the relevant threshold is 1."""
    if lam <= 0:
        raise ValueError("lam must be positive")
    scale = lam ** 0.25
    argmax, _ = _search_max(scale, grid_steps, restarts, tol, seed)
    max_value = eval_F_lambda(argmax, lam)
    threshold = F_THRESHOLD if lam == 1.0 else 1.0
    return BoundReport(
        max_value=max_value,
        argmax=tuple(float(x) for x in argmax),
        margin=threshold - max_value,
        threshold=threshold,
        lam=lam,
        certified=False,
        grid_steps=grid_steps,
        restarts=restarts,
        tol=tol,
        cert_cells=0,
    )


def sweep_lambda(
    lam_grid=None,
    grid_steps: int = 5,
    restarts: int = 16,
    tol: float = 1e-8,
    seed: int = 0,
) -> list[BoundReport]:
    """Maximize the lam-weighted gradient norm for every grid activity."""
    if lam_grid is None:
        lam_grid = default_lambda_grid()
    return [
        maximize_F_lambda(lam, grid_steps, restarts, tol, seed + i)
        for i, lam in enumerate(lam_grid)
    ]
