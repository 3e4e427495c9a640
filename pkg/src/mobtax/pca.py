"""Principal component projection of taxonomy observations.

Each observation is one ``(dataset_id, t1_fraction)`` pair carrying the six
taxonomy aspects and the Gini at ``t1``. All observations are standardized
and fitted jointly, so every network traces a trail of points through one
shared landscape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ._util import report
from .taxonomy import FEATURE_NAMES, TaxonomyPoint

__all__ = [
    "FeatureMatrix",
    "PcaResult",
    "eigen_symmetric",
    "pca_project",
    "standardize",
    "trails",
]


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    """Observation rows tagged by ``(dataset_id, t1_fraction)``."""

    values: np.ndarray
    keys: tuple[tuple[str, float], ...]
    feature_names: tuple[str, ...] = FEATURE_NAMES

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.float64)
        if vals.ndim != 2 or vals.shape[1] != len(self.feature_names):
            raise ValueError(
                f"expected an (n, {len(self.feature_names)}) matrix, got shape {vals.shape}"
            )
        if len(self.keys) != vals.shape[0]:
            raise ValueError("one key per row required")
        if not np.all(np.isfinite(vals)):
            raise ValueError("feature matrix contains undefined or non-finite values")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "keys", tuple((str(d), float(t)) for d, t in self.keys))

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @classmethod
    def from_points(
        cls,
        points: Iterable[tuple[str, TaxonomyPoint]],
        issues: list | None = None,
    ) -> FeatureMatrix:
        """Stack ``(dataset_id, point)`` pairs, dropping rows with an undefined aspect.

        Each dropped row is reported to ``issues`` (or warned about).
        """
        rows, keys = [], []
        for dataset_id, p in points:
            feats = p.features()
            if any(v is None for v in feats):
                missing = [n for n, v in zip(FEATURE_NAMES, feats) if v is None]
                report(
                    issues,
                    f"{dataset_id} t1={p.t1_fraction:g}: excluded from PCA, undefined {', '.join(missing)}",
                )
                continue
            rows.append(feats)
            keys.append((dataset_id, p.t1_fraction))
        values = np.array(rows, dtype=np.float64).reshape(len(rows), len(FEATURE_NAMES))
        return cls(values, tuple(keys))


def standardize(matrix: FeatureMatrix) -> tuple[FeatureMatrix, np.ndarray, np.ndarray]:
    """Z-score every column using the population standard deviation.

    Raises
    ------
    ValueError
        If there are fewer than 3 rows or some column is constant; the
        message names the offending feature.
    """
    x = matrix.values
    if matrix.n_rows < 3:
        raise ValueError(f"need at least 3 observations, got {matrix.n_rows}")
    means = x.mean(axis=0)
    stds = x.std(axis=0)
    for name, col, s in zip(matrix.feature_names, x.T, stds):
        if s == 0 or np.all(col == col[0]):
            raise ValueError(f"feature {name!r} has zero variance")
    z = FeatureMatrix((x - means) / stds, matrix.keys, matrix.feature_names)
    return z, means, stds


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def eigen_symmetric(
    matrix: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100
) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps over all off-diagonal pairs until the off-diagonal Frobenius norm
    drops below ``tol`` (scaled by the matrix norm when that exceeds 1).

    Returns
    -------
    eigenvalues : ndarray, shape (n,)
        Descending; ties keep the original diagonal order.
    eigenvectors : ndarray, shape (n, n)
        Orthonormal columns, ``eigenvectors[:, k]`` pairs with
        ``eigenvalues[k]``. Each column is signed so that its entry of largest
        magnitude is positive (first such entry on ties).
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if np.max(np.abs(a - a.T), initial=0.0) > 1e-9:
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    n = a.shape[0]
    v = np.eye(n)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))

    for _ in range(max_sweeps):
        if _off_norm(a) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(diff) + 100.0 * abs(apq) == abs(diff):
                    # pivot negligible next to the diagonal gap; theta would overflow
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        if _off_norm(a) >= threshold:
            raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")

    w = np.diag(a).copy()
    order = sorted(range(n), key=lambda i: (-w[i], i))
    w = w[order]
    v = v[:, order]
    for k in range(n):
        j = int(np.argmax(np.abs(v[:, k])))
        if v[j, k] < 0:
            v[:, k] = -v[:, k]
    return w, v


@dataclass(frozen=True, eq=False)
class PcaResult:
    """Fitted landscape.

    ``components`` holds the two retained loading vectors as rows and
    ``projections`` the matching ``(pc1, pc2)`` score of each row of the
    input, in input order. ``eigenvectors`` keeps the full basis so that
    :meth:`reconstruct` can invert the projection.
    """

    feature_names: tuple[str, ...]
    keys: tuple[tuple[str, float], ...]
    means: np.ndarray
    stds: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    projections: np.ndarray
    standardized: bool = True
    _z: np.ndarray = field(default=None, repr=False)

    @property
    def components(self) -> np.ndarray:
        return self.eigenvectors[:, :2].T

    @property
    def explained_variance_ratio(self) -> np.ndarray:
        return self.eigenvalues / self.eigenvalues.sum()

    def scores(self) -> np.ndarray:
        """Projection of every row onto all components."""
        return self._z @ self.eigenvectors

    def transform(self, values: np.ndarray, n_components: int = 2) -> np.ndarray:
        z = (np.asarray(values, dtype=np.float64) - self.means) / self.stds
        return z @ self.eigenvectors[:, :n_components]

    def reconstruct(self, scores: np.ndarray) -> np.ndarray:
        """Map full-rank scores back to the original feature scale."""
        k = scores.shape[1]
        return scores @ self.eigenvectors[:, :k].T * self.stds + self.means


def pca_project(matrix: FeatureMatrix, standardize_features: bool = True) -> PcaResult:
    """Fit the two highest-variance components over all rows.

    With ``standardize_features=False`` columns are only centred and the raw
    covariance is decomposed. Covariances use the population normalization,
    so the variance of each score column equals its eigenvalue.
    """
    if standardize_features:
        z, means, stds = standardize(matrix)
        zv = z.values
    else:
        if matrix.n_rows < 3:
            raise ValueError(f"need at least 3 observations, got {matrix.n_rows}")
        means = matrix.values.mean(axis=0)
        stds = np.ones_like(means)
        zv = matrix.values - means
    cov = zv.T @ zv / zv.shape[0]
    w, v = eigen_symmetric(cov)
    return PcaResult(
        feature_names=matrix.feature_names,
        keys=matrix.keys,
        means=means,
        stds=stds,
        eigenvalues=w,
        eigenvectors=v,
        projections=zv @ v[:, :2],
        standardized=standardize_features,
        _z=zv,
    )


def trails(result: PcaResult) -> dict[str, list[tuple[float, float, float]]]:
    """Per-dataset ``(t1_fraction, pc1, pc2)`` sequences ordered by ``t1_fraction``."""
    out: dict[str, list] = {}
    for (dataset_id, t1), (x, y) in zip(result.keys, result.projections.tolist()):
        out.setdefault(dataset_id, []).append((t1, x, y))
    for rows in out.values():
        rows.sort()
    return out

