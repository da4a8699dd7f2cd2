"""Giant-component statistics of a degree sequence and threshold predicates.

For a non-decreasing sequence d of length n:

* ``jd`` is the first (1-based) index j with sum_{i<=j} d(i)(d(i)-2) > 0,
  or n if the prefix sums never turn positive;
* ``R`` is the degree mass from ``jd`` onwards;
* ``MJ`` is the degree mass carried by entries different from 2.

A giant component exists roughly when R is a constant fraction of MJ; for the
induced and percolated models the normalisations gamma^2 M and p^2 M stand in
for the model's total degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DegreeSequence, VertexSubset
from .model_seq import ModelSequence

DEFAULT_EPS = 0.01


@dataclass(frozen=True)
class GiantStats:
    jd: int
    R: int
    MJ: int
    M: int
    n: int

    def well_behaved(self, lam: float | None = None) -> bool:
        """MJ >= lam(n); lam defaults to log n."""
        if lam is None:
            lam = math.log(self.n) if self.n > 1 else 0.0
        return self.MJ >= lam

    def to_dict(self) -> dict:
        return {"jd": self.jd, "R": self.R, "MJ": self.MJ, "M": self.M, "n": self.n}


def _as_entries(d) -> np.ndarray:
    if isinstance(d, DegreeSequence):
        return d.entries
    if isinstance(d, ModelSequence):
        return d.entries
    return np.asarray(d, dtype=np.int64)


def joos_stats(d) -> GiantStats:
    """Exact ``jd``, ``R`` and ``MJ`` of a sorted sequence (zeros allowed).

    >>> joos_stats([1, 1]).to_dict()
    {'jd': 2, 'R': 1, 'MJ': 2, 'M': 2, 'n': 2}
    """
    x = _as_entries(d).astype(np.int64)
    n = int(x.size)
    if n and np.any(x[1:] < x[:-1]):
        raise ValueError("sequence must be sorted non-decreasing")
    M = int(x.sum())
    MJ = M - 2 * int(np.count_nonzero(x == 2))
    if n == 0:
        return GiantStats(jd=0, R=0, MJ=0, M=0, n=0)
    prefix = np.cumsum(x * (x - 2))
    hit = np.flatnonzero(prefix > 0)
    jd = int(hit[0]) + 1 if hit.size else n
    R = int(x[jd - 1:].sum())
    return GiantStats(jd=jd, R=R, MJ=MJ, M=M, n=n)


def joos_stats_naive(d) -> GiantStats:
    """Quadratic rescan of every prefix, kept as a differential oracle."""
    x = [int(v) for v in _as_entries(d)]
    n = len(x)
    if n == 0:
        return GiantStats(jd=0, R=0, MJ=0, M=0, n=0)
    jd = n
    for j in range(1, n + 1):
        if sum(v * (v - 2) for v in x[:j]) > 0:
            jd = j
            break
    return GiantStats(
        jd=jd,
        R=sum(x[jd - 1:]),
        MJ=sum(v for v in x if v != 2),
        M=sum(x),
        n=n,
    )


@dataclass(frozen=True)
class GiantVerdict:
    hasGiant: bool
    ratio: float
    eps: float
    stats: GiantStats

    def to_dict(self) -> dict:
        out = self.stats.to_dict()
        out.update({"ratio": self.ratio, "hasGiant": self.hasGiant, "eps": self.eps})
        return out


def _verdict(model, scale: float, eps: float) -> GiantVerdict:
    if eps <= 0:
        raise ValueError("eps must be positive")
    if scale <= 0:
        raise ValueError("normalisation is zero")
    st = joos_stats(model)
    ratio = st.R / scale
    return GiantVerdict(hasGiant=ratio >= eps, ratio=ratio, eps=eps, stats=st)


def giant_predicate_fixed(dH: ModelSequence, eps: float, d: DegreeSequence, S: VertexSubset
                          ) -> GiantVerdict:
    """hasGiant iff R(d_H) >= eps * gamma^2 M."""
    return _verdict(dH, S.gamma ** 2 * d.M, eps)


def giant_predicate_perc(dA: ModelSequence, eps: float, d: DegreeSequence, p: float
                         ) -> GiantVerdict:
    """hasGiant iff R(d_A) >= eps * p^2 M."""
    return _verdict(dA, p * p * d.M, eps)


def sequence_closeness_report(dS, dModel) -> dict:
    """Gaps M, M2, R, MJ and n0 between an induced sequence and a model.

    ``rel*`` entries divide by the model's total degree M_H (or M_A).
    """
    xs = np.sort(_as_entries(dS).astype(np.int64))
    xm = _as_entries(dModel).astype(np.int64)
    ss, sm = joos_stats(xs), joos_stats(xm)
    MH = sm.M
    out = {
        "deltaM": ss.M - sm.M,
        "deltaM2": int((xs * xs).sum()) - int((xm * xm).sum()),
        "deltaR": ss.R - sm.R,
        "deltaMJ": ss.MJ - sm.MJ,
        "deltaN0": int(np.count_nonzero(xs == 0)) - int(np.count_nonzero(xm == 0)),
        "deltaNonZero": int(np.count_nonzero(xs)) - int(np.count_nonzero(xm)),
        "MModel": MH,
    }
    for key in ("deltaM", "deltaM2", "deltaR", "deltaMJ", "deltaN0"):
        out["rel" + key[5:]] = out[key] / MH if MH else math.nan
    return out
