"""Deterministic model sequences for induced subgraphs.

``build_dH`` gives the model sequence for a fixed vertex set S: with
Z_j ~ Bin(j, gamma), N(k) = floor(sum_{i in S} P(Z_{d(i)} <= k) + 1/2) and
n_k = N(k) - N(k-1). ``build_dA`` is the site-percolation analogue with
X_j ~ Bin(j, p) summed over all vertices and weighted by p.
"""

from __future__ import annotations

import hashlib
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .core import DegreeSequence, VertexSubset, cutoff, default_delta

log = logging.getLogger(__name__)

TIE_WINDOW = 1e-9


@dataclass(frozen=True, eq=False)
class BinomialTable:
    j: int
    prob: float
    pmf: np.ndarray
    cdf: np.ndarray

    def cdf_at(self, k: int) -> float:
        if k < 0:
            return 0.0
        if k >= self.j:
            return 1.0
        return float(self.cdf[k])

    def pmf_at(self, k: int) -> float:
        return float(self.pmf[k]) if 0 <= k <= self.j else 0.0


def _log_pmf(j: int, k: int, q: float) -> float:
    return (math.lgamma(j + 1) - math.lgamma(k + 1) - math.lgamma(j - k + 1)
            + k * math.log(q) + (j - k) * math.log1p(-q))


@lru_cache(maxsize=4096)
def binomial_table(j: int, q: float) -> BinomialTable:
    """Exact Bin(j, q) pmf and cdf.

    The pmf is evaluated in log space at the mode and extended in both
    directions by the ratio recurrence, then renormalised; terms that
    underflow are exactly zero. Cached per ``(j, q)``; the cache is
    read-shared and tables are immutable.
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    if not 0.0 <= q <= 1.0 or math.isnan(q):
        raise ValueError("q must lie in [0, 1]")
    pmf = np.zeros(j + 1)
    if q == 0.0:
        pmf[0] = 1.0
    elif q == 1.0:
        pmf[j] = 1.0
    else:
        mode = min(j, int(math.floor((j + 1) * q)))
        odds = q / (1.0 - q)
        pmf[mode] = 1.0
        # relative weights; exp(log pmf at mode) rescales afterwards
        for k in range(mode + 1, j + 1):
            pmf[k] = pmf[k - 1] * (j - k + 1) / k * odds
            if pmf[k] == 0.0:
                break
        for k in range(mode - 1, -1, -1):
            pmf[k] = pmf[k + 1] * (k + 1) / (j - k) / odds
            if pmf[k] == 0.0:
                break
        anchor = math.exp(_log_pmf(j, mode, q))
        pmf *= anchor
        pmf /= math.fsum(pmf)
    cdf = np.minimum(np.cumsum(pmf), 1.0)
    cdf[-1] = 1.0
    pmf.setflags(write=False)
    cdf.setflags(write=False)
    return BinomialTable(j=j, prob=q, pmf=pmf, cdf=cdf)


def round_half_up(x: float) -> int:
    """floor(x + 1/2), with near-ties (within 1e-9) resolved upwards."""
    base = math.floor(x)
    frac = x - base
    if abs(frac - 0.5) <= TIE_WINDOW:
        if frac != 0.5:
            log.info("rounding tie at %.17g resolved upwards", x)
        return int(base) + 1
    return int(math.floor(x + 0.5))


def _degree_groups(entries: np.ndarray) -> list[tuple[int, int]]:
    values, counts = np.unique(entries, return_counts=True)
    return [(int(v), int(c)) for v, c in zip(values, counts)]


def _cdf_sums(groups, q: float, kmax: int) -> list[float]:
    """sum over groups of count * P(Bin(j, q) <= k), for k = 0..kmax, compensated."""
    out = []
    tables = [(binomial_table(j, q), c) for j, c in groups]
    for k in range(kmax + 1):
        out.append(math.fsum(c * t.cdf_at(k) for t, c in tables))
    return out


def _pmf_sums(groups, q: float, kmax: int) -> np.ndarray:
    out = np.zeros(kmax + 1)
    tables = [(binomial_table(j, q), c) for j, c in groups]
    for k in range(kmax + 1):
        out[k] = math.fsum(c * t.pmf_at(k) for t, c in tables)
    return out


def _digest(d: DegreeSequence) -> str:
    return hashlib.sha256(d.entries.astype("<i8").tobytes()).hexdigest()[:16]


@dataclass(frozen=True, eq=False)
class ModelSequence:
    """A d_H or d_A instance stored as a value histogram.

    ``ytilde[i]`` (d_H only) sums P(Z_{d(v)} = i) over the small-degree part of
    S, ``pmf_sum[i]`` sums the same over all of S (d_H) or is w~_i (d_A).
    """

    kind: str
    hist: dict
    length: int
    params: dict
    cutoff: float
    counts: np.ndarray
    pmf_sum: np.ndarray
    ytilde: np.ndarray | None = None
    wtilde: np.ndarray | None = None
    cumulative: np.ndarray = field(default=None, repr=False)

    def n_k(self, k: int) -> int:
        return self.hist.get(k, 0)

    def sequence(self) -> DegreeSequence:
        """Expanded non-decreasing sequence (zeros allowed)."""
        return DegreeSequence.permissive(np.repeat(np.arange(self.counts.size), self.counts))

    @property
    def entries(self) -> np.ndarray:
        return np.repeat(np.arange(self.counts.size), self.counts)

    def ytilde_gap(self) -> np.ndarray | None:
        """Sum over all of S minus sum over the small-degree part, per value."""
        if self.ytilde is None:
            return None
        return self.pmf_sum - self.ytilde

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "hist": {str(k): v for k, v in sorted(self.hist.items())},
            "length": self.length,
            "params": dict(self.params),
            "cutoff": self.cutoff,
            "stats": model_stats(self),
        }
        if self.ytilde is not None:
            gap = self.ytilde_gap()
            out["ytildeGapMax"] = float(np.max(np.abs(gap))) if gap.size else 0.0
        return out

    def csv(self) -> str:
        extra = self.wtilde if self.wtilde is not None else self.pmf_sum
        rows = ["k,n_k,wtilde_k" if self.kind == "dA" else "k,n_k,expected_k"]
        for k in range(self.counts.size):
            rows.append(f"{k},{int(self.counts[k])},{extra[k]:.17g}")
        return "\n".join(rows) + "\n"


def _from_cumulative(N: list[int]) -> np.ndarray:
    counts = np.diff(np.asarray([0] + N, dtype=np.int64))
    if np.any(counts < 0):
        raise AssertionError("cumulative counts decreased")
    return counts


def _hist(counts: np.ndarray) -> dict:
    return {int(k): int(c) for k, c in enumerate(counts.tolist()) if c}


def build_dH(d: DegreeSequence, S: VertexSubset, delta: float | None = None,
             permissive: bool = False) -> ModelSequence:
    """Model sequence for the subgraph induced on a fixed set ``S``."""
    if S.s == 0:
        raise ValueError("S must be non-empty")
    gamma = S.gamma
    if not 0.0 < gamma < 1.0 and not permissive:
        raise ValueError(f"gamma={gamma} must lie strictly in (0, 1)")
    if delta is None:
        delta = default_delta(d.M)
    degs = d.entries[S.zero_based]
    groups = _degree_groups(degs)
    kmax = int(degs.max())
    sums = _cdf_sums(groups, gamma, kmax)
    N = [round_half_up(x) for x in sums]
    counts = _from_cumulative(N)
    co = cutoff(delta, gamma, d.M) if gamma > 0 else math.inf
    small = [(j, c) for j, c in groups if j <= co]
    return ModelSequence(
        kind="dH",
        hist=_hist(counts),
        length=int(counts.sum()),
        params={"gamma": gamma, "delta": delta, "s": S.s, "dS": S.dS, "M": d.M,
                "digest": _digest(d)},
        cutoff=co,
        counts=counts,
        pmf_sum=_pmf_sums(groups, gamma, kmax),
        ytilde=_pmf_sums(small, gamma, kmax),
        cumulative=np.asarray(N, dtype=np.int64),
    )


def build_dA(d: DegreeSequence, p: float, delta: float | None = None,
             permissive: bool = False) -> ModelSequence:
    """Model sequence for site percolation with survival probability ``p``."""
    if not 0.0 < p < 1.0 and not (permissive and 0.0 <= p <= 1.0):
        raise ValueError("p must lie in (0, 1)")
    if delta is None:
        delta = default_delta(d.M)
    groups = _degree_groups(d.entries)
    kmax = d.Delta
    sums = _cdf_sums(groups, p, kmax)
    N = [round_half_up(p * x) for x in sums]
    counts = _from_cumulative(N)
    wtilde = p * _pmf_sums(groups, p, kmax)
    return ModelSequence(
        kind="dA",
        hist=_hist(counts),
        length=int(counts.sum()),
        params={"p": p, "delta": delta, "n": d.n, "M": d.M, "digest": _digest(d)},
        cutoff=cutoff(delta, p, d.M) if p > 0 else math.inf,
        counts=counts,
        pmf_sum=wtilde,
        wtilde=wtilde,
        cumulative=np.asarray(N, dtype=np.int64),
    )


def percolation_length(n: int, p: float) -> int:
    return round_half_up(p * n)


def model_stats(m: ModelSequence) -> dict:
    k = np.arange(m.counts.size, dtype=np.int64)
    c = m.counts
    return {
        "M": int((k * c).sum()),
        "M2": int((k * k * c).sum()),
        "n0": int(c[0]) if c.size else 0,
        "nonZeroCount": int(c[1:].sum()) if c.size else 0,
        "n2": int(c[2]) if c.size > 2 else 0,
        "MJ": int((k * c).sum()) - 2 * (int(c[2]) if c.size > 2 else 0),
        "length": int(c.sum()),
    }
