"""Degree sequences, vertex subsets, graphicality and regime diagnostics."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np


class SequenceError(ValueError):
    """Raised for malformed degree-sequence or subset input."""


@dataclass(frozen=True, eq=False)
class DegreeSequence:
    """A sorted, non-decreasing sequence of vertex degrees.

    Entries are canonicalised by sorting, so vertex ``i`` (1-based) refers to
    the ``i``-th smallest degree. The strict constructor requires every entry
    to be at least 1; use :meth:`permissive` for induced or model sequences
    that may contain zeros.

    >>> d = DegreeSequence([2, 1, 1])
    >>> d.entries.tolist(), d.M, d.Delta
    ([1, 1, 2], 4, 2)
    """

    entries: np.ndarray
    allow_zero: bool = False
    n: int = field(init=False)
    M: int = field(init=False)
    M2: int = field(init=False)
    Delta: int = field(init=False)
    hist: dict = field(init=False)

    def __init__(self, entries: Iterable[int], allow_zero: bool = False):
        arr = np.sort(np.asarray(list(entries) if not isinstance(entries, np.ndarray) else entries,
                                 dtype=np.int64))
        floor = 0 if allow_zero else 1
        if arr.size and arr[0] < floor:
            raise SequenceError(f"entries must be >= {floor}, got {int(arr[0])}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "allow_zero", allow_zero)
        object.__setattr__(self, "n", int(arr.size))
        object.__setattr__(self, "M", int(arr.sum()))
        object.__setattr__(self, "M2", int((arr * arr).sum()))
        object.__setattr__(self, "Delta", int(arr[-1]) if arr.size else 0)
        values, counts = np.unique(arr, return_counts=True)
        object.__setattr__(self, "hist", {int(k): int(c) for k, c in zip(values, counts)})

    @classmethod
    def permissive(cls, entries: Iterable[int]) -> "DegreeSequence":
        return cls(entries, allow_zero=True)

    @property
    def odd_sum(self) -> bool:
        """Warning flag: the total degree is odd, so no graph realises it."""
        return self.M % 2 == 1

    def count(self, k: int) -> int:
        return self.hist.get(k, 0)

    def degree(self, i: int) -> int:
        """Degree of vertex ``i`` (1-based sorted position)."""
        return int(self.entries[i - 1])

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    def __repr__(self) -> str:
        head = ", ".join(str(x) for x in self.entries[:8].tolist())
        tail = ", ..." if self.n > 8 else ""
        return f"DegreeSequence(({head}{tail}), n={self.n}, M={self.M})"

    def summary(self) -> dict:
        return {
            "n": self.n,
            "M": self.M,
            "M2": self.M2,
            "Delta": self.Delta,
            "hist": {str(k): v for k, v in self.hist.items()},
            "oddSum": self.odd_sum,
        }


@dataclass(frozen=True, eq=False)
class VertexSubset:
    """A set ``S`` of vertices (1-based sorted positions) against a sequence.

    ``gamma`` is the degree density d(S)/M.
    """

    indices: np.ndarray
    s: int
    dS: int
    gamma: float
    dSbar: int
    M: int

    @classmethod
    def of(cls, d: DegreeSequence, indices: Iterable[int]) -> "VertexSubset":
        idx = np.unique(np.asarray(list(indices), dtype=np.int64))
        if idx.size and (idx[0] < 1 or idx[-1] > d.n):
            raise SequenceError(f"subset index out of range [1, {d.n}]")
        idx.setflags(write=False)
        dS = int(d.entries[idx - 1].sum()) if idx.size else 0
        gamma = dS / d.M if d.M else 0.0
        return cls(indices=idx, s=int(idx.size), dS=dS, gamma=gamma, dSbar=d.M - dS, M=d.M)

    @classmethod
    def from_mask(cls, d: DegreeSequence, mask: np.ndarray) -> "VertexSubset":
        return cls.of(d, np.flatnonzero(mask) + 1)

    @property
    def zero_based(self) -> np.ndarray:
        return self.indices - 1

    def __len__(self) -> int:
        return self.s

    def __contains__(self, v: int) -> bool:
        i = np.searchsorted(self.indices, v)
        return bool(i < self.s and self.indices[i] == v)


def _tokens(text: str | bytes) -> list[int]:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    out = []
    for tok in text.split():
        try:
            out.append(int(tok))
        except ValueError:
            raise SequenceError(f"non-integer token {tok!r}") from None
    return out


def load_sequence(text: str | bytes, allow_zero: bool = False) -> DegreeSequence:
    """Parse whitespace-separated integers into a sorted :class:`DegreeSequence`.

    An odd total degree is not an error; check ``odd_sum`` on the result.
    """
    values = _tokens(text)
    if not values:
        raise SequenceError("empty degree sequence")
    return DegreeSequence(values, allow_zero=allow_zero)


def load_subset(text: str | bytes, d: DegreeSequence) -> VertexSubset:
    return VertexSubset.of(d, _tokens(text))


def format_sequence(d: DegreeSequence) -> str:
    return " ".join(str(x) for x in d.entries.tolist()) + "\n"


# -- graphicality -----------------------------------------------------------


def is_graphical(d: DegreeSequence | Iterable[int]) -> bool:
    """Erdős–Gallai test; zeros allowed, odd sum gives ``False``."""
    entries = d.entries if isinstance(d, DegreeSequence) else np.asarray(list(d), dtype=np.int64)
    if entries.size == 0:
        return True
    if entries.min() < 0 or int(entries.sum()) % 2:
        return False
    x = np.sort(entries)[::-1]
    n = x.size
    if x[0] > n - 1:
        return False
    k = np.arange(1, n + 1)
    prefix = np.cumsum(x)
    suffix = np.concatenate([[prefix[-1]], prefix[-1] - prefix])  # suffix[j] = sum x[j:]
    # c[k] = #{i : x_i >= k}; positions beyond max(k, c[k]) contribute x_i
    c = np.searchsorted(-x, -k, side="right")
    split = np.maximum(k, c)
    rhs = k * (k - 1) + k * np.maximum(0, c - k) + suffix[split]
    return bool(np.all(prefix <= rhs))


def koren_witness(d: DegreeSequence | Iterable[int]) -> tuple[list[int], list[int]] | None:
    """Disjoint sets A, B with sum_A d - sum_B d > |A| (n - 1 - |B|), if any.

    Such a pair certifies that a sequence is not graphical. For each size
    ``a`` the extremal choice is A = the ``a`` largest entries and B = the
    remaining entries smaller than ``a``, which is the Erdős–Gallai violation
    in set form. Returns 1-based sorted positions, or ``None``. ``B`` may be
    empty when a single entry already exceeds n - 1.
    """
    entries = d.entries if isinstance(d, DegreeSequence) else np.sort(np.asarray(list(d), dtype=np.int64))
    n = entries.size
    order = np.argsort(-entries, kind="stable")
    for a in range(1, n + 1):
        top, rest = order[:a], order[a:]
        B = [int(j) for j in rest if entries[j] < a]
        lhs = int(entries[top].sum()) - int(entries[B].sum())
        if lhs > a * (n - 1 - len(B)):
            return sorted(int(i) + 1 for i in top), sorted(j + 1 for j in B)
    return None


# -- regime conditions -------------------------------------------------------


def default_delta(M: int) -> float:
    """Slowest-decaying admissible delta, 1/log log M, capped at 1."""
    if M <= math.e ** math.e:
        return 1.0
    return min(1.0, 1.0 / math.log(math.log(M)))


def cutoff(delta: float, density: float, M: int) -> float:
    """The small/large degree cutoff delta^(-1/16) * density^-1 * log M."""
    return delta ** (-1.0 / 16.0) * math.log(M) / density


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    lhs: float
    rhs: float
    slack: float
    co: float
    gammaOk: bool

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "co": self.co,
            "gammaOk": self.gammaOk,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _report(Delta: int, density: float, M: int, rhs: float, delta: float, ok: bool) -> ConditionReport:
    log_m = math.log(M)
    # log-space to avoid overflow of the 12th power
    log_lhs = 2 * math.log(Delta) + 12 * math.log(log_m / density) if log_m > 0 else -math.inf
    lhs = math.exp(log_lhs) if log_lhs < 700 else math.inf
    slack = math.exp(math.log(rhs) - log_lhs) if rhs > 0 else 0.0
    return ConditionReport(
        holds=lhs <= rhs,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        co=cutoff(delta, density, M),
        gammaOk=ok,
    )


def check_condition_fixed_S(
    d: DegreeSequence, S: VertexSubset, delta: float | None = None, c: float = 0.01
) -> ConditionReport:
    """Evaluate Delta^2 (gamma^-1 log M)^12 <= delta d(S) and gamma < 1 - c."""
    if delta is None:
        delta = default_delta(d.M)
    if delta <= 0:
        raise ValueError("delta must be positive")
    if S.s == 0 or S.dS == 0:
        raise ValueError("subset must be non-empty with positive total degree")
    return _report(d.Delta, S.gamma, d.M, delta * S.dS, delta, S.gamma < 1 - c)


def check_condition_percolation(
    d: DegreeSequence, p: float, delta: float | None = None, eps: float = 0.01
) -> ConditionReport:
    """Evaluate Delta^2 (p^-1 log M)^12 <= delta p M; ``gammaOk`` carries p < 1 - eps."""
    if not 0 < p < 1:
        raise ValueError("p must lie in (0, 1)")
    if delta is None:
        delta = default_delta(d.M)
    if delta <= 0:
        raise ValueError("delta must be positive")
    return _report(d.Delta, p, d.M, delta * p * d.M, delta, p < 1 - eps)
