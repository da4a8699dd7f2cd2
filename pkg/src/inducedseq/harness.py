"""Monte Carlo and exact-enumeration verification suites.

Every suite returns an :class:`ExperimentReport` whose body is a pure function
of its config (seeds included), so replaying a report's config reproduces it
bit for bit. Gates come in three kinds:

``exact``       identities that must hold in every trial;
``desk``        finite-n tolerances pinned for the instance sizes used here;
``asymptotic``  the limiting bounds evaluated literally. These are logged but
                do not decide ``passed``; at desk scale they are typically
                vacuous or violated, and the report's ``slackNote`` says how far
                the instance is from the regime they assume.
"""

from __future__ import annotations

import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from .core import (
    DegreeSequence,
    VertexSubset,
    check_condition_fixed_S,
    check_condition_percolation,
    default_delta,
)
from .giant import (
    DEFAULT_EPS,
    giant_predicate_fixed,
    giant_predicate_perc,
    joos_stats,
    sequence_closeness_report,
)
from .graphs import components
from .model_seq import binomial_table, build_dA, build_dH, model_stats
from .percolation import fixed_subset_pipeline, percolated_sample
from .sampler import SamplerConfig, class_counts, resolve_method, spawn_seeds

log = logging.getLogger(__name__)


@dataclass
class Gate:
    description: str
    measured: float | int | bool | None
    threshold: float | int | bool | None
    passed: bool
    kind: str = "desk"

    def to_dict(self) -> dict:
        return {
            "description": self.description,
            "measured": _jsonable(self.measured),
            "threshold": _jsonable(self.threshold),
            "pass": bool(self.passed),
            "kind": self.kind,
        }


@dataclass
class ExperimentReport:
    suite: str
    config: dict
    trials: int
    perTrial: list = field(default_factory=list)
    gates: list = field(default_factory=list)
    slackNote: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    csv: str | None = None

    @property
    def passed(self) -> bool:
        return all(g.passed for g in self.gates if g.kind != "asymptotic")

    def gate(self, description: str) -> Gate:
        for g in self.gates:
            if g.description == description:
                return g
        raise KeyError(description)

    def body(self) -> dict:
        return {
            "suite": self.suite,
            "config": _jsonable(self.config),
            "trials": self.trials,
            "perTrial": _jsonable(self.perTrial),
            "gates": [g.to_dict() for g in self.gates],
            "slackNote": _jsonable(self.slackNote),
            "results": _jsonable(self.results),
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.body(), sort_keys=True, indent=1)

    def lines(self) -> list[str]:
        out = []
        for g in self.gates:
            tag = "PASS" if g.passed else "FAIL"
            out.append(f"[{tag}] ({g.kind}) {g.description}: measured={_jsonable(g.measured)} threshold={_jsonable(g.threshold)}")
        return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return _jsonable(float(x))
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return x


def _map(fn: Callable, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def _fraction_gate(description, flags, min_fraction, kind="desk") -> Gate:
    flags = list(flags)
    hits = sum(bool(f) for f in flags)
    frac = hits / len(flags) if flags else float("nan")
    return Gate(description, f"{hits}/{len(flags)}", f">= {min_fraction}",
                bool(flags) and frac >= min_fraction - 1e-12, kind)


def _hist(values: np.ndarray, size: int) -> np.ndarray:
    return np.bincount(np.asarray(values, dtype=np.int64), minlength=size)


def _hist_tv(counts_a: np.ndarray, counts_b: np.ndarray, norm: int) -> float:
    size = max(counts_a.size, counts_b.size)
    a = np.pad(counts_a, (0, size - counts_a.size))
    b = np.pad(counts_b, (0, size - counts_b.size))
    return float(0.5 * np.abs(a - b).sum() / norm) if norm else 0.0


def mixture_pmf(degrees: Iterable[int], q: float) -> np.ndarray:
    """Average of Bin(d, q) pmfs over ``degrees``."""
    degrees = np.asarray(list(degrees), dtype=np.int64)
    out = np.zeros(int(degrees.max()) + 1 if degrees.size else 1)
    values, counts = np.unique(degrees, return_counts=True)
    for j, c in zip(values.tolist(), counts.tolist()):
        out[: j + 1] += c * binomial_table(j, q).pmf
    return out / max(1, degrees.size)


def tv_distance(p: np.ndarray, q: np.ndarray) -> float:
    size = max(p.size, q.size)
    return float(0.5 * np.abs(np.pad(p, (0, size - p.size)) - np.pad(q, (0, size - q.size))).sum())


def _sampler_cfg(method: str, seed: int, switch_steps=None) -> SamplerConfig:
    return SamplerConfig(method=method, seed=seed, switchSteps=switch_steps)


def _resolved(d: DegreeSequence, method: str) -> str:
    # decide once per suite so the fallback warning is not repeated per trial
    return resolve_method(d, SamplerConfig(method=method))


# -- induced degrees on a fixed set ---------------------------------------------------


def _thm23_trial(job) -> dict:
    d, S, dH, params, seed = job
    gamma, co, delta = params["gamma"], params["co"], params["delta"]
    out = fixed_subset_pipeline(d, S, _sampler_cfg(params["method"], seed, params["switchSteps"]))
    raw = out.rawDegrees
    degS_sorted = np.sort(raw)
    base = d.entries[S.zero_based]  # d(i_k), non-decreasing
    dH_entries = dH.entries
    pick_rng = np.random.default_rng(spawn_seeds(seed, 1)[0])
    k = min(params["verticesPerTrial"], S.s)
    picked = pick_rng.choice(S.s, size=k, replace=False) if k < S.s else np.arange(S.s)
    size = d.Delta + 1
    nS = _hist(raw, size)
    nH = np.pad(dH.counts, (0, size - dH.counts.size))
    large = base >= delta ** (1 / 32) * co
    rec = {
        "seed": seed,
        "sampler": out.sampleInfo,
        "sumCounts": int(nS.sum()),
        "histTV": _hist_tv(nS, nH, S.s),
        "obsInduced": raw[picked].tolist(),
        "obsDegree": base[picked].tolist(),
    }
    if large.any():
        rel = np.abs(degS_sorted[large] - gamma * base[large]) / (gamma * base[large])
        relH = np.abs(degS_sorted[large] - dH_entries[large]) / np.maximum(dH_entries[large], 1)
        rec["largeMaxRel"] = float(rel.max())
        rec["largeMaxRelH"] = float(relH.max())
    else:
        rec["largeMaxRel"] = None
        rec["largeMaxRelH"] = None
    small = ~large
    rec["smallMax"] = int(max(degS_sorted[small].max(), dH_entries[small].max())) if small.any() else None
    imax = int(math.floor(0.5 * gamma * co))
    bound_c = [gamma * nH[i] / co ** 3 + gamma * co ** 5 for i in range(min(imax, size - 1) + 1)]
    rec["countsOk"] = bool(all(abs(int(nS[i]) - int(nH[i])) <= b for i, b in enumerate(bound_c)))
    small_S = base <= co
    rec["Y"] = _hist(raw[small_S], size).tolist()
    rec["closeness"] = sequence_closeness_report(degS_sorted, dH)
    return rec


def suite_thm23(d: DegreeSequence, S: VertexSubset, delta: float | None = None, trials: int = 20,
                seed: int = 0, verticesPerTrial: int = 100, tvTol: float = 0.05,
                histTol: float = 0.05, minFraction: float = 0.95, method: str = "auto",
                switchSteps: int | None = None, c: float = 0.01, workers: int = 1) -> ExperimentReport:
    """Compare induced degrees on a fixed S with Bin(d(v), gamma) and d_H."""
    delta = default_delta(d.M) if delta is None else delta
    config = {
        "d": _seq_digest(d), "S": {"size": S.s, "dS": S.dS, "indices": S.indices.tolist()}, "delta": delta, "trials": trials,
        "seed": seed, "verticesPerTrial": verticesPerTrial, "tvTol": tvTol, "histTol": histTol,
        "minFraction": minFraction, "method": method, "switchSteps": switchSteps, "c": c,
    }
    cond = check_condition_fixed_S(d, S, delta, c)
    report = ExperimentReport("thm23", config, trials, slackNote={"condition": cond.to_dict()})
    if not cond.gammaOk:
        report.gates.append(Gate("precondition gamma < 1 - c", S.gamma, 1 - c, False, "exact"))
        report.trials = 0
        return report
    dH = build_dH(d, S, delta)
    params = {"gamma": S.gamma, "co": cond.co, "delta": delta, "method": _resolved(d, method),
              "switchSteps": switchSteps, "verticesPerTrial": verticesPerTrial}
    seeds = spawn_seeds(seed, trials)
    recs = _map(_thm23_trial, [(d, S, dH, params, s) for s in seeds], workers)

    obs_i = np.concatenate([np.asarray(r.pop("obsInduced"), dtype=np.int64) for r in recs])
    obs_d = np.concatenate([np.asarray(r.pop("obsDegree"), dtype=np.int64) for r in recs])
    emp = np.bincount(obs_i, minlength=d.Delta + 1) / max(1, obs_i.size)
    ref = mixture_pmf(obs_d, S.gamma)
    tv = tv_distance(emp, ref)
    report.perTrial = recs
    report.results = {
        "observations": int(obs_i.size),
        "empiricalPmf": emp.tolist(),
        "binomialPmf": ref.tolist(),
        "tv": tv,
        "dH": dH.to_dict(),
        "meanY": np.mean([r["Y"] for r in recs], axis=0).tolist(),
        "ytilde": dH.ytilde.tolist(),
        "medianRelR": float(np.median([abs(r["closeness"]["relR"]) for r in recs])),
    }
    co = cond.co
    report.gates += [
        Gate("sum_i n_i(d_S) = |S| in every trial", sum(r["sumCounts"] == S.s for r in recs),
             trials, all(r["sumCounts"] == S.s for r in recs), "exact"),
        Gate("TV(empirical d_S(v), Bin(d(v), gamma)) <= tol", tv, tvTol, tv <= tvTol),
        _fraction_gate(f"histogram TV(d_S, d_H) <= {histTol}",
                       (r["histTV"] <= histTol for r in recs), minFraction),
    ]
    large = [r["largeMaxRel"] for r in recs if r["largeMaxRel"] is not None]
    bound_a = 8 * delta ** (1 / 64)
    report.gates += [
        Gate("(a) large entries within gamma d(i_k)(1 +- 8 delta^(1/64))",
             max(large) if large else None, bound_a, all(x <= bound_a for x in large), "asymptotic"),
        _fraction_gate("(b) small entries <= 2 gamma delta^(1/32) co",
                       ((r["smallMax"] is None or r["smallMax"] <= 2 * S.gamma * delta ** (1 / 32) * co)
                        for r in recs), 1.0, "asymptotic"),
        _fraction_gate("(c) |n_i(d_S) - n_i(d_H)| within bound for i <= gamma co / 2",
                       (r["countsOk"] for r in recs), 1.0, "asymptotic"),
    ]
    report.slackNote["largeEntries"] = int(np.count_nonzero(
        d.entries[S.zero_based] >= delta ** (1 / 32) * co))
    return report


# -- site percolation ---------------------------------------------------------------------


def _thm25_trial(job) -> dict:
    d, p, dA, params, seed = job
    G, out = percolated_sample(d, p, _sampler_cfg(params["method"], seed, params["switchSteps"]))
    S = out.survivors
    from_graph = int(G.degrees[S.zero_based].sum())
    rec = {
        "seed": seed,
        "sampler": out.sampleInfo,
        "sizeS": S.s,
        "degS": S.dS,
        "degSFromGraph": from_graph,
    }
    if dA is not None:
        co = params["co"]
        base = d.entries[S.zero_based]
        big = base > 2 * params["delta"] ** (1 / 32) * co
        if big.any():
            rec["bigMaxRel"] = float(np.max(np.abs(out.rawDegrees[big] / (p * base[big]) - 1)))
        else:
            rec["bigMaxRel"] = None
        size = d.Delta + 1
        nS = _hist(out.rawDegrees, size)
        nA = np.pad(dA.counts, (0, size - dA.counts.size))
        rec["histTV"] = _hist_tv(nS, nA, max(1, dA.length))
        imax = int(math.floor(p * co / 3))
        logM = math.log(d.M)
        rec["countsOk"] = bool(all(
            abs(int(nS[i]) - int(nA[i])) <= p * nA[i] / co ** 3 + p * co ** 6 / math.sqrt(logM)
            for i in range(min(imax, size - 1) + 1)))
        rec["closeness"] = sequence_closeness_report(out.inducedSeq, dA)
    return rec


def suite_thm25(d: DegreeSequence, p: float, delta: float | None = None, trials: int = 50,
                seed: int = 0, histTol: float = 0.05, minFraction: float = 0.98,
                method: str = "auto", switchSteps: int | None = None, eps: float = 0.01,
                workers: int = 1) -> ExperimentReport:
    """Survivor count, survivor degree mass and induced degrees under site percolation."""
    delta = default_delta(d.M) if delta is None else delta
    config = {"d": _seq_digest(d), "p": p, "delta": delta, "trials": trials, "seed": seed,
              "histTol": histTol, "minFraction": minFraction, "method": method,
              "switchSteps": switchSteps, "eps": eps}
    report = ExperimentReport("thm25", config, trials)
    interior = 0.0 < p < 1.0
    dA = None
    co = math.inf
    if interior:
        cond = check_condition_percolation(d, p, delta, eps)
        report.slackNote = {"condition": cond.to_dict()}
        dA = build_dA(d, p, delta)
        co = cond.co
    else:
        report.slackNote = {"condition": None, "note": "p on the boundary; model sequence skipped"}
    params = {"co": co, "delta": delta, "method": _resolved(d, method), "switchSteps": switchSteps}
    seeds = spawn_seeds(seed, trials)
    recs = _map(_thm25_trial, [(d, p, dA, params, s) for s in seeds], workers)
    report.perTrial = recs

    n, M = d.n, d.M
    np_ = n * p
    size_tol = 3 * math.sqrt(math.log(n) / (p * n)) if p > 0 else math.inf
    azuma = 3 * math.sqrt(d.M2 * math.log(n))
    report.gates += [
        Gate("d(S) from d equals d(S) from the sampled graph",
             sum(r["degS"] == r["degSFromGraph"] for r in recs), trials,
             all(r["degS"] == r["degSFromGraph"] for r in recs), "exact"),
        _fraction_gate("(a) |S| in np(1 +- 3 sqrt(log n / (pn)))",
                       (abs(r["sizeS"] - np_) <= np_ * size_tol for r in recs), minFraction),
        _fraction_gate("|d(S) - pM| <= 3 sqrt(M2 log n) (Azuma)",
                       (abs(r["degS"] - p * M) <= azuma for r in recs), minFraction),
        _fraction_gate("(b) |d(S) - pM| <= p^3 M^(3/4)",
                       (abs(r["degS"] - p * M) <= p ** 3 * M ** 0.75 for r in recs), 1.0, "asymptotic"),
    ]
    if dA is not None:
        big = [r["bigMaxRel"] for r in recs if r["bigMaxRel"] is not None]
        report.gates += [
            _fraction_gate(f"(d) histogram TV(d_S, d_A) <= {histTol}",
                           (r["histTV"] <= histTol for r in recs), minFraction),
            Gate("(c) d_S(v) = p d(v)(1 +- 9 delta^(1/64)) for large d(v)",
                 max(big) if big else None, 9 * delta ** (1 / 64),
                 all(x <= 9 * delta ** (1 / 64) for x in big), "asymptotic"),
            _fraction_gate("(d) |n_i(d_S) - n_i(d_A)| within bound for i <= p co / 3",
                           (r["countsOk"] for r in recs), 1.0, "asymptotic"),
        ]
        report.results["dA"] = dA.to_dict()
    sizes = np.array([r["sizeS"] for r in recs], dtype=float)
    degs = np.array([r["degS"] for r in recs], dtype=float)
    report.results.update({
        "meanSizeS": float(sizes.mean()), "np": np_,
        "meanDegS": float(degs.mean()), "pM": p * M,
        "sizeTolerance": np_ * size_tol, "azumaTolerance": azuma,
    })
    return report


# -- exact switching cross-checks ------------------------------------------------------------


def suite_switching_exact(d: DegreeSequence, S: VertexSubset, v: int | None = None,
                          pair: tuple[int, int] | None = None, limit: int = 8,
                          factorGate: float = 4.0, delta: float | None = None) -> ExperimentReport:
    """Exact class counts from enumeration against the switching-lemma formulas."""
    if S.s == 0:
        raise ValueError("S must be non-empty")
    members = S.indices.tolist()
    v = members[0] if v is None else int(v)
    if pair is None and len(members) >= 2:
        pair = (members[0], members[1])
    delta = default_delta(d.M) if delta is None else delta
    config = {"d": d.entries.tolist(), "S": members, "v": v, "pair": pair, "limit": limit,
              "factorGate": factorGate, "delta": delta}
    report = ExperimentReport("switching", config, trials=0)
    gamma = S.gamma
    dv = d.degree(v)

    # degree switching: |A_v^i| / |A_v^{i+1}|
    idx = class_counts(d, S, vertices=(v,), limit=limit)
    ratios = []
    for i in range(dv + 1):
        a, b = idx.count(i), idx.count(i + 1)
        formula = (i + 1) / (dv - i) * S.dSbar / S.dS if i < dv and S.dS else None
        if a == 0 or b == 0:
            ratios.append({"i": i, "A_i": a, "A_i1": b, "exact": None, "formula": formula,
                           "factor": None, "note": "undefined"})
            continue
        exact = Fraction(a, b)
        ratios.append({"i": i, "A_i": a, "A_i1": b, "exact": exact, "formula": formula,
                       "factor": float(exact) / formula})
    report.results["degreeSwitching"] = ratios
    report.results["classes"] = idx.to_dict()
    marginal = {i: Fraction(idx.count(i), idx.total) for i in range(dv + 1)} if idx.total else {}
    binom = binomial_table(dv, gamma)
    report.results["marginal"] = [
        {"i": i, "exact": marginal[i], "binomial": binom.pmf_at(i),
         "factor": float(marginal[i]) / binom.pmf_at(i) if binom.pmf_at(i) > 0 else None}
        for i in marginal
    ]
    total_prob = sum(marginal.values(), Fraction(0))
    report.gates.append(Gate(f"class probabilities of d_S({v}) sum to 1", total_prob, Fraction(1),
                             total_prob == 1, "exact"))
    factors = [r["factor"] for r in ratios if r["factor"] is not None]
    worst = max((max(f, 1 / f) for f in factors), default=None)
    report.gates.append(Gate(f"degree-switching ratio within factor {factorGate} of leading term",
                             worst, factorGate, worst is None or worst < factorGate))

    if pair is not None:
        v1, v2 = pair
        joint = class_counts(d, S, vertices=(v1, v2), adjacent=(v1, v2), limit=limit)
        b1, b2 = binomial_table(d.degree(v1), gamma), binomial_table(d.degree(v2), gamma)
        rows = []
        probs: dict = {}
        adj_given: dict = {}
        for key, cnt in sorted(joint.classes.items()):
            i1, i2, adj = key
            probs[(i1, i2)] = probs.get((i1, i2), 0) + cnt
            if adj:
                adj_given[(i1, i2)] = adj_given.get((i1, i2), 0) + cnt
        for (i1, i2), cnt in sorted(probs.items()):
            exact = Fraction(cnt, joint.total)
            prod = b1.pmf_at(i1) * b2.pmf_at(i2)
            rows.append({"i1": i1, "i2": i2, "exact": exact, "product": prod,
                         "factor": float(exact) / prod if prod > 0 else None,
                         "adjacentGiven": Fraction(adj_given.get((i1, i2), 0), cnt)})
        co = check_condition_fixed_S(d, S, delta).co
        bo = min(co, d.Delta)
        adj_bound = bo ** 2 * d.M / S.dS ** 2
        p_adj = Fraction(sum(c for k, c in joint.classes.items() if k[2]), joint.total)
        report.results["productForm"] = rows
        report.results["adjacency"] = {"probability": p_adj, "leadingBound": adj_bound,
                                       "factor": float(p_adj) / adj_bound}
        joint_total = sum((r["exact"] for r in rows), Fraction(0))
        report.gates.append(Gate(f"joint probabilities of (d_S({v1}), d_S({v2})) sum to 1",
                                 joint_total, Fraction(1), joint_total == 1, "exact"))
    report.slackNote = {"condition": check_condition_fixed_S(d, S, delta).to_dict()}
    return report


# -- giant component ------------------------------------------------------------------------


DEFAULT_GIANT_CHECKS = (
    {"p": 0.7, "metric": "largestOverNonIsolated", "op": ">=", "value": 0.2, "minFraction": 0.95},
    {"p": 0.3, "metric": "largestOverNp", "op": "<=", "value": 0.02, "minFraction": 0.95},
    {"p": 0.7, "metric": "nonIsolatedRelError", "op": "<=", "value": 0.1, "minFraction": 0.95},
)


def ratio_sweep(d: DegreeSequence, ps: Iterable[float], eps: float = DEFAULT_EPS) -> list[dict]:
    rows = []
    for p in ps:
        dA = build_dA(d, p)
        v = giant_predicate_perc(dA, eps, d, p)
        rows.append({"p": p, "ratio": v.ratio, "hasGiant": v.hasGiant, "n0": model_stats(dA)["n0"],
                     "length": dA.length})
    return rows


def crossing_point(d: DegreeSequence, eps: float = DEFAULT_EPS, lo: float = 0.01, hi: float = 0.99,
                   grid: int = 99, tol: float = 1e-4) -> float | None:
    """p at which R(d_A)/(p^2 M) last rises through ``eps``: grid scan then bisection.

    The last upward crossing is used because for very small p the model
    sequence has only a handful of non-zero entries and R/(p^2 M) is
    dominated by a single maximal entry.
    """
    def has(p):
        return giant_predicate_perc(build_dA(d, p), eps, d, p).hasGiant

    ps = [float(p) for p in np.linspace(lo, hi, grid)]
    flags = [has(p) for p in ps]
    if not flags[-1]:
        return None
    below = [k for k, f in enumerate(flags) if not f]
    if not below:
        return ps[0]
    a, b = ps[below[-1]], ps[below[-1] + 1]
    while b - a > tol:
        mid = 0.5 * (a + b)
        if has(mid):
            b = mid
        else:
            a = mid
    return b


def _giant_trial(job) -> dict:
    d, p, params, seed = job
    _, out = percolated_sample(d, p, _sampler_cfg(params["method"], seed, params["switchSteps"]))
    comp = components(out.inducedGraph)
    return {"p": p, "seed": seed, "sizeS": out.sizeS, "largest": comp.largest,
            "nonIsolated": comp.nonIsolated, "sampler": out.sampleInfo}


def _giant_fixed_trial(job) -> dict:
    d, S, params, seed = job
    out = fixed_subset_pipeline(d, S, _sampler_cfg(params["method"], seed, params["switchSteps"]))
    comp = components(out.inducedGraph)
    return {"seed": seed, "sizeS": out.sizeS, "largest": comp.largest,
            "nonIsolated": comp.nonIsolated, "sampler": out.sampleInfo}


_OPS = {">=": lambda a, b: a >= b, "<=": lambda a, b: a <= b}


def _metric(rec: dict, name: str, expected_nonisolated: float, np_: float) -> float:
    if name == "largestOverNonIsolated":
        return rec["largest"] / rec["nonIsolated"] if rec["nonIsolated"] else 0.0
    if name == "largestOverNp":
        return rec["largest"] / np_
    if name == "nonIsolatedRelError":
        return abs(rec["nonIsolated"] - expected_nonisolated) / expected_nonisolated
    raise ValueError(f"unknown metric {name!r}")


def suite_giant(d: DegreeSequence, mode: str = "perc", eps: float = DEFAULT_EPS, trials: int = 20,
                seed: int = 0, sweep: Iterable[float] | None = None,
                crossingWindow: tuple[float, float] | None = (0.45, 0.55),
                checks: Iterable[dict] | None = None, S: VertexSubset | None = None,
                method: str = "auto", switchSteps: int | None = None,
                workers: int = 1) -> ExperimentReport:
    """Model threshold sweep plus empirical component sizes of the induced graph."""
    checks = [dict(c) for c in (DEFAULT_GIANT_CHECKS if checks is None else checks)]
    params = {"method": _resolved(d, method), "switchSteps": switchSteps}
    if mode == "fixed":
        return _suite_giant_fixed(d, S, eps, trials, seed, checks, params, workers)
    if mode != "perc":
        raise ValueError("mode must be 'perc' or 'fixed'")
    sweep = [round(0.05 * k, 10) for k in range(2, 19)] if sweep is None else [float(p) for p in sweep]
    config = {"d": _seq_digest(d), "mode": mode, "eps": eps, "trials": trials, "seed": seed,
              "sweep": sweep, "crossingWindow": crossingWindow, "checks": checks, **params}
    report = ExperimentReport("giant", config, trials)
    rows = ratio_sweep(d, sweep, eps)
    cross = crossing_point(d, eps)
    report.results["sweep"] = rows
    report.results["crossing"] = cross
    if crossingWindow is not None:
        lo, hi = crossingWindow
        report.gates.append(Gate(f"R(d_A)/(p^2 M) crosses eps={eps} inside [{lo}, {hi}]", cross,
                                 [lo, hi], cross is not None and lo <= cross <= hi))
    trial_ps = sorted({float(c["p"]) for c in checks})
    seeds = spawn_seeds(seed, trials * len(trial_ps))
    jobs = [(d, p, params, seeds[k * trials + t]) for k, p in enumerate(trial_ps) for t in range(trials)]
    recs = _map(_giant_trial, jobs, workers)
    report.perTrial = recs
    per_p = {}
    for p in trial_ps:
        dA = build_dA(d, p)
        verdict = giant_predicate_perc(dA, eps, d, p)
        expected = d.n * p - model_stats(dA)["n0"]
        sub = [r for r in recs if r["p"] == p]
        per_p[p] = (sub, expected)
        report.results.setdefault("byP", []).append({
            "p": p, "modelRatio": verdict.ratio, "modelHasGiant": verdict.hasGiant,
            "expectedNonIsolated": expected,
            "meanLargest": float(np.mean([r["largest"] for r in sub])),
            "meanNonIsolated": float(np.mean([r["nonIsolated"] for r in sub])),
        })
    for c in checks:
        sub, expected = per_p[float(c["p"])]
        op = _OPS[c["op"]]
        vals = [_metric(r, c["metric"], expected, d.n * float(c["p"])) for r in sub]
        report.gates.append(_fraction_gate(f"p={c['p']}: {c['metric']} {c['op']} {c['value']}",
                                           (op(x, c["value"]) for x in vals), c["minFraction"]))
    lines = ["p,ratio,hasGiant,meanLargest,meanNonIsolated"]
    by = {row["p"]: row for row in report.results.get("byP", [])}
    for row in rows:
        extra = by.get(row["p"])
        ml = f"{extra['meanLargest']:.6g}" if extra else ""
        mn = f"{extra['meanNonIsolated']:.6g}" if extra else ""
        lines.append(f"{row['p']:.6g},{row['ratio']:.10g},{int(row['hasGiant'])},{ml},{mn}")
    report.csv = "\n".join(lines) + "\n"
    return report


def _suite_giant_fixed(d, S, eps, trials, seed, checks, params, workers) -> ExperimentReport:
    if S is None:
        raise ValueError("fixed mode needs a subset S")
    config = {"d": _seq_digest(d), "mode": "fixed", "eps": eps, "trials": trials, "seed": seed,
              "S": {"size": S.s, "dS": S.dS}, "checks": checks, **params}
    report = ExperimentReport("giant", config, trials)
    dH = build_dH(d, S)
    verdict = giant_predicate_fixed(dH, eps, d, S)
    expected = S.s - model_stats(dH)["n0"]
    recs = _map(_giant_fixed_trial, [(d, S, params, s) for s in spawn_seeds(seed, trials)], workers)
    report.perTrial = recs
    report.results = {"model": verdict.to_dict(), "expectedNonIsolated": expected,
                      "meanLargest": float(np.mean([r["largest"] for r in recs])),
                      "meanNonIsolated": float(np.mean([r["nonIsolated"] for r in recs]))}
    for c in checks:
        op = _OPS[c["op"]]
        vals = [_metric(r, c["metric"], expected, S.s) for r in recs]
        report.gates.append(_fraction_gate(f"{c['metric']} {c['op']} {c['value']}",
                                           (op(x, c["value"]) for x in vals), c["minFraction"]))
    return report


def _seq_digest(d: DegreeSequence) -> dict:
    return {"n": d.n, "M": d.M, "M2": d.M2, "Delta": d.Delta,
            "hist": {str(k): v for k, v in d.hist.items()}}


SUITES = {
    "thm23": suite_thm23,
    "thm25": suite_thm25,
    "switching": suite_switching_exact,
    "giant": suite_giant,
}


# -- config-driven runs ----------------------------------------------------------------------


def resolve_sequence(spec: dict, base_dir: str | None = None) -> DegreeSequence:
    """Build a sequence from ``{"regular": {"n", "k"}}``, ``{"entries": [...]}``,
    ``{"hist": {k: count}}`` or ``{"file": path}``."""
    from pathlib import Path

    from .core import load_sequence

    if "regular" in spec:
        r = spec["regular"]
        return DegreeSequence(np.full(int(r["n"]), int(r["k"]), dtype=np.int64))
    if "entries" in spec:
        return DegreeSequence(spec["entries"])
    if "hist" in spec:
        return DegreeSequence(np.repeat([int(k) for k in spec["hist"]],
                                        [int(v) for v in spec["hist"].values()]))
    if "file" in spec:
        path = Path(spec["file"])
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        return load_sequence(path.read_text())
    raise ValueError(f"unrecognised sequence spec {spec!r}")


def resolve_subset(spec: dict, d: DegreeSequence, base_dir: str | None = None) -> VertexSubset:
    """``{"indices": [...]}``, ``{"file": path}`` or ``{"random": {"size", "seed"}}``."""
    from pathlib import Path

    from .core import load_subset

    if "indices" in spec:
        return VertexSubset.of(d, spec["indices"])
    if "file" in spec:
        path = Path(spec["file"])
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        return load_subset(path.read_text(), d)
    if "random" in spec:
        r = spec["random"]
        size = int(r["size"]) if "size" in r else int(round(float(r["fraction"]) * d.n))
        rng = np.random.default_rng(int(r.get("seed", 0)))
        return VertexSubset.of(d, rng.choice(d.n, size=size, replace=False) + 1)
    raise ValueError(f"unrecognised subset spec {spec!r}")


_SUITE_KEYS = {
    "thm23": {"delta", "trials", "seed", "verticesPerTrial", "tvTol", "histTol", "minFraction",
              "method", "switchSteps", "c"},
    "thm25": {"p", "delta", "trials", "seed", "histTol", "minFraction", "method", "switchSteps",
              "eps"},
    "switching": {"v", "pair", "limit", "factorGate", "delta"},
    "giant": {"mode", "eps", "trials", "seed", "sweep", "crossingWindow", "checks", "method",
              "switchSteps"},
}


def run_suite(suite: str, config: dict, workers: int = 1, base_dir: str | None = None
              ) -> ExperimentReport:
    """Run ``suite`` from a JSON-style config; unknown keys are rejected."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    allowed = _SUITE_KEYS[suite] | {"sequence", "subset"}
    extra = set(config) - allowed
    if extra:
        raise ValueError(f"unknown config keys for {suite}: {sorted(extra)}")
    d = resolve_sequence(config["sequence"], base_dir)
    kwargs = {k: v for k, v in config.items() if k not in ("sequence", "subset")}
    if "pair" in kwargs and kwargs["pair"] is not None:
        kwargs["pair"] = tuple(kwargs["pair"])
    if "crossingWindow" in kwargs and kwargs["crossingWindow"] is not None:
        kwargs["crossingWindow"] = tuple(kwargs["crossingWindow"])
    S = resolve_subset(config["subset"], d, base_dir) if "subset" in config else None
    if suite == "thm23":
        return suite_thm23(d, S, workers=workers, **kwargs)
    if suite == "thm25":
        return suite_thm25(d, workers=workers, **kwargs)
    if suite == "switching":
        return suite_switching_exact(d, S, **kwargs)
    return suite_giant(d, S=S, workers=workers, **kwargs)
