"""Batch experiments: Monte Carlo unimodality, exhaustive real-rootedness
sweeps, classical polynomial identities, and the DOM distinction.

Every experiment returns a JSON-serialisable report dict. Reports are a pure
function of the configuration apart from ``elapsed_ms``.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .counting import (
    HEREDITARY_LIMIT,
    chromatic_coeffs,
    clique_coeffs,
    coefficients,
    coeffs_brute,
    coeffs_hereditary,
    independence_coeffs,
    matching_coeffs,
)
from .errors import CeilingError, HypothesisError
from .graph import (
    MAX_ENUMERATE,
    all_labelled_graphs,
    complement,
    complete_graph,
    contains_induced,
    empty_graph,
    enumerate_all_graphs,
    line_graph,
    random_gnp,
    star_graph,
    write_graph6,
)
from .poly import ExactPolynomial, binomial_expansion
from .properties import (
    augmented,
    is_member,
    is_nontrivial,
    parse_property,
    satisfies_real_rooted_hypothesis,
)
from .realroots import is_real_rooted, remainder_diagnostic
from .shape import (
    central_index,
    cohereditary_inequalities,
    is_log_concave,
    is_unimodal,
    newton_chain_check,
    star_condition,
)

CONVENTIONS = {"null_graph_in_hereditary_properties": True}


@dataclass
class ExperimentConfig:
    experiment: str
    property: str = ""
    n_values: list[int] = field(default_factory=list)
    samples: int = 200
    p: Fraction = Fraction(1, 2)
    seed: int = 1
    output_format: str = "json"
    output_path: str | None = None
    workers: int = 1
    exhaustive: bool = False
    threshold: Fraction = Fraction(99, 100)

    def echo(self) -> dict:
        d = asdict(self)
        d["p"] = str(self.p)
        d["threshold"] = str(self.threshold)
        for key in ("output_path", "output_format", "workers"):
            d.pop(key)
        return d


def _report(cfg: ExperimentConfig, per_n: list[dict], passed: bool, start: float, **extra) -> dict:
    rep = {
        "experiment": cfg.experiment,
        "config": cfg.echo(),
        "per_n": per_n,
        "passed": passed,
        "conventions": CONVENTIONS,
        "version": __version__,
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
    }
    rep.update(extra)
    return rep


def dumps(report: dict, timing: bool = True) -> str:
    if not timing:
        report = {k: v for k, v in report.items() if k != "elapsed_ms"}
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _pmap(fn, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# ---------------------------------------------------------------------------
# Monte Carlo unimodality
# ---------------------------------------------------------------------------

def evaluate_unimodal_sample(g6: str, prop: str) -> dict:
    """All per-graph checks of the unimodality experiment for one graph."""
    from .graph import parse_graph6

    g = parse_graph6(g6)
    spec = parse_property(prop)
    seq = coefficients(g, spec).values
    uni, modes = is_unimodal(seq)
    k = central_index(g.n)
    ineq = cohereditary_inequalities(seq)
    newton = newton_chain_check(seq, lambda: is_real_rooted(ExactPolynomial(seq)))
    return {
        "graph6": g6,
        "unimodal": uni,
        "mode": uni and k in modes,
        "lemma21": ineq.lemma21_pass,
        "ratio": ineq.ratio_pass,
        "star": star_condition(seq, k),
        "newton": newton.consistent,
        "coefficients": list(seq),
    }


def _mc_job(args) -> dict:
    n, p, seed, idx, prop = args
    return evaluate_unimodal_sample(write_graph6(random_gnp(n, p, seed, idx)), prop)


def _exhaustive_job(args) -> dict:
    g6, prop = args
    return evaluate_unimodal_sample(g6, prop)


def exp_mc_unimodal(cfg: ExperimentConfig) -> dict:
    start = time.perf_counter()
    spec = parse_property(cfg.property)
    if not (spec.is_cohereditary or spec.is_augmented):
        raise HypothesisError(
            f"{cfg.property}: the unimodality experiment needs a co-hereditary "
            "(or upward-monotone augmented) property"
        )
    if not is_nontrivial(spec):
        raise HypothesisError(f"{cfg.property} is a trivial property")
    if cfg.samples < 1:
        raise ValueError("samples must be >= 1")
    if not 0 <= cfg.p <= 1:
        raise ValueError("p must lie in [0, 1]")
    for n in cfg.n_values:
        limit = 6 if cfg.exhaustive else HEREDITARY_LIMIT
        if not 0 <= n <= limit:
            raise CeilingError(f"n={n} outside 0..{limit}")
    per_n = []
    passed = True
    for n in cfg.n_values:
        if cfg.exhaustive:
            jobs = [(write_graph6(g), cfg.property) for g in all_labelled_graphs(n)]
            rows = _pmap(_exhaustive_job, jobs, cfg.workers)
        else:
            jobs = [(n, cfg.p, cfg.seed, i, cfg.property) for i in range(cfg.samples)]
            rows = _pmap(_mc_job, jobs, cfg.workers)
        total = len(rows)
        counts = {key: sum(r[key] for r in rows) for key in ("unimodal", "mode", "lemma21", "ratio", "star", "newton")}
        failures = sorted({r["graph6"] for r in rows if not (r["mode"] and r["lemma21"] and r["ratio"] and r["newton"])})
        ok = (
            Fraction(counts["mode"], total) >= cfg.threshold
            and counts["lemma21"] == total
            and counts["ratio"] == total
            and counts["newton"] == total
        )
        passed &= ok
        per_n.append({
            "n": n,
            "total": total,
            "pass_unimodal": counts["unimodal"],
            "pass_mode": counts["mode"],
            "pass_lemma21": counts["lemma21"],
            "pass_ratio": counts["ratio"],
            "pass_star": counts["star"],
            "pass_newton": counts["newton"],
            "fraction_mode": str(Fraction(counts["mode"], total)),
            "passed": ok,
            "failures": failures,
        })
    return _report(cfg, per_n, passed, start, exploratory=spec.is_augmented, property=spec.describe())


# ---------------------------------------------------------------------------
# real-rootedness sweep
# ---------------------------------------------------------------------------

def evaluate_sweep_graph(g6: str, prop: str) -> dict:
    from .graph import parse_graph6

    g = parse_graph6(g6)
    spec = parse_property(prop)
    seq = coeffs_hereditary(g, spec)
    poly = seq.polynomial()
    member = is_member(spec, g)
    rr = is_real_rooted(poly)
    out = {
        "graph6": g6,
        "member": member,
        "real_rooted": rr,
        "match": rr == member,
        "newton": newton_chain_check(seq.values, rr).consistent,
        "member_poly": None,
        "diagnostic": None,
    }
    if member:
        out["member_poly"] = poly == binomial_expansion(g.n)
    else:
        out["diagnostic"] = remainder_diagnostic(g, spec).passed
    return out


def exp_realrooted_sweep(cfg: ExperimentConfig) -> dict:
    start = time.perf_counter()
    spec = parse_property(cfg.property)
    if not satisfies_real_rooted_hypothesis(spec):
        raise HypothesisError(
            f"{cfg.property}: the real-rootedness sweep needs a hereditary property containing "
            "a graph that is neither a clique nor edgeless; independence and clique "
            "polynomials are excluded because they can be real-rooted outside the property"
        )
    for n in cfg.n_values:
        if not 0 <= n <= MAX_ENUMERATE:
            raise CeilingError(f"n={n} outside 0..{MAX_ENUMERATE}")
    per_n = []
    passed = True
    for n in cfg.n_values:
        jobs = [(write_graph6(g), cfg.property) for g in enumerate_all_graphs(n)]
        rows = _pmap(_sweep_job, jobs, cfg.workers)
        members = [r for r in rows if r["member"]]
        others = [r for r in rows if not r["member"]]
        failures = sorted(
            r["graph6"]
            for r in rows
            if not r["match"] or not r["newton"] or r["member_poly"] is False or r["diagnostic"] is False
        )
        passed &= not failures
        per_n.append({
            "n": n,
            "total": len(rows),
            "members": len(members),
            "real_rooted": sum(r["real_rooted"] for r in rows),
            "mismatches": sum(not r["match"] for r in rows),
            "pass_member_poly": sum(bool(r["member_poly"]) for r in members),
            "pass_diagnostic": sum(bool(r["diagnostic"]) for r in others),
            "pass_newton": sum(r["newton"] for r in rows),
            "failures": failures,
        })
    return _report(cfg, per_n, passed, start, property=spec.describe())


def _sweep_job(args) -> dict:
    return evaluate_sweep_graph(*args)


# ---------------------------------------------------------------------------
# classical identities
# ---------------------------------------------------------------------------

CLAW = star_graph(3)
IDENTITY_CHECKS = (
    "matching_real_rooted",
    "line_graph_identity",
    "clique_complement",
    "claw_free_real_rooted",
    "chromatic_log_concave",
    "chromatic_alternating",
    "newton_chain",
)


def _strip(seq) -> list[int]:
    out = list(seq)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def evaluate_identities(g6: str) -> dict:
    """Per-graph results; ``None`` where a check does not apply."""
    from .graph import parse_graph6

    g = parse_graph6(g6)
    res: dict[str, bool | None] = dict.fromkeys(IDENTITY_CHECKS)
    newton_ok = True

    def newton(seq, rr=None):
        nonlocal newton_ok
        seq = list(seq)
        verdict = newton_chain_check(seq, rr if rr is not None else (lambda: is_real_rooted(ExactPolynomial(seq))))
        newton_ok &= verdict.consistent

    m = matching_coeffs(g).values
    m_rr = is_real_rooted(ExactPolynomial(m))
    res["matching_real_rooted"] = m_rr
    newton(m, m_rr)

    if g.n <= 6:
        lg = line_graph(g)
        res["line_graph_identity"] = _strip(independence_coeffs(lg).values) == _strip(m)

    ind = independence_coeffs(g).values
    cl = clique_coeffs(g).values
    res["clique_complement"] = cl == independence_coeffs(complement(g)).values
    newton(ind)
    newton(cl)

    if not contains_induced(g, CLAW):
        i_rr = is_real_rooted(ExactPolynomial(ind))
        res["claw_free_real_rooted"] = i_rr
        newton(ind, i_rr)

    chrom = chromatic_coeffs(g)
    absolute = [abs(c) for c in chrom]
    res["chromatic_log_concave"] = is_log_concave(absolute)
    nz = [c for c in chrom if c]
    res["chromatic_alternating"] = bool(nz) and nz[-1] == 1 and all(a * b < 0 for a, b in zip(nz, nz[1:]))
    newton(absolute)

    res["newton_chain"] = newton_ok
    return {"graph6": g6, **res}


def exp_identity_suite(cfg: ExperimentConfig) -> dict:
    start = time.perf_counter()
    for n in cfg.n_values:
        if not 0 <= n <= MAX_ENUMERATE:
            raise CeilingError(f"n={n} outside 0..{MAX_ENUMERATE}")
    per_n = []
    passed = True
    for n in cfg.n_values:
        rows = _pmap(evaluate_identities, [write_graph6(g) for g in enumerate_all_graphs(n)], cfg.workers)
        entry: dict = {"n": n, "total": len(rows)}
        failures = []
        for check in IDENTITY_CHECKS:
            applicable = [r for r in rows if r[check] is not None]
            entry[f"{check}_checked"] = len(applicable)
            entry[f"{check}_passed"] = sum(bool(r[check]) for r in applicable)
            failures += [f"{check}:{r['graph6']}" for r in applicable if not r[check]]
        entry["failures"] = sorted(failures)
        passed &= not failures
        per_n.append(entry)
    return _report(cfg, per_n, passed, start)


# ---------------------------------------------------------------------------
# DOM distinction
# ---------------------------------------------------------------------------

def exp_dom_distinction(cfg: ExperimentConfig) -> dict:
    """No induced-subgraph property reproduces the domination counts.

    c_1 of any such property counts single vertices, which all induce K_1,
    so c_1(E_2) = c_1(K_2): 2 if K_1 is in the property, 0 otherwise.
    """
    start = time.perf_counter()
    dom = augmented("dom")
    k2, e2 = complete_graph(2), empty_graph(2)
    dom_k2 = coeffs_brute(k2, dom)[1]
    dom_e2 = coeffs_brute(e2, dom)[1]
    case_k1_in = {"c1_E2": 2, "c1_K2": 2, "contradicts": 2 != dom_e2}
    case_k1_out = {"c1_E2": 0, "c1_K2": 0, "contradicts": 0 != dom_k2}
    no_property = case_k1_in["contradicts"] and case_k1_out["contradicts"]
    passed = dom_k2 == 2 and dom_e2 == 0 and no_property
    per_n = [{
        "n": 2,
        "total": 2,
        "c1_dom_K2": dom_k2,
        "c1_dom_E2": dom_e2,
        "case_K1_in_A": case_k1_in,
        "case_K1_not_in_A": case_k1_out,
        "no_property_reproduces_dom": no_property,
        "failures": [] if passed else ["dom-distinction"],
    }]
    return _report(cfg, per_n, passed, start)


# ---------------------------------------------------------------------------
# JLR table
# ---------------------------------------------------------------------------

def exp_jlr_table(cfg: ExperimentConfig, h) -> dict:
    from .randommodel import half_set_union_bound, jlr_bound

    start = time.perf_counter()
    per_n = []
    for n in cfg.n_values:
        b = jlr_bound(h, n, cfg.p)
        row = {
            "n": n,
            "total": 1,
            "exponent_sum": str(b.exponent_sum),
            "log2_bound": str(b.log2_probability_bound),
            "probability_bound": f"{b.probability_bound():.6g}",
            "failures": [],
        }
        if (n + 1) // 2 >= h.n:
            u = half_set_union_bound(h, n, cfg.p)
            row["half_set_k"] = u.k
            row["half_set_log2"] = f"{u.log2():.6f}"
            row["half_set_below_one"] = u.less_than_one()
        per_n.append(row)
    return _report(cfg, per_n, True, start, pattern=write_graph6(h))


def jlr_monte_carlo(h, n: int, p, samples: int, seed: int) -> dict:
    """Empirical ``P(X = 0)`` for copies of h in G(n, p) against the bound.

    Passes when the empirical frequency is at most the bound plus three
    binomial standard errors.
    """
    import math

    from .graph import has_subgraph
    from .randommodel import jlr_bound

    p = Fraction(p)
    misses = sum(not has_subgraph(random_gnp(n, p, seed, i), h) for i in range(samples))
    freq = misses / samples
    bound = jlr_bound(h, n, p).probability_bound()
    se = math.sqrt(freq * (1 - freq) / samples)
    return {
        "pattern": write_graph6(h),
        "n": n,
        "samples": samples,
        "empirical": freq,
        "bound": bound,
        "standard_error": se,
        "passed": freq <= bound + 3 * se,
    }
