"""Batch cross-verification of all methods and properties over a range of labels."""
from __future__ import annotations

from dataclasses import dataclass, field

from .cohn import q_markov_via_trace
from .errors import OracleBoundExceededError
from .farey import ZERO_LABEL, FareyRational, labels_up_to
from .laurent import (
    ONE,
    LaurentPoly,
    is_monic,
    is_palindromic,
    is_positive,
    is_unimodal,
)
from .mutation import (
    TWO_Q,
    QMarkovTriple,
    markov_number,
    q_markov_number,
    recover_label,
    tree_triples,
    verify_equation,
)
from .snake import build_snake, weighted_match_count_bruteforce, weighted_match_count_transfer

INVARIANTS = (
    "equation",
    "palindromic",
    "monic",
    "positive",
    "unimodal",
    "label_roundtrip",
    "classical_value",
    "n_independence",
    "method_agreement",
    "bruteforce_agreement",
)


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, what: str):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(what)


def agreement(t: FareyRational, ns=(0, 1, 2), bound: int | None = None) -> dict[str, LaurentPoly | None]:
    """m_q^t by every available method; ``None`` where a method does not apply."""
    results: dict[str, LaurentPoly | None] = {"mutation": q_markov_number(t)}
    for n in ns:
        results[f"trace_n{n}"] = q_markov_via_trace(t, n)
    if t == ZERO_LABEL:
        results["transfer"] = None
        results["bruteforce"] = None
        return results
    results["transfer"] = weighted_match_count_transfer(t)
    try:
        results["bruteforce"] = weighted_match_count_bruteforce(build_snake(t), bound)
    except OracleBoundExceededError:
        results["bruteforce"] = None
    return results


def run_verification(max_denominator: int, ns=range(-2, 5), bound: int | None = None) -> dict:
    """Sweep every label with denominator <= max_denominator; return a JSON-ready report."""
    tallies = {name: Tally() for name in INVARIANTS}
    labels = labels_up_to(max_denominator)
    for t in labels:
        m = q_markov_number(t)
        tallies["palindromic"].record(is_palindromic(m), str(t))
        tallies["monic"].record(is_monic(m), str(t))
        tallies["positive"].record(is_positive(m), str(t))
        tallies["unimodal"].record(is_unimodal(m) != (m == TWO_Q), str(t))
        tallies["label_roundtrip"].record(recover_label(m) == t, str(t))
        tallies["classical_value"].record(m.eval_at_one() == markov_number(t), str(t))
        traces = {q_markov_via_trace(t, n) for n in ns}
        tallies["n_independence"].record(len(traces) == 1, str(t))
        res = agreement(t, ns=(0, 1, 2), bound=bound)
        fast = [v for k, v in res.items() if k != "bruteforce" and v is not None]
        tallies["method_agreement"].record(all(v == m for v in fast), str(t))
        if res["bruteforce"] is None:
            tallies["bruteforce_agreement"].skipped += 1
        else:
            tallies["bruteforce_agreement"].record(res["bruteforce"] == m, str(t))
    # the triples (1, 1, 1) and (1, 2_q, 1) on the bottom edge, then every vertex
    if max_denominator >= 1:
        for triple in (QMarkovTriple(ONE, ONE, ONE), QMarkovTriple(ONE, TWO_Q, ONE)):
            tallies["equation"].record(verify_equation(triple), "bottom")
    for t, lower, upper in tree_triples(max_denominator):
        tallies["equation"].record(verify_equation(lower) and verify_equation(upper), str(t))
    report = {
        "max_denominator": max_denominator,
        "labels": len(labels),
        "invariants": {
            name: {
                "passed": tl.passed,
                "failed": tl.failed,
                "skipped": tl.skipped,
                "failures": tl.failures,
            }
            for name, tl in tallies.items()
        },
    }
    report["ok"] = all(tl.failed == 0 for tl in tallies.values())
    return report

