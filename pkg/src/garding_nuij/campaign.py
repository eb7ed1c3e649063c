"""Verification campaigns, JSON certificates and witness re-checking."""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from .generators import random_coeff_sequence, random_hyperbolic, random_point, random_word
from .hyperbolicity import HyperbolicityVerdict, SamplingConfig, Status, Witness, test_hyperbolic
from .nuij import (
    CoeffSequence,
    build_Pas,
    build_Qa,
    counterexample_reproduces,
    expand_word,
    gns_check,
    restrict_sequence,
    verify_symbol_identity,
)
from .parsing import parse_poly
from .poly import MultiPoly, UniPoly, render, variable_names

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
DEFAULT_S_SWEEP = tuple(Fraction(s) for s in ("-2", "-1", "-1/2", "1/2", "1", "2"))


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fractions_json(values: Sequence[Fraction]) -> List[str]:
    return [fraction_str(Fraction(v)) for v in values]


def fractions_from_json(values: Sequence[str]) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def witness_to_json(p: MultiPoly, w: Witness) -> Dict[str, Any]:
    return {
        "polynomial": render(p),
        "n": p.n,
        "base": fractions_json(w.base),
        "direction": fractions_json(w.direction),
        "restriction": fractions_json(w.restriction.coeffs),
    }


def witness_from_json(block: Dict[str, Any]) -> Tuple[MultiPoly, Witness]:
    p = parse_poly(block["polynomial"], int(block["n"]))
    w = Witness(
        fractions_from_json(block["base"]),
        fractions_from_json(block["direction"]),
        UniPoly(fractions_from_json(block["restriction"])),
    )
    return p, w


def verdict_to_json(p: MultiPoly, v: HyperbolicityVerdict) -> Dict[str, Any]:
    return {
        "status": v.status.value,
        "samples_checked": v.samples_checked,
        "rejection_reason": v.rejection_reason.value if v.rejection_reason else None,
        "witness": witness_to_json(p, v.witness) if v.witness else None,
    }


def sequence_to_json(a: CoeffSequence) -> List[str]:
    names = variable_names(a.n)
    return [render(ak, names) for ak in a.lifted()]


@dataclass
class CampaignReport:
    config: Dict[str, Any] = field(default_factory=dict)
    trials: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, int] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @property
    def hard_failures(self) -> int:
        return self.summary.get("hard_failures", 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "config": self.config,
            "summary": self.summary,
            "trials": self.trials,
        }


SUMMARY_KEYS = (
    "trials",
    "forward_checks",
    "forward_not_hyperbolic",
    "converse_not_hyperbolic",
    "converse_probably_hyperbolic",
    "converse_counterexamples_reproduced",
    "symbol_checks",
    "symbol_failures",
    "hard_failures",
)


def render_report(report: CampaignReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def parse_report(text: str) -> CampaignReport:
    data = json.loads(text)
    return CampaignReport(
        config=data.get("config", {}),
        trials=data.get("trials", []),
        summary=data.get("summary", {}),
        schema_version=data.get("schema_version", SCHEMA_VERSION),
    )


def _run_trial(
    index: int,
    seed: int,
    m_range: Tuple[int, int],
    n_range: Tuple[int, int],
    s_values: Sequence[Fraction],
    cfg: SamplingConfig,
    tally: Dict[str, int],
) -> Dict[str, Any]:
    rng = random.Random(f"campaign:{seed}:{index}")
    m = rng.randint(*m_range)
    n = rng.randint(*n_range)
    e_n = [0] * (n - 1) + [1]
    hard = 0

    # forward: sequences from operator words must preserve hyperbolicity
    word = random_word(m, n, rng.getrandbits(64))
    a = expand_word(word, m)
    q_a = build_Qa(a)
    gv = gns_check(a, cfg)
    p = random_hyperbolic(m, n, rng.getrandbits(64))
    forward: Dict[str, Any] = {
        "word": list(word.names()),
        "sequence": sequence_to_json(a),
        "gns": verdict_to_json(q_a, gv),
        "polynomial": render(p),
        "s_sweep": [],
    }
    tally["forward_checks"] += 1
    if gv.is_refuted:
        tally["forward_not_hyperbolic"] += 1
        hard += 1
    for s in s_values:
        pas = build_Pas(p, a, s)
        v = test_hyperbolic(pas, e_n, cfg)
        tally["forward_checks"] += 1
        if v.status is not Status.PROBABLY_HYPERBOLIC:
            tally["forward_not_hyperbolic"] += v.is_refuted
            hard += 1
        forward["s_sweep"].append({"s": fraction_str(s), "verdict": verdict_to_json(pas, v)})

    # converse: arbitrary sequences; a refutation must come with the x_n^m counterexample
    b = random_coeff_sequence(m, n, rng.getrandbits(64))
    q_b = build_Qa(b)
    cv = gns_check(b, cfg)
    reproduced: Optional[bool] = None
    if cv.is_refuted:
        tally["converse_not_hyperbolic"] += 1
        reproduced = counterexample_reproduces(b, cv)
        if reproduced:
            tally["converse_counterexamples_reproduced"] += 1
        else:
            hard += 1
    else:
        tally["converse_probably_hyperbolic"] += 1
    converse = {
        "sequence": sequence_to_json(b),
        "gns": verdict_to_json(q_b, cv),
        "counterexample_reproduced": reproduced,
    }

    # symbol identity at a random point of the first n-1 coordinates
    v_point = random_point(n - 1, cfg.coordinate_bound, rng)
    symbol: Dict[str, Any] = {"point": fractions_json(v_point)}
    for label, seq in (("forward", a), ("converse", b)):
        ok = bool(verify_symbol_identity(restrict_sequence(seq, v_point, 1), m))
        tally["symbol_checks"] += 1
        if not ok:
            tally["symbol_failures"] += 1
            hard += 1
        symbol[label] = ok

    tally["hard_failures"] += hard
    if hard:
        log.warning("trial %d: %d hard failure(s)", index, hard)
    return {
        "index": index,
        "m": m,
        "n": n,
        "forward": forward,
        "converse": converse,
        "symbol": symbol,
        "hard_failures": hard,
    }


def verify_theorem_campaign(
    trials: int,
    m_range: Tuple[int, int],
    n_range: Tuple[int, int],
    s_values: Sequence[Fraction] = DEFAULT_S_SWEEP,
    cfg: SamplingConfig = SamplingConfig(),
    seed: int = 0,
) -> CampaignReport:
    """Run ``trials`` forward / converse / symbol checks; see the README for the record layout."""
    if m_range[0] > m_range[1] or n_range[0] > n_range[1]:
        raise ValueError("ranges must be non-empty")
    if m_range[0] < 1 or n_range[0] < 2:
        raise ValueError("need m >= 1 and n >= 2")
    s_values = [Fraction(s) for s in s_values]
    tally = dict.fromkeys(SUMMARY_KEYS, 0)
    tally["trials"] = trials
    records = [
        _run_trial(i, seed, m_range, n_range, s_values, cfg, tally) for i in range(trials)
    ]
    config = {
        "seed": seed,
        "trials": trials,
        "m_range": list(m_range),
        "n_range": list(n_range),
        "s_sweep": fractions_json(s_values),
        "sampling": {
            "sample_count": cfg.sample_count,
            "coordinate_bound": cfg.coordinate_bound,
            "include_grid": cfg.include_grid,
            "seed": cfg.seed,
        },
    }
    return CampaignReport(config=config, trials=records, summary=tally)


def iter_witnesses(data: Any, path: str = "$") -> Iterator[Tuple[str, Dict[str, Any]]]:
    """Every non-null ``witness`` block in a JSON document, with its path."""
    if isinstance(data, dict):
        for key, value in data.items():
            sub = f"{path}.{key}"
            if key == "witness" and isinstance(value, dict):
                yield sub, value
            else:
                yield from iter_witnesses(value, sub)
    elif isinstance(data, list):
        for i, value in enumerate(data):
            yield from iter_witnesses(value, f"{path}[{i}]")


def recheck_document(data: Any) -> List[Tuple[str, bool]]:
    """Re-verify each embedded witness from its own polynomial, base point and direction."""
    results = []
    for path, block in iter_witnesses(data):
        try:
            p, w = witness_from_json(block)
            ok = w.recheck(p)
        except (KeyError, TypeError, ValueError) as exc:
            log.error("%s: malformed witness (%s)", path, exc)
            ok = False
        results.append((path, ok))
    return results
