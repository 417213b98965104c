"""Re-check every published result by exhaustive search.

Expected values live in the ``EXPECTED`` table; each claim runner compares
fresh computation against it.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .construct import (
    check_cycle_out_fan_not_cordial,
    check_cycle_out_wheel_not_cordial,
    label_5_tournament,
    orient_fan,
    orient_wheel,
    wheel_case,
    WheelCaseTag,
)
from .decide import (
    brute_force_orientable_oracle,
    is_23_orientable,
    labelled_tournament_cordiality,
    max_arcs,
    non_closure_witnesses,
    tournament_census,
    verify_extremal_bound,
)
from .graphs import (
    Digraph,
    Graph,
    connected_graph_classes,
    enumerate_tournaments,
    gen_fan,
    gen_parallel_edges_graph,
    gen_wheel,
    reverse_digraph,
)
from .labelling import (
    Scope,
    VertexLabelling,
    complement_labelling,
    lambda_of,
)
from .quasigroup import enumerate_quasigroups, zk_minus_table

EXPECTED = {
    "tournaments": {
        3: {"cordial": 8, "total": 8, "classes": 2},
        4: {"cordial": 48, "total": 64, "classes": 4, "noncordial_scores": [(2, 2, 2, 0), (3, 1, 1, 1)]},
        5: {"cordial": 1024, "total": 1024, "classes": 12},
        6: {"cordial": 0, "total": 32768, "classes": 56},
    },
    "five-tour": {"lambda": (3, 3, 4), "count": 1024},
    "lab": {"samples": 1000, "max_n": 7, "seed": 20240101},
    "rimarcs": {"lengths": range(3, 13)},
    "wheel": {
        "non_orientable_upto_20": [10],
        "non_orientable_upto_30": [10, 22],
        "construct_range": range(4, 21),
    },
    "cyclic-out": {"wheels": range(4, 15), "fans": range(5, 15)},
    "fan": {"range": range(4, 21), "n10_lambda": (6, 6, 5)},
    "example-small": {
        ("X6", "nonisolated"): False,
        ("X6", "all"): False,
        ("X7", "nonisolated"): False,
        ("X7", "all"): True,
    },
    "extremal": {6: {"bound": 14, "subsets": 1}, 7: {"bound": 18, "subsets": 210}},
    "oracle": {"max_order": 5},
    "quasigroup": {"order2_tables": 2},
    "non-closure": {"pattern": [False, True, False]},
}


@dataclass(frozen=True)
class Claim:
    id: str
    result: str
    instances: str
    run: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class HarnessRow:
    id: str
    result: str
    instances: str
    passed: bool
    runtime: float
    detail: str

    def to_dict(self) -> dict:
        return {
            "claim": self.id,
            "result": self.result,
            "instances": self.instances,
            "passed": self.passed,
            "runtime_s": round(self.runtime, 3),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class HarnessReport:
    rows: list[HarnessRow]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "claims": [r.to_dict() for r in self.rows]}


def _tournaments() -> tuple[bool, str]:
    problems = []
    for n, exp in EXPECTED["tournaments"].items():
        census = tournament_census(n)
        direct = int(labelled_tournament_cordiality(n).sum())
        got = (census.cordial, census.total, len(census.rows), direct)
        if got != (exp["cordial"], exp["total"], exp["classes"], exp["cordial"]):
            problems.append(f"n={n}: census/total/classes/direct={got}")
        if "noncordial_scores" in exp:
            scores = sorted(r.out_degrees for r in census.rows if not r.cordial)
            if scores != sorted(exp["noncordial_scores"]):
                problems.append(f"n={n}: non-cordial scores {scores}")
    return not problems, "; ".join(problems) or "all counts exact"


def _five_tour() -> tuple[bool, str]:
    exp = EXPECTED["five-tour"]
    good = sum(label_5_tournament(t).lam == exp["lambda"] for t in enumerate_tournaments(5))
    return good == exp["count"], f"{good}/{exp['count']} constructions give {exp['lambda']}"


def random_digraph(rng: random.Random, max_n: int) -> tuple[Digraph, VertexLabelling]:
    n = rng.randint(1, max_n)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.5]
    f = VertexLabelling(tuple(rng.randint(0, 1) for _ in range(n)))
    return Digraph(n, frozenset(arcs)), f


def _lab() -> tuple[bool, str]:
    exp = EXPECTED["lab"]
    rng = random.Random(exp["seed"])
    bad = 0
    for _ in range(exp["samples"]):
        d, f = random_digraph(rng, exp["max_n"])
        a, b, c = lambda_of(d, f)
        fc = complement_labelling(f)
        r = reverse_digraph(d)
        if not (lambda_of(r, f) == (b, a, c) and lambda_of(d, fc) == (b, a, c) and lambda_of(r, fc) == (a, b, c)):
            bad += 1
    return bad == 0, f"{exp['samples'] - bad}/{exp['samples']} samples satisfy all three identities"


def _rimarcs() -> tuple[bool, str]:
    checked = 0
    for length in EXPECTED["rimarcs"]["lengths"]:
        for mask in range(1 << length):
            changes = sum((mask >> i & 1) != (mask >> ((i + 1) % length) & 1) for i in range(length))
            if changes % 2:
                return False, f"odd count for length {length}, mask {mask:b}"
            checked += 1
    return True, f"{checked} labelled cycles, all even"


def _wheel() -> tuple[bool, str]:
    exp = EXPECTED["wheel"]
    bad20 = [n for n in range(4, 21) if not is_23_orientable(gen_wheel(n)).decision]
    bad30 = bad20 + [n for n in range(21, 31) if not is_23_orientable(gen_wheel(n)).decision]
    missing = []
    for n in exp["construct_range"]:
        excluded = wheel_case(n) is WheelCaseTag.EXCLUDED
        result = orient_wheel(n)
        if excluded != (result is None) or (result is not None and not result.validated):
            missing.append(n)
    ok = bad20 == exp["non_orientable_upto_20"] and bad30 == exp["non_orientable_upto_30"] and not missing
    return ok, f"non-orientable <=20: {bad20}; <=30: {bad30}; construction failures: {missing}"


def _cyclic_out() -> tuple[bool, str]:
    exp = EXPECTED["cyclic-out"]
    problems = []
    for n in exp["wheels"]:
        try:
            check_cycle_out_wheel_not_cordial(n)
        except Exception as exc:  # collected, not raised
            problems.append(f"wheel n={n}: {exc}")
    for n in exp["fans"]:
        try:
            check_cycle_out_fan_not_cordial(n)
        except Exception as exc:
            problems.append(f"fan n={n}: {exc}")
    return not problems, "; ".join(problems) or "all non-cordial"


def _fan() -> tuple[bool, str]:
    exp = EXPECTED["fan"]
    failures = []
    for n in exp["range"]:
        try:
            if not orient_fan(n).validated:
                failures.append(n)
        except Exception:
            failures.append(n)
    lam10 = tuple(orient_fan(10).lam)
    ok = not failures and lam10 == exp["n10_lambda"]
    return ok, f"failures: {failures}; n=10 lambda {lam10}"


def _example_small() -> tuple[bool, str]:
    graphs = {"X6": gen_parallel_edges_graph(6), "X7": gen_parallel_edges_graph(7)}
    got = {}
    for (name, scope), want in EXPECTED["example-small"].items():
        got[(name, scope)] = is_23_orientable(graphs[name], scope).decision
    ok = got == EXPECTED["example-small"]
    return ok, ", ".join(f"{k[0]}/{k[1]}={v}" for k, v in got.items())


def _extremal() -> tuple[bool, str]:
    problems = []
    notes = []
    for n, exp in EXPECTED["extremal"].items():
        if max_arcs(n) != exp["bound"]:
            problems.append(f"max_arcs({n})={max_arcs(n)}")
            continue
        report = verify_extremal_bound(n)
        notes.append(
            f"n={n}: bound {report.bound}, witness cordial={report.witness_cordial}, "
            f"{len(report.orientable_above_bound)}/{report.subsets_examined} larger subgraphs orientable"
        )
        if report.subsets_examined != exp["subsets"] or not report.confirmed:
            problems.append(f"n={n} not confirmed")
    return not problems, "; ".join(notes + problems)


def oracle_instances() -> list[Graph]:
    graphs = [g for n in range(1, EXPECTED["oracle"]["max_order"] + 1) for g in connected_graph_classes(n)]
    graphs += [gen_wheel(n) for n in (4, 5, 6)] + [gen_fan(n) for n in (4, 5, 6)]
    graphs += [gen_parallel_edges_graph(6), gen_parallel_edges_graph(7)]
    return graphs


def _oracle() -> tuple[bool, str]:
    mismatches = []
    instances = oracle_instances()
    for g in instances:
        for scope in Scope:
            if is_23_orientable(g, scope).decision != brute_force_orientable_oracle(g, scope):
                mismatches.append((g.n, g.sorted_edges(), scope.value))
    return not mismatches, f"{len(instances)} graphs x 2 scopes; mismatches: {mismatches}"


def _quasigroup() -> tuple[bool, str]:
    order2 = list(enumerate_quasigroups(2))
    t3 = zk_minus_table(3)
    pairs_ok = all((t3.op(a, b) == t3.op(b, a)) == (a == b) for a in range(3) for b in range(3))
    ok = len(order2) == EXPECTED["quasigroup"]["order2_tables"] and all(
        t.is_commutative() for t in order2
    ) and pairs_ok
    return ok, f"{len(order2)} order-2 tables commutative; Z3 minus commutes only on the diagonal: {pairs_ok}"


def _non_closure() -> tuple[bool, str]:
    report = non_closure_witnesses()
    ok = report.cordial == EXPECTED["non-closure"]["pattern"] and report.deletion_ok and report.contraction_ok
    return ok, f"cordial pattern {report.cordial}; deletion and contraction recover each step"


CLAIMS = [
    Claim("tournaments", "tournament classification", "all labelled n=3..6", _tournaments),
    Claim("five-tour", "every 5-tournament is cordial (out-degree pair construction)", "1024 tournaments", _five_tour),
    Claim("lab", "reversal/complement symmetry of lambda", "1000 random digraphs, n<=7", _lab),
    Claim("rimarcs", "labelled cycles have an even number of bichromatic edges", "lengths 3..12, all labellings", _rimarcs),
    Claim("wheel", "wheel orientability iff not (n=2k, k odd, 3 | 2n-2)", "n=4..30", _wheel),
    Claim("cyclic-out", "cycle-out wheels and fans are not cordial", "wheels 4..14, fans 5..14", _cyclic_out),
    Claim("fan", "every fan has a cordial orientation", "n=4..20", _fan),
    Claim("example-small", "three parallel edges: X6 not orientable, X7 depends on scope", "X6, X7, both scopes", _example_small),
    Claim("extremal", "closed-form maximum arc count", "n=6,7", _extremal),
    Claim("oracle", "orientability reduces to the monochromatic-edge count", "connected graphs n<=5, W4..W6, F4..F6, X6, X7", _oracle),
    Claim("quasigroup", "two-element quasigroups are abelian; Z3 minus is not", "orders 2 and 3", _quasigroup),
    Claim("non-closure", "cordiality not closed under vertex deletion or arc contraction", "T43 chain", _non_closure),
]


def _run(claim: Claim) -> HarnessRow:
    start = time.perf_counter()
    try:
        passed, detail = claim.run()
    except Exception as exc:  # one failing claim must not mask the others
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return HarnessRow(claim.id, claim.result, claim.instances, passed, time.perf_counter() - start, detail)


def run_claims(ids: list[str] | None = None, threads: int = 1) -> HarnessReport:
    if ids:
        unknown = set(ids) - {c.id for c in CLAIMS}
        if unknown:
            raise ValueError(f"unknown claim ids: {sorted(unknown)}")
    selected = [c for c in CLAIMS if not ids or c.id in ids]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        rows = list(pool.map(_run, selected))
    return HarnessReport(rows)
