"""Explicit cordial labellings and orientations for tournaments, wheels and fans.

Every constructor re-checks its output with the labelling primitives and
raises :class:`ConstructionError` with its trace on failure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .decide import FalsifiedClaimError, is_23_cordial
from .graphs import (
    Digraph,
    gen_cycle_out_fan,
    gen_cycle_out_wheel,
    gen_fan,
    gen_wheel,
)
from .labelling import (
    LambdaTriple,
    VertexLabelling,
    enumerate_friendly_labellings,
    is_cordial_triple,
    is_friendly,
    lambda_of,
    lambda_split,
)


class ConstructionError(RuntimeError):
    def __init__(self, message: str, trace: dict):
        super().__init__(f"{message}; trace={trace}")
        self.trace = trace


class WheelCaseTag(str, enum.Enum):
    C11 = "1.1"
    C12 = "1.2"
    C21 = "2.1"
    C22 = "2.2"
    C23 = "2.3"
    C31 = "3.1"
    C32 = "3.2"
    C33 = "3.3"
    EXCLUDED = "excluded"


@dataclass(frozen=True)
class ConstructionResult:
    digraph: Digraph
    labelling: VertexLabelling
    lam: LambdaTriple
    validated: bool
    case: WheelCaseTag | None = None
    trace: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "decision": self.validated,
            "witness": {
                "labelling": list(self.labelling.labels),
                "orientation": [list(a) for a in self.digraph.sorted_arcs()],
                "lambda": self.lam.as_dict(),
            },
            "search_space": 1,
            "case": None if self.case is None else self.case.value,
        }


def _finish(
    d: Digraph, f: VertexLabelling, case: WheelCaseTag | None, trace: dict
) -> ConstructionResult:
    lam = lambda_of(d, f)
    ok = is_friendly(f, d) and is_cordial_triple(lam)
    if not ok:
        raise ConstructionError(f"construction produced non-cordial lambda {tuple(lam)}", trace)
    return ConstructionResult(d, f, lam, ok, case, trace)


def label_5_tournament(t: Digraph) -> ConstructionResult:
    """Label 1 the first vertex pair whose out-degrees sum to 4, the rest 0.

    Such a pair sends exactly three arcs into the 0-side and receives three,
    giving lambda (3, 3, 4).
    """
    if t.n != 5 or not t.is_tournament():
        raise ValueError("expected a 5-vertex tournament")
    deg = t.out_degrees()
    pair = next(((u, w) for u in range(5) for w in range(u + 1, 5) if deg[u] + deg[w] == 4), None)
    trace = {"out_degrees": deg, "pair": pair}
    if pair is None:
        raise FalsifiedClaimError(f"no vertex pair with total out-degree 4: {trace}")
    f = VertexLabelling(tuple(int(v in pair) for v in range(5)))
    result = _finish(t, f, None, trace)
    if result.lam != (3, 3, 4):
        raise ConstructionError(f"expected lambda (3, 3, 4), got {tuple(result.lam)}", trace)
    return result


def wheel_case(n: int) -> WheelCaseTag:
    """Case of the wheel argument selected by ``(2n-2) mod 3`` and the parities of ``n`` and ``n/2``."""
    if n < 4:
        raise ValueError(f"wheel needs n >= 4, got {n}")
    case = (2 * n - 2) % 3 + 1
    if n % 2:
        return WheelCaseTag(f"{case}.2" if case == 1 else f"{case}.3")
    if (n // 2) % 2 == 0:
        return WheelCaseTag(f"{case}.1")
    return WheelCaseTag.EXCLUDED if case == 1 else WheelCaseTag(f"{case}.2")


def _rim_pattern(r: int, ones: int, runs: int) -> list[int]:
    """``runs`` separate blocks of 1s: alternating prefix then one long block."""
    return [1, 0] * (runs - 1) + [1] * (ones - runs + 1) + [0] * (r - ones - runs + 1)


def orient_wheel(n: int) -> ConstructionResult | None:
    """Cordial orientation of ``W_n`` (centre ``n-1`` labelled 0), or None when excluded.

    The rim is a clockwise directed cycle, so rim +1 and -1 counts equal the
    number of 1-runs. Spokes to 1-labelled rim vertices are split outward /
    inward as evenly as possible, lowest indices outward; spokes to 0-labelled
    vertices point outward. The run count and split are the first that make
    the triple cordial.
    """
    case = wheel_case(n)
    if case is WheelCaseTag.EXCLUDED:
        return None
    r = n - 1
    if n % 2 == 0:
        ones = n // 2
    else:
        k = n // 2
        ones = k if k % 2 == 0 else k + 1
    for runs in range(1, min(ones, r - ones) + 1):
        for out in sorted(range(ones + 1), key=lambda s: (abs(2 * s - ones), s)):
            alpha = runs + out
            beta = runs + ones - out
            gamma = (r - ones) + (r - 2 * runs)
            if is_cordial_triple((alpha, beta, gamma)):
                break
        else:
            continue
        break
    else:
        raise ConstructionError("no run count / spoke split is cordial", {"n": n, "ones": ones})
    rim = _rim_pattern(r, ones, runs)
    f = VertexLabelling(tuple(rim) + (0,))
    arcs = [(i, (i + 1) % r) for i in range(r)]
    one_vertices = [v for v in range(r) if rim[v] == 1]
    outward = set(one_vertices[:out])
    for v in range(r):
        arcs.append((r, v) if rim[v] == 0 or v in outward else (v, r))
    d = Digraph(n, frozenset(arcs))
    trace = {"n": n, "case": case.value, "rim_ones": ones, "runs": runs, "outward": out}
    if d.underlying() != gen_wheel(n):
        raise ConstructionError("orientation is not a wheel", trace)
    return _finish(d, f, case, trace)


def _fan_from_wheel(n: int) -> ConstructionResult:
    wheel = orient_wheel(n)
    assert wheel is not None
    r = n - 1
    lam = wheel.lam
    top = max(lam)
    frequent = {lab for lab, c in zip((1, -1, 0), lam) if c == top}
    f = wheel.labelling
    rim_arcs = sorted(a for a in wheel.digraph.arcs if r not in a)
    cut = next(((u, v) for u, v in rim_arcs if f[v] - f[u] in frequent), None)
    trace = dict(wheel.trace, wheel_lambda=tuple(lam), deleted_arc=cut)
    if cut is None:
        raise ConstructionError("no rim arc carries a most frequent label", trace)
    # walk the rim from the head of the deleted arc round to its tail
    start = cut[1]
    order = {r: 0}
    for j in range(r):
        order[(start + j) % r] = j + 1
    arcs = [(order[u], order[v]) for u, v in wheel.digraph.arcs if (u, v) != cut]
    labels = [0] * n
    for v, new in order.items():
        labels[new] = f[v]
    d = Digraph(n, frozenset(arcs))
    if d.underlying() != gen_fan(n):
        raise ConstructionError("wheel minus rim arc is not the fan", trace)
    return _finish(d, VertexLabelling(tuple(labels)), wheel.case, trace)


def _fan_excluded_case(n: int) -> ConstructionResult:
    k = n // 2
    ell = (k - 1) // 2
    z = (2 * n - 5) // 3
    alpha = z - ell + 1
    label = {}  # 1-indexed: centre 1, path 2..n
    for i in range(1, alpha + 1):
        label[2 * i - 1] = 0
        label[2 * i] = 1
    for i in range(1, k - alpha + 1):
        label[2 * alpha + i] = 1
        label[k + alpha + i] = 0
    trace = {"n": n, "k": k, "ell": ell, "z": z, "alpha": alpha}
    if sorted(label) != list(range(1, n + 1)):
        raise ConstructionError("labelling does not cover the fan", trace)
    arcs = [(i - 1, i % n) for i in range(1, n + 1)]
    inner_ones = [j for j in range(3, n) if label[j] == 1]
    for j in range(3, n):
        if label[j] == 1 and j not in inner_ones[:ell]:
            arcs.append((j - 1, 0))
        else:
            arcs.append((0, j - 1))
    d = Digraph(n, frozenset(arcs))
    f = VertexLabelling(tuple(label[i] for i in range(1, n + 1)))
    if d.underlying() != gen_fan(n):
        raise ConstructionError("orientation is not the fan", trace)
    result = _finish(d, f, WheelCaseTag.EXCLUDED, trace)
    if result.lam != (z + 1, z + 1, z):
        raise ConstructionError(f"expected lambda {(z + 1, z + 1, z)}, got {tuple(result.lam)}", trace)
    return result


def orient_fan(n: int) -> ConstructionResult:
    """Cordial orientation of ``F_n`` (centre 0, path ``1..n-1``)."""
    if n < 4:
        raise ValueError(f"fan needs n >= 4, got {n}")
    if wheel_case(n) is WheelCaseTag.EXCLUDED:
        return _fan_excluded_case(n)
    return _fan_from_wheel(n)


@dataclass
class CycleOutReport:
    family: str
    n: int
    cordial: bool
    labellings_checked: int
    claimed_noncordial: bool
    spoke_accounting: bool | None = None
    witness: VertexLabelling | None = None

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "cordial": self.cordial,
            "labellings_checked": self.labellings_checked,
            "claimed_noncordial": self.claimed_noncordial,
            "spoke_accounting": self.spoke_accounting,
            "witness": None if self.witness is None else list(self.witness.labels),
        }


def check_cycle_out_wheel_not_cordial(n: int) -> CycleOutReport:
    """Exhaustively confirm the cycle-out wheel is not cordial.

    Also checks, for every friendly labelling with the centre labelled 0,
    that no spoke is labelled -1, that ``n//2`` or ``n//2 + 1`` spokes are
    labelled +1, and that the rim's +1 and -1 counts agree.
    """
    if not 4 <= n <= 16:
        raise ValueError(f"cycle-out wheel check supports 4 <= n <= 16, got {n}")
    d = gen_cycle_out_wheel(n)
    center = n - 1
    verdict = is_23_cordial(d)
    k = n // 2
    allowed = {k} if n % 2 == 0 else {k, k + 1}
    checked = 0
    accounting = True
    for f in enumerate_friendly_labellings(d):
        checked += 1
        if is_cordial_triple(lambda_of(d, f)):
            raise FalsifiedClaimError(f"cycle-out wheel n={n} cordial under {f.labels}")
        if f[center] != 0:
            continue
        spoke, rim = lambda_split(d, center, f)
        if spoke.beta != 0 or spoke.alpha not in allowed or rim.alpha != rim.beta:
            accounting = False
    if verdict.decision or not accounting:
        raise FalsifiedClaimError(f"cycle-out wheel n={n}: verdict={verdict}, accounting={accounting}")
    return CycleOutReport("cycle-out-wheel", n, False, checked, True, accounting)


def check_cycle_out_fan_not_cordial(n: int) -> CycleOutReport:
    """Exhaustively decide the fan with outward spokes and path ``1 -> ... -> n-1``.

    For ``n >= 5`` a cordial labelling raises :class:`FalsifiedClaimError`;
    ``n = 4`` is reported without a claim.
    """
    if not 4 <= n <= 16:
        raise ValueError(f"cycle-out fan check supports 4 <= n <= 16, got {n}")
    d = gen_cycle_out_fan(n)
    verdict = is_23_cordial(d)
    witness = verdict.witness.labelling if verdict.witness else None
    report = CycleOutReport(
        "cycle-out-fan", n, verdict.decision, verdict.search_space, n >= 5, witness=witness
    )
    if n >= 5 and verdict.decision:
        raise FalsifiedClaimError(
            f"cycle-out fan n={n} is cordial under labelling {witness.labels} "
            f"with lambda {tuple(verdict.witness.lam)}"
        )
    return report
