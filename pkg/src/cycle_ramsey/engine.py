"""Finite executors for the odd-cycle lemma machinery and the even-case
pigeonhole argument.

The odd-case executor is a diagnostic: the underlying lemma is
asymptotic, so on a concrete colored graph the engine reports which of
its inequalities hold and which fail rather than claiming the theorem.
The inequality chain itself is verified separately in exact rational
arithmetic — no floating point touches any verdict anywhere here.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .certificates import (
    MatchingCertificate,
    StructureWitness,
    WitnessKind,
    verify_cycle,
    verify_matching,
)
from .cycles import components, eg_threshold, longest_cycle
from .decompose import (
    FLDecomposition,
    PeelResult,
    fl_decompose,
    matching_threshold,
    min_degree_peel,
)
from .errors import (
    CycleTooShort,
    EvenCycleLength,
    InvalidParams,
    OddCycleLength,
    ParamOutOfRange,
)
from .graphs import (
    EdgeColoring,
    color_class,
    induced_coloring,
    induced_subgraph,
    normalize_edge,
)
from .matching import max_matching


def _exact(q) -> Fraction:
    """Coerce to Fraction, refusing floats to keep verdict paths exact."""
    if isinstance(q, float):
        raise InvalidParams(
            f"floating-point value {q!r} refused; pass a Fraction, an int, "
            "or a 'p/q' string"
        )
    return Fraction(q)


class Parity(enum.Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class PkParameters:
    """Density-property parameters: k colors, target length n, density
    coefficient c, slack ε, density defect δ, host order N."""

    k: int
    n: int
    c: Fraction
    eps: Fraction
    delta: Fraction
    N: int

    def __post_init__(self) -> None:
        for name in ("c", "eps", "delta"):
            if isinstance(getattr(self, name), float):
                raise InvalidParams(f"{name} must be exact, not float")
        if self.k < 1:
            raise ParamOutOfRange(f"color count {self.k} < 1")
        if self.n < 3:
            raise CycleTooShort(f"cycle length {self.n} < 3")
        if self.eps <= 0 or self.delta <= 0:
            raise ParamOutOfRange("eps and delta must be positive")
        minimum = math.ceil((1 + self.eps) * self.c * self.n)
        if self.N < minimum:
            raise ParamOutOfRange(
                f"N = {self.N} < ceil((1+eps)*c*n) = {minimum}"
            )

    @classmethod
    def for_lemma(cls, k: int, n: int, eps) -> "PkParameters":
        """Instantiate per the odd-case lemma: c = k*2^k, δ = ε/2^(2k+4),
        N = ⌈(1+ε)·c·n⌉."""
        eps = _exact(eps)
        if k < 1:
            raise ParamOutOfRange(f"color count {k} < 1")
        if eps <= 0:
            raise ParamOutOfRange(f"eps = {eps} must be positive")
        c = Fraction(k * (1 << k))
        delta = eps / (1 << (2 * k + 4))
        N = math.ceil((1 + eps) * c * n)
        return cls(k, n, c, eps, delta, N)


def pk_witness_search(
    col: EdgeColoring, n: int, parity: Parity = Parity.ODD
) -> StructureWitness | None:
    """Scan color classes for the density property's structure.

    ODD: a non-bipartite monochromatic component with a matching of at
    least (n+1)/2 edges.  EVEN: any monochromatic component with a
    matching of at least n/2 edges.  Both thresholds are the integer
    ⌈n/2⌉.  Colors are scanned in ascending order, components in
    discovery order; the first hit is returned.
    """
    need = matching_threshold(n)
    for i in range(1, col.color_count + 1):
        Gi = color_class(col, i)
        for comp in components(Gi).components:
            if parity is Parity.ODD and comp.is_bipartite:
                continue
            if comp.matching_size < need:
                continue
            sub, kept = induced_subgraph(Gi, comp.vertices)
            local = max_matching(sub)
            lifted = MatchingCertificate(
                frozenset(
                    normalize_edge(kept[a], kept[b]) for a, b in local.edges
                )
            )
            if parity is Parity.ODD:
                return StructureWitness(
                    WitnessKind.NONBIP_COMPONENT_MATCHING,
                    i,
                    comp.vertices,
                    matching=lifted,
                    odd_cycle=comp.odd_cycle,
                )
            return StructureWitness(
                WitnessKind.COMPONENT_MATCHING, i, comp.vertices, matching=lifted
            )
    return None


class TraceVerdict(enum.Enum):
    """First failing step of the odd-case argument on this instance, or
    CONTRADICTION_ESTABLISHED if every step held (impossible for genuine
    inputs meeting all preconditions — that impossibility is the lemma)."""

    CONTRADICTION_ESTABLISHED = "contradiction_established"
    PIGEONHOLE_FAILS = "pigeonhole_fails"
    EQ2_FAILS = "eq2_fails"
    EQ3_FAILS = "eq3_fails"
    CHAIN_FAILS = "chain_fails"


@dataclass(frozen=True)
class CellEntry:
    """One intersection cell: vertices (peeled-graph labels) whose
    per-color membership pattern matches `signature` (j_i = 1 means side
    V1 of color i's decomposition, j_i = 2 means V2 ∪ V3)."""

    signature: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Lemma4Trace:
    """Everything the odd-case executor measured, in peeled-graph labels.

    `peel.kept` maps those labels back to the input coloring.  All
    bounds are exact rationals; `verdict` names the first failing step
    in proof order (pigeonhole, then the two edge bounds, then the
    chain).
    """

    params: PkParameters
    n: int
    color_count: int
    precondition_failures: tuple[str, ...]
    peel: PeelResult
    decompositions: tuple[FLDecomposition, ...]
    cells: tuple[CellEntry, ...]
    chosen: CellEntry
    pigeonhole_min: int
    color_edge_counts: tuple[int, ...]
    cell_edge_count: int
    eq2_bound: Fraction
    eq2_ok: bool
    eq3_bound: Fraction
    eq3_ok: bool
    chain_a: Fraction | None
    chain_b: Fraction | None
    n_cap: int
    n_cap_ok: bool
    chain_cap: Fraction
    eps_half_term: Fraction
    chain_ok: bool
    lower_interval: Fraction
    upper_interval: Fraction
    pigeonhole_ok: bool
    verdict: TraceVerdict


def lemma4_execute(
    col: EdgeColoring, n: int, params: PkParameters
) -> StructureWitness | Lemma4Trace:
    """Run the odd-case argument on a concrete coloring.

    If the structure the lemma wants already exists, return it and stop.
    Otherwise peel to N vertices (or as far as the host allows),
    decompose every color class, intersect the per-color sides into 2^k
    cells, take a largest cell X (ties: lexicographically smallest
    signature), and evaluate the argument's inequalities on X in exact
    arithmetic.  Precondition violations never abort; they are recorded
    and the engine continues diagnostically.
    """
    found = pk_witness_search(col, n, Parity.ODD)
    if found is not None:
        return found

    v = col.base.vertex_count
    k = col.color_count
    failures: list[str] = []
    if k != params.k:
        failures.append(f"coloring has {k} colors but params.k = {params.k}")
    if v < params.N:
        failures.append(f"host order {v} < N = {params.N}")
    density_bound = (1 - params.delta) * Fraction(v * (v - 1), 2)
    if Fraction(col.base.edge_count) < density_bound:
        failures.append(
            f"edge count {col.base.edge_count} < (1-delta)*binom(v,2) "
            f"= {density_bound}"
        )

    peel = min_degree_peel(col.base, min(params.N, v))
    peeled_col, _ = induced_coloring(col, peel.kept)
    host = peel.graph.vertex_count

    decs = tuple(
        fl_decompose(color_class(peeled_col, i), n) for i in range(1, k + 1)
    )
    sides = [(frozenset(d.V1), frozenset(d.V2) | frozenset(d.V3)) for d in decs]
    cells = []
    everyone = frozenset(range(host))
    for sig in itertools.product((1, 2), repeat=k):
        cur = everyone
        for i, j in enumerate(sig):
            cur &= sides[i][j - 1]
        cells.append(CellEntry(sig, tuple(sorted(cur))))
    best_size = max(c.size for c in cells)
    chosen = next(c for c in cells if c.size == best_size)
    X = set(chosen.vertices)
    x = chosen.size

    per_color = [0] * k
    for (a, b), c in zip(peeled_col.base.sorted_edges, peeled_col.colors):
        if a in X and b in X:
            per_color[c - 1] += 1
    cell_edges = sum(per_color)

    kp, N, eps, delta = params.k, params.N, params.eps, params.delta
    eq2_bound = Fraction(kp * n * (x - 1), 2)
    eq3_bound = Fraction(x * (x - 1), 2) - delta * Fraction(N * (N - 1), 2)
    eq2_ok = cell_edges <= eq2_bound
    eq3_ok = cell_edges >= eq3_bound
    chain_a = delta * Fraction(N * (N - 1), x - 1) if x >= 2 else None
    chain_b = 2 * delta * Fraction(N * N, x) if x >= 1 else None
    n_cap = kp * (1 << (kp + 1)) * n
    n_cap_ok = N <= n_cap
    chain_cap = 2 * delta * Fraction(n_cap * n_cap, kp * n)
    eps_half = eps * kp * n / 2
    chain_ok = (
        chain_a is not None
        and chain_b is not None
        and chain_a <= chain_b
        and chain_b <= chain_cap
        and chain_cap <= eps_half
    )
    lower = (1 + eps) * kp * n
    upper = kp * n + eps_half
    pigeonhole_min = -(-host // (1 << k))
    pigeonhole_ok = x >= lower

    if not pigeonhole_ok:
        verdict = TraceVerdict.PIGEONHOLE_FAILS
    elif not eq2_ok:
        verdict = TraceVerdict.EQ2_FAILS
    elif not eq3_ok:
        verdict = TraceVerdict.EQ3_FAILS
    elif not chain_ok:
        verdict = TraceVerdict.CHAIN_FAILS
    else:
        verdict = TraceVerdict.CONTRADICTION_ESTABLISHED

    return Lemma4Trace(
        params=params,
        n=n,
        color_count=k,
        precondition_failures=tuple(failures),
        peel=peel,
        decompositions=decs,
        cells=tuple(cells),
        chosen=chosen,
        pigeonhole_min=pigeonhole_min,
        color_edge_counts=tuple(per_color),
        cell_edge_count=cell_edges,
        eq2_bound=eq2_bound,
        eq2_ok=eq2_ok,
        eq3_bound=eq3_bound,
        eq3_ok=eq3_ok,
        chain_a=chain_a,
        chain_b=chain_b,
        n_cap=n_cap,
        n_cap_ok=n_cap_ok,
        chain_cap=chain_cap,
        eps_half_term=eps_half,
        chain_ok=chain_ok,
        lower_interval=lower,
        upper_interval=upper,
        pigeonhole_ok=pigeonhole_ok,
        verdict=verdict,
    )


@dataclass(frozen=True)
class ChainReport:
    """Exact-rational audit of the odd-case inequality chain.

    Verified under the assumption |X| > kn, uniformly in |X|:

      link a:  δN(N−1)/(|X|−1) ≤ 2δN²/|X|  ⟺  |X|(N+1) ≥ 2N,
               which holds for every |X| ≥ 2 (check the boundary |X|=2,
               then note the left side grows with |X| since N+1 > 0);
      link b:  2δN²/|X| ≤ 2δ(k·2^(k+1)·n)²/(kn), whose supremum over
               |X| > kn is 2δN²/(kn), so it reduces to N ≤ k·2^(k+1)·n;
      link c:  2δ(k·2^(k+1)·n)²/(kn) = εkn/2, an exact identity for
               δ = ε/2^(2k+4).

    With the chain closed, |X| ≤ kn + εkn/2 < (1+ε)kn ≤ |X| — the
    contradiction.  Spot values at the first integer |X| = kn+1 are
    included for the record.
    """

    k: int
    n: int
    eps: Fraction
    delta: Fraction
    N: int
    x_boundary: int
    link_a_ok: bool
    link_a_at_boundary: Fraction
    link_b_at_boundary: Fraction
    link_b_sup: Fraction
    n_cap: int
    n_cap_ok: bool
    link_b_ok: bool
    link_c_value: Fraction
    eps_half_term: Fraction
    link_c_exact: bool
    lower_interval: Fraction
    upper_interval: Fraction
    contradiction: bool

    @property
    def holds(self) -> bool:
        return (
            self.link_a_ok
            and self.link_b_ok
            and self.link_c_exact
            and self.contradiction
        )


def lemma4_inequality_check(k: int, eps, n: int) -> ChainReport:
    """Verify the odd-case chain for all |X| > kn in exact rationals.

    Instantiates δ = ε/2^(2k+4) and N = ⌈(1+ε)·k·2^k·n⌉ and checks each
    link as described on ChainReport.  Requires k ≥ 4, 0 < ε < 1
    (the argument itself assumes ε < 1 when bounding N) and odd n.
    """
    eps = _exact(eps)
    if k < 4:
        raise ParamOutOfRange(f"color count {k} < 4")
    if not 0 < eps < 1:
        raise ParamOutOfRange(f"eps = {eps} outside (0, 1)")
    if n < 3:
        raise CycleTooShort(f"cycle length {n} < 3")
    if n % 2 == 0:
        raise EvenCycleLength(f"the chain argues about odd cycles; n = {n}")

    delta = eps / (1 << (2 * k + 4))
    N = math.ceil((1 + eps) * Fraction(k * (1 << k)) * n)
    kn = k * n
    x0 = kn + 1

    # link a, uniformly in |X| >= 2: boundary value plus positive slope.
    link_a_ok = 2 * (N + 1) >= 2 * N and N + 1 > 0
    link_a_at_boundary = delta * Fraction(N * (N - 1), x0 - 1)
    link_b_at_boundary = 2 * delta * Fraction(N * N, x0)

    n_cap = k * (1 << (k + 1)) * n
    n_cap_ok = N <= n_cap
    link_b_sup = 2 * delta * Fraction(N * N, kn)
    link_c_value = 2 * delta * Fraction(n_cap * n_cap, kn)
    eps_half = eps * kn / 2
    link_c_exact = link_c_value == eps_half

    lower = (1 + eps) * kn
    upper = kn + eps_half
    return ChainReport(
        k=k,
        n=n,
        eps=eps,
        delta=delta,
        N=N,
        x_boundary=x0,
        link_a_ok=link_a_ok,
        link_a_at_boundary=link_a_at_boundary,
        link_b_at_boundary=link_b_at_boundary,
        link_b_sup=link_b_sup,
        n_cap=n_cap,
        n_cap_ok=n_cap_ok,
        link_b_ok=n_cap_ok,
        link_c_value=link_c_value,
        eps_half_term=eps_half,
        link_c_exact=link_c_exact,
        lower_interval=lower,
        upper_interval=upper,
        contradiction=lower > upper,
    )


@dataclass(frozen=True)
class EvenCaseReport:
    """Even-case engine outcome when no witness was extracted, or the
    measured context when one was (see even_engine)."""

    n: int
    eps: Fraction
    color_count: int
    host_order: int
    edge_count: int
    precondition_failures: tuple[str, ...]
    color_edge_counts: tuple[int, ...]
    majority_color: int
    majority_count: int
    pigeonhole_lhs: Fraction
    pigeonhole_rhs: Fraction
    pigeonhole_ok: bool
    threshold: int
    threshold_met: bool


def even_engine(
    col: EdgeColoring, n: int, eps
) -> StructureWitness | EvenCaseReport:
    """Run the even-case pigeonhole argument on a concrete coloring.

    Picks the color with the most edges (smallest color id on ties),
    records the exact pigeonhole inequality (1/k)(1−ε/3)·binom(N,2) >
    n(N−1)/2 + 1, and — whenever the majority color meets the edge
    threshold for a cycle of length n+1 — extracts such a cycle and
    returns a matching of exactly n/2 of its edges, all inside one
    monochromatic component.  Otherwise returns the measured report,
    including any precondition violations.
    """
    if n < 3:
        raise CycleTooShort(f"cycle length {n} < 3")
    if n % 2 == 1:
        raise OddCycleLength(f"even-case engine got odd length {n}")
    eps = _exact(eps)
    if eps <= 0:
        raise ParamOutOfRange(f"eps = {eps} must be positive")

    v = col.base.vertex_count
    k = col.color_count
    failures: list[str] = []
    if not v > (1 + eps) * n * k:
        failures.append(
            f"host order {v} <= (1+eps)*n*k = {(1 + eps) * n * k}"
        )
    density_bound = (1 - eps / 3) * Fraction(v * (v - 1), 2)
    if Fraction(col.base.edge_count) < density_bound:
        failures.append(
            f"edge count {col.base.edge_count} < (1-eps/3)*binom(v,2) "
            f"= {density_bound}"
        )

    counts = [0] * k
    for c in col.colors:
        counts[c - 1] += 1
    majority = 1
    for i in range(2, k + 1):
        if counts[i - 1] > counts[majority - 1]:
            majority = i

    lhs = Fraction(1, k) * (1 - eps / 3) * Fraction(v * (v - 1), 2)
    rhs = Fraction(n * (v - 1), 2) + 1
    threshold = eg_threshold(n + 1, v)
    majority_count = counts[majority - 1]
    report = EvenCaseReport(
        n=n,
        eps=eps,
        color_count=k,
        host_order=v,
        edge_count=col.base.edge_count,
        precondition_failures=tuple(failures),
        color_edge_counts=tuple(counts),
        majority_color=majority,
        majority_count=majority_count,
        pigeonhole_lhs=lhs,
        pigeonhole_rhs=rhs,
        pigeonhole_ok=lhs > rhs,
        threshold=threshold,
        threshold_met=majority_count >= threshold,
    )
    if majority_count < threshold:
        return report

    Gm = color_class(col, majority)
    cycle = longest_cycle(Gm, stop_at=n + 1)
    if cycle is None or cycle.length <= n:
        # Unreachable when the threshold is genuinely met — the edge
        # count guarantees the cycle — but report rather than crash.
        return report
    pairs = frozenset(
        normalize_edge(cycle.vertices[2 * t], cycle.vertices[2 * t + 1])
        for t in range(n // 2)
    )
    rep = components(Gm)
    comp = rep.components[rep.component_id[cycle.vertices[0]]]
    return StructureWitness(
        WitnessKind.COMPONENT_MATCHING,
        majority,
        comp.vertices,
        cycle=cycle,
        matching=MatchingCertificate(pairs),
    )


def verify_witness(col: EdgeColoring, n: int, w: StructureWitness) -> bool:
    """Re-check a StructureWitness against the coloring, from scratch.

    Confirms the claimed component really is a connected component of
    the color class, that every certificate lives inside it, and the
    kind-specific size/parity conditions: a MONO_CYCLE has length
    exactly n; matchings have at least ⌈n/2⌉ edges; the odd-cycle proof
    of non-bipartiteness has odd length.
    """
    if not 1 <= w.color <= col.color_count:
        return False
    Gi = color_class(col, w.color)
    comp_set = set(w.component)
    if not comp_set:
        return False
    rep = components(Gi)
    anchor = w.component[0]
    if not 0 <= anchor < Gi.vertex_count:
        return False
    actual = rep.components[rep.component_id[anchor]]
    if set(actual.vertices) != comp_set:
        return False

    def inside(vertices) -> bool:
        return all(p in comp_set for p in vertices)

    if w.kind is WitnessKind.MONO_CYCLE:
        return (
            w.cycle is not None
            and w.cycle.length == n
            and verify_cycle(Gi, w.cycle)
            and inside(w.cycle.vertices)
        )
    if w.kind is WitnessKind.NONBIP_COMPONENT_MATCHING:
        return (
            w.matching is not None
            and w.odd_cycle is not None
            and w.matching.size >= matching_threshold(n)
            and verify_matching(Gi, w.matching)
            and all(inside(e) for e in w.matching.edges)
            and w.odd_cycle.length % 2 == 1
            and verify_cycle(Gi, w.odd_cycle)
            and inside(w.odd_cycle.vertices)
        )
    if w.kind is WitnessKind.COMPONENT_MATCHING:
        return (
            w.matching is not None
            and w.matching.size >= matching_threshold(n)
            and verify_matching(Gi, w.matching)
            and all(inside(e) for e in w.matching.edges)
        )
    return False
