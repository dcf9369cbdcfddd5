"""Edge-count audits for graphs of 3-connectivity two, and the order-10 check.

A graph with 3-connectivity 2 has minimum degree at least 2 and no two
adjacent degree-2 vertices, so with X the degree-2 vertices and m' the number
of edges inside Y = V - X we get e = 2|X| + m' and 5|X| + 2m' >= 3n, hence
5e >= 6n, with equality iff m' = 0 and the maximum degree is 3 (and then
|X| = 3n/5). All arithmetic here is exact integer arithmetic.

The order-10 analysis: a connected graph with n = 10, e = 12 and
3-connectivity 2 would need the equality conditions, i.e. both X (six
degree-2 vertices) and Y (four degree-3 vertices) stable. Such graphs are
exactly the assignments of a 2-subset of Y to each x vertex covering every y
exactly three times; enumerating them up to isomorphism and running the
search oracle shows they all have 3-connectivity 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .graphs import Graph
from .oracle import Kappa3Result, kappa3, lemma1_upper_bound


@dataclass(frozen=True)
class BoundAudit:
    n: int
    e: int
    x_vertices: tuple[int, ...]
    y_vertices: tuple[int, ...]
    m_prime: int
    x_stable: bool
    bound_holds: bool  # 5e >= 6n
    equality: bool  # 5e == 6n
    m_prime_zero: bool
    max_degree_is_3: bool
    x_size_is_3n_over_5: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "x_size": len(self.x_vertices),
            "x_vertices": list(self.x_vertices),
            "m_prime": self.m_prime,
            "x_stable": self.x_stable,
            "five_e": 5 * self.e,
            "six_n": 6 * self.n,
            "bound_holds": self.bound_holds,
            "equality": self.equality,
            "equality_conditions": {
                "m_prime_zero": self.m_prime_zero,
                "max_degree_is_3": self.max_degree_is_3,
                "x_size_is_3n_over_5": self.x_size_is_3n_over_5,
            },
        }


def audit(g: Graph) -> BoundAudit:
    """Decompose g into X (degree-2 vertices) and Y, and test 5e >= 6n exactly."""
    xs = tuple(v for v in range(g.n) if len(g.adj[v]) == 2)
    ys = tuple(v for v in range(g.n) if len(g.adj[v]) != 2)
    yset = set(ys)
    m_prime = sum(1 for u in ys for v in g.adj[u] if v in yset) // 2
    five_e, six_n = 5 * g.e, 6 * g.n
    return BoundAudit(
        n=g.n,
        e=g.e,
        x_vertices=xs,
        y_vertices=ys,
        m_prime=m_prime,
        x_stable=g.is_stable(xs),
        bound_holds=five_e >= six_n,
        equality=five_e == six_n,
        m_prime_zero=m_prime == 0,
        max_degree_is_3=g.n > 0 and g.max_degree() == 3,
        x_size_is_3n_over_5=5 * len(xs) == 3 * g.n,
    )


def kappa3_le_2_when_sparse(g: Graph) -> bool:
    """Theorem check: 5e <= 6n forces the degree upper bound down to <= 2.

    Average degree at most 12/5 means minimum degree at most 2. Vacuously
    true when the premise fails; expected True for every connected g, n >= 3.
    """
    if 5 * g.e > 6 * g.n:
        return True
    return lemma1_upper_bound(g) <= 2


# ---------------------------------------------------------------------------
# The order-10, size-12 candidate family.

_PAIRS = tuple(combinations(range(4), 2))  # 2-subsets of the four y vertices


def _pair_counts_solutions() -> list[tuple[int, ...]]:
    """Count vectors over the six y-pairs: six x's total, each y covered 3x."""
    out = []
    for counts in _iter_counts(len(_PAIRS), 6):
        cover = [0, 0, 0, 0]
        for cnt, (i, j) in zip(counts, _PAIRS):
            cover[i] += cnt
            cover[j] += cnt
        if cover == [3, 3, 3, 3]:
            out.append(counts)
    return out


def _iter_counts(slots: int, total: int) -> Iterator[tuple[int, ...]]:
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _iter_counts(slots - 1, total - first):
            yield (first,) + rest


def _canonical_counts(counts: tuple[int, ...]) -> tuple[int, ...]:
    """Minimum over relabelings of the y side; equal iff isomorphic candidates."""
    best = None
    for perm in permutations(range(4)):
        permuted = [0] * len(_PAIRS)
        index = {p: t for t, p in enumerate(_PAIRS)}
        for cnt, (i, j) in zip(counts, _PAIRS):
            a, b = perm[i], perm[j]
            permuted[index[(min(a, b), max(a, b))]] += cnt
        key = tuple(permuted)
        if best is None or key < best:
            best = key
    return best


def assignment_graph(pairs: Iterable[tuple[int, int]]) -> Graph:
    """Bipartite graph from six x vertices (ids 0..5) to y vertices (ids 6..9)."""
    pairs = list(pairs)
    if len(pairs) != 6:
        raise ValueError("need exactly six pair assignments")
    edges = []
    for x, (i, j) in enumerate(pairs):
        edges.append((x, 6 + i))
        edges.append((x, 6 + j))
    return Graph(10, edges)


def _counts_to_pairs(counts: tuple[int, ...]) -> list[tuple[int, int]]:
    pairs = []
    for cnt, p in zip(counts, _PAIRS):
        pairs.extend([p] * cnt)
    return pairs


def figure1_graph() -> Graph:
    """Each of the six y-pairs used exactly once (the subdivided K4 pattern)."""
    return assignment_graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def figure2_graph() -> Graph:
    """Two x's on one pair, two on its opposite pair, one on each of two more."""
    return assignment_graph([(0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (2, 3)])


def enumerate_lemma22_candidates() -> Iterator[Graph]:
    """Connected candidates (degree-2 side vs degree-3 side, both stable) up
    to isomorphism, in canonical count-vector order."""
    seen = set()
    for counts in sorted(_pair_counts_solutions()):
        canon = _canonical_counts(counts)
        if canon in seen:
            continue
        seen.add(canon)
        g = assignment_graph(_counts_to_pairs(canon))
        if g.is_connected():
            yield g


def lemma22_census() -> dict:
    """Exhaustive counts for the candidate family, frozen as test goldens."""
    labelled_total = 0
    labelled_connected = 0
    classes = set()
    classes_connected = set()
    fact = [1, 1, 2, 6, 24, 120, 720]
    for counts in _pair_counts_solutions():
        ways = fact[6]
        for c in counts:
            ways //= fact[c]
        labelled_total += ways
        canon = _canonical_counts(counts)
        classes.add(canon)
        if assignment_graph(_counts_to_pairs(counts)).is_connected():
            labelled_connected += ways
            classes_connected.add(canon)
    return {
        "labelled_total": labelled_total,
        "labelled_connected": labelled_connected,
        "classes_total": len(classes),
        "classes_connected": len(classes_connected),
    }


def candidate_profile(g: Graph) -> tuple[int, ...]:
    """Canonical count vector of an order-10 graph whose degree-2 side is a
    stable 6-set attached in pairs to a stable degree-3 4-set. Lets callers
    test membership of arbitrary graphs in the candidate family."""
    xs = [v for v in range(g.n) if len(g.adj[v]) == 2]
    ys = [v for v in range(g.n) if len(g.adj[v]) == 3]
    if g.n != 10 or len(xs) != 6 or len(ys) != 4:
        raise ValueError("not an order-10 graph with six degree-2 and four degree-3 vertices")
    if not (g.is_stable(xs) and g.is_stable(ys)):
        raise ValueError("candidate sides must both be stable")
    yindex = {v: i for i, v in enumerate(sorted(ys))}
    counts = [0] * len(_PAIRS)
    index = {p: t for t, p in enumerate(_PAIRS)}
    for x in xs:
        i, j = sorted(yindex[w] for w in g.adj[x])
        counts[index[(i, j)]] += 1
    return _canonical_counts(tuple(counts))


@dataclass
class Lemma22Report:
    census: dict
    reduction: dict
    candidates: list[dict]

    @property
    def ok(self) -> bool:
        return all(c["kappa3"] == 1 for c in self.candidates)

    def to_json_dict(self) -> dict:
        return {
            "census": self.census,
            "reduction": self.reduction,
            "candidates": self.candidates,
            "ok": self.ok,
        }


def verify_lemma22() -> Lemma22Report:
    """Every connected order-10 size-12 graph has 3-connectivity 1.

    The reduction block re-derives why the candidate family is exhaustive:
    with n = 10, e = 12 the bound 5e >= 6n is met with equality, so a
    hypothetical 3-connectivity-2 graph would need m' = 0, maximum degree 3
    and |X| = 6. The oracle then refutes every candidate.
    """
    n, e = 10, 12
    reduction = {
        "n": n,
        "e": e,
        "five_e": 5 * e,
        "six_n": 6 * n,
        "equality": 5 * e == 6 * n,
        "required_m_prime": 0,
        "required_max_degree": 3,
        "required_x_size": 3 * n // 5,
        "required_y_size": n - 3 * n // 5,
    }
    candidates = []
    for idx, g in enumerate(enumerate_lemma22_candidates()):
        res = kappa3(g)
        from .graphio import emit_graph6  # local import to avoid a cycle

        candidates.append(
            {
                "index": idx,
                "graph6": emit_graph6(g),
                "profile": list(candidate_profile(g)),
                "kappa3": res.value,
                "witness_triple": list(res.argmin),
            }
        )
        if res.value == 2:
            raise AssertionError(f"counterexample candidate: {candidates[-1]}")
    return Lemma22Report(lemma22_census(), reduction, candidates)


# ---------------------------------------------------------------------------
# Corpus sweeps.


@dataclass
class SweepRow:
    name: str
    n: int
    e: int
    kappa3: int | None
    argmin: tuple[int, int, int] | None
    audit: BoundAudit
    note: str | None = None

    def to_json_dict(self) -> dict:
        doc = {
            "graph": self.name,
            "n": self.n,
            "e": self.e,
            "kappa3": self.kappa3,
            "argmin": list(self.argmin) if self.argmin else None,
            "audit": self.audit.to_json_dict(),
        }
        if self.note:
            doc["note"] = self.note
        return doc


@dataclass
class SweepReport:
    rows: list[SweepRow]
    violations: list[SweepRow]
    remark_violations: list[SweepRow]
    min_ratio_by_n: dict[int, tuple[int, int]]  # n -> (e, n) of sparsest kappa3=2 graph

    @property
    def ok(self) -> bool:
        return not self.violations and not self.remark_violations

    def to_json_dict(self) -> dict:
        return {
            "rows": [r.to_json_dict() for r in self.rows],
            "violations": [r.name for r in self.violations],
            "equality_condition_violations": [r.name for r in self.remark_violations],
            "min_ratio_by_n": {
                str(n): {"e": e, "n": nn, "ratio": e / nn}
                for n, (e, nn) in sorted(self.min_ratio_by_n.items())
            },
            "ok": self.ok,
        }


def sweep_bound(corpus: Iterable[tuple[str, Graph]]) -> SweepReport:
    """Oracle + audit over a corpus of connected graphs.

    Flags any graph with 3-connectivity 2 below the 6n/5 edge bound (none
    should exist) and any tight one violating the equality conditions, and
    tracks the sparsest 3-connectivity-2 graph per order.
    """
    rows: list[SweepRow] = []
    violations: list[SweepRow] = []
    remark_violations: list[SweepRow] = []
    min_ratio: dict[int, tuple[int, int]] = {}
    for name, g in corpus:
        a = audit(g)
        if g.n < 3:
            rows.append(SweepRow(name, g.n, g.e, None, None, a, "skipped: n < 3"))
            continue
        if not g.is_connected():
            rows.append(SweepRow(name, g.n, g.e, None, None, a, "skipped: disconnected"))
            continue
        res = kappa3(g)
        row = SweepRow(name, g.n, g.e, res.value, res.argmin, a)
        rows.append(row)
        if res.value == 2:
            if 5 * g.e < 6 * g.n:
                violations.append(row)
            if 5 * g.e == 6 * g.n and not (a.m_prime_zero and a.max_degree_is_3):
                remark_violations.append(row)
            cur = min_ratio.get(g.n)
            if cur is None or g.e * cur[1] < cur[0] * g.n:
                min_ratio[g.n] = (g.e, g.n)
    return SweepReport(rows, violations, remark_violations, min_ratio)
