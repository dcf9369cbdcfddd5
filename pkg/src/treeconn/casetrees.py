"""Two-tree certificates for every 3-set of vertices in H(k), k != 2.

For each 3-set S the builder emits two edge-disjoint trees that both contain
S and share no other vertex, which certifies that at least two internally
disjoint trees connect S. Construction is by a ten-way case split on the
role multiset of S; see CASE_NOTES.md for how degenerate index combinations
are resolved. Every certificate is re-verified before it is returned, so an
invalid formula can never escape as a result.

The case builders work purely on roles and cycle positions. "Without loss
of generality" steps become explicit normalizations: members of S are
assigned to formula slots in a fixed search order, and configurations of the
opposite cyclic orientation are handled by mapping through the reflection
symmetry of H(k) and mapping the finished trees back.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations

from .cycles import mod_index, segment
from .extremal import ExtremalGraph, Role, mirror_role, role_label
from .graphs import Graph, make_triple

EdgeT = tuple[int, int]
RoleEdge = tuple[Role, Role]

# Case number by sorted role-kind string of S.
CASE_OF_KINDS = {
    "xxx": 1,
    "zzz": 2,
    "xxz": 3,
    "xzz": 4,
    "yyy": 5,
    "xyy": 6,
    "yyz": 7,
    "xxy": 8,
    "yzz": 9,
    "xyz": 10,
}


@dataclass(frozen=True)
class TreeCertificate:
    """S plus a list of trees (edge sets) witnessing that many internally
    disjoint trees connect S.

    case_tag records the construction subcase ("1.1", "7.2.2b", ...) for
    constructed certificates and is None for search-produced ones.
    """

    s: tuple[int, int, int]
    trees: tuple[tuple[EdgeT, ...], ...]
    case_tag: str | None = None

    def to_json_dict(self, host: ExtremalGraph | None = None) -> dict:
        if host is not None:
            lab = host.labels()
            name = lambda v: lab[v]
            k = host.k
        else:
            name = lambda v: v
            k = None
        doc = {
            "S": [name(v) for v in self.s],
            "case": self.case_tag,
            "trees": [[[name(u), name(v)] for u, v in t] for t in self.trees],
        }
        if k is not None:
            doc = {"k": k, **doc}
        return doc

    def to_json(self, host: ExtremalGraph | None = None) -> str:
        return json.dumps(self.to_json_dict(host), sort_keys=False)


def verify_certificate(g: Graph, cert: TreeCertificate) -> tuple[bool, str | None]:
    """Check a certificate against its host graph.

    Returns (True, None) or (False, diagnostic) where the diagnostic names
    the first violated clause: edge-existence, tree-shape, S-containment,
    vertex-intersection or edge-disjointness. Never raises.
    """
    s = set(cert.s)
    vsets: list[set[int]] = []
    esets: list[set[EdgeT]] = []
    for idx, edges in enumerate(cert.trees):
        vs: set[int] = set()
        es: set[EdgeT] = set()
        for u, v in edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                return False, f"edge-existence: tree {idx} uses ({u},{v}) which is not an edge"
            es.add((u, v) if u < v else (v, u))
            vs.add(u)
            vs.add(v)
        if not s <= vs:
            missing = sorted(s - vs)
            return False, f"S-containment: tree {idx} misses {missing}"
        if len(es) != len(vs) - 1:
            return False, f"tree-shape: tree {idx} has {len(es)} edges on {len(vs)} vertices"
        start = next(iter(vs))
        reach = {start}
        queue = deque([start])
        adj: dict[int, list[int]] = {}
        for u, v in es:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        while queue:
            u = queue.popleft()
            for w in adj.get(u, ()):
                if w not in reach:
                    reach.add(w)
                    queue.append(w)
        if reach != vs:
            return False, f"tree-shape: tree {idx} is disconnected"
        vsets.append(vs)
        esets.append(es)
    for i in range(len(cert.trees)):
        for j in range(i + 1, len(cert.trees)):
            shared = vsets[i] & vsets[j]
            if shared != s:
                extra = sorted(shared - s)
                return False, f"vertex-intersection: trees {i},{j} also share {extra}"
            common = esets[i] & esets[j]
            if common:
                return False, f"edge-disjointness: trees {i},{j} share {sorted(common)}"
    return True, None


def classify(h: ExtremalGraph, s) -> int:
    """Case number in 1..10 for the role multiset of S."""
    s = make_triple(h.graph.n, *s)
    kinds = "".join(sorted(h.role_of_vertex(v)[0] for v in s))
    return CASE_OF_KINDS[kinds]


# ---------------------------------------------------------------------------
# Position helpers. All arcs go in the +1 direction of the cycle.


def _pos_x(i: int) -> int:
    return 2 * i - 1


def _pos_y(i: int) -> int:
    return 2 * i


def _role_at(k: int, p: int) -> Role:
    return ("x", (p + 1) // 2) if p % 2 == 1 else ("y", p // 2)


def _x_antipode(k: int, i: int) -> int:
    return mod_index(i + k, 2 * k)


def _z_of_x(k: int, i: int) -> Role:
    return ("z", mod_index(i, k))


def _in_arc(L, start, end, p, excl_start=False, excl_end=False) -> bool:
    """Is position p on the forward arc start..end?"""
    off = (p - start) % L
    end_off = (end - start) % L
    if excl_start and off == 0:
        return False
    if excl_end and off == end_off:
        return False
    return off <= end_off


def _walk(k: int, p1: int, p2: int) -> list[RoleEdge]:
    """Edges of the forward cycle walk from position p1 to p2 (possibly none)."""
    w = segment(4 * k, p1, p2)
    return [(_role_at(k, a), _role_at(k, b)) for a, b in w.edges()]


# ---------------------------------------------------------------------------
# Case builders. Each receives frame-local role indices of S and returns
# (tree1 role-edges, tree2 role-edges, tag), or None when the configuration
# needs the mirrored frame.


def _case1(k, xs, ys, zs):
    a, b, c = xs
    L = 4 * k
    for A, B, C in ((a, b, c), (b, c, a), (c, a, b)):
        if 3 * ((_pos_x(B) - _pos_x(A)) % L) <= L:
            break
    bp = _x_antipode(k, B)
    zB = _z_of_x(k, B)
    if _in_arc(L, _pos_x(C), _pos_x(A), _pos_x(bp), excl_end=True):
        t1 = _walk(k, _pos_x(A), _pos_x(C))
        t2 = _walk(k, _pos_x(C), _pos_x(A)) + [(("x", bp), zB), (zB, ("x", B))]
        return t1, t2, "1.1"
    ap = _x_antipode(k, A)
    zA = _z_of_x(k, A)
    assert _in_arc(L, _pos_x(B), _pos_x(C), _pos_x(ap), excl_start=True, excl_end=True)
    t1 = _walk(k, _pos_x(C), _pos_x(B))
    t2 = _walk(k, _pos_x(B), _pos_x(C)) + [(("x", ap), zA), (zA, ("x", A))]
    return t1, t2, "1.2"


def _case2(k, xs, ys, zs):
    a, b, c = zs
    t1 = (
        [(("z", a), ("x", a))]
        + _walk(k, _pos_x(a), _pos_x(c))
        + [(("x", c), ("z", c)), (("x", b), ("z", b))]
    )
    t2 = (
        [(("z", a), ("x", a + k))]
        + _walk(k, _pos_x(a + k), _pos_x(c + k))
        + [(("x", c + k), ("z", c)), (("x", b + k), ("z", b))]
    )
    return t1, t2, "2"


def _case3(k, xs, ys, zs):
    a, b = xs
    c = zs[0]
    L = 4 * k
    zc = ("z", c)
    for E1, E2 in ((c, c + k), (c + k, c)):
        for A, B in ((a, b), (b, a)):
            if _in_arc(L, _pos_x(E1), _pos_x(E2), _pos_x(A)) and _in_arc(
                L, _pos_x(E2), _pos_x(E1), _pos_x(B)
            ):
                t1 = (
                    _walk(k, _pos_x(A), _pos_x(E2))
                    + _walk(k, _pos_x(E2), _pos_x(B))
                    + [(("x", E2), zc)]
                )
                t2 = (
                    _walk(k, _pos_x(B), _pos_x(E1))
                    + _walk(k, _pos_x(E1), _pos_x(A))
                    + [(("x", E1), zc)]
                )
                return t1, t2, "3.1"
    for E1, E2 in ((c, c + k), (c + k, c)):
        inside = lambda i: _in_arc(
            L, _pos_x(E1), _pos_x(E2), _pos_x(i), excl_start=True, excl_end=True
        )
        if inside(a) and inside(b):
            A, B = sorted((a, b), key=lambda i: (_pos_x(i) - _pos_x(E1)) % L)
            bp = _x_antipode(k, B)
            zB = _z_of_x(k, B)
            t1 = _walk(k, _pos_x(A), _pos_x(E2)) + [(("x", E2), zc)]
            t2 = (
                [(("x", B), zB), (zB, ("x", bp))]
                + _walk(k, _pos_x(bp), _pos_x(E1))
                + _walk(k, _pos_x(E1), _pos_x(A))
                + [(("x", E1), zc)]
            )
            return t1, t2, "3.2"
    raise AssertionError("3-set with two x and one z matched no subcase")


def _two_z_trees(k, s_pos, zb, zc):
    """Shared construction for the {x,z,z} and {y,z,z} cases.

    The four chord endpoints x_b, x_c, x_{b+k}, x_{c+k} cut the cycle into
    four segments whose endpoints alternate between the two chords; the same
    tree pattern works whichever segment holds the third member of S.
    """
    L = 4 * k
    terms = [zb, zc, zb + k, zc + k]
    owners = [("z", zb), ("z", zc), ("z", zb), ("z", zc)]
    for i in range(4):
        P, Q = terms[i], terms[(i + 1) % 4]
        if _in_arc(L, _pos_x(P), _pos_x(Q), s_pos):
            zp, zq = owners[i], owners[(i + 1) % 4]
            Pb, Qb = _x_antipode(k, P), _x_antipode(k, Q)
            t1 = (
                _walk(k, s_pos, _pos_x(Q))
                + _walk(k, _pos_x(Q), _pos_x(Pb))
                + [(("x", Pb), zp), (("x", Q), zq)]
            )
            t2 = (
                [(zq, ("x", Qb))]
                + _walk(k, _pos_x(Qb), _pos_x(P))
                + _walk(k, _pos_x(P), s_pos)
                + [(("x", P), zp)]
            )
            return t1, t2
    raise AssertionError("cycle position not on any chord segment")


def _case4(k, xs, ys, zs):
    t1, t2 = _two_z_trees(k, _pos_x(xs[0]), zs[0], zs[1])
    return t1, t2, "4"


def _case9(k, xs, ys, zs):
    t1, t2 = _two_z_trees(k, _pos_y(ys[0]), zs[0], zs[1])
    return t1, t2, "9"


def _case5(k, xs, ys, zs):
    assert k >= 3, "three y vertices need k >= 3"
    a, b, c = ys
    L = 4 * k
    for A, B, C in ((a, b, c), (b, c, a), (c, a, b)):
        if 3 * ((_pos_y(B) - _pos_y(A)) % L) <= L:
            break
    a1 = mod_index(A + 1, 2 * k)
    ta = _x_antipode(k, a1)
    za = _z_of_x(k, a1)
    if _in_arc(L, _pos_y(B), _pos_x(ta), _pos_y(C), excl_start=True, excl_end=True):
        b1 = mod_index(B + 1, 2 * k)
        tb = _x_antipode(k, b1)
        zb = _z_of_x(k, b1)
        t1 = (
            _walk(k, _pos_y(A), _pos_y(B))
            + _walk(k, _pos_y(C), _pos_x(ta))
            + [(("x", a1), za), (za, ("x", ta))]
        )
        t2 = (
            _walk(k, _pos_y(B), _pos_y(C))
            + [(("x", b1), zb), (zb, ("x", tb))]
            + _walk(k, _pos_x(tb), _pos_y(A))
        )
        return t1, t2, "5.1"
    t3 = _x_antipode(k, A)
    zA = _z_of_x(k, A)
    t1 = (
        _walk(k, _pos_y(A), _pos_y(B))
        + [(("x", a1), za), (za, ("x", ta))]
        + _walk(k, _pos_x(ta), _pos_y(C))
    )
    t2 = (
        _walk(k, _pos_y(B), _pos_x(t3))
        + [(("x", t3), zA), (zA, ("x", A))]
        + _walk(k, _pos_y(C), _pos_y(A))
    )
    return t1, t2, "5.2"


def _case6(k, xs, ys, zs):
    a, b = ys
    c = xs[0]
    L = 4 * k
    cp = _x_antipode(k, c)
    zc = _z_of_x(k, c)
    for A, B in ((a, b), (b, a)):
        if _in_arc(L, _pos_y(A), _pos_y(B), _pos_x(c)) and _in_arc(
            L, _pos_y(B), _pos_y(A), _pos_x(cp)
        ):
            t1 = _walk(k, _pos_y(A), _pos_y(B))
            t2 = _walk(k, _pos_y(B), _pos_y(A)) + [(("x", c), zc), (zc, ("x", cp))]
            return t1, t2, "6.1"
    for A, B in ((a, b), (b, a)):
        base = _pos_y(A)
        off_b = (_pos_y(B) - base) % L
        off_c = (_pos_x(c) - base) % L
        off_cp = (_pos_x(cp) - base) % L
        if off_b < off_c < off_cp:
            a1 = mod_index(A + 1, 2 * k)
            ta = _x_antipode(k, a1)
            za = _z_of_x(k, a1)
            t1 = (
                _walk(k, _pos_y(A), _pos_y(B))
                + [(("x", a1), za), (za, ("x", ta))]
                + _walk(k, _pos_x(c), _pos_x(ta))
            )
            t2 = (
                _walk(k, _pos_y(B), _pos_x(c))
                + [(("x", c), zc), (zc, ("x", cp))]
                + _walk(k, _pos_x(cp), _pos_y(A))
            )
            return t1, t2, "6.2"
    return None  # cyclic order y_A, y_B, x_{c+k}, x_c: use the mirrored frame


def _case7(k, xs, ys, zs):
    if k == 1:
        t1 = [(("y", 2), ("x", 1)), (("x", 1), ("y", 1)), (("x", 1), ("z", 1))]
        t2 = [(("y", 1), ("x", 2)), (("x", 2), ("y", 2)), (("x", 2), ("z", 1))]
        return t1, t2, "7"
    a, b = ys
    c = zs[0]
    L = 4 * k
    zc = ("z", c)
    for E1, E2 in ((c, c + k), (c + k, c)):
        for A, B in ((a, b), (b, a)):
            if _in_arc(L, _pos_y(A), _pos_y(B), _pos_x(E1)) and _in_arc(
                L, _pos_y(B), _pos_y(A), _pos_x(E2)
            ):
                t1 = _walk(k, _pos_y(A), _pos_y(B)) + [(("x", E1), zc)]
                t2 = _walk(k, _pos_y(B), _pos_y(A)) + [(("x", E2), zc)]
                return t1, t2, "7.1"
    for A, B in ((a, b), (b, a)):
        for E1, E2 in ((c, c + k), (c + k, c)):
            base = _pos_y(A)
            off_b = (_pos_y(B) - base) % L
            o1 = (_pos_x(E1) - base) % L
            o2 = (_pos_x(E2) - base) % L
            if off_b < o1 < o2:
                return _case7_same_segment(k, A, B, E1, E2, c)
    raise AssertionError("y,y,z set matched no subcase")


def _case7_same_segment(k, A, B, E1, E2, c):
    """Both chord ends after y_B; x_{E1} comes first in cyclic order."""
    L = 4 * k
    zc = ("z", c)
    n_between = (B - A) % (2 * k)  # x vertices strictly inside the y_A..y_B arc
    if n_between >= 2:
        a1 = mod_index(A + 1, 2 * k)
        ta = _x_antipode(k, a1)
        tb = _x_antipode(k, B)
        za = _z_of_x(k, a1)
        zb = _z_of_x(k, B)
        t1 = (
            [(("y", A), ("x", a1)), (("x", a1), za), (za, ("x", ta))]
            + _walk(k, _pos_y(B), _pos_x(ta))
            + [(("x", E1), zc)]
        )
        t2 = (
            [(("y", B), ("x", B)), (("x", B), zb), (zb, ("x", tb))]
            + _walk(k, _pos_x(tb), _pos_y(A))
            + [(("x", E2), zc)]
        )
        return t1, t2, "7.2.1"
    # exactly one x between y_A and y_B, so that x is x_B
    bp = _x_antipode(k, B)
    zb = _z_of_x(k, B)
    star = [(("y", A), ("x", B)), (("x", B), ("y", B)), (("x", B), zb), (zb, ("x", bp))]
    c1 = mod_index(E1 + 1, 2 * k)
    if c1 != bp:
        tc1 = _x_antipode(k, c1)
        zc1 = _z_of_x(k, c1)
        t1 = star + _walk(k, _pos_x(bp), _pos_x(E2)) + [(("x", E2), zc)]
        t2 = (
            _walk(k, _pos_y(B), _pos_x(c1))
            + [(("x", c1), zc1), (zc1, ("x", tc1))]
            + _walk(k, _pos_x(tc1), _pos_y(A))
            + [(("x", E1), zc)]
        )
        return t1, t2, "7.2.2a"
    cm1 = mod_index(E1 - 1, 2 * k)
    tcm1 = _x_antipode(k, cm1)
    zcm = _z_of_x(k, cm1)
    t1 = star + _walk(k, _pos_x(E1), _pos_x(bp)) + [(("x", E1), zc)]
    t2 = (
        _walk(k, _pos_y(B), _pos_x(cm1))
        + [(("x", cm1), zcm), (zcm, ("x", tcm1))]
        + _walk(k, _pos_x(tcm1), _pos_x(E2))
        + _walk(k, _pos_x(E2), _pos_y(A))
        + [(("x", E2), zc)]
    )
    return t1, t2, "7.2.2b"


def _case8(k, xs, ys, zs):
    b, c = xs
    a = ys[0]
    L = 4 * k
    pa = _pos_y(a)
    if mod_index(c - b, 2 * k) == k:  # the two x members are antipodal
        for B, C in ((b, c), (c, b)):
            if _in_arc(L, _pos_x(B), _pos_x(C), pa):
                zC = _z_of_x(k, C)
                t1 = _walk(k, pa, _pos_x(C)) + [(("x", C), zC), (zC, ("x", B))]
                t2 = _walk(k, _pos_x(C), _pos_x(B)) + _walk(k, _pos_x(B), pa)
                return t1, t2, "8.0"
        raise AssertionError("y not on either half of an antipodal pair")
    B, C = (b, c) if (c - b) % (2 * k) < k else (c, b)
    Bp, Cp = _x_antipode(k, B), _x_antipode(k, C)
    zB, zC = _z_of_x(k, B), _z_of_x(k, C)
    if _in_arc(L, _pos_x(B), _pos_x(C), pa):
        t1 = (
            _walk(k, _pos_x(B), pa)
            + _walk(k, _pos_x(C), _pos_x(Bp))
            + [(("x", Bp), zB), (zB, ("x", B))]
        )
        t2 = (
            _walk(k, pa, _pos_x(C))
            + [(("x", C), zC), (zC, ("x", Cp))]
            + _walk(k, _pos_x(Cp), _pos_x(B))
        )
        return t1, t2, "8.1"
    if _in_arc(L, _pos_x(C), _pos_x(Bp), pa):
        t1 = _walk(k, _pos_x(B), pa)
        t2 = _walk(k, pa, _pos_x(Cp)) + [
            (("x", Cp), zC),
            (zC, ("x", C)),
            (("x", Bp), zB),
            (zB, ("x", B)),
        ]
        return t1, t2, "8.2"
    if _in_arc(L, _pos_x(Bp), _pos_x(Cp), pa):
        t1 = (
            _walk(k, _pos_x(B), _pos_x(C))
            + [(("x", B), zB), (zB, ("x", Bp))]
            + _walk(k, _pos_x(Bp), pa)
        )
        t2 = _walk(k, pa, _pos_x(B)) + [(("x", Cp), zC), (zC, ("x", C))]
        return t1, t2, "8.3"
    return None  # y between x_{C'} and x_B: the mirrored frame lands in 8.2


def _case10(k, xs, ys, zs):
    b = xs[0]
    a = ys[0]
    c = zs[0]
    L = 4 * k
    pa = _pos_y(a)
    zc = ("z", c)
    if mod_index(b, k) == c:  # x_b is one of the chord's endpoints
        W = _x_antipode(k, b)
        if _in_arc(L, _pos_x(W), _pos_x(b), pa):
            t1 = _walk(k, pa, _pos_x(b)) + [(("x", b), zc)]
            t2 = _walk(k, _pos_x(b), _pos_x(W)) + _walk(k, _pos_x(W), pa) + [(("x", W), zc)]
            return t1, t2, "10.1"
        return None  # y on the other half: use the mirrored frame
    c1 = c if (c - b) % (2 * k) < k else c + k  # chord end first after x_b
    c2 = _x_antipode(k, c1)
    bp = _x_antipode(k, b)
    zb = _z_of_x(k, b)
    if _in_arc(L, _pos_x(b), _pos_x(c1), pa):
        t1 = _walk(k, pa, _pos_x(bp)) + [
            (("x", bp), zb),
            (zb, ("x", b)),
            (("x", c1), zc),
        ]
        t2 = [(zc, ("x", c2))] + _walk(k, _pos_x(c2), pa)
        return t1, t2, "10.2"
    if _in_arc(L, _pos_x(c1), _pos_x(c2), pa):
        t1 = _walk(k, _pos_x(b), pa) + [(("x", c1), zc)]
        t2 = _walk(k, pa, _pos_x(b)) + [(("x", c2), zc)]
        return t1, t2, "10.2"
    t1 = _walk(k, pa, _pos_x(c1)) + [(("x", c1), zc)]
    t2 = (
        [(("x", b), zb), (zb, ("x", bp))]
        + _walk(k, _pos_x(bp), pa)
        + [(("x", c2), zc)]
    )
    return t1, t2, "10.2"


_BUILDERS = {
    1: _case1,
    2: _case2,
    3: _case3,
    4: _case4,
    5: _case5,
    6: _case6,
    7: _case7,
    8: _case8,
    9: _case9,
    10: _case10,
}


def _role_edges_to_ids(h: ExtremalGraph, frame_mirrored: bool, edges) -> tuple[EdgeT, ...]:
    out = set()
    for r1, r2 in edges:
        if frame_mirrored:
            r1 = mirror_role(h.k, r1)
            r2 = mirror_role(h.k, r2)
        u, v = h.vertex_of_role(r1), h.vertex_of_role(r2)
        out.add((u, v) if u < v else (v, u))
    return tuple(sorted(out))


def two_trees(h: ExtremalGraph, s) -> TreeCertificate:
    """Two internally disjoint trees connecting the 3-set s in H(k), k != 2.

    Deterministic: the same (k, s) always yields the identical certificate.
    Raises ValueError for k = 2 and RuntimeError (never expected) if a
    constructed certificate fails verification.
    """
    if h.k == 2:
        raise ValueError("H(2) has no two-tree certificates: its 3-connectivity is 1")
    s = make_triple(h.graph.n, *s)
    case = classify(h, s)
    builder = _BUILDERS[case]
    roles = [h.role_of_vertex(v) for v in s]
    for mirrored in (False, True):
        local = [mirror_role(h.k, r) for r in roles] if mirrored else roles
        xs = sorted(i for t, i in local if t == "x")
        ys = sorted(i for t, i in local if t == "y")
        zs = sorted(i for t, i in local if t == "z")
        built = builder(h.k, xs, ys, zs)
        if built is None:
            continue
        t1, t2, tag = built
        cert = TreeCertificate(
            s,
            (
                _role_edges_to_ids(h, mirrored, t1),
                _role_edges_to_ids(h, mirrored, t2),
            ),
            tag,
        )
        ok, why = verify_certificate(h.graph, cert)
        if not ok:
            raise RuntimeError(
                f"internal: case {tag} produced an invalid certificate for "
                f"S={[role_label(r) for r in roles]} in H({h.k}): {why}"
            )
        return cert
    raise RuntimeError(
        f"internal: no construction matched S={[role_label(r) for r in roles]} in H({h.k})"
    )


@dataclass
class CertifyReport:
    k: int
    total: int
    by_case: dict[str, int]
    failures: list[tuple[tuple[int, int, int], str]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "total": self.total,
            "by_case": dict(sorted(self.by_case.items())),
            "failures": [
                {"S": list(s), "diagnostic": d} for s, d in self.failures
            ],
            "ok": self.ok,
        }


def certify_all(h: ExtremalGraph, collect=None) -> CertifyReport:
    """Run two_trees on every 3-subset of V(H(k)) and tally the subcases.

    collect, if given, receives every certificate (used by the CLI to dump
    them). Any failure aborts the sweep with the offending set's diagnostic.
    """
    if h.k == 2:
        raise ValueError("H(2) has no two-tree certificates: its 3-connectivity is 1")
    counts: Counter[str] = Counter()
    failures: list[tuple[tuple[int, int, int], str]] = []
    total = 0
    for s in combinations(range(h.graph.n), 3):
        total += 1
        cert = two_trees(h, s)  # raises on any internal verification failure
        counts[cert.case_tag] += 1
        if collect is not None:
            collect(cert)
    return CertifyReport(h.k, total, dict(counts), failures)
