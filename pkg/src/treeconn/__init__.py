"""treeconn: exact generalized 3-connectivity.

Computes kappa(S) (the most internally disjoint trees connecting a 3-set)
and kappa_3 (its minimum over all 3-sets) by exact search, constructs the
tight family H(k) with 5k vertices and 6k edges, certifies kappa_3(H(k)) = 2
through explicit two-tree certificates, and audits the sharp edge bound
5e >= 6n for graphs of 3-connectivity 2.
"""

from .bounds import (
    BoundAudit,
    audit,
    enumerate_lemma22_candidates,
    figure1_graph,
    figure2_graph,
    kappa3_le_2_when_sparse,
    lemma22_census,
    sweep_bound,
    verify_lemma22,
)
from .casetrees import (
    CertifyReport,
    TreeCertificate,
    certify_all,
    classify,
    two_trees,
    verify_certificate,
)
from .cycles import CycleWalk, mod_index, segment
from .enumeration import canonical_form, connected_graph_classes, graph_classes
from .extremal import ExtremalGraph, build_H, mirror_role, parse_role_label, role_label
from .graphio import (
    Graph6Error,
    GraphDocument,
    emit_dot,
    emit_graph6,
    emit_json,
    parse_dot,
    parse_graph6,
    parse_json,
)
from .graphs import Graph, complete_graph, cycle_graph, make_triple, path_graph
from .oracle import (
    Kappa3Result,
    PackingResult,
    kappa3,
    kappa_set,
    lemma1_upper_bound,
    packing_exists,
)

__version__ = "0.1.0"
