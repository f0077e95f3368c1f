"""Checkable proof trees for generic-rigidity claims.

A Certificate asserts "this graph is generically d-rigid" and justifies it
by one rule: a direct rank test (RankLeaf), completeness (CompleteLeaf), or
one of the composition rules Cone, Gluing, Replacement, GluingVariant whose
children certify the ingredient graphs.  check() walks the tree, validating
at each node that the claim graph really is the one the rule builds from
its children and that the rule's side conditions hold; only leaves ever
touch the rank engine.  The composition rules themselves are trusted.

Malformed trees (wrong child counts, missing rule data, claim graph not
matching the construction) raise CertificateError with the node path;
violated side conditions make check() return False.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .complexes import SimplicialComplex
from .graphs import Graph, complete_graph, cone_graph, graph_of, union
from .rigidity import DEFAULT_TRIALS, decide_rigidity, derive_seed

RULES = ("RankLeaf", "CompleteLeaf", "Cone", "Gluing", "Replacement", "GluingVariant")


class CertificateError(Exception):
    """A structurally invalid certificate; the message carries the node path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"at {path}: {message}")
        self.path = path


@dataclass(frozen=True)
class Certificate:
    """One node of a rigidity proof tree.

    rule_data lives in the optional fields: apex (Cone), subset (Replacement's
    U), edge (GluingVariant's {a,b}).  Children appear in rule order, e.g.
    Replacement expects [restriction certificate, completed-graph certificate].
    """

    graph: Graph
    d: int
    rule: str
    children: tuple["Certificate", ...] = ()
    apex: int | None = None
    subset: frozenset[int] | None = None
    edge: frozenset[int] | None = None

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")


def _engine_rigid(graph: Graph, d: int, trials: int, seed: int) -> bool:
    # graphs on <= d vertices fall outside the rank target; rigid iff complete
    n = len(graph.vertices)
    if n <= d:
        return len(graph.edges) == n * (n - 1) // 2
    return decide_rigidity(graph, d, trials, seed).is_rigid


def check(
    cert: Certificate,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    cross_check: bool = False,
) -> bool:
    """Validate a certificate tree.

    With cross_check every internal node's claim is additionally re-tested
    by the rank engine (for exercising the calculus in tests; normally the
    composition rules are taken on faith).
    """
    return _check(cert, trials, seed, cross_check, "root")


def _check(node: Certificate, trials: int, seed: int, cross_check: bool, path: str) -> bool:
    def fail(message: str):
        raise CertificateError(path, message)

    def recurse() -> bool:
        return all(
            _check(ch, trials, seed, cross_check, f"{path}.{i}")
            for i, ch in enumerate(node.children)
        )

    d = node.d
    if d < 1:
        fail("dimension must be >= 1")

    if node.rule in ("RankLeaf", "CompleteLeaf"):
        if node.children:
            fail(f"{node.rule} takes no children")
        if node.apex is not None or node.subset is not None or node.edge is not None:
            fail(f"{node.rule} takes no rule data")
        if node.rule == "CompleteLeaf":
            n = len(node.graph.vertices)
            return n >= d + 1 and len(node.graph.edges) == n * (n - 1) // 2
        return _engine_rigid(node.graph, d, trials, derive_seed(seed, "leaf", path))

    if node.rule == "Cone":
        if len(node.children) != 1:
            fail("Cone takes exactly one child")
        if node.apex is None:
            fail("Cone needs an apex")
        child = node.children[0]
        if child.d != d - 1:
            fail(f"Cone child must claim dimension {d - 1}, claims {child.d}")
        if node.apex in child.graph.vertices:
            fail(f"apex {node.apex} already in the child graph")
        if node.graph != cone_graph(child.graph, node.apex):
            fail("claim graph is not the cone over the child graph")
        ok = recurse()
    elif node.rule == "Gluing":
        if len(node.children) != 2:
            fail("Gluing takes exactly two children")
        g1, g2 = (ch.graph for ch in node.children)
        if any(ch.d != d for ch in node.children):
            fail("Gluing children must claim the same dimension")
        if node.graph != union(g1, g2):
            fail("claim graph is not the union of the children")
        if len(g1.vertices & g2.vertices) < d:
            return False
        ok = recurse()
    elif node.rule == "Replacement":
        if len(node.children) != 2:
            fail("Replacement takes exactly two children")
        if node.subset is None:
            fail("Replacement needs the subset U")
        if any(ch.d != d for ch in node.children):
            fail("Replacement children must claim the same dimension")
        subset = node.subset
        if not subset <= node.graph.vertices:
            fail("U is not a subset of the claim graph's vertices")
        restricted, completed = node.children
        if restricted.graph.vertices != subset:
            fail("first child must claim a graph on exactly U")
        if not restricted.graph.edges <= node.graph.restrict(subset).edges:
            fail("first child's graph is not a subgraph of the claim restricted to U")
        if completed.graph != union(node.graph, complete_graph(subset)):
            fail("second child must claim the claim graph with U completed")
        ok = recurse()
    elif node.rule == "GluingVariant":
        if len(node.children) != 2:
            fail("GluingVariant takes exactly two children")
        if node.edge is None or len(node.edge) != 2:
            fail("GluingVariant needs the edge {a,b}")
        if any(ch.d != d for ch in node.children):
            fail("GluingVariant children must claim the same dimension")
        g1 = node.children[0].graph
        augmented = node.children[1].graph
        if node.edge not in augmented.edges:
            fail("second child's graph must contain the edge {a,b}")
        a, b = sorted(node.edge)
        g2 = augmented.remove_edge(a, b)
        if node.graph != union(g1, g2):
            fail("claim graph is not the union of the two glued graphs")
        shared = g1.vertices & g2.vertices
        if len(shared) < d or not node.edge <= shared:
            return False
        if g1.restrict(shared) != g2.restrict(shared):
            return False
        ok = recurse()
    else:  # pragma: no cover - __post_init__ rejects unknown rules
        fail(f"unknown rule {node.rule}")

    if ok and cross_check:
        ok = _engine_rigid(node.graph, d, trials, derive_seed(seed, "cross", path))
    return ok


def certify_star_rigidity(delta: SimplicialComplex, sigma: Iterable[int], d: int) -> Certificate:
    """Certificate that the star of a face has a d-rigid graph.

    The star is the join of the face with its link, so the certificate is a
    tower of Cone rules over a rank test of the link's graph in dimension
    d - |sigma|.  An empty face gives a bare rank leaf for the whole graph.
    """
    if d != delta.dim + 1:
        raise ValueError(f"expected d = dim + 1 = {delta.dim + 1}, got {d}")
    face = frozenset(sigma)
    if not delta.has_face(face):
        raise ValueError(f"{sorted(face)} is not a face")
    if len(face) > d - 3:
        raise ValueError(f"star certificates need |sigma| <= d-3, got {len(face)}")
    if not face:
        return Certificate(graph=graph_of(delta), d=d, rule="RankLeaf")
    link_graph = graph_of(delta.link(face))
    cert = Certificate(graph=link_graph, d=d - len(face), rule="RankLeaf")
    for apex in sorted(face):
        cert = Certificate(
            graph=cone_graph(cert.graph, apex),
            d=cert.d + 1,
            rule="Cone",
            children=(cert,),
            apex=apex,
        )
    assert cert.graph == graph_of(delta.star(face))
    return cert


def certify_missing_face_edge(
    delta: SimplicialComplex, sigma: Iterable[int], e: Iterable[int], d: int
) -> Certificate:
    """Certificate that deleting an edge inside a missing face keeps the graph d-rigid.

    For a missing face sigma of dimension 2..d-2 and an edge e inside it,
    the graph minus e restricted to W = V(star(sigma - e)) still contains
    the star's rigid graph, and completing W recovers a supergraph of the
    full graph; the Replacement rule combines the two.
    """
    if d != delta.dim + 1:
        raise ValueError(f"expected d = dim + 1 = {delta.dim + 1}, got {d}")
    face = frozenset(sigma)
    if delta.has_face(face) or not all(delta.has_face(face - {v}) for v in face):
        raise ValueError(f"{sorted(face)} is not a missing face")
    k = len(face) - 1
    if not 2 <= k <= d - 2:
        raise ValueError(f"missing face must have dimension in [2, {d - 2}], got {k}")
    edge = frozenset(e)
    if len(edge) != 2 or not edge <= face:
        raise ValueError(f"{sorted(edge)} is not an edge inside {sorted(face)}")
    tau = face - edge
    star_cert = certify_star_rigidity(delta, tau, d)
    w = delta.star(tau).vertices
    a, b = sorted(edge)
    claim = graph_of(delta).remove_edge(a, b)
    completed = Certificate(graph=union(claim, complete_graph(w)), d=d, rule="RankLeaf")
    return Certificate(
        graph=claim,
        d=d,
        rule="Replacement",
        children=(star_cert, completed),
        subset=frozenset(w),
    )


# -- text form ------------------------------------------------------------


def _graph_text(g: Graph) -> str:
    vs = ",".join(str(v) for v in sorted(g.vertices))
    es = ",".join(f"{a}-{b}" for a, b in g.sorted_edges())
    return f"{vs};{es}"


def _graph_from_text(text: str) -> Graph:
    vs_part, _, es_part = text.partition(";")
    vertices = [int(t) for t in vs_part.split(",") if t]
    edges = []
    for item in es_part.split(","):
        if item:
            a, _, b = item.partition("-")
            edges.append((int(a), int(b)))
    return Graph(vertices, edges)


def serialize(cert: Certificate, indent: int = 0) -> str:
    """Nested text form of a certificate: one parenthesized node per line."""
    pad = "  " * indent
    parts = [cert.rule, f"d={cert.d}"]
    if cert.apex is not None:
        parts.append(f"apex={cert.apex}")
    if cert.subset is not None:
        parts.append("U=" + ",".join(str(v) for v in sorted(cert.subset)))
    if cert.edge is not None:
        a, b = sorted(cert.edge)
        parts.append(f"e={a}-{b}")
    parts.append("graph=" + _graph_text(cert.graph))
    head = pad + "(" + " ".join(parts)
    if not cert.children:
        return head + ")"
    lines = [head]
    lines.extend(serialize(ch, indent + 1) for ch in cert.children)
    return "\n".join(lines) + ")"


def parse(text: str) -> Certificate:
    """Inverse of serialize; whitespace-insensitive."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def node() -> Certificate:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != "(":
            raise ValueError("expected '('")
        pos += 1
        if pos >= len(tokens) or tokens[pos] in "()":
            raise ValueError("expected a rule name")
        rule = tokens[pos]
        pos += 1
        fields: dict[str, str] = {}
        children: list[Certificate] = []
        while pos < len(tokens) and tokens[pos] != ")":
            if tokens[pos] == "(":
                children.append(node())
            else:
                key, sep, value = tokens[pos].partition("=")
                if not sep:
                    raise ValueError(f"bad token {tokens[pos]!r}")
                fields[key] = value
                pos += 1
        if pos >= len(tokens):
            raise ValueError("unbalanced parentheses")
        pos += 1
        if "d" not in fields or "graph" not in fields:
            raise ValueError(f"node {rule} lacks d= or graph=")
        apex = int(fields["apex"]) if "apex" in fields else None
        subset = (
            frozenset(int(t) for t in fields["U"].split(",") if t)
            if "U" in fields
            else None
        )
        edge = None
        if "e" in fields:
            a, _, b = fields["e"].partition("-")
            edge = frozenset((int(a), int(b)))
        return Certificate(
            graph=_graph_from_text(fields["graph"]),
            d=int(fields["d"]),
            rule=rule,
            children=tuple(children),
            apex=apex,
            subset=subset,
            edge=edge,
        )

    result = node()
    if pos != len(tokens):
        raise ValueError("trailing tokens after the root node")
    return result
