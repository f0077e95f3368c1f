"""Verification harness: runs the rigidity checks over generated corpora.

Six check kinds, each producing per-instance records:

  minus_edge        every edge deletion of a prime g2>0 sphere graph stays rigid
  negative_control  stacking then deleting a new edge drops the rank by exactly 1
  missing_face      edges inside missing faces of dimension 2..d-2: engine + certificate
  contraction       d=4 rank identity rank(G-e) = rank(G of contracted) + 4
  star_rigidity     star graphs of faces with |sigma| <= d-3 are rigid (certificates)
  g2_stress         left-kernel dimension of the rigidity matrix equals g2

Records carry the sub-seed that reproduces them.  The machine report format
is one tab-separated line per record (check, instance, verdict, rank,
target, seed), sorted, so equal configurations give byte-identical output.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .certificates import certify_missing_face_edge, certify_star_rigidity, check
from .complexes import SimplicialComplex, intersection
from .generators import (
    boundary_simplex,
    cross_polytope,
    cyclic_polytope_boundary,
    join_simplex_cycle,
    join_spheres,
    random_flip_walk,
    stack_over_facet,
)
from .graphs import graph_of
from .rigidity import (
    DEFAULT_TRIALS,
    Embedding,
    RigidityMatrix,
    decide_rigidity,
    derive_seed,
    random_embedding,
    rigidity_target,
)

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class CheckRecord:
    check: str
    instance: str
    verdict: str
    rank: int | None = None
    target: int | None = None
    seed: int = 0
    elapsed: float = 0.0
    note: str = ""

    def machine_line(self) -> str:
        rank = "-" if self.rank is None else str(self.rank)
        target = "-" if self.target is None else str(self.target)
        return "\t".join(
            [self.check, self.instance, self.verdict, rank, target, str(self.seed)]
        )


@dataclass
class Report:
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)

    def extend(self, other: "Report") -> None:
        self.records.extend(other.records)

    def count(self, verdict: str) -> int:
        return sum(1 for r in self.records if r.verdict == verdict)

    @property
    def ok(self) -> bool:
        return self.count(FAIL) == 0

    def machine_format(self) -> str:
        lines = sorted(r.machine_line() for r in self.records)
        return "\n".join(lines) + "\n"

    def human_format(self) -> str:
        headers = ("check", "instance", "verdict", "rank", "target", "seed", "elapsed")
        rows = [
            (
                r.check,
                r.instance,
                r.verdict,
                "-" if r.rank is None else str(r.rank),
                "-" if r.target is None else str(r.target),
                str(r.seed),
                f"{r.elapsed:.3f}",
            )
            for r in sorted(self.records, key=lambda r: (r.check, r.instance))
        ]
        widths = [
            max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
            for i, h in enumerate(headers)
        ]
        out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
        out.extend("  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in rows)
        out.append(
            f"total: {self.count(PASS)} pass, {self.count(FAIL)} fail, {self.count(SKIP)} skip"
        )
        return "\n".join(out) + "\n"


def face_label(face: Iterable[int]) -> str:
    ordered = sorted(face)
    return "-".join(str(v) for v in ordered) if ordered else "empty"


# -- individual checks ----------------------------------------------------


def verify_minus_edge(
    delta: SimplicialComplex,
    d: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    name: str = "complex",
) -> Report:
    """Every single-edge deletion must leave the graph d-rigid.

    Applies only to prime spheres with positive g2; inputs failing either
    gate produce a single skip record, not failures.
    """
    if d < 4:
        raise ValueError("minus-edge verification needs d >= 4")
    report = Report()
    if not delta.is_prime(d):
        report.add(CheckRecord("minus_edge", name, SKIP, seed=seed, note="not prime"))
        return report
    if delta.g2(d) <= 0:
        report.add(CheckRecord("minus_edge", name, SKIP, seed=seed, note="g2 = 0"))
        return report
    graph = graph_of(delta)
    target = rigidity_target(len(graph.vertices), d)
    for a, b in graph.sorted_edges():
        sub = derive_seed(seed, "minus-edge", name, a, b)
        t0 = time.perf_counter()
        verdict = decide_rigidity(graph.remove_edge(a, b), d, trials, sub)
        report.add(
            CheckRecord(
                "minus_edge",
                f"{name}:e={a}-{b}",
                PASS if verdict.rank == target else FAIL,
                rank=verdict.rank,
                target=target,
                seed=sub,
                elapsed=time.perf_counter() - t0,
            )
        )
    return report


def verify_negative_control(
    gamma: SimplicialComplex,
    d: int,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    name: str = "control",
) -> Report:
    """Stack over a facet, then delete an edge at the new vertex: rank must
    fall short of the rigid target by exactly one."""
    if d != gamma.dim + 1:
        raise ValueError(f"expected d = dim + 1 = {gamma.dim + 1}, got {d}")
    facet = sorted(gamma.sorted_facets()[0])
    v_new = max(gamma.vertices) + 1
    delta = stack_over_facet(gamma, facet, v_new)
    graph = graph_of(delta)
    expected = rigidity_target(len(graph.vertices), d) - 1
    report = Report()
    for u in facet:
        sub = derive_seed(seed, "negative-control", name, u, v_new)
        t0 = time.perf_counter()
        verdict = decide_rigidity(graph.remove_edge(u, v_new), d, trials, sub)
        report.add(
            CheckRecord(
                "negative_control",
                f"{name}:e={u}-{v_new}",
                PASS if verdict.rank == expected else FAIL,
                rank=verdict.rank,
                target=expected,
                seed=sub,
                elapsed=time.perf_counter() - t0,
            )
        )
    return report


def verify_missing_face_lemma(
    delta: SimplicialComplex,
    d: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    name: str = "complex",
) -> Report:
    """Edges inside missing faces of dimension 2..d-2: the graph minus the
    edge must be engine-rigid AND admit a passing Replacement certificate."""
    if d < 4:
        raise ValueError("missing-face verification needs d >= 4")
    report = Report()
    qualifying = [f for f in delta.missing_faces() if 2 <= len(f) - 1 <= d - 2]
    if not qualifying:
        report.add(
            CheckRecord(
                "missing_face",
                f"{name}:vacuous",
                PASS,
                seed=seed,
                note="no missing faces of dimension 2..d-2",
            )
        )
        return report
    graph = graph_of(delta)
    target = rigidity_target(len(graph.vertices), d)
    for sigma in qualifying:
        for a, b in combinations(sorted(sigma), 2):
            sub = derive_seed(seed, "missing-face", name, face_label(sigma), a, b)
            t0 = time.perf_counter()
            verdict = decide_rigidity(graph.remove_edge(a, b), d, trials, sub)
            cert = certify_missing_face_edge(delta, sigma, (a, b), d)
            cert_ok = check(cert, trials, sub)
            report.add(
                CheckRecord(
                    "missing_face",
                    f"{name}:s={face_label(sigma)}:e={a}-{b}",
                    PASS if (verdict.rank == target and cert_ok) else FAIL,
                    rank=verdict.rank,
                    target=target,
                    seed=sub,
                    elapsed=time.perf_counter() - t0,
                    note="" if cert_ok else "certificate rejected",
                )
            )
    return report


def verify_contraction_reduction(
    delta: SimplicialComplex,
    e: Iterable[int],
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    name: str = "complex",
) -> Report:
    """The d=4 contraction identity rank(Rig(G-e)) = rank(Rig(G of the
    contraction)) + 4, checked at a degenerate embedding that merges the
    endpoints and again at independent generic points.

    Qualification: the edge's link has >= 4 vertices and equals the
    intersection of the endpoint links.  Unqualified edges are skips.
    """
    if delta.dim != 3:
        raise ValueError("contraction verification is specific to 3-spheres (d = 4)")
    edge = frozenset(e)
    a, b = sorted(edge)
    base = f"{name}:e={a}-{b}"
    report = Report()
    link_e = delta.link(edge)
    if len(link_e.vertices) < 4:
        report.add(
            CheckRecord("contraction", base, SKIP, seed=seed, note="link has < 4 vertices")
        )
        return report
    if intersection(delta.link([a]), delta.link([b])) != link_e:
        report.add(
            CheckRecord(
                "contraction", base, SKIP, seed=seed,
                note="link(e) != link(a) * link(b) intersection",
            )
        )
        return report
    v_new = max(delta.vertices) + 1
    contracted = delta.contract_edge(edge, v_new)
    g_minus = graph_of(delta).remove_edge(a, b)
    g_down = graph_of(contracted)
    sub = derive_seed(seed, "contraction", name, a, b)

    # degenerate point: both endpoints at the same random location, and the
    # merged vertex of the contraction placed right there
    t0 = time.perf_counter()
    phi = random_embedding(g_minus, 4, derive_seed(sub, "degenerate"))
    shared = phi.coords[a]
    coords = dict(phi.coords)
    coords[b] = shared
    down_coords = {v: coords[v] for v in g_down.vertices if v != v_new}
    down_coords[v_new] = shared
    lhs = RigidityMatrix(g_minus, Embedding(4, coords)).rank()
    rhs = RigidityMatrix(g_down, Embedding(4, down_coords)).rank()
    report.add(
        CheckRecord(
            "contraction",
            f"{base}:degenerate",
            PASS if lhs == rhs + 4 else FAIL,
            rank=lhs,
            target=rhs + 4,
            seed=sub,
            elapsed=time.perf_counter() - t0,
        )
    )

    t0 = time.perf_counter()
    lhs_gen = decide_rigidity(g_minus, 4, trials, derive_seed(sub, "generic-minus")).rank
    rhs_gen = decide_rigidity(g_down, 4, trials, derive_seed(sub, "generic-down")).rank
    report.add(
        CheckRecord(
            "contraction",
            f"{base}:generic",
            PASS if lhs_gen == rhs_gen + 4 else FAIL,
            rank=lhs_gen,
            target=rhs_gen + 4,
            seed=sub,
            elapsed=time.perf_counter() - t0,
        )
    )
    return report


def verify_star_rigidity(
    delta: SimplicialComplex,
    d: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    name: str = "complex",
) -> Report:
    """Certificates for the stars of all faces with |sigma| <= d-3 must pass."""
    if d != delta.dim + 1:
        raise ValueError(f"expected d = dim + 1 = {delta.dim + 1}, got {d}")
    if d < 4:
        raise ValueError("star verification needs d >= 4")
    report = Report()
    faces: list[frozenset[int]] = [frozenset()]
    for size in range(1, d - 2):
        faces.extend(sorted(delta.faces_of_dim(size - 1), key=sorted))
    for face in faces:
        sub = derive_seed(seed, "star", name, face_label(face))
        t0 = time.perf_counter()
        cert = certify_star_rigidity(delta, face, d)
        ok = check(cert, trials, sub)
        report.add(
            CheckRecord(
                "star_rigidity",
                f"{name}:s={face_label(face)}",
                PASS if ok else FAIL,
                seed=sub,
                elapsed=time.perf_counter() - t0,
            )
        )
    return report


def verify_g2_stress(
    delta: SimplicialComplex,
    d: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    name: str = "complex",
) -> Report:
    """The stress space dimension (edges minus rank) must equal g2."""
    if d != delta.dim + 1:
        raise ValueError(f"expected d = dim + 1 = {delta.dim + 1}, got {d}")
    sub = derive_seed(seed, "g2-stress", name)
    t0 = time.perf_counter()
    verdict = decide_rigidity(graph_of(delta), d, trials, sub)
    g2 = delta.g2(d)
    report = Report()
    report.add(
        CheckRecord(
            "g2_stress",
            name,
            PASS if verdict.stress_dim == g2 else FAIL,
            rank=verdict.stress_dim,
            target=g2,
            seed=sub,
            elapsed=time.perf_counter() - t0,
        )
    )
    return report


# -- corpus and suite -----------------------------------------------------


@dataclass
class CorpusEntry:
    name: str
    complex: SimplicialComplex
    d: int
    expected: dict

    def validate(self) -> None:
        """Recompute the expected invariants; raise on any mismatch."""
        actual = {
            "prime": self.complex.is_prime(self.d),
            "g2": self.complex.g2(self.d),
        }
        actual["stacked"] = actual["g2"] == 0 if self.d >= 4 else None
        if actual != self.expected:
            raise ValueError(
                f"corpus entry {self.name}: stored {self.expected}, recomputed {actual}"
            )


def _entry(name: str, delta: SimplicialComplex, d: int) -> CorpusEntry:
    g2 = delta.g2(d)
    expected = {
        "prime": delta.is_prime(d),
        "g2": g2,
        "stacked": g2 == 0 if d >= 4 else None,
    }
    return CorpusEntry(name, delta, d, expected)


FAMILIES = ("simplex", "cross-polytope", "joins", "cyclic", "flip-walks", "negative-control")
DEFAULT_FAMILIES = ("simplex", "cross-polytope", "joins", "cyclic", "flip-walks")

FLIP_WALK_KEEP = 6
FLIP_WALK_MAX_VERTICES = 11


def flip_walk_corpus(
    seed: int,
    count: int = FLIP_WALK_KEEP,
    walk_steps: int = 10,
    max_vertices: int = FLIP_WALK_MAX_VERTICES,
    max_walks: int = 200,
) -> list[SimplicialComplex]:
    """Distinct prime 3-spheres with g2 > 0 harvested from short seeded flip walks.

    Walks start at the 4-cross-polytope and run unfiltered; outputs are kept
    only when small enough to test cheaply (primeness scans scale badly with
    the vertex count, and long walks drift toward many-vertex spheres).
    """
    start = cross_polytope(4)
    seen: set[frozenset[frozenset[int]]] = set()
    out: list[SimplicialComplex] = []
    for walk_index in range(max_walks):
        if len(out) >= count:
            break
        walk = random_flip_walk(
            start, walk_steps, seed=derive_seed(seed, "walk", walk_index)
        )
        for delta in walk:
            if len(delta.vertices) > max_vertices or delta.facets in seen:
                continue
            if delta.g2(4) <= 0 or not delta.is_prime(4):
                continue
            seen.add(delta.facets)
            out.append(delta)
            if len(out) >= count:
                break
    return out


def build_corpus(families: Iterable[str], dims: Iterable[int], seed: int) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    for family in families:
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    for family in families:
        if family == "negative-control":
            continue  # handled by run_suite, not a corpus of spheres to sweep
        for d in dims:
            if family == "simplex":
                entries.append(_entry(f"simplex-d{d}", boundary_simplex(d), d))
            elif family == "cross-polytope":
                entries.append(_entry(f"cross-d{d}", cross_polytope(d), d))
            elif family == "joins":
                for p in range(2, d // 2 + 1):
                    entries.append(
                        _entry(f"join-spheres-{p}-{d - p}", join_spheres(p, d - p), d)
                    )
                for k in (4, 5, 6):
                    entries.append(
                        _entry(f"join-cycle-d{d}-k{k}", join_simplex_cycle(d, k), d)
                    )
            elif family == "cyclic":
                for n in (d + 2, d + 3):
                    entries.append(
                        _entry(f"cyclic-{n}-{d}", cyclic_polytope_boundary(n, d), d)
                    )
            elif family == "flip-walks":
                if d != 4:
                    continue
                walk = flip_walk_corpus(derive_seed(seed, "corpus-walk"))
                entries.extend(
                    _entry(f"flip-walk-{i}", delta, 4) for i, delta in enumerate(walk)
                )
    return entries


@dataclass
class SuiteConfig:
    families: tuple[str, ...] = DEFAULT_FAMILIES
    dims: tuple[int, ...] = (4, 5, 6)
    trials: int = DEFAULT_TRIALS
    seed: int = 0

    @classmethod
    def from_file(cls, path: str, base: "SuiteConfig | None" = None) -> "SuiteConfig":
        with open(path) as fh:
            return cls.from_text(fh.read(), base)

    @classmethod
    def from_text(cls, text: str, base: "SuiteConfig | None" = None) -> "SuiteConfig":
        config = base if base is not None else cls()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"config line {lineno}: expected key=value, got {line!r}")
            key, value = key.strip(), value.strip()
            if key == "families":
                config.families = tuple(t.strip() for t in value.split(",") if t.strip())
            elif key == "dims":
                if ".." in value:
                    lo, hi = value.split("..")
                    config.dims = tuple(range(int(lo), int(hi) + 1))
                else:
                    config.dims = tuple(int(t) for t in value.split(",") if t.strip())
            elif key == "trials":
                config.trials = int(value)
            elif key == "seed":
                config.seed = int(value)
            else:
                raise ValueError(f"config line {lineno}: unknown key {key!r}")
        for family in config.families:
            if family not in FAMILIES:
                raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
        if any(d < 4 for d in config.dims):
            raise ValueError("suite dimensions must be >= 4")
        return config


def run_suite(config: SuiteConfig) -> Report:
    """Run every applicable check over the configured corpus."""
    corpus = build_corpus(config.families, config.dims, config.seed)
    for entry in corpus:
        entry.validate()
    trials, seed = config.trials, config.seed
    report = Report()
    for entry in corpus:
        base = derive_seed(seed, entry.name)
        report.extend(
            verify_minus_edge(entry.complex, entry.d, trials, base, name=entry.name)
        )
        report.extend(
            verify_missing_face_lemma(entry.complex, entry.d, trials, base, name=entry.name)
        )
        report.extend(
            verify_star_rigidity(entry.complex, entry.d, trials, base, name=entry.name)
        )
        report.extend(
            verify_g2_stress(entry.complex, entry.d, trials, base, name=entry.name)
        )
        if entry.d == 4:
            for edge in graph_of(entry.complex).sorted_edges():
                report.extend(
                    verify_contraction_reduction(
                        entry.complex, edge, base, trials, name=entry.name
                    )
                )
    if "negative-control" in config.families:
        for d in config.dims:
            for label, gamma in (
                (f"control-simplex-d{d}", boundary_simplex(d)),
                (f"control-cross-d{d}", cross_polytope(d)),
            ):
                report.extend(
                    verify_negative_control(
                        gamma, d, derive_seed(seed, label), trials, name=label
                    )
                )
    return report
