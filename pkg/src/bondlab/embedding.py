"""Rotation-system embeddings with edge signatures.

An embedding of a connected graph is stored as a cyclic neighbor order
per vertex plus a sign per edge. Faces are traced on (dart, orientation)
states: from dart u->v arriving at v with positive accumulated sign the
walk continues with the rotation successor of the reverse dart, with
negative sign the predecessor, and crossing a negative edge toggles the
sign. Orbits of this map come in mirror pairs; each pair is one face, so
the face walks together have total length 2|E|.

Orientability is decided by signature reduction over a spanning tree:
flip vertices until every tree edge is positive, then the embedding is
orientable iff no negative non-tree edge remains.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import (
    BudgetExceeded,
    InternalError,
    InvalidRotation,
    ParseError,
    RequiresConnected,
)
from .graphs import Graph, bits, build_graph, is_connected

DEFAULT_TRACE_BUDGET = 10**8


@dataclass(frozen=True)
class RotationSystem:
    """graph + cyclic neighbor order per vertex + set of negative edges."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    negative: frozenset[tuple[int, int]] = frozenset()

    def sign(self, u: int, v: int) -> int:
        return -1 if (min(u, v), max(u, v)) in self.negative else 1


@dataclass(frozen=True)
class FaceTrace:
    """Face boundary walks as dart sequences.

    ``faces[i]`` is a closed walk of darts (u, v). Each edge side is
    traversed exactly once over all walks, so the walk lengths sum to
    2|E|. ``side_face[(u, v, s)]`` is the face on side ``s`` of the dart
    u->v; ``dart_to_face`` maps each dart to the face on its positive
    side (for all-positive embeddings this is exactly the walk that
    contains the dart).
    """

    faces: tuple[tuple[tuple[int, int], ...], ...]
    side_face: dict
    dart_to_face: dict

    def face_lengths(self) -> tuple[int, ...]:
        return tuple(len(walk) for walk in self.faces)

    def edge_side_lengths(self, u: int, v: int) -> tuple[int, int]:
        """Walk lengths of the faces on the two sides of edge uv."""
        f1 = self.side_face[(u, v, 0)]
        f2 = self.side_face[(u, v, 1)]
        return len(self.faces[f1]), len(self.faces[f2])


@dataclass(frozen=True)
class EmbeddingSummary:
    v: int
    e: int
    f: int
    euler_genus: int
    orientable: bool
    genus: int


@dataclass(frozen=True)
class GenusBudget:
    max_traces: int = DEFAULT_TRACE_BUDGET

    def __post_init__(self):
        if self.max_traces < 1:
            raise InvalidRotation("budget must allow at least one trace")


def rotation_system(g: Graph, rotation=None, negative=()) -> RotationSystem:
    """Rotation system with the given (default sorted-neighbor) rotation."""
    if rotation is None:
        rotation = tuple(tuple(g.neighbors(v)) for v in range(g.n))
    else:
        rotation = tuple(tuple(r) for r in rotation)
    neg = frozenset((min(u, v), max(u, v)) for u, v in negative)
    return validate_embedding(RotationSystem(g, rotation, neg))


def validate_embedding(rs: RotationSystem) -> RotationSystem:
    """Check both structural invariants; returns the same value."""
    g = rs.graph
    if len(rs.rotation) != g.n:
        raise InvalidRotation("rotation must cover every vertex")
    for v in range(g.n):
        row = rs.rotation[v]
        if sorted(row) != g.neighbors(v):
            raise InvalidRotation(
                f"rotation of {v} is not a permutation of its neighbors"
            )
    edge_set = set(g.edges())
    for e in rs.negative:
        if e not in edge_set:
            raise InvalidRotation(f"signature lists non-edge {e}")
    return rs


def flip_vertex(rs: RotationSystem, v: int) -> RotationSystem:
    """Reverse v's rotation and negate the signs of its incident edges."""
    rotation = list(rs.rotation)
    rotation[v] = tuple(reversed(rotation[v]))
    negative = set(rs.negative)
    for w in rs.graph.neighbors(v):
        e = (min(v, w), max(v, w))
        if e in negative:
            negative.discard(e)
        else:
            negative.add(e)
    return RotationSystem(rs.graph, tuple(rotation), frozenset(negative))


# ---------------------------------------------------------------------------
# dart-level machinery
#
# edge i = (u, v) with u < v owns dart 2i (u->v) and dart 2i+1 (v->u).
# succ[d]/pred[d] give the next/previous out-dart in the rotation at the
# source vertex of out-dart d. A trace state is (dart << 1) | signbit.

def _dart_tables(g: Graph, rotation):
    edges = g.edges()
    dart_of = {}
    for i, (u, v) in enumerate(edges):
        dart_of[(u, v)] = 2 * i
        dart_of[(v, u)] = 2 * i + 1
    m2 = 2 * len(edges)
    succ = [0] * m2
    pred = [0] * m2
    for v in range(g.n):
        ds = [dart_of[(v, w)] for w in rotation[v]]
        k = len(ds)
        for i in range(k):
            succ[ds[i]] = ds[(i + 1) % k]
            pred[ds[i]] = ds[i - 1]
    return edges, dart_of, succ, pred


def _negative_dart_bits(edges, negative):
    neg = [0] * (2 * len(edges))
    for i, e in enumerate(edges):
        if e in negative:
            neg[2 * i] = 1
            neg[2 * i + 1] = 1
    return neg


def _face_count_positive(succ, m2: int) -> int:
    """Face count of an all-positive rotation (classical dart orbits)."""
    seen = bytearray(m2)
    count = 0
    for start in range(m2):
        if seen[start]:
            continue
        count += 1
        d = start
        while not seen[d]:
            seen[d] = 1
            d = succ[d ^ 1]
    return count


def _face_count_signed(succ, pred, neg, m2: int) -> int:
    """Face count with signature: mirror-paired orbits on 2*m2 states."""
    seen = bytearray(2 * m2)
    orbits = 0
    for start in range(2 * m2):
        if seen[start]:
            continue
        orbits += 1
        st = start
        while not seen[st]:
            seen[st] = 1
            d = st >> 1
            nd = pred[d ^ 1] if st & 1 else succ[d ^ 1]
            st = (nd << 1) | ((st & 1) ^ neg[nd])
    if orbits % 2:
        raise InternalError("face orbits failed to pair up")
    return orbits // 2


def trace_faces(rs: RotationSystem) -> FaceTrace:
    """Face boundary walks of the 2-cell embedding determined by rs."""
    validate_embedding(rs)
    g = rs.graph
    if not is_connected(g):
        raise RequiresConnected("face tracing needs a connected graph")
    edges, _, succ, pred = _dart_tables(g, rs.rotation)
    m2 = 2 * len(edges)
    if m2 == 0:
        # K_1 on the sphere: a single face with an empty boundary walk
        return FaceTrace(((),), {}, {})
    neg = _negative_dart_bits(edges, rs.negative)

    def endpoints(d):
        u, v = edges[d >> 1]
        return (u, v) if d % 2 == 0 else (v, u)

    consumed = bytearray(2 * m2)
    faces = []
    side_face = {}
    for start in range(2 * m2):
        if consumed[start]:
            continue
        face_id = len(faces)
        walk = []
        orbit = []
        st = start
        while not consumed[st]:
            consumed[st] = 1
            orbit.append(st)
            walk.append(endpoints(st >> 1))
            d = st >> 1
            nd = pred[d ^ 1] if st & 1 else succ[d ^ 1]
            st = (nd << 1) | ((st & 1) ^ neg[nd])
        if st != start:
            raise InternalError("face walk closed on an interior state")
        # The reverse traversal of this walk is a second orbit over the
        # same edge sides; consume it silently under the same face id.
        members = set(orbit)
        for member in orbit:
            d, s = member >> 1, member & 1
            mirror = ((d ^ 1) << 1) | (s ^ 1 ^ neg[d])
            if mirror in members:
                raise InternalError("face orbit is its own mirror")
            consumed[mirror] = 1
            u, v = endpoints(d)
            side_face[(u, v, s)] = face_id
            mu, mv = endpoints(d ^ 1)
            side_face[(mu, mv, s ^ 1 ^ neg[d])] = face_id
        faces.append(tuple(walk))

    dart_to_face = {}
    for u, v in edges:
        dart_to_face[(u, v)] = side_face[(u, v, 0)]
        dart_to_face[(v, u)] = side_face[(v, u, 0)]
    return FaceTrace(tuple(faces), side_face, dart_to_face)


def is_orientable_embedding(rs: RotationSystem) -> bool:
    """True iff the signature reduces to all-positive by vertex flips."""
    g = rs.graph
    if not is_connected(g):
        raise RequiresConnected("orientability needs a connected graph")
    sign = [0] * g.n
    sign[0] = 1
    stack = [0]
    tree = set()
    while stack:
        v = stack.pop()
        for w in bits(g.adj[v]):
            if sign[w] == 0:
                sign[w] = sign[v] * rs.sign(v, w)
                tree.add((min(v, w), max(v, w)))
                stack.append(w)
    for u, v in g.edges():
        if (u, v) in tree:
            continue
        if sign[u] * rs.sign(u, v) * sign[v] != 1:
            return False
    return True


def embedding_summary(rs: RotationSystem) -> EmbeddingSummary:
    """Counts and genus of the surface carried by the embedding."""
    g = rs.graph
    m = g.edge_count()
    if m == 0:
        return EmbeddingSummary(v=g.n, e=0, f=1, euler_genus=0, orientable=True, genus=0)
    faces = trace_faces(rs)
    return _summary_from_face_count(rs, len(faces.faces))


def _summary_from_face_count(rs: RotationSystem, f: int) -> EmbeddingSummary:
    g = rs.graph
    m = g.edge_count()
    euler_genus = 2 - (g.n - m + f)
    orientable = is_orientable_embedding(rs)
    if orientable:
        if euler_genus % 2:
            raise InternalError("orientable embedding with odd Euler genus")
        genus = euler_genus // 2
    else:
        if euler_genus < 1:
            raise InternalError("non-orientable embedding with Euler genus < 1")
        genus = euler_genus
    return EmbeddingSummary(g.n, m, f, euler_genus, orientable, genus)


# ---------------------------------------------------------------------------
# minimum genus by exhaustive search

def _girth(g: Graph):
    """Length of a shortest cycle, or None for forests. BFS per vertex."""
    best = None
    for src in range(g.n):
        dist = {src: 0}
        parent = {src: -1}
        queue = [src]
        while queue:
            nxt = []
            for v in queue:
                for w in bits(g.adj[v]):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        nxt.append(w)
                    elif w != parent[v]:
                        cyc = dist[v] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
            queue = nxt
    return best


def _genus_floor(g: Graph) -> tuple[int, int]:
    """Admissible (orientable, non-orientable) genus lower bounds.

    Face walks of a connected simple graph on >= 3 vertices have length
    at least 3, and at least the girth when the minimum degree is 2 or
    more (a shorter walk would contain a shorter cycle).
    """
    n, m = g.n, g.edge_count()
    if m < n:                       # acyclic
        return 0, 1
    dmin = min(g.degree(v) for v in range(g.n))
    girth = _girth(g)
    min_face = girth if (dmin >= 2 and girth is not None) else 3
    face_cap = (2 * m) // min_face
    eg = 2 - n + m - face_cap
    return max(0, (eg + 1) // 2), max(1, eg)


def _vertex_rotations(g: Graph):
    """Per-vertex list of cyclic neighbor orders (first neighbor anchored)."""
    choices = []
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if len(nbrs) <= 2:
            choices.append([tuple(nbrs)])
        else:
            head, tail = nbrs[0], nbrs[1:]
            choices.append([(head,) + p for p in permutations(tail)])
    return choices


def _spanning_tree_edges(g: Graph) -> set[tuple[int, int]]:
    seen = 1
    tree = set()
    stack = [0]
    while stack:
        v = stack.pop()
        for w in bits(g.adj[v]):
            if not seen >> w & 1:
                seen |= 1 << w
                tree.add((min(v, w), max(v, w)))
                stack.append(w)
    return tree


def min_genus(g: Graph, orientable: bool, budget: GenusBudget | None = None):
    """Minimum genus over 2-cell embeddings, with a witness.

    Orientable class: all rotation systems with all-positive signature.
    Non-orientable class: rotation systems crossed with every irreducible
    signature class (tree edges normalized positive, at least one
    negative non-tree edge). Acyclic graphs have no irreducible 2-cell
    embedding; they are reported as genus 1 with witness None, matching
    the convention that planar graphs live on the projective plane.

    Raises BudgetExceeded (carrying the best found) when the number of
    face traces crosses the budget.
    """
    if budget is None:
        budget = GenusBudget()
    if not is_connected(g):
        raise RequiresConnected("genus of a disconnected graph is undefined here")
    m = g.edge_count()
    if m == 0:
        rs = rotation_system(g)
        return (0, rs) if orientable else (1, None)
    if not orientable and m < g.n:
        return 1, None

    h_floor, k_floor = _genus_floor(g)
    floor = h_floor if orientable else k_floor
    edges = g.edges()
    edge_index = {e: i for i, e in enumerate(edges)}
    tree = _spanning_tree_edges(g)
    cotree = [i for i, e in enumerate(edges) if e not in tree]

    if orientable:
        signature_masks = [0]
    else:
        signature_masks = sorted(
            range(1, 1 << len(cotree)), key=lambda x: (bin(x).count("1"), x)
        )

    choices = _vertex_rotations(g)
    m2 = 2 * m
    best_genus = None
    best_witness = None
    traces = 0

    def assemble(rotation, mask):
        negative = frozenset(edges[cotree[j]] for j in bits(mask))
        return RotationSystem(g, tuple(rotation), negative)

    stack_rotation = [None] * g.n

    def iterate_rotations(v):
        if v == g.n:
            yield tuple(stack_rotation)
            return
        for rot in choices[v]:
            stack_rotation[v] = rot
            yield from iterate_rotations(v + 1)

    for rotation in iterate_rotations(0):
        _, _, succ, pred = _dart_tables(g, rotation)
        for mask in signature_masks:
            if traces >= budget.max_traces:
                raise BudgetExceeded(
                    f"genus search exceeded {budget.max_traces} traces",
                    best_genus=best_genus,
                    witness=best_witness,
                    traces=traces,
                )
            traces += 1
            if mask == 0:
                f = _face_count_positive(succ, m2)
            else:
                neg = [0] * m2
                for j in bits(mask):
                    i = cotree[j]
                    neg[2 * i] = 1
                    neg[2 * i + 1] = 1
                f = _face_count_signed(succ, pred, neg, m2)
            eg = 2 - (g.n - m + f)
            if orientable:
                if eg % 2:
                    raise InternalError("odd Euler genus from all-positive trace")
                genus = eg // 2
            else:
                if eg < 1:
                    raise InternalError("irreducible signature traced to Euler genus < 1")
                genus = eg
            if best_genus is None or genus < best_genus:
                best_genus = genus
                best_witness = assemble(rotation, mask)
                if best_genus == floor:
                    return best_genus, best_witness
    return best_genus, best_witness


# ---------------------------------------------------------------------------
# embedding text format
#
# One line "v: u1 u2 ... ud" per vertex giving the cyclic neighbor order,
# an optional "signature: -(a,b) -(c,d)" line listing negative edges, and
# "#" comment lines.

def parse_embedding(text: str) -> RotationSystem:
    rotations = {}
    negative = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        head = head.strip()
        if head == "signature":
            for token in rest.split():
                if not (token.startswith("-(") and token.endswith(")")):
                    raise ParseError(f"line {lineno}: bad signature token {token!r}")
                try:
                    u, v = (int(t) for t in token[2:-1].split(","))
                except ValueError:
                    raise ParseError(f"line {lineno}: bad signature token {token!r}") from None
                negative.add((min(u, v), max(u, v)))
            continue
        if not head.isdigit():
            raise ParseError(f"line {lineno}: expected 'vertex:' prefix")
        v = int(head)
        if v in rotations:
            raise ParseError(f"line {lineno}: duplicate rotation for vertex {v}")
        try:
            nbrs = tuple(int(t) for t in rest.split())
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer neighbor") from None
        rotations[v] = nbrs
    if not rotations:
        raise ParseError("no rotation lines found")
    n = len(rotations)
    if sorted(rotations) != list(range(n)):
        raise ParseError("vertex lines must cover exactly 0..n-1")
    edges = set()
    for v, nbrs in rotations.items():
        if len(set(nbrs)) != len(nbrs):
            raise ParseError(f"vertex {v} lists a neighbor twice")
        for w in nbrs:
            if not (0 <= w < n):
                raise ParseError(f"vertex {v} lists unknown vertex {w}")
            if w == v:
                raise ParseError(f"vertex {v} lists itself")
            edges.add((min(v, w), max(v, w)))
    for u, v in edges:
        if v not in rotations[u] or u not in rotations[v]:
            raise ParseError(f"edge ({u},{v}) missing from one endpoint's rotation")
    for e in negative:
        if e not in edges:
            raise ParseError(f"signature lists non-edge {e}")
    g = build_graph(n, sorted(edges))
    rotation = tuple(rotations[v] for v in range(n))
    return validate_embedding(RotationSystem(g, rotation, frozenset(negative)))


def write_embedding(rs: RotationSystem) -> str:
    lines = [
        f"{v}: " + " ".join(str(w) for w in rs.rotation[v]) if rs.rotation[v] else f"{v}:"
        for v in range(rs.graph.n)
    ]
    if rs.negative:
        tokens = " ".join(f"-({u},{v})" for u, v in sorted(rs.negative))
        lines.append(f"signature: {tokens}")
    return "\n".join(lines) + "\n"
