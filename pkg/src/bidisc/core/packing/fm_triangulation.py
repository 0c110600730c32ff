# ♥♥─── FM Triangulation ────────────────────────────────────────────────────────
"""Additively weighted Delaunay triangulation of a disc packing.

The triangulation is seeded with the ordinary Delaunay triangulation of the
centres and repaired with Lawson flips driven by the Apollonius in-circle
predicate. A flip across a non-convex quadrilateral is impossible, so the
flips can stall; every triangle without an empty support circle is then
dropped and the holes and the hull are regrown edge by edge from the
triangles that remain, each new triangle closing an open edge with the
nearest disc whose support circle is empty.
"""

from __future__ import annotations

from itertools import combinations
from functools import cached_property
from dataclasses import field, dataclass
from collections import defaultdict

import numpy as np
from scipy.spatial import Delaunay, QhullError

from bidisc.custom_logger import log
from bidisc.core.errors import BoundaryDisc, TooFewDiscs, DegenerateInput
from bidisc.core.packing.packing import MAX_RADIUS, Packing
from bidisc.core.packing.apollonius import Triple, in_conflict, orientation, support_circle, conflicting_discs


type Edge = tuple[int, int]

COINCIDENCE_TOLERANCE = 1e-12
SUPPORT_SLACK = 1e-6
FILL_REACH = 4.0


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def rotate_to(triangle: Triple, vertex: int) -> Triple:
    """Cyclic rotation of a ccw triangle that starts at ``vertex``."""
    a, b, c = triangle
    if vertex == a:
        return a, b, c
    if vertex == b:
        return b, c, a
    return c, a, b


# ─── Triangulation ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class FMTriangulation:
    """Counter-clockwise triangles over disc indices plus edge adjacency."""

    triangles: tuple[Triple, ...]
    adjacency: dict[Edge, tuple[int, ...]] = field(repr=False)

    @classmethod
    def from_triangles(cls, triangles: list[Triple]) -> FMTriangulation:
        ordered = sorted(rotate_to(t, min(t)) for t in triangles)
        adjacency: dict[Edge, list[int]] = defaultdict(list)
        for index, (a, b, c) in enumerate(ordered):
            for u, v in ((a, b), (b, c), (c, a)):
                adjacency[edge_key(u, v)].append(index)
        return cls(tuple(ordered), {edge: tuple(owners) for edge, owners in adjacency.items()})

    @cached_property
    def incident(self) -> dict[int, list[int]]:
        owners: dict[int, list[int]] = defaultdict(list)
        for index, triangle in enumerate(self.triangles):
            for vertex in triangle:
                owners[vertex].append(index)
        return dict(owners)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.incident)

    @property
    def edges(self) -> list[Edge]:
        return sorted(self.adjacency)

    def triangle_set(self) -> set[Triple]:
        """Triangles as sorted index triples, for orientation-free comparison."""
        return {(a, b, c) for a, b, c in (sorted(t) for t in self.triangles)}

    def _ccw_successors(self, i: int) -> dict[int, int]:
        successors: dict[int, int] = {}
        for index in self.incident.get(i, []):
            _, a, b = rotate_to(self.triangles[index], i)
            successors[a] = b
        return successors

    def is_interior(self, i: int) -> bool:
        """Whether the triangles around disc ``i`` close up into a full fan."""
        successors = self._ccw_successors(i)
        if len(successors) < 3 or set(successors) != set(successors.values()):
            return False
        start = min(successors)
        current, steps = successors[start], 1
        while current != start:
            current, steps = successors[current], steps + 1
        return steps == len(successors)

    def neighbors(self, i: int) -> list[int]:
        """FM-neighbours of an interior disc in clockwise order, starting from the lowest index.

        :raises BoundaryDisc: If the fan around ``i`` is not closed.
        """
        if not self.is_interior(i):
            msg = f"disc {i} is on the boundary of the triangulation"
            raise BoundaryDisc(msg)
        successors = self._ccw_successors(i)
        predecessors = {b: a for a, b in successors.items()}
        start = min(successors)
        ring = [start]
        while (following := predecessors[ring[-1]]) != start:
            ring.append(following)
        return ring

    def interior_vertices(self) -> list[int]:
        return [i for i in self.vertices if self.is_interior(i)]

    def euler_characteristic(self) -> int:
        """V - E + F counting the outer face; 2 for a triangulated disc."""
        return len(self.incident) - len(self.adjacency) + len(self.triangles) + 1


# ─── Construction ──────────────────────────────────────────────────────────────
class _Mesh:
    """Mutable triangle soup used while flipping."""

    def __init__(self, p: Packing, triangles: list[Triple]) -> None:
        self.packing = p
        self.triangles: dict[int, Triple] = {}
        self.owners: dict[Edge, set[int]] = defaultdict(set)
        self._next = 0
        for triangle in triangles:
            self.add(triangle)

    def add(self, triangle: Triple) -> int:
        index = self._next
        self._next += 1
        self.triangles[index] = triangle
        a, b, c = triangle
        for u, v in ((a, b), (b, c), (c, a)):
            self.owners[edge_key(u, v)].add(index)
        return index

    def remove(self, index: int) -> None:
        a, b, c = self.triangles.pop(index)
        for u, v in ((a, b), (b, c), (c, a)):
            key = edge_key(u, v)
            self.owners[key].discard(index)
            if not self.owners[key]:
                del self.owners[key]

    def boundary_triangles(self) -> set[int]:
        return {next(iter(owners)) for owners in self.owners.values() if len(owners) == 1}


def _seed(p: Packing) -> list[Triple]:
    try:
        simplices = Delaunay(p.centers).simplices
    except QhullError as e:
        msg = "the disc centres do not span the plane"
        raise DegenerateInput(msg) from e
    pts = p.centers[simplices]
    cross = (pts[:, 1, 0] - pts[:, 0, 0]) * (pts[:, 2, 1] - pts[:, 0, 1]) - (pts[:, 1, 1] - pts[:, 0, 1]) * (pts[:, 2, 0] - pts[:, 0, 0])
    ccw = np.where(cross[:, None] < 0, simplices[:, [0, 2, 1]], simplices)
    return [(int(a), int(b), int(c)) for a, b, c in ccw]


def _should_flip(p: Packing, first: Triple, second: Triple, c: int, d: int, quad: tuple[int, ...]) -> bool:
    verdicts = (in_conflict(p, first, d), in_conflict(p, second, c))
    if any(verdicts):
        return True
    if all(v is False for v in verdicts):
        return False
    # Cocircular: keep whichever diagonal touches the lowest index of the quad.
    u, v = first[0], first[1]
    return min(quad) not in (u, v)


def _lawson(mesh: _Mesh, max_flips: int) -> int:
    p = mesh.packing
    stack = [edge for edge, owners in mesh.owners.items() if len(owners) == 2]
    flips = 0
    while stack:
        edge = stack.pop()
        owners = mesh.owners.get(edge)
        if owners is None or len(owners) != 2:
            continue
        t1, t2 = sorted(owners)
        u, v = edge
        # t1 = (u, v, c) and t2 = (v, u, d), both ccw.
        if rotate_to(mesh.triangles[t1], u)[1] != v:
            t1, t2 = t2, t1
        first = rotate_to(mesh.triangles[t1], u)
        second = rotate_to(mesh.triangles[t2], v)
        c, d = first[2], second[2]
        if not _should_flip(p, first, second, c, d, (u, v, c, d)):
            continue
        if orientation(p, u, d, c) <= 0 or orientation(p, d, v, c) <= 0:
            continue
        mesh.remove(t1)
        mesh.remove(t2)
        mesh.add((u, d, c))
        mesh.add((d, v, c))
        flips += 1
        if flips > max_flips:
            msg = f"no stable triangulation after {max_flips} flips"
            raise DegenerateInput(msg)
        stack.extend([edge_key(u, d), edge_key(d, v), edge_key(v, c), edge_key(c, u)])
    return flips


def _has_empty_support(p: Packing, triangle: Triple) -> bool:
    circle = support_circle(p, triangle)
    if circle is None:
        return False
    reach = circle.rho + MAX_RADIUS + SUPPORT_SLACK
    nearby = [int(j) for j in p.tree.query_ball_point((circle.x, circle.y), reach) if j not in triangle]
    return not conflicting_discs(p, triangle, nearby)


def _prune_invalid(mesh: _Mesh) -> int:
    """Drop every triangle whose support circle is missing or meets another disc."""
    doomed = [index for index, triangle in mesh.triangles.items() if not _has_empty_support(mesh.packing, triangle)]
    for index in doomed:
        mesh.remove(index)
    return len(doomed)


def _open_edges(mesh: _Mesh) -> list[Edge]:
    """Edges with one owner, directed so that the owner lies on their left."""
    directed = []
    for (u, v), owners in mesh.owners.items():
        if len(owners) == 1:
            _, following, _ = rotate_to(mesh.triangles[next(iter(owners))], u)
            directed.append((u, v) if following == v else (v, u))
    return directed


def _wrap(mesh: _Mesh, a: int, b: int, present: set[Triple]) -> int | None:
    """Nearest disc w that closes the ccw triangle (a, b, w) with an empty support circle."""
    p = mesh.packing
    centre = (p.centers[a] + p.centers[b]) / 2
    reach = FILL_REACH * (float(np.hypot(*(p.centers[b] - p.centers[a]))) + 2 * MAX_RADIUS)
    nearby = sorted(p.tree.query_ball_point(centre, reach), key=lambda j: float(np.hypot(*(p.centers[j] - centre))))
    for candidate in nearby:
        w = int(candidate)
        if w in (a, b) or orientation(p, a, b, w) <= 0:
            continue
        if tuple(sorted((a, b, w))) in present:
            continue
        if any(len(mesh.owners.get(edge_key(u, v), ())) >= 2 for u, v in ((b, w), (w, a))):
            continue
        if _has_empty_support(p, (a, b, w)):
            return w
    return None


def _fill_front(mesh: _Mesh) -> int:
    """Grow the mesh across open edges with triangles whose support circles are empty."""
    present = {(x, y, z) for x, y, z in (sorted(t) for t in mesh.triangles.values())}
    stack = _open_edges(mesh)
    tried: set[Edge] = set()
    added = 0
    while stack:
        a, b = stack.pop()
        key = edge_key(a, b)
        if key in tried or len(mesh.owners.get(key, ())) != 1:
            continue
        tried.add(key)
        w = _wrap(mesh, b, a, present)
        if w is None:
            continue
        mesh.add((b, a, w))
        x, y, z = sorted((a, b, w))
        present.add((x, y, z))
        added += 1
        stack.extend([(a, w), (w, b)])
    return added


def _check_input(p: Packing) -> None:
    if len(p) < 3:
        msg = f"a triangulation needs at least 3 discs, got {len(p)}"
        raise TooFewDiscs(msg)
    coincident = p.tree.query_pairs(r=COINCIDENCE_TOLERANCE)
    if coincident:
        i, j = min(coincident)
        msg = f"discs {i} and {j} have coincident centres"
        raise DegenerateInput(msg)


def fm_triangulation(p: Packing) -> FMTriangulation:
    """Build the FM-triangulation of a finite packing.

    :param p: A valid packing with at least three discs.
    :returns: The triangulation; cocircular ties are fanned from the lowest index.
    :raises TooFewDiscs: For fewer than three discs.
    :raises DegenerateInput: For coincident or collinear centres, or if flipping does not settle.
    """
    _check_input(p)
    mesh = _Mesh(p, _seed(p))
    flips = _lawson(mesh, max_flips=50 * len(p) + 1000)
    dropped = _prune_invalid(mesh)
    added = _fill_front(mesh) if dropped else 0
    log.debug("fm triangulation of {} discs: {} flips, {} triangles dropped, {} added", len(p), flips, dropped, added)
    return FMTriangulation.from_triangles(list(mesh.triangles.values()))


def brute_force_fm(p: Packing) -> set[Triple]:
    """Every triple whose support circle exists and meets no other disc, as sorted triples.

    Quartic in the number of discs; meant for small packings.
    """
    _check_input(p)
    found: set[Triple] = set()
    for triple in combinations(range(len(p)), 3):
        i, j, k = triple
        turn = orientation(p, i, j, k)
        if turn == 0:
            continue
        ccw = (i, j, k) if turn > 0 else (i, k, j)
        if support_circle(p, ccw) is None:
            continue
        if not any(in_conflict(p, ccw, d) for d in range(len(p)) if d not in triple):
            found.add(triple)
    return found
