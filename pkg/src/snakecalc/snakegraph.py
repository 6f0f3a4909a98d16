"""Abstract snake graphs: tiles, steps, canonical edges, and sign functions.

A snake graph with d tiles is a connected strip of unit squares in which each
consecutive pair of tiles shares exactly one edge and the strip only ever
grows to the north or to the east.  The shape is a step string w in
{E,N}^(d-1): tile 1 sits at (0,0) and tile j+1 is east (E) or north (N) of
tile j.

          +---+---+
          | 2 | 3 |        steps "NE": tile 2 north of tile 1,
      +---+---+---+        tile 3 east of tile 2.
      | 1 |
      +---+

Each tile has four faces N/E/S/W.  The shared (interior) edge e_j between
tiles j and j+1 is the N face of tile j when step j = N (alias: S face of
tile j+1) and the E face of tile j when step j = E (alias: W face of tile
j+1).  Canonical edge references keep the lower tile index, so a graph with d
tiles has exactly 3d+1 canonical edges, d-1 of them interior.

A sign function f assigns +-1 to every edge so that the S and E faces of tile
j carry eps_j while the N and W faces carry -eps_j, with alternating tile
signs eps_j = (-1)**(j-1) * eps_1.  The two readings of an interior edge (as
a face of tile j and of tile j+1) always agree, so each graph has exactly two
sign functions: the choice of eps_1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

FACES = ("N", "E", "S", "W")

Vertex = tuple[int, int]


class EmptySteps(ValueError):
    """A zero-tile snake graph was requested; use EmptySnakeGraph instead."""


class AliasLabelConflict(ValueError):
    """Two aliases of one interior edge were given different labels."""


class UnknownEdge(KeyError):
    """An edge reference does not exist in the graph."""


class RangeError(ValueError):
    """A tile range [i, j] is not within 1 <= i <= j <= d."""


@dataclass(frozen=True, order=True)
class EdgeRef:
    """A face of a tile, written j:F; canonical form keeps the lower tile."""

    tile: int
    face: str

    def __str__(self) -> str:
        return f"{self.tile}:{self.face}"

    @staticmethod
    def parse(text: str) -> "EdgeRef":
        """Parse "j:F" back into an EdgeRef."""
        tile, _, face = text.partition(":")
        return EdgeRef(int(tile), face)


@dataclass(frozen=True)
class SnakeGraph:
    """An abstract labeled snake graph; build via :func:`build`."""

    steps: str
    tile_labels: tuple[str, ...]
    edge_labels: tuple[tuple[EdgeRef, str], ...]

    # -- basic shape -------------------------------------------------------

    @property
    def d(self) -> int:
        """Number of tiles."""
        return len(self.steps) + 1

    def step(self, j: int) -> str:
        """Step j (between tiles j and j+1), 1-based."""
        if not 1 <= j <= self.d - 1:
            raise RangeError(f"no step {j} in a {self.d}-tile graph")
        return self.steps[j - 1]

    @cached_property
    def positions(self) -> tuple[Vertex, ...]:
        """Lower-left corner of each tile, tile 1 at (0, 0)."""
        pos = [(0, 0)]
        for ch in self.steps:
            x, y = pos[-1]
            pos.append((x + 1, y) if ch == "E" else (x, y + 1))
        return tuple(pos)

    # -- edges -------------------------------------------------------------

    def canonical(self, e: EdgeRef) -> EdgeRef:
        """Normalize an alias (S/W face of tile j+1) to its canonical form."""
        j, face = e.tile, e.face
        if not 1 <= j <= self.d or face not in FACES:
            raise UnknownEdge(str(e))
        if j >= 2 and face == "S" and self.steps[j - 2] == "N":
            return EdgeRef(j - 1, "N")
        if j >= 2 and face == "W" and self.steps[j - 2] == "E":
            return EdgeRef(j - 1, "E")
        return e

    @cached_property
    def edges(self) -> tuple[EdgeRef, ...]:
        """All 3d+1 canonical edges, sorted."""
        seen = set()
        for j in range(1, self.d + 1):
            for face in FACES:
                seen.add(self.canonical(EdgeRef(j, face)))
        return tuple(sorted(seen))

    def interior_edge(self, j: int) -> EdgeRef:
        """The edge e_j shared by tiles j and j+1."""
        if not 1 <= j <= self.d - 1:
            raise RangeError(f"no interior edge e_{j} in a {self.d}-tile graph")
        return EdgeRef(j, self.steps[j - 1])

    @cached_property
    def interior_edges(self) -> tuple[EdgeRef, ...]:
        """e_1 .. e_{d-1} in order."""
        return tuple(self.interior_edge(j) for j in range(1, self.d))

    @cached_property
    def boundary_edges(self) -> tuple[EdgeRef, ...]:
        """The 2d+2 canonical edges that are not interior, sorted."""
        interior = set(self.interior_edges)
        return tuple(e for e in self.edges if e not in interior)

    def is_interior(self, e: EdgeRef) -> bool:
        """True when e (any alias) is shared by two tiles."""
        return self.canonical(e) in set(self.interior_edges)

    def tile_edges(self, j: int) -> tuple[EdgeRef, ...]:
        """The four faces of tile j in canonical form (N, E, S, W order)."""
        return tuple(self.canonical(EdgeRef(j, f)) for f in FACES)

    # -- labels ------------------------------------------------------------

    @cached_property
    def edge_label_map(self) -> dict[EdgeRef, str]:
        return dict(self.edge_labels)

    def tile_label(self, j: int) -> str:
        if not 1 <= j <= self.d:
            raise RangeError(f"no tile {j} in a {self.d}-tile graph")
        return self.tile_labels[j - 1]

    def label(self, e: EdgeRef) -> str:
        """Label of an edge, accepting aliases."""
        c = self.canonical(e)
        try:
            return self.edge_label_map[c]
        except KeyError:
            raise UnknownEdge(str(e)) from None

    # -- vertices ----------------------------------------------------------

    def edge_vertices(self, e: EdgeRef) -> tuple[Vertex, Vertex]:
        """The two lattice endpoints of an edge, sorted."""
        c = self.canonical(e)
        x, y = self.positions[c.tile - 1]
        ends = {
            "S": ((x, y), (x + 1, y)),
            "N": ((x, y + 1), (x + 1, y + 1)),
            "W": ((x, y), (x, y + 1)),
            "E": ((x + 1, y), (x + 1, y + 1)),
        }[c.face]
        return tuple(sorted(ends))  # type: ignore[return-value]

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        """All 2d+2 lattice corners, sorted."""
        vs: set[Vertex] = set()
        for x, y in self.positions:
            vs.update({(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)})
        return tuple(sorted(vs))

    @cached_property
    def boundary_cycle(self) -> tuple[Vertex, ...]:
        """Vertices in cyclic boundary order, starting at (0, 0).

        Every vertex of a snake graph lies on the outer face, so the boundary
        edges form a single cycle through all 2d+2 vertices.
        """
        nbr: dict[Vertex, list[Vertex]] = {}
        for e in self.boundary_edges:
            u, v = self.edge_vertices(e)
            nbr.setdefault(u, []).append(v)
            nbr.setdefault(v, []).append(u)
        start: Vertex = (0, 0)
        cycle = [start]
        prev: Vertex | None = None
        while True:
            here = cycle[-1]
            nxt = [v for v in nbr[here] if v != prev]
            nxt.sort()
            prev = here
            if nxt[0] == start:
                break
            cycle.append(nxt[0])
        return tuple(cycle)

    # -- shape predicates --------------------------------------------------

    def is_straight(self) -> bool:
        """All steps equal (vacuously true for d <= 2)."""
        return len(set(self.steps)) <= 1

    def is_zigzag(self) -> bool:
        """Steps strictly alternate (vacuously true for d <= 2)."""
        return all(a != b for a, b in zip(self.steps, self.steps[1:]))

    def zigzag_runs(self) -> list[tuple[int, int]]:
        """Maximal tile intervals [a, b] whose steps strictly alternate.

        Runs overlap at the breaking tile: "EEN" gives [1,2] and [2,4].
        """
        runs = []
        a = 1
        for j in range(1, self.d - 1):
            if self.steps[j] == self.steps[j - 1]:
                runs.append((a, j + 1))
                a = j + 1
        runs.append((a, self.d))
        return runs

    # -- derived graphs ----------------------------------------------------

    def subgraph(self, i: int, j: int) -> "SnakeGraph":
        """The sub-snake-graph G[i, j] of tiles i..j with inherited labels."""
        if not 1 <= i <= j <= self.d:
            raise RangeError(f"bad tile range [{i}, {j}] for d={self.d}")
        steps = self.steps[i - 1 : j - 1]
        tiles = self.tile_labels[i - 1 : j]
        sub = build(steps, tiles)
        labels = {}
        for e in sub.edges:
            labels[e] = self.label(EdgeRef(e.tile + i - 1, e.face))
        return build(steps, tiles, labels)

    def reflect(self) -> "SnakeGraph":
        """The reversed graph: tile order flipped across the anti-diagonal.

        Steps reverse and swap E<->N; faces map N->W, E->S, S->E, W->N.
        """
        return self._remap(reverse=True, swap_steps=True,
                           face_map={"N": "W", "E": "S", "S": "E", "W": "N"})

    def transpose(self) -> "SnakeGraph":
        """Reflection across the main diagonal: steps swap E<->N in place."""
        return self._remap(reverse=False, swap_steps=True,
                           face_map={"N": "E", "E": "N", "S": "W", "W": "S"})

    def rotate180(self) -> "SnakeGraph":
        """Half-turn: reversed tile order, faces N<->S and E<->W."""
        return self._remap(reverse=True, swap_steps=False,
                           face_map={"N": "S", "E": "W", "S": "N", "W": "E"})

    def _remap(self, reverse: bool, swap_steps: bool,
               face_map: dict[str, str]) -> "SnakeGraph":
        d = self.d
        steps = self.steps[::-1] if reverse else self.steps
        if swap_steps:
            steps = steps.translate(str.maketrans("EN", "NE"))
        tiles = self.tile_labels[::-1] if reverse else self.tile_labels
        out = build(steps, tiles)
        labels = {}
        for j in range(1, d + 1):
            src = d + 1 - j if reverse else j
            for face in FACES:
                labels[out.canonical(EdgeRef(j, face))] = self.label(
                    EdgeRef(src, {v: k for k, v in face_map.items()}[face]))
        return build(steps, tiles, labels)

    def relabel(self, tile_labels=None, edge_labels=None) -> "SnakeGraph":
        """Copy with some labels replaced."""
        tiles = tuple(tile_labels) if tile_labels is not None else self.tile_labels
        labels = dict(self.edge_label_map)
        if edge_labels:
            for key, val in edge_labels.items():
                e = key if isinstance(key, EdgeRef) else EdgeRef.parse(key)
                labels[self.canonical(e)] = val
        return build(self.steps, tiles, labels)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "steps": self.steps,
            "tile_labels": list(self.tile_labels),
            "edge_labels": {str(e): lab for e, lab in sorted(self.edge_labels)},
        }

    def __str__(self) -> str:
        return f"SnakeGraph({self.steps or '·'}, d={self.d})"


@dataclass(frozen=True)
class EmptySnakeGraph:
    """The degenerate snake graph: one labeled edge, no tiles.

    It has a single perfect matching (the edge itself), weight x = its label,
    height y = 1, and crossing monomial 1, so it acts as the multiplicative
    unit in all matching formulas.
    """

    label: str

    @property
    def d(self) -> int:
        return 0

    def to_json(self) -> dict:
        return {"edge_label": self.label}

    def __str__(self) -> str:
        return f"EmptySnakeGraph({self.label})"


AnySnakeGraph = SnakeGraph | EmptySnakeGraph


def build(steps: str, tile_labels=None, edge_labels=None) -> SnakeGraph:
    """Build a snake graph from a step string and optional labels.

    Default labels are t1..td for tiles and "j:F" canonical names for edges.
    Interior-edge labels may be given under either alias but must agree.
    """
    if steps is None:
        raise EmptySteps("a snake graph needs at least one tile")
    bad = set(steps) - {"E", "N"}
    if bad:
        raise ValueError(f"steps must use E/N only, got {sorted(bad)!r}")
    d = len(steps) + 1
    if tile_labels is None:
        tile_labels = tuple(f"t{j}" for j in range(1, d + 1))
    else:
        tile_labels = tuple(str(t) for t in tile_labels)
    if len(tile_labels) != d:
        raise ValueError(f"expected {d} tile labels, got {len(tile_labels)}")

    skeleton = SnakeGraph(steps, tile_labels, ())
    assigned: dict[EdgeRef, str] = {}
    if edge_labels:
        for key, val in edge_labels.items():
            e = key if isinstance(key, EdgeRef) else EdgeRef.parse(key)
            c = skeleton.canonical(e)
            if c in assigned and assigned[c] != str(val):
                raise AliasLabelConflict(
                    f"edge {c} labeled both {assigned[c]!r} and {val!r}")
            assigned[c] = str(val)
    full = {e: assigned.get(e, str(e)) for e in skeleton.edges}
    return SnakeGraph(steps, tile_labels, tuple(sorted(full.items())))


def from_json(data: dict | str) -> AnySnakeGraph:
    """Inverse of to_json, for both graph kinds."""
    if isinstance(data, str):
        data = json.loads(data)
    if "edge_label" in data:
        return EmptySnakeGraph(str(data["edge_label"]))
    if "steps" not in data:
        raise EmptySteps("JSON graph needs 'steps' or 'edge_label'")
    return build(data["steps"], data.get("tile_labels"),
                 data.get("edge_labels"))


# -- sign functions --------------------------------------------------------


@dataclass(frozen=True)
class SignAssignment:
    """One of the two sign functions on a snake graph (seed = eps_1)."""

    graph: SnakeGraph
    seed: int = 1

    def sign(self, e: EdgeRef) -> int:
        return sign_of(self, e)


def sign_of(sa: SignAssignment, e: EdgeRef) -> int:
    """Sign of an edge: S/E faces of tile j carry eps_j, N/W carry -eps_j."""
    c = sa.graph.canonical(e)
    eps = sa.seed * (-1) ** (c.tile - 1)
    return eps if c.face in ("S", "E") else -eps


def sign_assignments(G: SnakeGraph) -> tuple[SignAssignment, SignAssignment]:
    """The two sign functions of G."""
    return SignAssignment(G, 1), SignAssignment(G, -1)


# -- rendering -------------------------------------------------------------

CELL_W = 6  # interior width of one tile cell in ascii renders


def render(G: AnySnakeGraph, format: str = "ascii") -> str:
    """Render a snake graph with tile and edge labels."""
    if format == "ascii":
        return _render_ascii(G)
    if format == "svg":
        return _render_svg(G)
    raise ValueError(f"unknown render format {format!r}")


def _render_ascii(G: AnySnakeGraph) -> str:
    if isinstance(G, EmptySnakeGraph):
        return f"--[{G.label}]--"
    maxx = max(x for x, _ in G.positions)
    maxy = max(y for _, y in G.positions)
    W = (maxx + 1) * (CELL_W + 1) + 1
    H = (maxy + 1) * 2 + 1
    grid = [[" "] * W for _ in range(H)]

    def put(row: int, col: int, text: str) -> None:
        for i, ch in enumerate(text):
            grid[row][col + i] = ch

    for j, (x, y) in enumerate(G.positions, start=1):
        top = (maxy - y) * 2          # grid row of the tile's north wall
        left = x * (CELL_W + 1)       # grid col of the tile's west wall
        for r in (top, top + 2):
            put(r, left, "+" + "-" * CELL_W + "+")
        grid[top + 1][left] = "|"
        grid[top + 1][left + CELL_W + 1] = "|"
        lab = G.tile_label(j)[:CELL_W]
        put(top + 1, left + 1 + (CELL_W - len(lab)) // 2, lab)

    legend = ["edges:"]
    for e in G.edges:
        kind = "int" if G.is_interior(e) else "bnd"
        legend.append(f"  {e} [{kind}] = {G.label(e)}")
    rows = ["".join(r).rstrip() for r in grid]
    return "\n".join(rows + legend)


def _render_svg(G: AnySnakeGraph) -> str:
    S = 60  # tile side in svg units
    if isinstance(G, EmptySnakeGraph):
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {2 * S} {S}">',
            f'<line x1="10" y1="{S // 2}" x2="{2 * S - 10}" y2="{S // 2}" '
            'stroke="black"/>',
            f'<text x="{S}" y="{S // 2 - 6}" text-anchor="middle" '
            f'font-size="12">{G.label}</text>',
            "</svg>",
        ]
        return "\n".join(parts)
    maxx = max(x for x, _ in G.positions) + 1
    maxy = max(y for _, y in G.positions) + 1
    w, h = maxx * S + 20, maxy * S + 20

    def pt(v: Vertex) -> tuple[int, int]:
        return 10 + v[0] * S, 10 + (maxy - v[1]) * S

    lines, texts = [], []
    for e in G.edges:
        (u, v) = G.edge_vertices(e)
        (x1, y1), (x2, y2) = pt(u), pt(v)
        width = 2 if G.is_interior(e) else 1
        lines.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                     f'stroke="black" stroke-width="{width}"/>')
        mx, my = (x1 + x2) // 2, (y1 + y2) // 2
        texts.append(f'<text x="{mx}" y="{my - 3}" text-anchor="middle" '
                     f'font-size="9" fill="gray">{G.label(e)}</text>')
    for j, p in enumerate(G.positions, start=1):
        cx, cy = pt((p[0], p[1]))
        texts.append(f'<text x="{cx + S // 2}" y="{cy - S // 2 + 4}" '
                     f'text-anchor="middle" font-size="12">'
                     f'{G.tile_label(j)}</text>')
    return "\n".join(
        [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}">']
        + lines + texts + ["</svg>"])
