"""Triangulations of the region between a scatterer boundary and a truncation boundary.

Boundary facets carry a tag: ``GAMMA`` (scatterer, physical tag 1) or
``SIGMA`` (truncation, physical tag 2).  Facets are stored in the
counterclockwise order of their adjacent triangle, so the rotated tangent
``(dy, -dx)`` is the normal pointing out of the computational domain.  On the
scatterer boundary that normal points into the scatterer.
"""

from dataclasses import dataclass
from functools import cached_property
import io
import math
import os

import numpy as np
from scipy.spatial import Delaunay

GAMMA = 1
SIGMA = 2
TAG_NAMES = {GAMMA: "Gamma", SIGMA: "Sigma"}


class MeshError(ValueError):
    """Raised when a mesh violates one of its structural invariants."""

    def __init__(self, message, facet=None, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.facet = facet
        self.line = line


@dataclass(frozen=True)
class FacetGeometry:
    midpoint: np.ndarray
    unit_normal: np.ndarray
    length: np.ndarray


@dataclass(frozen=True, eq=False)
class Mesh:
    """Immutable triangulation with tagged boundary facets.

    Use :func:`build_mesh` to construct one; it orients the input and checks
    every invariant.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    facets: np.ndarray
    facet_tags: np.ndarray
    facet_cells: np.ndarray

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_triangles(self):
        return len(self.triangles)

    def facets_of(self, tag):
        """Indices of the boundary facets carrying ``tag``."""
        return np.flatnonzero(self.facet_tags == tag)

    @cached_property
    def areas(self):
        p = self.vertices[self.triangles]
        return 0.5 * _cross(p[:, 1] - p[:, 0], p[:, 2] - p[:, 0])

    @cached_property
    def edges(self):
        """Unique undirected edges (sorted vertex pairs) and the triangle-to-edge map.

        Local edge ``k`` of a triangle joins local vertices ``k`` and ``(k+1) % 3``.
        """
        tri = self.triangles
        all_edges = np.stack([tri[:, [0, 1]], tri[:, [1, 2]], tri[:, [2, 0]]], axis=1)
        flat = np.sort(all_edges.reshape(-1, 2), axis=1)
        uniq, inverse = np.unique(flat, axis=0, return_inverse=True)
        return uniq, inverse.reshape(-1, 3)

    @cached_property
    def separation(self):
        """Minimum distance between the GAMMA and SIGMA facet sets."""
        return _set_distance(self, GAMMA, SIGMA)

    def geometry(self, tag=None):
        """Midpoints, outward unit normals and lengths of the boundary facets."""
        idx = np.arange(len(self.facets)) if tag is None else self.facets_of(tag)
        a = self.vertices[self.facets[idx, 0]]
        b = self.vertices[self.facets[idx, 1]]
        d = b - a
        length = np.hypot(d[:, 0], d[:, 1])
        normal = np.column_stack([d[:, 1], -d[:, 0]]) / length[:, None]
        return FacetGeometry(0.5 * (a + b), normal, length)


def _cross(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def _point_segment_distance(p, a, b):
    # p: (m, 2), a, b: (n, 2) -> (m, n)
    d = b - a
    dd = np.einsum("ij,ij->i", d, d)
    w = p[:, None, :] - a[None, :, :]
    t = np.clip(np.einsum("mnk,nk->mn", w, d) / dd, 0.0, 1.0)
    closest = a[None] + t[..., None] * d[None]
    return np.linalg.norm(p[:, None, :] - closest, axis=2)


def _set_distance(mesh, tag_a, tag_b):
    fa = mesh.facets[mesh.facets_of(tag_a)]
    fb = mesh.facets[mesh.facets_of(tag_b)]
    v = mesh.vertices
    pa = v[np.unique(fa)]
    pb = v[np.unique(fb)]
    d1 = _point_segment_distance(pa, v[fb[:, 0]], v[fb[:, 1]]).min()
    d2 = _point_segment_distance(pb, v[fa[:, 0]], v[fa[:, 1]]).min()
    return float(min(d1, d2))


def build_mesh(vertices, triangles, facets, facet_tags, facet_lines=None):
    """Assemble and validate a :class:`Mesh`.

    Triangles are reoriented counterclockwise and facets are oriented to agree
    with their adjacent triangle.  ``facet_lines`` optionally maps each facet
    to a source line number used in error messages.

    Raises
    ------
    MeshError
        On degenerate triangles, non-manifold edges, untagged or mis-tagged
        boundary edges, open boundary loops, or touching GAMMA/SIGMA sets.
    """
    vertices = np.array(vertices, dtype=float).reshape(-1, 2)
    triangles = np.array(triangles, dtype=np.int64).reshape(-1, 3)
    facets = np.array(facets, dtype=np.int64).reshape(-1, 2)
    facet_tags = np.array(facet_tags, dtype=np.int64).reshape(-1)

    def fail(msg, facet=None):
        line = None
        if facet is not None and facet_lines is not None:
            line = facet_lines[facet]
        raise MeshError(msg, facet=facet, line=line)

    if len(triangles) == 0:
        fail("mesh has no triangles")
    if triangles.min() < 0 or triangles.max() >= len(vertices):
        fail("triangle references a missing vertex")
    if len(facets) and (facets.min() < 0 or facets.max() >= len(vertices)):
        fail("boundary facet references a missing vertex")
    bad_tags = ~np.isin(facet_tags, [GAMMA, SIGMA])
    if np.any(bad_tags):
        fail(f"unknown boundary tag {facet_tags[bad_tags][0]}", int(np.argmax(bad_tags)))

    p = vertices[triangles]
    area = 0.5 * _cross(p[:, 1] - p[:, 0], p[:, 2] - p[:, 0])
    scale = np.ptp(vertices, axis=0).max() ** 2
    if np.any(np.abs(area) <= 1e-14 * scale):
        fail(f"degenerate triangle {int(np.argmin(np.abs(area)))}")
    flip = area < 0
    triangles[flip] = triangles[flip][:, [0, 2, 1]]

    directed = np.stack([triangles[:, [0, 1]], triangles[:, [1, 2]], triangles[:, [2, 0]]], axis=1).reshape(-1, 2)
    undirected = np.sort(directed, axis=1)
    uniq, inverse, counts = np.unique(undirected, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.reshape(-1)
    if np.any(counts > 2):
        fail("edge shared by more than two triangles")
    boundary_edges = np.flatnonzero(counts == 1)

    # match tagged facets against boundary edges
    key_f = np.sort(facets, axis=1)
    lookup = {tuple(e): i for i, e in enumerate(uniq)}
    slot_of = np.empty(len(uniq), dtype=np.int64)
    slot_of[inverse] = np.arange(len(directed))  # unique for boundary edges
    facet_cells = np.empty(len(facets), dtype=np.int64)
    oriented = np.empty_like(facets)
    seen = np.zeros(len(uniq), dtype=bool)
    for i, key in enumerate(map(tuple, key_f.tolist())):
        e = lookup.get(key)
        if e is None:
            fail(f"boundary facet {key} is not an edge of any triangle", i)
        if counts[e] != 1:
            fail(f"boundary facet {key} is an interior edge", i)
        if seen[e]:
            fail(f"boundary facet {key} listed twice", i)
        seen[e] = True
        slot = slot_of[e]
        facet_cells[i] = slot // 3
        oriented[i] = directed[slot]
    untagged = boundary_edges[~seen[boundary_edges]]
    if len(untagged):
        fail(f"boundary edge {tuple(int(v) for v in uniq[untagged[0]])} carries no GAMMA/SIGMA tag")

    for tag in (GAMMA, SIGMA):
        idx = np.flatnonzero(facet_tags == tag)
        if len(idx) == 0:
            fail(f"no {TAG_NAMES[tag]} facets")
        heads = np.bincount(oriented[idx, 0], minlength=len(vertices))
        tails = np.bincount(oriented[idx, 1], minlength=len(vertices))
        open_v = np.flatnonzero(heads != tails)
        if len(open_v):
            v = open_v[0]
            culprit = idx[np.flatnonzero((oriented[idx] == v).any(axis=1))[0]]
            fail(f"{TAG_NAMES[tag]} boundary is not a closed loop (open at vertex {v})", int(culprit))

    mesh = Mesh(vertices, triangles, oriented, facet_tags, facet_cells)
    shared = np.intersect1d(np.unique(oriented[facet_tags == GAMMA]), np.unique(oriented[facet_tags == SIGMA]))
    if len(shared) or mesh.separation <= 0.0:
        fail("GAMMA and SIGMA boundaries touch")
    for arr in (vertices, triangles, oriented, facet_tags, facet_cells):
        arr.setflags(write=False)
    return mesh


def mesh_size(mesh):
    """Largest triangle circumdiameter."""
    p = mesh.vertices[mesh.triangles]
    a = np.linalg.norm(p[:, 1] - p[:, 2], axis=1)
    b = np.linalg.norm(p[:, 2] - p[:, 0], axis=1)
    c = np.linalg.norm(p[:, 0] - p[:, 1], axis=1)
    return float(np.max(a * b * c / (2.0 * np.abs(mesh.areas))))


def generate_annulus(r_inner, r_outer, n_radial, n_angular):
    """Structured polar mesh between two concentric inscribed polygons.

    Vertex ``j * n_angular + k`` sits at radius ``r_inner + j (r_outer - r_inner)/n_radial``
    and angle ``2 pi k / n_angular``.
    """
    if not (0 < r_inner < r_outer) or not math.isfinite(r_outer):
        raise ValueError("annulus needs 0 < r_inner < r_outer")
    if int(n_radial) != n_radial or n_radial < 1:
        raise ValueError("n_radial must be an integer >= 1")
    if int(n_angular) != n_angular or n_angular < 3:
        raise ValueError("n_angular must be an integer >= 3")
    n_radial, n_angular = int(n_radial), int(n_angular)
    r = np.linspace(r_inner, r_outer, n_radial + 1)
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    verts = np.column_stack([np.outer(r, np.cos(theta)).ravel(), np.outer(r, np.sin(theta)).ravel()])

    j, k = np.meshgrid(np.arange(n_radial), np.arange(n_angular), indexing="ij")
    j, k = j.ravel(), k.ravel()
    kp = (k + 1) % n_angular
    v00 = j * n_angular + k
    v01 = j * n_angular + kp
    v10 = (j + 1) * n_angular + k
    v11 = (j + 1) * n_angular + kp
    tris = np.concatenate([np.column_stack([v00, v01, v11]), np.column_stack([v00, v11, v10])])

    ring = np.arange(n_angular)
    inner = np.column_stack([ring, (ring + 1) % n_angular])
    outer = n_radial * n_angular + inner
    facets = np.concatenate([inner, outer])
    tags = np.repeat([GAMMA, SIGMA], n_angular)
    return build_mesh(verts, tris, facets, tags)


def generate_square_frame(a_half, b_half, n):
    """Uniform ``n x n`` grid on ``[-b, b]^2`` with the cells inside ``[-a, a]^2`` removed.

    Raises
    ------
    ValueError
        If the hole edges do not fall on grid lines or no cell layer remains.
    """
    if not (0 < a_half < b_half):
        raise ValueError("square frame needs 0 < a_half < b_half")
    if int(n) != n or n < 2:
        raise ValueError("n must be an integer >= 2")
    n = int(n)
    k_hole = n * (b_half - a_half) / (2.0 * b_half)
    k = round(k_hole)
    if abs(k_hole - k) > 1e-9 or k < 1:
        raise ValueError(
            f"hole [-{a_half}, {a_half}]^2 is not aligned with the {n}x{n} grid "
            f"(n * a_half / b_half = {n * a_half / b_half:g} must be an integer of the same parity as n)"
        )
    x = np.linspace(-b_half, b_half, n + 1)
    X, Y = np.meshgrid(x, x, indexing="ij")
    verts = np.column_stack([X.ravel(), Y.ravel()])
    vid = lambda i, j: i * (n + 1) + j
    removed = np.zeros((n, n), dtype=bool)
    removed[k : n - k, k : n - k] = True

    tris = []
    for i in range(n):
        for j in range(n):
            if removed[i, j]:
                continue
            a, b, c, d = vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)
            tris.append((a, b, c))
            tris.append((a, c, d))
    tris = np.array(tris)
    used = np.unique(tris)
    remap = np.full(len(verts), -1)
    remap[used] = np.arange(len(used))
    verts = verts[used]
    tris = remap[tris]

    facets, tags = _boundary_by_radius(verts, tris, lambda p: np.max(np.abs(p), axis=1), a_half, b_half)
    return build_mesh(verts, tris, facets, tags)


def _boundary_by_radius(verts, tris, radius, r_gamma, r_sigma):
    """Tag the boundary edges of ``tris`` by which level set of ``radius`` they lie on."""
    und = np.sort(np.concatenate([tris[:, [0, 1]], tris[:, [1, 2]], tris[:, [2, 0]]]), axis=1)
    uniq, counts = np.unique(und, axis=0, return_counts=True)
    bnd = uniq[counts == 1]
    mid = 0.5 * (verts[bnd[:, 0]] + verts[bnd[:, 1]])
    rv = radius(verts)
    on_gamma = np.all(np.isclose(rv[bnd], r_gamma, rtol=1e-9, atol=0.0), axis=1)
    on_sigma = np.all(np.isclose(rv[bnd], r_sigma, rtol=1e-9, atol=0.0), axis=1)
    if np.any(~(on_gamma | on_sigma)):
        raise MeshError(f"boundary edge near {mid[~(on_gamma | on_sigma)][0]} lies on neither boundary")
    tags = np.where(on_gamma, GAMMA, SIGMA)
    return bnd, tags


def generate_square_with_hole(side, radius=1.0, h=0.1, n_circle=None):
    """Unstructured mesh of ``[-side/2, side/2]^2`` minus an inscribed polygonal disc.

    A hexagonal point lattice of spacing ``h`` fills the domain; boundary
    points are spaced about ``h`` along both boundaries and the set is
    Delaunay triangulated.
    """
    half = 0.5 * side
    if not (0 < radius < half):
        raise ValueError("need 0 < radius < side / 2")
    if h <= 0:
        raise ValueError("h must be positive")
    if n_circle is None:
        n_circle = max(8, math.ceil(2 * math.pi * radius / h))
    theta = 2 * np.pi * np.arange(n_circle) / n_circle
    circle = radius * np.column_stack([np.cos(theta), np.sin(theta)])
    # inscribed polygon has inradius radius*cos(pi/n); that is the hole level set
    m = max(2, math.ceil(side / h))
    t = np.linspace(-half, half, m + 1)[:-1]
    square = np.concatenate([
        np.column_stack([t, np.full(m, -half)]),
        np.column_stack([np.full(m, half), t]),
        np.column_stack([-t, np.full(m, half)]),
        np.column_stack([np.full(m, -half), -t]),
    ])
    dy = h * math.sqrt(3) / 2
    rows = np.arange(-half, half + dy, dy)
    pts = []
    for i, y in enumerate(rows):
        xs = np.arange(-half + (0.5 * h if i % 2 else 0.0), half + h, h)
        pts.append(np.column_stack([xs, np.full(len(xs), y)]))
    lattice = np.concatenate(pts)
    margin = 0.7 * h
    keep = (
        (np.max(np.abs(lattice), axis=1) <= half - margin)
        & (np.hypot(lattice[:, 0], lattice[:, 1]) >= radius + margin)
    )
    verts = np.concatenate([circle, square, lattice[keep]])
    tri = Delaunay(verts).simplices
    cent = verts[tri].mean(axis=1)
    tri = tri[np.hypot(cent[:, 0], cent[:, 1]) > radius]
    p = verts[tri]
    area = 0.5 * _cross(p[:, 1] - p[:, 0], p[:, 2] - p[:, 0])
    tri = tri[np.abs(area) > 1e-12 * h * h]

    def level(q):
        rq = np.hypot(q[:, 0], q[:, 1])
        return np.where(np.isclose(rq, radius, rtol=1e-12), radius, np.max(np.abs(q), axis=1))

    facets, tags = _boundary_by_radius(verts, tri, level, radius, half)
    return build_mesh(verts, tri, facets, tags)


def refine_uniform(mesh):
    """Split every triangle into four by its edge midpoints."""
    edges, tri_edges = mesh.edges
    nv = mesh.n_vertices
    mids = 0.5 * (mesh.vertices[edges[:, 0]] + mesh.vertices[edges[:, 1]])
    verts = np.concatenate([mesh.vertices, mids])
    t = mesh.triangles
    m01, m12, m20 = (nv + tri_edges[:, k] for k in range(3))
    tris = np.concatenate([
        np.column_stack([t[:, 0], m01, m20]),
        np.column_stack([m01, t[:, 1], m12]),
        np.column_stack([m20, m12, t[:, 2]]),
        np.column_stack([m01, m12, m20]),
    ])
    lookup = {tuple(e): nv + i for i, e in enumerate(edges)}
    mid_of = np.array([lookup[tuple(sorted(f))] for f in mesh.facets])
    facets = np.concatenate([
        np.column_stack([mesh.facets[:, 0], mid_of]),
        np.column_stack([mid_of, mesh.facets[:, 1]]),
    ])
    tags = np.concatenate([mesh.facet_tags, mesh.facet_tags])
    return build_mesh(verts, tris, facets, tags)


def winding_number(mesh, point, tag=GAMMA):
    """Winding number of the boundary loops with ``tag`` around ``point``.

    Facets of GAMMA run clockwise around the scatterer (the domain lies on
    their left), so a point inside the scatterer gets winding number -1.
    """
    f = mesh.facets[mesh.facets_of(tag)]
    a = mesh.vertices[f[:, 0]] - point
    b = mesh.vertices[f[:, 1]] - point
    ang = np.arctan2(_cross(a, b), np.einsum("ij,ij->i", a, b))
    return int(round(ang.sum() / (2 * np.pi)))


# -- Gmsh MSH 2.2 ASCII subset ---------------------------------------------

_LINE = 1
_TRIANGLE = 2
_NODES_PER_TYPE = {_LINE: 2, _TRIANGLE: 3}


def read_gmsh(data):
    """Parse the ASCII Gmsh 2.2 subset into a :class:`Mesh`.

    Accepts ``bytes``, ``str`` or a binary/text file object.  Element type 2
    (triangle) and 1 (line) are supported; lines must carry physical tag 1
    (GAMMA) or 2 (SIGMA).  All node z-coordinates must be zero.

    Raises
    ------
    MeshError
        With the offending 1-based line number in its message and ``line``
        attribute.
    """
    if hasattr(data, "read"):
        data = data.read()
    if isinstance(data, bytes):
        data = data.decode("ascii")
    lines = data.splitlines()
    pos = 0

    def err(msg, lineno):
        raise MeshError(msg, line=lineno)

    def next_line():
        nonlocal pos
        while pos < len(lines) and not lines[pos].strip():
            pos += 1
        if pos >= len(lines):
            err("unexpected end of file", len(lines))
        pos += 1
        return pos, lines[pos - 1].strip()

    def expect(marker):
        ln, text = next_line()
        if text != marker:
            err(f"expected {marker!r}, found {text!r}", ln)

    def parse_count(section):
        ln, text = next_line()
        try:
            n = int(text)
        except ValueError:
            err(f"malformed {section} count {text!r}", ln)
        if n < 0:
            err(f"negative {section} count", ln)
        return n

    expect("$MeshFormat")
    ln, text = next_line()
    parts = text.split()
    if len(parts) != 3 or parts[0] not in ("2.2", "2.2.0") or parts[1] != "0":
        err(f"unsupported mesh format {text!r}; need ASCII version 2.2", ln)
    expect("$EndMeshFormat")

    ln, text = next_line()
    if text == "$PhysicalNames":
        count = parse_count("$PhysicalNames")
        for _ in range(count):
            next_line()
        expect("$EndPhysicalNames")
        ln, text = next_line()
    if text != "$Nodes":
        err(f"expected '$Nodes', found {text!r}", ln)
    n_nodes = parse_count("$Nodes")
    node_index = {}
    coords = np.empty((n_nodes, 2))
    for i in range(n_nodes):
        ln, text = next_line()
        parts = text.split()
        if len(parts) != 4:
            err(f"malformed node record {text!r}", ln)
        try:
            nid = int(parts[0])
            x, y, z = map(float, parts[1:])
        except ValueError:
            err(f"malformed node record {text!r}", ln)
        if z != 0.0:
            err(f"node {nid} has nonzero z-coordinate {z!r}", ln)
        if nid in node_index:
            err(f"duplicate node id {nid}", ln)
        node_index[nid] = i
        coords[i] = (x, y)
    expect("$EndNodes")

    expect("$Elements")
    n_elem = parse_count("$Elements")
    tris, facets, tags, facet_lines = [], [], [], []
    for _ in range(n_elem):
        ln, text = next_line()
        parts = text.split()
        try:
            fields = [int(p) for p in parts]
        except ValueError:
            err(f"malformed element record {text!r}", ln)
        if len(fields) < 3:
            err(f"malformed element record {text!r}", ln)
        etype, ntags = fields[1], fields[2]
        if etype not in _NODES_PER_TYPE:
            err(f"unsupported element type {etype} (only 1 = line and 2 = triangle)", ln)
        nodes = fields[3 + ntags:]
        if ntags < 1 or len(nodes) != _NODES_PER_TYPE[etype]:
            err(f"malformed element record {text!r}", ln)
        try:
            local = [node_index[nid] for nid in nodes]
        except KeyError as exc:
            err(f"element references undefined node {exc.args[0]}", ln)
        physical = fields[3]
        if etype == _TRIANGLE:
            tris.append(local)
        else:
            if physical not in (GAMMA, SIGMA):
                err(f"unknown physical tag {physical} on boundary line (1 = Gamma, 2 = Sigma)", ln)
            facets.append(local)
            tags.append(physical)
            facet_lines.append(ln)
    expect("$EndElements")
    return build_mesh(coords, tris, facets, tags, facet_lines=facet_lines)


def load_gmsh(path):
    """Read a mesh file from ``path``."""
    with open(os.fspath(path), "rb") as fh:
        return read_gmsh(fh)


def write_gmsh(mesh, fh=None):
    """Serialise ``mesh`` in the Gmsh 2.2 subset read by :func:`read_gmsh`.

    Floats are written with 17 significant digits.  Returns the text when
    ``fh`` is None, otherwise writes it to ``fh``.
    """
    out = io.StringIO()
    w = out.write
    w("$MeshFormat\n2.2 0 8\n$EndMeshFormat\n")
    w(f"$Nodes\n{mesh.n_vertices}\n")
    for i, (x, y) in enumerate(mesh.vertices, start=1):
        w(f"{i} {x:.17g} {y:.17g} 0\n")
    w("$EndNodes\n")
    w(f"$Elements\n{len(mesh.facets) + mesh.n_triangles}\n")
    eid = 1
    for (a, b), tag in zip(mesh.facets, mesh.facet_tags):
        w(f"{eid} 1 2 {tag} {tag} {a + 1} {b + 1}\n")
        eid += 1
    for a, b, c in mesh.triangles:
        w(f"{eid} 2 2 3 3 {a + 1} {b + 1} {c + 1}\n")
        eid += 1
    w("$EndElements\n")
    text = out.getvalue()
    if fh is None:
        return text
    fh.write(text)
    return None
