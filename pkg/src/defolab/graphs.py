"""Resolution dual graphs: fundamental cycles, arithmetic genus, depths of
rational double point configurations, and normal-bundle splitting types of
small contractions.
"""

from __future__ import annotations

from fractions import Fraction


class GraphError(ValueError):
    pass


class ResolutionGraph:
    """Weighted dual graph: vertices carry self-intersection and genus."""

    __slots__ = ("selfint", "genus", "adj", "central", "attachments")

    def __init__(self, selfint, genus=None, edges=(), central=None,
                 attachments=None):
        self.selfint = dict(selfint)
        self.genus = {v: 0 for v in self.selfint}
        if genus:
            self.genus.update(genus)
        self.adj = {v: set() for v in self.selfint}
        for a, b in edges:
            self.add_edge(a, b)
        self.central = central
        self.attachments = dict(attachments) if attachments else {}

    def add_edge(self, a, b):
        if a == b:
            raise GraphError("loops are not allowed")
        if a not in self.adj or b not in self.adj:
            raise GraphError(f"edge on unknown vertex {a!r}-{b!r}")
        self.adj[a].add(b)
        self.adj[b].add(a)

    @property
    def vertices(self):
        return sorted(self.selfint)

    def edges(self):
        seen = []
        for a in self.vertices:
            for b in sorted(self.adj[a]):
                if a < b:
                    seen.append((a, b))
        return seen

    def dot(self, a, b):
        """Intersection number E_a . E_b."""
        if a == b:
            return self.selfint[a]
        return 1 if b in self.adj[a] else 0

    def canonical_dot(self, v):
        """K . E_v from adjunction on a rational resolution."""
        return -self.selfint[v] - 2 + 2 * self.genus[v]

    def is_connected(self):
        verts = self.vertices
        if not verts:
            return True
        seen = {verts[0]}
        queue = [verts[0]]
        while queue:
            for w in self.adj[queue.pop()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(verts)

    def is_negative_definite(self):
        """Leading-principal-minor test on the intersection matrix."""
        verts = self.vertices
        n = len(verts)
        m = [[Fraction(self.dot(a, b)) for b in verts] for a in verts]
        # minors of a negative definite matrix alternate in sign
        for k in range(1, n + 1):
            sub = [row[:k] for row in m[:k]]
            d = _det(sub)
            if d == 0 or (d > 0) != (k % 2 == 0):
                return False
        return True

    def subgraph(self, verts):
        verts = set(verts)
        edges = [(a, b) for a, b in self.edges() if a in verts and b in verts]
        return ResolutionGraph({v: self.selfint[v] for v in verts},
                               {v: self.genus[v] for v in verts}, edges)

    def components(self):
        remaining = set(self.vertices)
        comps = []
        while remaining:
            start = min(remaining)
            seen = {start}
            queue = [start]
            while queue:
                for w in self.adj[queue.pop()]:
                    if w in seen or w not in remaining:
                        continue
                    seen.add(w)
                    queue.append(w)
            comps.append(self.subgraph(seen))
            remaining -= seen
        return comps

    def is_ade(self):
        """All (-2)-rational and negative definite, i.e. an ADE graph."""
        return (self.is_connected()
                and all(s == -2 for s in self.selfint.values())
                and all(g == 0 for g in self.genus.values())
                and self.is_negative_definite())

    def __repr__(self):
        parts = [f"{v}({self.selfint[v]})" for v in self.vertices]
        return f"ResolutionGraph[{' '.join(parts)}; {len(self.edges())} edges]"


def _det(m):
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    d = Fraction(sign)
    for k in range(n):
        d *= m[k][k]
    return d


class Cycle:
    """An integral cycle on a resolution graph: vertex -> multiplicity."""

    __slots__ = ("graph", "mult")

    def __init__(self, graph, mult):
        self.graph = graph
        self.mult = {v: int(m) for v, m in mult.items() if m}

    def __getitem__(self, v):
        return self.mult.get(v, 0)

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.mult == other.mult

    def dot_vertex(self, v):
        g = self.graph
        total = self[v] * g.selfint[v]
        for w in g.adj[v]:
            total += self[w]
        return total

    def self_intersection(self):
        return sum(m * self.dot_vertex(v) for v, m in self.mult.items())

    def canonical_pairing(self):
        return sum(m * self.graph.canonical_dot(v)
                   for v, m in self.mult.items())

    def __repr__(self):
        body = ", ".join(f"{v}:{m}" for v, m in sorted(self.mult.items()))
        return f"Cycle({body})"


def fundamental_cycle(graph):
    """Laufer's algorithm: the minimal cycle Z >= sum(E_i) with Z.E_i <= 0."""
    if not graph.is_connected():
        raise GraphError("graph must be connected")
    if not graph.is_negative_definite():
        raise GraphError("intersection matrix is not negative definite")
    verts = graph.vertices
    mult = {v: 1 for v in verts}
    z = Cycle(graph, mult)
    while True:
        for v in verts:         # lowest index first: deterministic
            if z.dot_vertex(v) > 0:
                mult[v] += 1
                z = Cycle(graph, mult)
                break
        else:
            return z


def arithmetic_genus(cycle):
    """p_a(Z) = 1 + (Z.Z + Z.K)/2 by adjunction; must be an integer."""
    zz = cycle.self_intersection()
    zk = cycle.canonical_pairing()
    if (zz + zk) % 2:
        raise GraphError("Z(Z+K) is odd: inconsistent graph data")
    return 1 + (zz + zk) // 2


def resolution_depth(graph, v):
    """Blowups needed before E_v appears in a partial resolution of an RDP.

    Depth 1 for the curves with Z.E < 0 (they appear on the first blowup);
    remove them and recurse on the remaining components with offset one.
    """
    if not graph.is_ade():
        raise GraphError("resolution depth requires an ADE configuration")
    return _depth_map(graph)[v]


def _depth_map(graph):
    depths = {}
    level = 0
    work = [graph]
    while work:
        level += 1
        next_work = []
        for g in work:
            z = fundamental_cycle(g)
            first = [v for v in g.vertices if z.dot_vertex(v) < 0]
            if not first:
                raise GraphError("no curve with Z.E < 0: not negative definite")
            for v in first:
                depths[v] = level
            rest = [v for v in g.vertices if v not in depths]
            if rest:
                next_work.extend(g.subgraph(rest).components())
        work = next_work
    return depths


class ContractionConfig:
    """Central curve of self-intersection -c plus attached RDP configurations.

    Each configuration is an ADE graph with a designated attachment vertex,
    which must have multiplicity one in the configuration's fundamental
    cycle for the contracted curve to stay smooth.
    """

    __slots__ = ("central_selfint", "configs")

    def __init__(self, central_selfint, configs):
        self.central_selfint = int(central_selfint)
        self.configs = list(configs)
        for g, v in self.configs:
            if v not in g.selfint:
                raise GraphError(f"attachment vertex {v!r} not in configuration")

    @classmethod
    def from_graph(cls, graph):
        """Split a marked graph into the central curve and its RDP configs."""
        c = graph.central
        if c is None:
            raise GraphError("graph has no marked central vertex")
        rest = [v for v in graph.vertices if v != c]
        configs = []
        for comp in graph.subgraph(rest).components():
            touching = sorted(v for v in comp.vertices
                              if v in graph.adj[c])
            if len(touching) != 1:
                raise GraphError(
                    f"configuration {comp.vertices} must meet the central "
                    f"curve in exactly one vertex, found {touching}")
            configs.append((comp, touching[0]))
        declared = graph.attachments
        if declared:
            got = {v for _, v in configs}
            if set(declared.values()) != got:
                raise GraphError(f"declared attachments {sorted(declared.values())} "
                                 f"do not match the graph, expected {sorted(got)}")
        return cls(-graph.selfint[c], configs)


def normal_bundle_split(cfg):
    """Splitting type (b - c, -b) of the exceptional curve's normal bundle,
    with b the total resolution depth at the attachment points."""
    b = 0
    for g, v in cfg.configs:
        if not g.is_ade():
            raise GraphError("attached configuration is not an ADE graph")
        z = fundamental_cycle(g)
        if z[v] != 1:
            raise GraphError(
                f"attachment vertex {v!r} has multiplicity {z[v]} != 1 "
                f"in the fundamental cycle")
        b += resolution_depth(g, v)
    c = cfg.central_selfint
    a, bb = b - c, -b
    if not (2 * a + bb < 0 and a + bb <= -2):
        raise GraphError(f"splitting type ({a}, {bb}) violates the "
                         f"contraction inequalities")
    return a, bb


def central_multiplicity(graph, v=None):
    """Multiplicity of the fundamental cycle at the marked vertex.

    Used as a proxy for the length invariant of a small contraction; the
    maximal ideal cycle can differ from the fundamental cycle in general,
    so reports carry a caveat.
    """
    if v is None:
        v = graph.central
    if v not in graph.selfint:
        raise GraphError(f"vertex {v!r} not in graph")
    return fundamental_cycle(graph)[v]


# -- file format -------------------------------------------------------------
#
#   vertex <id> <self-intersection> [genus]
#   edge <id> <id>
#   central <id>
#   attach <config-id> <vertex-id>
#   '#' starts a comment

def parse_graph(text, name="<graph>"):
    selfint, genus, edges = {}, {}, []
    central = None
    attachments = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "vertex":
                vid = parts[1]
                selfint[vid] = int(parts[2])
                if len(parts) > 3:
                    genus[vid] = int(parts[3])
            elif kind == "edge":
                edges.append((parts[1], parts[2]))
            elif kind == "central":
                central = parts[1]
            elif kind == "attach":
                attachments[parts[1]] = parts[2]
            else:
                raise GraphError(f"{name}:{lineno}: unknown directive {kind!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"{name}:{lineno}: malformed line {raw!r}") from exc
    try:
        return ResolutionGraph(selfint, genus, edges, central, attachments)
    except GraphError as exc:
        raise GraphError(f"{name}: {exc}") from exc


def load_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), name=str(path))


# -- stock graphs ------------------------------------------------------------

def chain_graph(length, selfint=-2, prefix="a"):
    """An A_length chain."""
    ids = [f"{prefix}{i+1}" for i in range(length)]
    edges = [(ids[i], ids[i + 1]) for i in range(length - 1)]
    return ResolutionGraph({v: selfint for v in ids}, edges=edges)


def star_graph(central_selfint, arms, arm_length=1):
    """Central vertex with `arms` chains of (-2)-curves of the given length."""
    selfint = {"c": central_selfint}
    edges = []
    for a in range(arms):
        prev = "c"
        for j in range(arm_length):
            vid = f"a{a+1}_{j+1}" if arm_length > 1 else f"a{a+1}"
            selfint[vid] = -2
            edges.append((prev, vid))
            prev = vid
    return ResolutionGraph(selfint, edges=edges, central="c")


def d4_family_graph(n):
    """Central -(n+1) curve with 2n+1 attached A_1 points."""
    return star_graph(-(n + 1), 2 * n + 1)


def e7_family_graph(n):
    """Central -(n+1) curve attached to an A_3 end, an A_2 end and a fan of
    2n-1 single (-2)-curves."""
    selfint = {"c": -(n + 1)}
    edges = []
    for i, name in enumerate(["p1", "p2", "p3"]):
        selfint[name] = -2
        edges.append(("c" if i == 0 else f"p{i}", name))
    for i, name in enumerate(["q1", "q2"]):
        selfint[name] = -2
        edges.append(("c" if i == 0 else f"q{i}", name))
    for i in range(2 * n - 1):
        name = f"f{i+1}"
        selfint[name] = -2
        edges.append(("c", name))
    return ResolutionGraph(selfint, edges=edges, central="c")


def endrie_graph():
    """Central -4 curve with seven attached (-2)-curves."""
    return star_graph(-4, 7)
