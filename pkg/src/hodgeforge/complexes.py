"""Abstract simplicial complexes: constructors, products, quotients, subdivisions.

Simplices are stored as tuples of vertex ids in strictly ascending order; that
single convention fixes every orientation sign used downstream.
"""

from itertools import combinations, permutations

from .errors import MalformedFacetError, QuotientInvalidError


def canonical_simplex(vertices):
    """Sorted tuple form of a simplex; rejects repeated or negative vertices."""
    vs = tuple(sorted(vertices))
    if any(not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in vs):
        raise MalformedFacetError(f"vertices must be non-negative integers: {vertices}")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise MalformedFacetError(f"repeated vertex {a} inside facet {vertices}")
    return vs


class SimplicialComplex:
    """Immutable complex: facets plus the full face-closed skeleton.

    Use :func:`build_from_facets` or the generators below; the constructor
    trusts its arguments.
    """

    def __init__(self, name, facets, skeleton):
        self.name = name
        self.facets = facets        # tuple of ascending tuples, sorted
        self._skeleton = skeleton   # skeleton[k] = sorted tuple of k-simplices
        self._sets = tuple(frozenset(level) for level in skeleton)
        self._index = None

    @property
    def dim(self):
        return len(self._skeleton) - 1

    @property
    def f_vector(self):
        return tuple(len(level) for level in self._skeleton)

    @property
    def euler_characteristic(self):
        return sum((-1) ** k * f for k, f in enumerate(self.f_vector))

    @property
    def vertices(self):
        if not self._skeleton:
            return ()
        return tuple(s[0] for s in self._skeleton[0])

    def skeleton(self, k):
        if 0 <= k <= self.dim:
            return self._skeleton[k]
        return ()

    def simplices(self):
        for level in self._skeleton:
            yield from level

    def has_simplex(self, simplex):
        k = len(simplex) - 1
        return 0 <= k <= self.dim and tuple(simplex) in self._sets[k]

    def index(self, k):
        """Position of each k-simplex inside skeleton(k)."""
        if self._index is None:
            self._index = tuple(
                {s: i for i, s in enumerate(level)} for level in self._skeleton
            )
        if 0 <= k <= self.dim:
            return self._index[k]
        return {}

    def __repr__(self):
        return f"SimplicialComplex({self.name!r}, f={self.f_vector})"


def _close_and_build(name, facet_set):
    """Face-close a set of canonical simplices and keep the maximal ones."""
    if not facet_set:
        return SimplicialComplex(name, (), ())
    by_dim = {}
    for f in facet_set:
        dim = len(f) - 1
        for k in range(dim + 1):
            by_dim.setdefault(k, set()).update(combinations(f, k + 1))
    top = max(by_dim)
    skeleton = tuple(tuple(sorted(by_dim.get(k, ()))) for k in range(top + 1))
    # a simplex is maximal iff it is not a face of a simplex one dimension up
    facets = []
    for k, level in enumerate(skeleton):
        if k == top:
            facets.extend(level)
            continue
        covered = set()
        for s in skeleton[k + 1]:
            covered.update(combinations(s, k + 1))
        facets.extend(s for s in level if s not in covered)
    return SimplicialComplex(name, tuple(sorted(facets, key=lambda s: (len(s), s))), skeleton)


def build_from_facets(facets, name="complex"):
    """Build the complex generated by the given facets.

    Duplicate facets and facets that are faces of other facets are absorbed
    silently; a repeated vertex inside one facet raises MalformedFacetError.
    """
    canon = {canonical_simplex(f) for f in facets}
    return _close_and_build(name, canon)


def point(vertex=0, name="point"):
    return build_from_facets([[vertex]], name=name)


def simplex_sphere(n, name=None):
    """Boundary of the (n+1)-simplex on vertices 0..n+1, a triangulated n-sphere."""
    if n < 0:
        raise MalformedFacetError("sphere dimension must be >= 0")
    verts = range(n + 2)
    facets = combinations(verts, n + 1)
    return build_from_facets(facets, name=name or f"S{n}_simplex")


def cross_polytope_sphere(n, name=None):
    """Boundary of the (n+1)-dimensional cross polytope, a triangulated n-sphere.

    Axis i in 0..n has poles 2i (plus) and 2i+1 (minus); facets choose one
    pole per axis, so antipodal pairs never span a simplex.
    """
    if n < 1:
        raise MalformedFacetError("cross polytope sphere needs n >= 1")
    axes = range(n + 1)
    facets = []
    for bits in range(2 ** (n + 1)):
        facets.append([2 * i + ((bits >> i) & 1) for i in axes])
    return build_from_facets(facets, name=name or f"S{n}_cross")


def circle(m, name=None):
    """Cyclic triangulation of the circle on m >= 3 vertices."""
    if m < 3:
        raise MalformedFacetError("a simplicial circle needs at least 3 vertices")
    facets = [[i, (i + 1) % m] for i in range(m)]
    return build_from_facets(facets, name=name or f"S1_{m}")


def antipodal_map(n):
    """Vertex map of the antipodal involution on cross_polytope_sphere(n)."""
    return {v: v ^ 1 for v in range(2 * (n + 1))}


def axis_reflection_map(n, axis=0):
    """Vertex map swapping the two poles of one axis of cross_polytope_sphere(n)."""
    m = {v: v for v in range(2 * (n + 1))}
    m[2 * axis] = 2 * axis + 1
    m[2 * axis + 1] = 2 * axis
    return m


def rotation_map(m, step=1):
    """Vertex map rotating circle(m) by `step` vertices."""
    return {i: (i + step) % m for i in range(m)}


# Icosahedron with vertices placed so that v -> antipode is simplicial:
# top pentagon 0-4, bottom pentagon 5-9, poles 10/11.  Embedded data rather
# than a constructive generator; validated by f=(12,30,20) and chi=2 in tests.
_ICOSAHEDRON_FACETS = tuple(
    [(10, i, (i + 1) % 5) for i in range(5)]
    + [(11, 5 + i, 5 + (i + 1) % 5) for i in range(5)]
    + [(i, (i + 1) % 5, 5 + i) for i in range(5)]
    + [(5 + i, 5 + (i + 1) % 5, (i + 1) % 5) for i in range(5)]
)


def icosahedron(name="icosahedron"):
    return build_from_facets(_ICOSAHEDRON_FACETS, name=name)


def icosahedron_antipodal_map():
    m = {}
    for i in range(5):
        m[i] = 5 + (i + 2) % 5
        m[5 + i] = (i + 3) % 5
    m[10], m[11] = 11, 10
    return m


class GroupAction:
    """A list of vertex permutations, each a simplicial automorphism."""

    def __init__(self, generators):
        self.generators = [dict(g) for g in generators]

    def validate(self, complex):
        verts = set(complex.vertices)
        for g in self.generators:
            if set(g) != verts or set(g.values()) != verts:
                raise QuotientInvalidError(
                    "generator is not a permutation of the vertex set"
                )
            for f in complex.facets:
                image = tuple(sorted(g[v] for v in f))
                if not complex.has_simplex(image):
                    raise QuotientInvalidError(
                        f"generator image of facet {f} is not a simplex"
                    )

    def elements(self, vertices):
        """All permutations in the generated group, as vertex dicts."""
        verts = tuple(vertices)
        ident = tuple(verts)
        as_tuple = lambda g: tuple(g[v] for v in verts)
        seen = {ident}
        frontier = []
        for g in self.generators:
            t = as_tuple(g)
            if t not in seen:
                seen.add(t)
                frontier.append(t)
        pos = {v: i for i, v in enumerate(verts)}
        while frontier:
            nxt = []
            for t in frontier:
                for g in self.generators:
                    composed = tuple(g[x] for x in t)
                    if composed not in seen:
                        seen.add(composed)
                        nxt.append(composed)
            frontier = nxt
        return [dict(zip(verts, t)) for t in sorted(seen)]


def quotient(complex, action, name=None):
    """Quotient by a free simplicial action; rejects anything non-free.

    The action must move every simplex (no setwise fixing), no simplex may
    contain two vertices of one orbit, and distinct simplex orbits must stay
    distinct downstairs; violations raise QuotientInvalidError naming the
    offending simplex.
    """
    action.validate(complex)
    verts = complex.vertices
    group = action.elements(verts)
    order = len(group)
    if order == 1:
        return SimplicialComplex(name or complex.name, complex.facets, complex._skeleton)

    # vertex orbits, labelled by ascending minimal representative
    orbit_of = {}
    reps = []
    for v in verts:
        if v in orbit_of:
            continue
        orbit = sorted({g[v] for g in group})
        reps.append(orbit[0])
        for w in orbit:
            orbit_of[w] = orbit[0]
    label = {rep: i for i, rep in enumerate(sorted(reps))}

    identity = {v: v for v in verts}
    for g in group:
        if g == identity:
            continue
        for s in complex.simplices():
            if tuple(sorted(g[v] for v in s)) == s:
                raise QuotientInvalidError(
                    f"action is not free: simplex {s} is fixed setwise"
                )
    images = {}
    for s in complex.simplices():
        labels = [label[orbit_of[v]] for v in s]
        if len(set(labels)) != len(labels):
            raise QuotientInvalidError(
                f"simplex {s} contains two vertices of the same orbit"
            )
        images.setdefault(tuple(sorted(labels)), []).append(s)
    for img, pre in images.items():
        if len(pre) != order:
            raise QuotientInvalidError(
                f"distinct simplex orbits collide at {pre[0]} (image {img})"
            )

    facet_images = {tuple(sorted(label[orbit_of[v]] for v in f)) for f in complex.facets}
    return _close_and_build(name or f"{complex.name}/G{order}", facet_images)


def product(K, L, name=None):
    """Staircase triangulation of |K| x |L|.

    Each facet cell sigma x tau is cut along monotone lattice paths; the
    global vertex order makes the cells glue into one complex, and
    chi(K x L) = chi(K) * chi(L).
    """
    if K.dim < 0 or L.dim < 0:
        raise MalformedFacetError("product factors must be nonempty")
    kv = {v: i for i, v in enumerate(K.vertices)}
    lv = {v: i for i, v in enumerate(L.vertices)}
    nl = len(lv)
    pair_id = lambda a, b: kv[a] * nl + lv[b]

    facets = set()
    for sigma in K.facets:
        p = len(sigma) - 1
        for tau in L.facets:
            q = len(tau) - 1
            # monotone paths from (0,0) to (p,q): choose which steps move in sigma
            for rights in combinations(range(p + q), p):
                i = j = 0
                path = [pair_id(sigma[0], tau[0])]
                for step in range(p + q):
                    if step in rights:
                        i += 1
                    else:
                        j += 1
                    path.append(pair_id(sigma[i], tau[j]))
                facets.add(tuple(path))
    return _close_and_build(name or f"{K.name} x {L.name}", facets)


def join(K, L, name=None):
    """Simplicial join; vertices of L are shifted past those of K."""
    kmap = {v: i for i, v in enumerate(K.vertices)}
    off = len(kmap)
    lmap = {v: off + i for i, v in enumerate(L.vertices)}
    k_facets = [tuple(kmap[v] for v in f) for f in K.facets] or [()]
    l_facets = [tuple(lmap[v] for v in f) for f in L.facets] or [()]
    facets = {tuple(sorted(a + b)) for a in k_facets for b in l_facets if a + b}
    return _close_and_build(name or f"{K.name} * {L.name}", facets)


def suspension(K, name=None):
    s0 = build_from_facets([[0], [1]], name="S0")
    return join(K, s0, name=name or f"susp {K.name}")


def barycentric_subdivision(K, name=None):
    """One barycentric subdivision: vertices are the simplices of K, simplices
    are chains under the face order."""
    if K.dim < 0:
        return SimplicialComplex(name or K.name, (), ())
    order = {}
    for s in sorted(K.simplices(), key=lambda s: (len(s), s)):
        order[s] = len(order)
    facets = []
    for f in K.facets:
        for perm in permutations(f):
            chain = [order[tuple(sorted(perm[: i + 1]))] for i in range(len(perm))]
            facets.append(chain)
    return build_from_facets(facets, name=name or f"sd {K.name}")


def relabel(K, mapping, name=None):
    """Rename vertices through a bijection; the complex is rebuilt canonically."""
    if len(set(mapping.values())) != len(mapping):
        raise MalformedFacetError("relabel mapping must be a bijection")
    facets = [[mapping[v] for v in f] for f in K.facets]
    return build_from_facets(facets, name=name or K.name)
