"""Flag complexes, integral first homology, and the simple-connectivity test.

A connected graph has a simply connected flag complex exactly when it is
chordal: chordal graphs have a simplicial vertex whose closed neighbourhood is
a cone, so removing vertices in a perfect elimination ordering collapses the
complex to a point; conversely an induced cycle of length at least four gives
a nonzero class in H1. The decision procedure below uses that equivalence and
the homology routine is kept as an independent cross-check.
"""

from dataclasses import dataclass, field

from .graph import all_cliques_mask, connected_components, is_chordal, is_connected
from .intmat import smith_invariants


@dataclass(frozen=True)
class FlagComplex:
    """Cliques of a graph grouped by dimension; ``simplices_by_dim[d]`` holds (d+1)-cliques."""

    vertices: tuple
    simplices_by_dim: tuple

    @property
    def f_vector(self):
        return tuple(len(s) for s in self.simplices_by_dim)

    @property
    def dimension(self):
        return len(self.simplices_by_dim) - 1

    @property
    def euler_characteristic(self):
        return sum((-1) ** d * c for d, c in enumerate(self.f_vector))

    def simplices(self, dim):
        if 0 <= dim < len(self.simplices_by_dim):
            return self.simplices_by_dim[dim]
        return ()

    def boundary_matrix(self, dim):
        """Matrix of the boundary map from ``dim``-chains to ``(dim-1)``-chains.

        Rows are indexed by ``simplices(dim - 1)`` and columns by
        ``simplices(dim)``; the face dropping the ``k``-th vertex gets sign
        ``(-1)**k``.
        """
        faces = self.simplices(dim - 1)
        cells = self.simplices(dim)
        row_of = {s: i for i, s in enumerate(faces)}
        mat = [[0] * len(cells) for _ in faces]
        if dim <= 0:
            return mat
        for j, s in enumerate(cells):
            for k in range(len(s)):
                mat[row_of[s[:k] + s[k + 1:]]][j] += -1 if k % 2 else 1
        return mat

    def to_dict(self):
        return {
            "f_vector": list(self.f_vector),
            "euler_characteristic": self.euler_characteristic,
            "simplices": [[list(s) for s in layer] for layer in self.simplices_by_dim],
            "boundary_1": self.boundary_matrix(1),
            "boundary_2": self.boundary_matrix(2),
        }


@dataclass(frozen=True)
class HomologySummary:
    h1_rank: int
    h1_torsion: tuple
    euler_characteristic: int

    @property
    def h1_trivial(self):
        return self.h1_rank == 0 and not self.h1_torsion


@dataclass(frozen=True)
class FlagVerdict:
    """Outcome of :func:`is_flag_simply_connected`.

    ``reason`` is ``"chordal"`` when the answer is yes, otherwise
    ``"disconnected"`` (with ``components``) or ``"induced_cycle"`` (with the
    cycle in ``certificate.witness_cycle``).
    """

    simply_connected: bool
    reason: str
    certificate: object = None
    components: tuple = field(default=())

    def __bool__(self):
        return self.simply_connected

    @property
    def witness(self):
        if self.reason == "disconnected":
            return self.components
        if self.reason == "induced_cycle":
            return self.certificate.witness_cycle
        return None


def flag_complex(g, cap=None):
    kwargs = {} if cap is None else {"cap": cap}
    layers = []
    for m in all_cliques_mask(g.adj, g.full_mask, **kwargs):
        d = m.bit_count() - 1
        while len(layers) <= d:
            layers.append([])
        layers[d].append(g.names_of(m))
    return FlagComplex(g.vertices, tuple(tuple(layer) for layer in layers))


def h1_summary(x):
    """Rank and torsion of H1(x; Z) via Smith normal form of the first two boundary maps."""
    edges = len(x.simplices(1))
    rank1 = len(smith_invariants(x.boundary_matrix(1))) if edges else 0
    inv2 = smith_invariants(x.boundary_matrix(2)) if x.simplices(2) else []
    return HomologySummary(
        h1_rank=edges - rank1 - len(inv2),
        h1_torsion=tuple(d for d in inv2 if d > 1),
        euler_characteristic=x.euler_characteristic,
    )


def is_flag_simply_connected(g):
    if not is_connected(g):
        return FlagVerdict(False, "disconnected", components=tuple(connected_components(g)))
    cert = is_chordal(g)
    if cert.is_chordal:
        return FlagVerdict(True, "chordal", certificate=cert)
    return FlagVerdict(False, "induced_cycle", certificate=cert)
