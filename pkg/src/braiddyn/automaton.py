"""The mass automaton: vertices, weighted arrows, recognition, spectra.

For odd n the automaton has n vertices v_0..v_{n-1} with basis
(V1[j], V2[j]); every vertex receives one incoming arrow per twist
letter sigma_{gamma^j P_1} from each vertex except v_{j+(n-1)/2}, plus
gamma / gamma^-1 arrows shifting the index.  For even n there are n/2
v-vertices as before and n/2 u-vertices with basis (V2[j], U[j]);
sigma_{gamma^j P_1} arrows point into v_j from everything except
u_{j+n/2-1}, and sigma_{gamma^j P_2} arrows into u_j from everything
except v_j.

Arrow matrices are 2x2 with MassPoly entries: column c holds the
coordinates, in the target basis, of the image of the c-th source basis
unit.  Twist matrices come from the letter-support tables; gamma arrows
are the identity except across the index wraparound, which carries the
full central shift (s^-2 for odd n, the class Pi_{n-2} times s^-1 for
even n, and the inverses on gamma^-1).  Entries always have nonnegative
coefficients, so an entry is strictly positive for every t exactly when
it is a nonzero polynomial; zero patterns are read off symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braidword import NormalForm, TwistLetter, forbidden_source, target_vertex, twist_modulus
from .fusion import FusionVec, MassPoly, eval_mass, mass_mul
from .twistcalc import U, V1, V2, SemistableUnit, support_column

__all__ = [
    "Arrow",
    "MassAutomaton",
    "MassMatrix",
    "PathWitness",
    "Vertex",
    "build",
    "path_matrix",
    "pf_eigenvalue",
    "recognize",
    "zero_pattern",
]

VertexId = tuple[str, int]
MassMatrix = tuple[tuple[MassPoly, MassPoly], tuple[MassPoly, MassPoly]]


@dataclass(frozen=True)
class Vertex:
    id: VertexId
    basis: tuple[SemistableUnit, SemistableUnit]


@dataclass(frozen=True)
class Arrow:
    source: VertexId
    target: VertexId
    label: TwistLetter | int  # twist letter, or +-1 for gamma^{+-1}
    matrix: MassMatrix

    def label_text(self) -> str:
        if isinstance(self.label, int):
            return "gamma" if self.label == 1 else "gamma^-1"
        return self.label.label()


@dataclass(frozen=True)
class PathWitness:
    start: VertexId
    arrows: tuple[Arrow, ...]  # arrows[0] is traversed first
    closed: bool

    def end(self) -> VertexId:
        return self.arrows[-1].target if self.arrows else self.start


def _identity_matrix(n: int) -> MassMatrix:
    one, zero = MassPoly.one(n), MassPoly.zero(n)
    return ((one, zero), (zero, one))


def _scalar_matrix(n: int, label: int, exp: int) -> MassMatrix:
    s = MassPoly.from_dict(n, {exp: FusionVec.simple(n, label)})
    zero = MassPoly.zero(n)
    return ((s, zero), (zero, s))


def mat_mul(a: MassMatrix, b: MassMatrix) -> MassMatrix:
    return tuple(
        tuple(
            mass_mul(a[i][0], b[0][j]) + mass_mul(a[i][1], b[1][j]) for j in range(2)
        )
        for i in range(2)
    )


@dataclass(frozen=True)
class MassAutomaton:
    n: int
    vertices: dict[VertexId, Vertex]
    arrows: tuple[Arrow, ...]
    twist_arrows: dict[tuple[TwistLetter, VertexId], Arrow]
    gamma_arrows: dict[tuple[int, VertexId], Arrow]

    def vertex_order(self) -> list[VertexId]:
        m = twist_modulus(self.n)
        ids = [("v", j) for j in range(m)]
        if self.n % 2 == 0:
            ids += [("u", j) for j in range(m)]
        return ids

    def letters(self) -> list[TwistLetter]:
        m = twist_modulus(self.n)
        out = [TwistLetter(1, j) for j in range(m)]
        if self.n % 2 == 0:
            out += [TwistLetter(2, j) for j in range(m)]
        return out

    def to_json(self) -> dict:
        verts = [
            {
                "id": f"{vid[0]}{vid[1]}",
                "basis": [
                    {"family": b.family, "index": b.index} for b in self.vertices[vid].basis
                ],
            }
            for vid in self.vertex_order()
        ]
        arrows = [
            {
                "from": f"{a.source[0]}{a.source[1]}",
                "to": f"{a.target[0]}{a.target[1]}",
                "label": a.label_text(),
                "matrix": [[a.matrix[r][c].to_json() for c in range(2)] for r in range(2)],
            }
            for a in self.arrows
        ]
        return {"n": self.n, "vertices": verts, "arrows": arrows}


def _vertex_basis(n: int, vid: VertexId) -> tuple[SemistableUnit, SemistableUnit]:
    kind, j = vid
    if kind == "v":
        return (SemistableUnit(V1, j), SemistableUnit(V2, j))
    return (SemistableUnit(V2, j), SemistableUnit(U, j))


def build(n: int) -> MassAutomaton:
    """Construct the full automaton; matrices are precomputed on arrows."""
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    m = twist_modulus(n)
    vertices: dict[VertexId, Vertex] = {}
    ids = [("v", j) for j in range(m)] + ([("u", j) for j in range(m)] if n % 2 == 0 else [])
    for vid in ids:
        vertices[vid] = Vertex(vid, _vertex_basis(n, vid))

    arrows: list[Arrow] = []
    twist_arrows: dict[tuple[TwistLetter, VertexId], Arrow] = {}
    gamma_arrows: dict[tuple[int, VertexId], Arrow] = {}

    # Base-letter matrices come from the support tables; every other twist
    # arrow is the exact gamma-conjugate of a base arrow.  Pulling the
    # source back by gamma^-j crosses the index wraparound at most once,
    # contributing one central monomial factor (s^2 odd, [Pi_{n-2}] s even).
    wrap = (
        MassPoly.from_dict(n, {2: FusionVec.simple(n, 0)})
        if n % 2
        else MassPoly.from_dict(n, {1: FusionVec.simple(n, n - 2)})
    )
    base_letters = [TwistLetter(1, 0)] + ([TwistLetter(2, 0)] if n % 2 == 0 else [])
    base_matrices: dict[tuple[int, VertexId], MassMatrix] = {}
    for letter in base_letters:
        tgt_basis = _vertex_basis(n, target_vertex(n, letter))
        banned = forbidden_source(n, letter)
        for src in ids:
            if src == banned:
                continue
            cols = [
                support_column(n, letter, unit, tgt_basis)
                for unit in vertices[src].basis
            ]
            base_matrices[(letter.family, src)] = (
                (cols[0][0], cols[1][0]),
                (cols[0][1], cols[1][1]),
            )

    letters = [TwistLetter(f, j) for f in ([1] if n % 2 else [1, 2]) for j in range(m)]
    for letter in letters:
        tgt = target_vertex(n, letter)
        banned = forbidden_source(n, letter)
        j = letter.index
        for src in ids:
            if src == banned:
                continue
            base_src = (src[0], (src[1] - j) % m)
            matrix = base_matrices[(letter.family, base_src)]
            if src[1] < j:  # the gamma^-j pull-back crossed the wraparound
                matrix = tuple(
                    tuple(mass_mul(entry, wrap) for entry in row) for row in matrix
                )
            arrow = Arrow(src, tgt, letter, matrix)
            arrows.append(arrow)
            twist_arrows[(letter, src)] = arrow

    for kind in {vid[0] for vid in ids}:
        for j in range(m):
            fwd_src, fwd_tgt = (kind, j), (kind, (j + 1) % m)
            if j + 1 < m:
                fwd_matrix = _identity_matrix(n)
                bwd_matrix = _identity_matrix(n)
            elif n % 2:
                fwd_matrix = _scalar_matrix(n, 0, -2)
                bwd_matrix = _scalar_matrix(n, 0, 2)
            else:
                fwd_matrix = _scalar_matrix(n, n - 2, -1)
                bwd_matrix = _scalar_matrix(n, n - 2, 1)
            fwd = Arrow(fwd_src, fwd_tgt, 1, fwd_matrix)
            bwd = Arrow(fwd_tgt, fwd_src, -1, bwd_matrix)
            arrows.append(fwd)
            arrows.append(bwd)
            gamma_arrows[(1, fwd_src)] = fwd
            gamma_arrows[(-1, fwd_tgt)] = bwd

    return MassAutomaton(n, vertices, tuple(arrows), twist_arrows, gamma_arrows)


def simulate(
    auto: MassAutomaton, letters: list[TwistLetter | int], start: VertexId
) -> tuple[Arrow, ...] | None:
    """Follow a letter sequence from a start vertex; None if it jams."""
    cur = start
    out: list[Arrow] = []
    for letter in letters:
        if isinstance(letter, int):
            arrow = auto.gamma_arrows[(letter, cur)]
        else:
            arrow = auto.twist_arrows.get((letter, cur))
            if arrow is None:
                return None
        out.append(arrow)
        cur = arrow.target
    return tuple(out)


def recognize(
    auto: MassAutomaton, nf: NormalForm, require_closed: bool = False
) -> PathWitness | None:
    """Deterministic word recognition, scanning start vertices v_0.., u_0..

    Twist letters force their target vertex, so the only search is over
    the start vertex.  Returns the first witness in scan order; with
    ``require_closed`` a closed witness is preferred, falling back to
    the first witness when no start vertex closes up.
    """
    letters = nf.letters_applied()
    first: PathWitness | None = None
    for start in auto.vertex_order():
        path = simulate(auto, letters, start)
        if path is None:
            continue
        end = path[-1].target if path else start
        witness = PathWitness(start, path, end == start)
        if not require_closed:
            return witness
        if witness.closed:
            return witness
        if first is None:
            first = witness
    return first


def recognizes_word(auto: MassAutomaton, letters: list[TwistLetter | int]) -> bool:
    return any(
        simulate(auto, letters, start) is not None for start in auto.vertex_order()
    )


def path_matrix(auto: MassAutomaton, path: PathWitness) -> MassMatrix:
    """Ordered product M(e_k) ... M(e_1); the empty path gives the identity."""
    out = _identity_matrix(auto.n)
    for arrow in path.arrows:
        out = mat_mul(arrow.matrix, out)
    return out


def zero_pattern(matrix: MassMatrix) -> str:
    """Symbolic shape: 'diagonal', 'lower', 'upper' (triangular) or 'full'.

    Nonnegative coefficients make 'nonzero polynomial' equivalent to
    'strictly positive for every t'.  A zero diagonal entry cannot occur
    for path matrices and is reported as a structural error.
    """
    if matrix[0][0].is_zero() or matrix[1][1].is_zero():
        raise ValueError("path matrix with a vanishing diagonal entry")
    up, lo = matrix[0][1].is_zero(), matrix[1][0].is_zero()
    if up and lo:
        return "diagonal"
    if up:
        return "lower"
    if lo:
        return "upper"
    return "full"


def pf_eigenvalue(matrix: MassMatrix, t: float) -> float:
    """Largest eigenvalue of the (entrywise nonnegative) matrix at parameter t."""
    a = eval_mass(matrix[0][0], t)
    b = eval_mass(matrix[0][1], t)
    c = eval_mass(matrix[1][0], t)
    d = eval_mass(matrix[1][1], t)
    tr, det = a + d, a * d - b * c
    disc = max(tr * tr - 4.0 * det, 0.0)
    return 0.5 * (tr + math.sqrt(disc))
