"""Splitting formulas at articulations and at general separating sets.

Boundary states of one separator vertex w are ordered
``(0, {w}), (0, 0), ({w}, {w})`` (index 0, 1, 2). For a separator X the
state of each vertex is one base-3 digit, and the smallest vertex of X is the
least significant digit. This is the label order of the size-2 fixture
vectors, e.g. index 1 of R({u, v}) is (0, {v}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graph import (
    Graph,
    GraphError,
    Splitting,
    append_pendant,
    contract_vertex,
    delete_edge,
    delete_vertex,
    delete_vertices,
    extract_closed_neighborhood,
)
from .matrices import PolyMatrix, kron_all
from .oracle import OracleEvaluator, StateIndex, brute_force_state
from .polynomial import X, ZERO, Polynomial
from .reductions import ONE_PLUS_X, Evaluator, split_in_out

MAX_SEPARATOR = 6
# sides up to this size get their state vectors straight from enumeration
STATE_ORACLE_MAX_N = 16


class UVector(NamedTuple):
    """(D_{v not in W}(G), p_v(G), D_{v in W}(G) / x)."""

    not_in: Polynomial
    p: Polynomial
    in_over_x: Polynomial


class DVector(NamedTuple):
    """(D(G - v), D(G), D(G + {v, .}))."""

    deleted: Polynomial
    whole: Polynomial
    pendant: Polynomial


@dataclass(frozen=True)
class StateVector:
    """Polynomials indexed by R(X) in the base-3 order described above."""

    x_set: tuple[int, ...]
    entries: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.entries) != 3 ** len(self.x_set):
            raise ValueError("state vector length must be 3^|X|")

    def __getitem__(self, key: int | StateIndex) -> Polynomial:
        if isinstance(key, StateIndex):
            key = state_position(self.x_set, key)
        return self.entries[key]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


# -- the singleton matrices ------------------------------------------------

_P = PolyMatrix([[1, 0, 0], [0, 1, 1], [X, 0, ONE_PLUS_X]])
_Q = PolyMatrix([[1, 1, 0], [1, 0, 0], [0, 0, X]])
_D = _P @ _Q @ _P.T
_D_DET = _D.det()  # -x (1+x)^2
# x (1+x)^2 D^{-1}
_N = _D.adjugate_and_det()[0].scale(-1)
_DINV_DEN = -_D_DET
# adj(Q) adj(P); (PQ)^{-1} = this / (det P det Q)
_PQ_ADJ = _Q.adjugate_and_det()[0] @ _P.adjugate_and_det()[0]
_PQ_DET = _P.det() * _Q.det()


def matrices_singleton() -> tuple[PolyMatrix, PolyMatrix, PolyMatrix]:
    """(P, Q, D) for one separator vertex, with D = P Q P^T."""
    return _P, _Q, _D


def scaled_singleton_inverse() -> tuple[PolyMatrix, Polynomial]:
    """(N, c) with D^{-1} = N / c and c = x (1+x)^2."""
    return _N, _DINV_DEN


# -- indexing --------------------------------------------------------------


def _sorted_x(x_set) -> tuple[int, ...]:
    xs = tuple(sorted(set(x_set)))
    if not xs:
        raise GraphError("separator must be non-empty")
    return xs


def enumerate_R(x_set) -> list[StateIndex]:
    """All (A, B) with A inside B inside X, in state-vector order."""
    xs = tuple(sorted(set(x_set)))
    out = []
    for code in range(3 ** len(xs)):
        a, b = set(), set()
        for v in xs:
            digit = code % 3
            code //= 3
            if digit == 0:
                b.add(v)
            elif digit == 2:
                a.add(v)
                b.add(v)
        out.append(StateIndex(frozenset(a), frozenset(b)))
    return out


def state_position(x_set: Sequence[int], s: StateIndex) -> int:
    pos, weight = 0, 1
    for v in sorted(x_set):
        if v in s.a_set:
            digit = 2
        elif v in s.b_set:
            digit = 0
        else:
            digit = 1
        pos += digit * weight
        weight *= 3
    return pos


def apply_mode(vec: Sequence[Polynomial], m: PolyMatrix, mode: int) -> list[Polynomial]:
    """Apply a 3x3 matrix along one base-3 digit of a 3^k vector."""
    stride = 3**mode
    out = [ZERO] * len(vec)
    rows = m.rows
    for block in range(0, len(vec), 3 * stride):
        for off in range(stride):
            base = block + off
            a0, a1, a2 = vec[base], vec[base + stride], vec[base + 2 * stride]
            for r in range(3):
                c0, c1, c2 = rows[r]
                acc = ZERO
                if c0 and a0:
                    acc = acc + c0 * a0
                if c1 and a1:
                    acc = acc + c1 * a1
                if c2 and a2:
                    acc = acc + c2 * a2
                out[base + r * stride] = acc
    return out


def apply_kron_power(vec: Sequence[Polynomial], m: PolyMatrix, k: int) -> list[Polynomial]:
    """(m (x) m (x) ... (x) m) applied to vec, without forming the product."""
    out = list(vec)
    for mode in range(k):
        out = apply_mode(out, m, mode)
    return out


def _dot(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> Polynomial:
    acc = ZERO
    for p, q in zip(a, b):
        if p and q:
            acc = acc + p * q
    return acc


def kron(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """a (x) b with the index of ``a`` as the least significant digit."""
    return b.kron(a)


def build_X_matrices(x_set) -> tuple[PolyMatrix, PolyMatrix, PolyMatrix]:
    """(P_X, Q_X, D_X) with D_X = P_X Q_X P_X^T checked.

    The product is checked densely up to |X| = 3 and factor by factor above.
    """
    xs = _sorted_x(x_set)
    k = len(xs)
    if k > MAX_SEPARATOR:
        raise GraphError(f"separator of size {k} exceeds the cap of {MAX_SEPARATOR}")
    px = kron_all([_P] * k)
    qx = kron_all([_Q] * k)
    dx = kron_all([_D] * k)
    if k <= 3:
        if px @ qx @ px.T != dx:
            raise ArithmeticError("D_X does not factor as P_X Q_X P_X^T")
    elif _P @ _Q @ _P.T != _D:
        raise ArithmeticError("D does not factor as P Q P^T")
    return px, qx, dx


# -- articulation (|X| = 1) ------------------------------------------------


def u_vector(g: Graph, v: int, dep: Evaluator) -> UVector:
    out, inside = split_in_out(g, v, dep)
    return UVector(out, dep.p(g, v), inside.divide_exact(X))


def d_vector(g: Graph, v: int, dep: Evaluator) -> DVector:
    g.closed_mask(v)
    return DVector(dep.D(delete_vertex(g, v)), dep.D(g), dep.D(append_pendant(g, v)))


def u_to_d(u: Sequence[Polynomial]) -> DVector:
    """d = P Q u."""
    return DVector(*(_P @ _Q).apply(list(u)))


def _singleton(s: Splitting) -> int:
    if len(s.x_set) != 1:
        raise GraphError("articulation formulas need a single separator vertex")
    s.validate()
    return s.x_set[0]


def articulation_split_Q(s: Splitting, dep: Evaluator) -> Polynomial:
    """D(G) = u(G1)^T Q u(G2)."""
    v = _singleton(s)
    u1, u2 = u_vector(s.g1, v, dep), u_vector(s.g2, v, dep)
    return _dot(u1, _Q.apply(list(u2)))


def articulation_split_Dinv(s: Splitting, dep: Evaluator) -> Polynomial:
    """D(G) = d(G1)^T D^{-1} d(G2), with the division carried out exactly."""
    v = _singleton(s)
    d1, d2 = d_vector(s.g1, v, dep), d_vector(s.g2, v, dep)
    return _dot(d1, _N.apply(list(d2))).divide_exact(_DINV_DEN)


def _pv_times_one_plus_x(g: Graph, v: int, dep: Evaluator) -> Polynomial:
    return (
        X * dep.D(contract_vertex(g, v))
        + dep.D(delete_vertex(g, v))
        + X * dep.D(extract_closed_neighborhood(g, v))
        - dep.D(g)
    )


def one_conn_recurrence(s: Splitting, dep: Evaluator, *, literal: bool = False) -> Polynomial:
    """Articulation recurrence built from the two sides and G / v.

    Each bracket equals (1+x) p_v of its side. With ``literal=True`` the
    second bracket uses D(G1 - v) in place of D(G2 - v), which does not
    give D(G) in general.
    """
    v = _singleton(s)
    g1, g2 = s.g1, s.g2
    b1 = _pv_times_one_plus_x(g1, v, dep)
    b2 = _pv_times_one_plus_x(g2, v, dep)
    if literal:
        b2 = b2 - dep.D(delete_vertex(g2, v)) + dep.D(delete_vertex(g1, v))
    return (
        X * dep.D(contract_vertex(s.graph, v))
        + dep.D(delete_vertex(g1, v)) * dep.D(delete_vertex(g2, v))
        + X
        * dep.D(extract_closed_neighborhood(g1, v))
        * dep.D(extract_closed_neighborhood(g2, v))
        - (b1 * b2).divide_exact(ONE_PLUS_X)
    )


# -- general separators ----------------------------------------------------


def modified_graph(g: Graph, s: StateIndex) -> Graph:
    """G with a pendant at every vertex of A and every vertex of B - A removed."""
    h = g
    for v in sorted(s.a_set):
        h = append_pendant(h, v)
    return delete_vertices(h, sorted(s.b_set - s.a_set))


def d_vector_general(g: Graph, x_set, dep: Evaluator) -> StateVector:
    xs = _sorted_x(x_set)
    if len(xs) > MAX_SEPARATOR:
        raise GraphError(f"separator of size {len(xs)} exceeds the cap of {MAX_SEPARATOR}")
    for v in xs:
        g.closed_mask(v)
    return StateVector(xs, tuple(dep.D(modified_graph(g, s)) for s in enumerate_R(xs)))


def state_vector(g: Graph, x_set, dep: Evaluator | None = None) -> StateVector:
    """u_X(G): state polynomials for every (A, B) in R(X).

    Small graphs are enumerated directly; otherwise u_X = (P_X Q_X)^{-1} d_X.
    """
    xs = _sorted_x(x_set)
    if len(xs) > MAX_SEPARATOR:
        raise GraphError(f"separator of size {len(xs)} exceeds the cap of {MAX_SEPARATOR}")
    if g.n <= STATE_ORACLE_MAX_N or dep is None:
        return StateVector(xs, tuple(brute_force_state(g, xs, s) for s in enumerate_R(xs)))
    d = d_vector_general(g, xs, dep).entries
    return state_vector_from_d(d, xs)


def state_vector_from_d(d: Sequence[Polynomial], x_set) -> StateVector:
    xs = _sorted_x(x_set)
    k = len(xs)
    num = apply_kron_power(d, _PQ_ADJ, k)
    den = _PQ_DET**k
    return StateVector(xs, tuple(e.divide_exact(den) for e in num))


def split_general_Q(s: Splitting, dep: Evaluator | None = None) -> Polynomial:
    """D(G) = u_X(G1)^T Q_X u_X(G2)."""
    s.validate()
    k = len(s.x_set)
    u1 = state_vector(s.g1, s.x_set, dep)
    u2 = state_vector(s.g2, s.x_set, dep)
    return _dot(u1.entries, apply_kron_power(u2.entries, _Q, k))


def split_general_Dinv(s: Splitting, dep: Evaluator) -> Polynomial:
    """D(G) = d_X(G1)^T D_X^{-1} d_X(G2), with the division carried out exactly."""
    s.validate()
    k = len(s.x_set)
    d1 = d_vector_general(s.g1, s.x_set, dep).entries
    d2 = d_vector_general(s.g2, s.x_set, dep).entries
    return _dot(d1, apply_kron_power(d2, _N, k)).divide_exact(_DINV_DEN**k)


def scaled_inverse_X(k: int) -> tuple[PolyMatrix, Polynomial]:
    """(N_X, c^k) with D_X^{-1} = N_X / c^k for |X| = k."""
    return kron_all([_N] * k), _DINV_DEN**k


# -- the size-2 edge instance ----------------------------------------------


def edge_split_weights() -> list[Polynomial]:
    """w with D_X^{-1} d_X(K_2) = w / (1+x)^2, for X the two ends of an edge."""
    k2 = Graph.from_edges(2, [(0, 1)])

    d = d_vector_general(k2, (0, 1), OracleEvaluator()).entries
    num = apply_kron_power(d, _N, 2)
    # D_X^{-1} d = num / (x^2 (1+x)^4); rescale to denominator (1+x)^2
    den = X * X * ONE_PLUS_X * ONE_PLUS_X
    return [e.divide_exact(den) for e in num]


def edge_split_formula(g: Graph, e: Sequence[int], dep: Evaluator) -> Polynomial:
    """Nine-term formula from splitting G at an edge into G - e and K_2."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"unknown edge {u}-{v}")
    h = delete_edge(g, (u, v))
    one_minus_x = Polynomial((1, -1))
    hu = append_pendant(h, u)
    hv = append_pendant(h, v)
    total = (
        X * ONE_PLUS_X * (dep.D(delete_vertex(g, v)) + dep.D(delete_vertex(g, u)))
        + one_minus_x * dep.D(delete_vertex(append_pendant(g, u), v))
        - ONE_PLUS_X * dep.D(hu)
        + one_minus_x * dep.D(append_pendant(delete_vertex(g, u), v))
        - ONE_PLUS_X * dep.D(hv)
        + ONE_PLUS_X * ONE_PLUS_X * dep.D(h)
        + 2 * dep.D(append_pendant(hu, v))
        - 2 * X * dep.D(delete_vertices(g, (u, v)))
    )
    return total.divide_exact(ONE_PLUS_X * ONE_PLUS_X)
