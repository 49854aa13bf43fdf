"""Stored reference matrices for a two-vertex separator, and their regeneration."""

from __future__ import annotations

from importlib import resources

from .matrices import PolyMatrix, RationalMatrix
from .polynomial import X, Polynomial
from .reductions import ONE_PLUS_X
from .splitting import build_X_matrices

D_PAIR = "d_pair.txt"
D_PAIR_INVERSE = "d_pair_inverse.txt"

# the scale the stored inverse is labelled with, and the one its entries carry
STATED_INVERSE_SCALE = X * X * ONE_PLUS_X**2
ENTRY_INVERSE_SCALE = X * X * ONE_PLUS_X**4

PATH_POLYS = (
    Polynomial((1,)),
    Polynomial((0, 1)),
    Polynomial((0, 2, 1)),
    Polynomial((0, 1, 3, 1)),
    Polynomial((0, 0, 4, 4, 1)),
)


def parse_matrix(text: str) -> PolyMatrix:
    entries: dict[tuple[int, int], Polynomial] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [int(t) for t in line.split()]
        if len(parts) < 2:
            raise ValueError(f"line {lineno}: need 'row col coeffs...'")
        r, c, *coeffs = parts
        entries[(r - 1, c - 1)] = Polynomial(coeffs)
    n = 1 + max(max(r, c) for r, c in entries) if entries else 0
    if len(entries) != n * n:
        raise ValueError(f"expected {n * n} entries, found {len(entries)}")
    return PolyMatrix.build(n, n, lambda i, j: entries[(i, j)])


def render_matrix(m: PolyMatrix) -> str:
    rows, cols = m.shape
    lines = []
    for i in range(rows):
        for j in range(cols):
            lines.append(" ".join(str(t) for t in (i + 1, j + 1, *m[i, j].coeffs)))
    return "\n".join(lines) + "\n"


def load_matrix(name: str) -> PolyMatrix:
    text = resources.files("dompoly").joinpath("data").joinpath(name).read_text()
    return parse_matrix(text)


def generated_d_pair() -> PolyMatrix:
    return build_X_matrices((0, 1))[2]


def generated_d_pair_inverse() -> RationalMatrix:
    """D_X^{-1} for |X| = 2, by direct fraction-free inversion of D_X."""
    return generated_d_pair().inverse()


def path_product_table(shift: int) -> PolyMatrix:
    """Entry (r, c) = D(P_i) D(P_j) with per-vertex index max(a + b - shift, 0)."""

    def idx(a: int, b: int) -> int:
        return max(a + b - shift, 0)

    return PolyMatrix.build(
        9,
        9,
        lambda r, c: PATH_POLYS[idx(r % 3, c % 3)] * PATH_POLYS[idx(r // 3, c // 3)],
    )


def first_difference(got: PolyMatrix, want: PolyMatrix):
    """(row, col, got, want) with 1-based indices, or None if equal."""
    if got.shape != want.shape:
        return ("shape", got.shape, want.shape)
    rows, cols = got.shape
    for i in range(rows):
        for j in range(cols):
            if got[i, j] != want[i, j]:
                return (i + 1, j + 1, got[i, j], want[i, j])
    return None


def first_scaled_difference(inverse: RationalMatrix, scale: Polynomial, want: PolyMatrix):
    """Compare scale * inverse against want without leaving Z[x]."""
    rows, cols = inverse.shape
    for i in range(rows):
        for j in range(cols):
            if inverse.num[i, j] * scale != want[i, j] * inverse.den:
                return (i + 1, j + 1, (inverse[i, j] * scale).reduced(), want[i, j])
    return None


def check_fixtures() -> list[tuple[str, object]]:
    """Regenerate both matrices and diff them with the stored files.

    Returns (name, difference-or-None) per fixture.
    """
    d_pair = first_difference(generated_d_pair(), load_matrix(D_PAIR))
    inv = first_scaled_difference(
        generated_d_pair_inverse(), STATED_INVERSE_SCALE, load_matrix(D_PAIR_INVERSE)
    )
    return [(D_PAIR, d_pair), (D_PAIR_INVERSE, inv)]
