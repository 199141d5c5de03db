"""Curated fixture semigroups used by tests, the harness and the docs.

B2 is the 5-element Brandt semigroup over the trivial group (matrix-unit
type products), B2M the monoid obtained by adjoining an identity to it.
CS6 (left-zero 2 x cyclic 3) and CL6 (cyclic 3 x 2-chain of idempotents)
are the two order-6 regular fixtures: one completely simple with
nontrivial subgroups, one a commutative inverse semigroup with two
D-classes.
"""

from __future__ import annotations

from .core import FiniteSemigroup, adjoin_identity, make_semigroup


def trivial() -> FiniteSemigroup:
    return make_semigroup([[0]], ["e"])


def cyclic_group(n: int) -> FiniteSemigroup:
    labels = ["e"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    return make_semigroup([[(i + j) % n for j in range(n)] for i in range(n)], labels)


def left_zero(n: int) -> FiniteSemigroup:
    return make_semigroup([[i] * n for i in range(n)], [f"x{i}" for i in range(n)])


def right_zero(n: int) -> FiniteSemigroup:
    return make_semigroup([list(range(n)) for _ in range(n)], [f"x{i}" for i in range(n)])


def null_semigroup(n: int) -> FiniteSemigroup:
    """All products equal the zero element (index 0)."""
    return make_semigroup([[0] * n for _ in range(n)], ["0"] + [f"a{i}" if i > 1 else "a" for i in range(1, n)])


def brandt_b2() -> FiniteSemigroup:
    """Matrix-unit products (i,j)(k,l) = (i,l) when j = k, else 0."""
    order = ["0", "e11", "a12", "a21", "e22"]
    coords = {1: (1, 1), 2: (1, 2), 3: (2, 1), 4: (2, 2)}
    n = 5
    table = [[0] * n for _ in range(n)]
    inv_coords = {v: k for k, v in coords.items()}
    for a in range(1, n):
        for b in range(1, n):
            (i, j), (k, l) = coords[a], coords[b]
            table[a][b] = inv_coords[(i, l)] if j == k else 0
    return make_semigroup(table, order)


def rect_band(rows: int, cols: int) -> FiniteSemigroup:
    """(i,j)(k,l) = (i,l); every element idempotent, H trivial."""
    n = rows * cols
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            i = a // cols
            l = b % cols
            table[a][b] = i * cols + l
    labels = [f"e{a // cols + 1}{a % cols + 1}" for a in range(n)]
    return make_semigroup(table, labels)


def left_group_lz2_z3() -> FiniteSemigroup:
    """Direct product of the 2-element left-zero band with the cyclic group of order 3."""
    n = 6
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            i, g = divmod(a, 3)
            _, h = divmod(b, 3)
            table[a][b] = i * 3 + (g + h) % 3
    labels = [f"{'xy'[a // 3]}{a % 3}" for a in range(n)]
    return make_semigroup(table, labels)


def clifford_z3_chain2() -> FiniteSemigroup:
    """Strong 2-chain of two copies of the cyclic group of order 3 (identity linking map)."""
    n = 6
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            e, g = divmod(a, 3)
            f, h = divmod(b, 3)
            table[a][b] = min(e, f) * 3 + (g + h) % 3
    labels = [f"{'fe'[a // 3]}{a % 3}" for a in range(n)]
    return make_semigroup(table, labels)


def fixture_semigroups() -> dict[str, FiniteSemigroup]:
    b2 = brandt_b2()
    return {
        "trivial": trivial(),
        "Z3": cyclic_group(3),
        "LZ2": left_zero(2),
        "N2": null_semigroup(2),
        "RB22": rect_band(2, 2),
        "B2": b2,
        "B2M": adjoin_identity(b2),
        "CS6": left_group_lz2_z3(),
        "CL6": clifford_z3_chain2(),
    }
