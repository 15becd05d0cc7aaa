"""A fixed, deterministic catalog of small braiding matrices for sweeps.

Every matrix is symmetric (q_ij = q_ji), has rank at most 3, and uses
entries whose multiplicative orders lie in {1, 2, 3, 4, 6}.  The selection
mixes the three shapes the property sweeps need to exercise:

* quantum linear matrices (q_ij q_ji = 1 for i != j), where the braided
  Lie algebra is spanned by plain generator powers;
* chain braidings of the kind the dimension formulas cover, with
  q_ij^2 = q_ii^-1 along edges;
* mixed matrices -- triangles, unequal diagonal orders, order-1 diagonal
  entries, and disconnected diagrams.

Entries are written as turn fractions: ``R(a, b)`` is exp(2*pi*i*a/b), so
``R(0)`` is 1, ``R(1, 2)`` is -1, ``R(1, 4)`` is the imaginary unit.
"""

from __future__ import annotations

from .braiding import BraidingMatrix
from .scalars import RootFraction as R

__all__ = ["CATALOG", "catalog", "quantum_linear", "a_chain"]

_ONE = R(0)


def quantum_linear(diagonal, off=_ONE) -> BraidingMatrix:
    """Symmetric matrix with the given diagonal and constant off-diagonal.

    The off-diagonal entry must square to one (so q_ij q_ji = q_ij^2 = 1
    keeps the matrix quantum linear).
    """
    if not (off * off).is_one():
        raise ValueError("off-diagonal entry must be 1 or -1")
    n = len(diagonal)
    rows = [[diagonal[i] if i == j else off for j in range(n)] for i in range(n)]
    return BraidingMatrix(rows)


def a_chain(n: int, q: R, edge: R) -> BraidingMatrix:
    """Chain with q on the diagonal and `edge` on adjacent pairs (both ways).

    The edge entry must satisfy edge^2 = q^-1, which puts the symmetrized
    scalar of every adjacent pair at q^-1 -- the chain shape the dimension
    formulas describe.
    """
    if not (edge * edge * q).is_one():
        raise ValueError("edge entry must square to q^-1")
    rows = [[_ONE] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = q
    for i in range(n - 1):
        rows[i][i + 1] = rows[i + 1][i] = edge
    return BraidingMatrix(rows)


def _sym(diag, pairs) -> BraidingMatrix:
    """Symmetric matrix from a diagonal and {(i, j): entry} with i < j."""
    n = len(diag)
    rows = [[_ONE] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = diag[i]
    for (i, j), entry in pairs.items():
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = entry
    return BraidingMatrix(rows)


CATALOG = {
    # --- quantum linear -------------------------------------------------
    "ql-1-ord2": quantum_linear([R(1, 2)]),
    "ql-1-ord3": quantum_linear([R(1, 3)]),
    "ql-1-ord6": quantum_linear([R(1, 6)]),
    "ql-2-ord2-ord2": quantum_linear([R(1, 2), R(1, 2)]),
    "ql-2-ord2-ord2-neg": quantum_linear([R(1, 2), R(1, 2)], off=R(1, 2)),
    "ql-2-ord3-ord3": quantum_linear([R(1, 3), R(1, 3)]),
    "ql-2-ord3-ord4": quantum_linear([R(1, 3), R(1, 4)], off=R(1, 2)),
    "ql-2-ord4-ord6": quantum_linear([R(1, 4), R(1, 6)]),
    "ql-3-ord2-ord3-ord4": quantum_linear([R(1, 2), R(1, 3), R(1, 4)]),
    "ql-3-ord3-ord3-ord3-neg": quantum_linear([R(1, 3), R(1, 3), R(1, 3)], off=R(1, 2)),
    # --- chains ----------------------------------------------------------
    "chain-2-q2": a_chain(2, R(1, 2), R(1, 4)),
    "chain-2-q3": a_chain(2, R(1, 3), R(1, 3)),
    "chain-2-q3-alt": a_chain(2, R(1, 3), R(5, 6)),
    "chain-3-q2": a_chain(3, R(1, 2), R(1, 4)),
    "chain-3-q3": a_chain(3, R(1, 3), R(1, 3)),
    "chain-2-short-long": _sym([R(1, 2), R(1, 4)], {(1, 2): R(3, 4)}),
    "chain-2-ord6-ord2": _sym([R(1, 6), R(1, 2)], {(1, 2): R(1, 4)}),
    # --- mixed -----------------------------------------------------------
    "mixed-2-ptilde3": _sym([R(1, 2), R(1, 2)], {(1, 2): R(1, 3)}),
    "mixed-2-diag1": _sym([_ONE, R(1, 2)], {(1, 2): R(1, 2)}),
    "mixed-2-ord6-edge6": _sym([R(1, 6), R(1, 3)], {(1, 2): R(1, 6)}),
    "mixed-3-triangle": _sym([R(1, 2), R(1, 2), R(1, 2)],
                             {(1, 2): R(1, 4), (1, 3): R(1, 4), (2, 3): R(1, 4)}),
    "mixed-3-path-ql-tail": _sym([R(1, 2), R(1, 3), R(1, 2)],
                                 {(1, 2): R(1, 4), (2, 3): R(1, 2)}),
    "mixed-3-isolated": _sym([R(1, 3), R(1, 3), R(1, 3)], {}),
    "mixed-3-pair-plus-point": _sym([R(1, 2), R(1, 2), R(1, 4)],
                                    {(1, 2): R(1, 4)}),
    "mixed-3-triangle-ord3": _sym([R(1, 3), R(1, 3), R(1, 3)],
                                  {(1, 2): R(1, 3), (1, 3): R(1, 3), (2, 3): R(1, 3)}),
    "mixed-3-diag1-center": _sym([R(1, 2), _ONE, R(1, 2)],
                                 {(1, 2): R(1, 2), (2, 3): R(1, 2)}),
}


def catalog() -> dict:
    """The named catalog, insertion-ordered and stable across runs."""
    return dict(CATALOG)
