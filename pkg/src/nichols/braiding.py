"""Diagonal braiding matrices, their bicharacter, and Cartan-type presets."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import RootFraction, ROOT_ONE

#: Multidegree of a homogeneous element: one exponent per generator.
DegreeVector = tuple

CARTAN_TYPES = ("A", "B", "C", "D", "E6", "G2")


class BraidingMatrix:
    """An n-by-n matrix of roots of unity q_ij defining a diagonal braiding."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(entry for entry in row) for row in rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
            for j, entry in enumerate(row):
                if not isinstance(entry, RootFraction):
                    raise ValueError(f"entry ({i + 1},{j + 1}) is not a root of unity")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *_):
        raise AttributeError("BraidingMatrix is immutable")

    def entry(self, i: int, j: int) -> RootFraction:
        """q_ij with 1-based indices."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        return isinstance(other, BraidingMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + " ".join(e.text() for e in row) + "]" for row in self.rows)
        return f"BraidingMatrix({self.n}: {body})"

    # -- JSON wire format: {"n": 2, "q": [["0/1", "1/2"], ...]} --------

    @classmethod
    def from_json(cls, obj) -> "BraidingMatrix":
        if not isinstance(obj, dict) or "n" not in obj or "q" not in obj:
            raise ValueError('matrix JSON needs keys "n" and "q"')
        n = obj["n"]
        q = obj["q"]
        if not isinstance(n, int) or n < 1:
            raise ValueError('"n" must be a positive integer')
        if not isinstance(q, list) or len(q) != n:
            raise ValueError(f'"q" must be a list of {n} rows')
        rows = []
        for i, row in enumerate(q):
            if not isinstance(row, list) or len(row) != n:
                raise ValueError(f"row {i + 1} must have {n} entries")
            parsed = []
            for j, text in enumerate(row):
                try:
                    parsed.append(RootFraction.parse(text))
                except (ValueError, TypeError, ZeroDivisionError):
                    raise ValueError(
                        f"entry ({i + 1},{j + 1}) is not a root-of-unity fraction: {text!r}")
            rows.append(parsed)
        return cls(rows)

    def to_json(self) -> dict:
        return {"n": self.n, "q": [[e.text() for e in row] for row in self.rows]}


def chi(alpha, beta, matrix: BraidingMatrix) -> RootFraction:
    """Bicharacter chi(alpha, beta) = prod q_ij^(alpha_i beta_j) on Z^n."""
    total = Fraction(0)
    for i, a in enumerate(alpha):
        if not a:
            continue
        row = matrix.rows[i]
        for j, b in enumerate(beta):
            if b:
                total += row[j].turns * a * b
    return RootFraction(total)


def p(u_degree, v_degree, matrix: BraidingMatrix) -> RootFraction:
    """Braiding scalar p_uv = chi(deg u, deg v) of two homogeneous degrees."""
    return chi(u_degree, v_degree, matrix)


def ptilde(u_degree, v_degree, matrix: BraidingMatrix) -> RootFraction:
    """Symmetrized scalar p_uv * p_vu (1 exactly when u, v quantum-commute freely)."""
    return chi(u_degree, v_degree, matrix) * chi(v_degree, u_degree, matrix)


@dataclass(frozen=True)
class CartanSpec:
    """A Cartan-type braiding preset: type letter, rank, and the base root q."""

    letter: str
    rank: int
    q: RootFraction

    def __post_init__(self):
        letter = self.letter
        if letter == "E" and self.rank == 6:
            object.__setattr__(self, "letter", "E6")
        elif letter == "G" and self.rank == 2:
            object.__setattr__(self, "letter", "G2")
        if self.letter not in CARTAN_TYPES:
            raise ValueError(f"unknown Cartan type {letter!r}")
        lo = {"A": 1, "B": 2, "C": 3, "D": 4, "E6": 6, "G2": 2}[self.letter]
        hi = {"E6": 6, "G2": 2}.get(self.letter)
        if self.rank < lo or (hi is not None and self.rank != hi):
            raise ValueError(f"type {self.letter} needs rank"
                             f" {'= ' + str(hi) if hi else '>= ' + str(lo)},"
                             f" got {self.rank}")
        if self.q.is_one():
            raise ValueError("Cartan braiding needs q != 1")

    @property
    def N(self) -> int:
        """Order of the base parameter q."""
        return self.q.order

    @classmethod
    def from_json(cls, obj) -> "CartanSpec":
        if not isinstance(obj, dict):
            raise ValueError("Cartan spec JSON must be an object")
        try:
            return cls(str(obj["type"]), int(obj["rank"]), RootFraction.parse(obj["q"]))
        except KeyError as missing:
            raise ValueError(f"Cartan spec JSON missing key {missing}")

    def to_json(self) -> dict:
        return {"type": self.letter, "rank": self.rank, "q": self.q.text()}


def cartan_edges(letter: str, rank: int):
    """Diagram edges (1-based, i < j) for a Cartan type.

    D branches at node rank-2 (both tips attached to it); E6 is the 1-2-3-4-5
    chain with vertex 6 attached to node 3.
    """
    n = rank
    if letter in ("A", "B", "C", "G2"):
        return [(i, i + 1) for i in range(1, n)]
    if letter == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if letter == "E6":
        return [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]
    raise ValueError(f"unknown Cartan type {letter!r}")


def cartan_braiding(spec: CartanSpec) -> BraidingMatrix:
    """Braiding matrix of a Cartan preset.

    Vertex i carries its diagram label on the diagonal; each edge label is
    placed at q_ij for i < j with q_ji = 1, and non-adjacent pairs carry 1.
    """
    n, q = spec.rank, spec.q
    letter = spec.letter
    diag = [q] * n
    edge_label = {}
    if letter == "A":
        for e in cartan_edges(letter, n):
            edge_label[e] = q ** -1
    elif letter == "B":
        diag = [q ** 2] * (n - 1) + [q]
        for e in cartan_edges(letter, n):
            edge_label[e] = q ** -2
    elif letter == "C":
        diag = [q] * (n - 1) + [q ** 2]
        for e in cartan_edges(letter, n):
            edge_label[e] = q ** -2 if e == (n - 1, n) else q ** -1
    elif letter in ("D", "E6"):
        for e in cartan_edges(letter, n):
            edge_label[e] = q ** -1
    elif letter == "G2":
        diag = [q, q ** 3]
        edge_label[(1, 2)] = q ** -3
    rows = [[ROOT_ONE] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = diag[i]
    for (i, j), label in edge_label.items():
        rows[i - 1][j - 1] = label
    return BraidingMatrix(rows)
