"""Duality pairing for Nichols algebras of diagonal type: skew derivations,
the exact zero test, faithful coordinates, and span arithmetic for both
Lie-algebra variants."""
from __future__ import annotations

from dataclasses import dataclass

from .braiding import BraidingMatrix
from .freealg import NCPolynomial, braided_bracket, minus_bracket, word_degree
from .scalars import CycNumber, ROOT_ONE

Word = tuple

BRAIDED = "braided"
MINUS = "minus"
VARIANTS = (BRAIDED, MINUS)

DEFAULT_DEGREE_CAP = 6

_ZERO = CycNumber.zero()
_ONE = CycNumber.one()


@dataclass(frozen=True)
class PairingCoordinates:
    """Faithful coordinates of a homogeneous element: degree vector plus the
    pairing value against every y-word of matching length (zero entries absent)."""

    degree: tuple
    entries: dict

    def is_zero(self) -> bool:
        return not self.entries


class Echelon:
    """Exact row echelon over sparse CycNumber vectors keyed by y-words."""

    def __init__(self):
        self.rows = {}

    @staticmethod
    def _clean(vec):
        return {k: v for k, v in vec.items() if not v.is_zero()}

    def reduce(self, vec):
        """Residual of vec modulo the current row space (None when it vanishes)."""
        vec = self._clean(vec)
        while vec:
            pivot = min(vec)
            row = self.rows.get(pivot)
            if row is None:
                return vec
            factor = vec[pivot]
            out = {}
            for k, v in vec.items():
                out[k] = v
            for k, v in row.items():
                delta = factor * v
                cur = out.get(k)
                cur = -delta if cur is None else cur - delta
                if cur.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = cur
            vec = out
        return None

    def insert(self, vec) -> bool:
        """Reduce and keep vec if independent; report whether rank grew."""
        residual = self.reduce(vec)
        if residual is None:
            return False
        pivot = min(residual)
        scale = residual[pivot].inverse()
        self.rows[pivot] = {k: v * scale for k, v in residual.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


class Oracle:
    """All pairing computations against one fixed braiding matrix, with
    per-word coordinate caching."""

    def __init__(self, matrix: BraidingMatrix):
        self.matrix = matrix
        self._coords = {(): {(): _ONE}}
        self._lie_levels = {}

    # -- skew derivation ------------------------------------------------

    def derive_word(self, k: int, word: Word):
        """⟨y_k, word⟩ as a list of (shorter word, RootFraction prefactor)."""
        out = []
        prefactor = ROOT_ONE
        for t, letter in enumerate(word):
            if letter == k:
                out.append((word[:t] + word[t + 1:], prefactor))
            prefactor = prefactor * self.matrix.entry(k, letter).inverse()
        return out

    def skew_derive(self, k: int, p: NCPolynomial) -> NCPolynomial:
        terms = {}
        for word, coeff in p.terms.items():
            for smaller, root in self.derive_word(k, word):
                delta = coeff.mul_root(root)
                acc = terms.get(smaller)
                terms[smaller] = delta if acc is None else acc + delta
        return NCPolynomial(p.rank, terms)

    # -- coordinates -----------------------------------------------------

    def word_coords(self, word: Word):
        """Pairing values ⟨y-word, word⟩ for all y-words of full length (sparse)."""
        cached = self._coords.get(word)
        if cached is not None:
            return cached
        acc = {}
        for k in range(1, self.matrix.n + 1):
            for smaller, root in self.derive_word(k, word):
                sub = self.word_coords(smaller)
                for yw, val in sub.items():
                    key = yw + (k,)
                    delta = val.mul_root(root)
                    cur = acc.get(key)
                    acc[key] = delta if cur is None else cur + delta
        acc = {k: v for k, v in acc.items() if not v.is_zero()}
        self._coords[word] = acc
        return acc

    def _block_coords(self, terms):
        acc = {}
        for word, coeff in terms:
            for yw, val in self.word_coords(word).items():
                delta = coeff * val
                cur = acc.get(yw)
                acc[yw] = delta if cur is None else cur + delta
        return {k: v for k, v in acc.items() if not v.is_zero()}

    def coordinates(self, p: NCPolynomial) -> PairingCoordinates:
        deg = p.degree_vector()
        if deg is None and not p.is_zero():
            raise ValueError("coordinates requires a homogeneous polynomial")
        if p.is_zero():
            deg = (0,) * p.rank
        return PairingCoordinates(deg, self._block_coords(p.terms.items()))

    def is_zero(self, p: NCPolynomial) -> bool:
        """Exact zero test in the Nichols algebra (per homogeneous block)."""
        by_len = {}
        for word, coeff in p.terms.items():
            by_len.setdefault(len(word), []).append((word, coeff))
        return all(not self._block_coords(terms) for terms in by_len.values())

    # -- linear algebra over the quotient ---------------------------------

    def span_membership(self, target: NCPolynomial, gens) -> bool:
        gens = list(gens)
        tdeg = target.degree_vector()
        if tdeg is None and not target.is_zero():
            raise ValueError("span_membership requires homogeneous input")
        degs = {g.degree_vector() for g in gens if not g.is_zero()}
        if len(degs) > 1 or any(d is None for d in degs):
            raise ValueError("span generators must share one degree vector")
        if degs and tdeg is not None and not target.is_zero() and {tdeg} != degs:
            raise ValueError("target degree differs from generator degree")
        ech = Echelon()
        for g in gens:
            ech.insert(self._block_coords(g.terms.items()))
        return ech.reduce(self._block_coords(target.terms.items())) is None

    def dim_component(self, d: int) -> int:
        """Dimension of the degree-d homogeneous component of the quotient."""
        from itertools import product

        ech = Echelon()
        for word in product(range(1, self.matrix.n + 1), repeat=d):
            ech.insert(dict(self.word_coords(word)))
        return ech.rank

    # -- Lie-algebra levels ------------------------------------------------

    def _lie_level(self, d: int, variant: str):
        """Reduced basis (poly, degree, coords) of the length-d bracket span."""
        key = (d, variant)
        cached = self._lie_levels.get(key)
        if cached is not None:
            return cached
        n = self.matrix.n
        entries = []
        echelons = {}
        if d == 1:
            for i in range(1, n + 1):
                poly = NCPolynomial.from_word((i,), n)
                entries.append((poly, word_degree((i,), n), dict(self.word_coords((i,)))))
        else:
            for s in range(1, d):
                left = self._lie_level(s, variant)
                right = self._lie_level(d - s, variant)
                for a, adeg, _ in left:
                    for b, bdeg, _ in right:
                        if variant == BRAIDED:
                            poly = braided_bracket(a, b, self.matrix)
                        else:
                            poly = minus_bracket(a, b)
                        coords = self._block_coords(poly.terms.items())
                        if not coords:
                            continue
                        deg = tuple(x + y for x, y in zip(adeg, bdeg))
                        ech = echelons.setdefault(deg, Echelon())
                        if ech.insert(dict(coords)):
                            entries.append((poly, deg, coords))
        self._lie_levels[key] = entries
        return entries

    def lie_space_basis(self, d: int, variant: str, cap: int = DEFAULT_DEGREE_CAP):
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {variant!r}")
        if d < 1:
            raise ValueError("degree must be at least 1")
        if d > cap:
            raise ValueError(f"degree {d} exceeds cap {cap}")
        return [poly for poly, _, _ in self._lie_level(d, variant)]

    def in_L(self, word: Word, variant: str, cap: int = DEFAULT_DEGREE_CAP) -> bool:
        """Membership of the word's image in the degree-matching Lie span."""
        if len(word) < 1:
            return False
        if len(word) > cap:
            raise ValueError(f"word length {len(word)} exceeds cap {cap}")
        deg = word_degree(word, self.matrix.n)
        target = self._block_coords([(tuple(word), _ONE)])
        if not target:
            return True
        ech = Echelon()
        for _, gdeg, coords in self._lie_level(len(word), variant):
            if gdeg == deg:
                ech.insert(dict(coords))
        return ech.reduce(target) is None

    # -- iterated single-index pairing -------------------------------------

    def power_pairing(self, k: int, l: int, p: NCPolynomial) -> NCPolynomial:
        """⟨y_k^l, p⟩ by iterating the skew derivation l times."""
        for _ in range(l):
            p = self.skew_derive(k, p)
        return p

    def nonzero_by_order_criterion(self, word: Word) -> bool:
        """Letterwise sufficient condition for the word to survive in the quotient:
        every letter i satisfies ord(q_ii) > (multiplicity of i) or q_ii = 1."""
        for i in set(word):
            q = self.matrix.entry(i, i)
            if q.is_one():
                continue
            if q.order <= list(word).count(i):
                return False
        return True


_ORACLES = {}


def get_oracle(matrix: BraidingMatrix) -> Oracle:
    oracle = _ORACLES.get(matrix)
    if oracle is None:
        oracle = _ORACLES[matrix] = Oracle(matrix)
    return oracle


# -- module-level wrappers matching the documented call shapes -------------

def skew_derive(k: int, p: NCPolynomial, matrix: BraidingMatrix) -> NCPolynomial:
    return get_oracle(matrix).skew_derive(k, p)


def is_zero_in_nichols(p: NCPolynomial, matrix: BraidingMatrix) -> bool:
    return get_oracle(matrix).is_zero(p)


def coordinates(p: NCPolynomial, matrix: BraidingMatrix) -> PairingCoordinates:
    return get_oracle(matrix).coordinates(p)


def span_membership(target, gens, matrix: BraidingMatrix) -> bool:
    return get_oracle(matrix).span_membership(target, gens)


def lie_space_basis(matrix: BraidingMatrix, d: int, variant: str,
                    cap: int = DEFAULT_DEGREE_CAP):
    return get_oracle(matrix).lie_space_basis(d, variant, cap)


def in_L(word: Word, matrix: BraidingMatrix, variant: str,
         cap: int = DEFAULT_DEGREE_CAP) -> bool:
    return get_oracle(matrix).in_L(tuple(word), variant, cap)


def power_pairing(k: int, l: int, p: NCPolynomial, matrix: BraidingMatrix) -> NCPolynomial:
    return get_oracle(matrix).power_pairing(k, l, p)


def nonzero_by_order_criterion(word: Word, matrix: BraidingMatrix) -> bool:
    return get_oracle(matrix).nonzero_by_order_criterion(tuple(word))


def dim_component(matrix: BraidingMatrix, d: int) -> int:
    return get_oracle(matrix).dim_component(d)
