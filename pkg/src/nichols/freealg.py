"""Noncommutative polynomials over the cyclotomic scalars, with both bracket variants."""
from __future__ import annotations

from .braiding import BraidingMatrix, chi
from .scalars import CycNumber, RootFraction, embed

Word = tuple

_ZERO = CycNumber.zero()
_ONE = CycNumber.one()


def _term_key(word):
    return (len(word), word)


class NCPolynomial:
    """A finite sum of words x_{j_1}..x_{j_m} with nonzero CycNumber coefficients."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms):
        cleaned = {}
        for word, coeff in terms.items():
            if not isinstance(coeff, CycNumber):
                coeff = CycNumber._coerce(coeff)
                if coeff is NotImplemented:
                    raise ValueError(f"bad coefficient for word {word!r}")
            if any(not (1 <= j <= rank) for j in word):
                raise ValueError(f"word {word!r} uses letters outside 1..{rank}")
            if coeff.is_zero():
                continue
            cleaned[tuple(word)] = coeff
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, *_):
        raise AttributeError("NCPolynomial is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, rank):
        return cls(rank, {})

    @classmethod
    def unit(cls, rank):
        return cls(rank, {(): _ONE})

    @classmethod
    def from_word(cls, word, rank, coeff=1):
        return cls(rank, {tuple(word): CycNumber._coerce(coeff)})

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        """Terms in canonical order: by length, then lexicographically."""
        return sorted(self.terms.items(), key=lambda kv: _term_key(kv[0]))

    def degree_vector(self):
        """The common multidegree of all words, or None for 0 / mixed input."""
        deg = None
        for word in self.terms:
            d = [0] * self.rank
            for j in word:
                d[j - 1] += 1
            d = tuple(d)
            if deg is None:
                deg = d
            elif deg != d:
                return None
        return deg

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.degree_vector() is not None

    # -- arithmetic ------------------------------------------------------

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other):
        self._check_rank(other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = terms.get(word)
            terms[word] = coeff if acc is None else acc + coeff
        return NCPolynomial(self.rank, terms)

    def __neg__(self):
        return NCPolynomial(self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        if isinstance(scalar, RootFraction):
            if scalar.is_one():
                return self
            return NCPolynomial(
                self.rank, {w: c.mul_root(scalar) for w, c in self.terms.items()})
        scalar = CycNumber._coerce(scalar)
        if scalar.is_zero():
            return NCPolynomial.zero(self.rank)
        return NCPolynomial(self.rank, {w: c * scalar for w, c in self.terms.items()})

    def __mul__(self, other):
        self._check_rank(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                coeff = c1 * c2
                acc = terms.get(word)
                terms[word] = coeff if acc is None else acc + coeff
        return NCPolynomial(self.rank, terms)

    def __eq__(self, other):
        return (isinstance(other, NCPolynomial) and self.rank == other.rank
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.rank, tuple(self.sorted_terms())))

    # -- text form ---------------------------------------------------------
    #
    # poly  := "0" | term { " + " term }
    # term  := coeff " * " word | coeff          (bare coeff for the empty word)
    # word  := "x<i>" { "." "x<i>" }
    # coeff := rational | "(" a/b ")" | "{" power-basis sum "}"
    #   "(a/b)" is the root of unity exp(2*pi*i*a/b); "{...}" is a rational
    #   combination of such roots in the power basis of one conductor.

    def text(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for word, coeff in self.sorted_terms():
            rat = coeff.as_rational()
            if rat is not None:
                ctext = str(rat)
            else:
                root = coeff.as_root()
                ctext = f"({root.text()})" if root is not None else "{" + str(coeff) + "}"
            if word:
                parts.append(ctext + " * " + ".".join(f"x{j}" for j in word))
            else:
                parts.append(ctext)
        return " + ".join(parts)

    def __repr__(self):
        return f"NCPolynomial({self.rank}: {self.text()})"


def generator(i: int, rank: int) -> NCPolynomial:
    """The generator x_i as a polynomial."""
    return NCPolynomial.from_word((i,), rank)


def word_degree(word, rank):
    d = [0] * rank
    for j in word:
        d[j - 1] += 1
    return tuple(d)


def _homogeneous_degree(p: NCPolynomial, who: str):
    if p.is_zero():
        return None
    deg = p.degree_vector()
    if deg is None:
        raise ValueError(f"{who} requires homogeneous arguments")
    return deg


def braided_bracket(u: NCPolynomial, v: NCPolynomial, matrix: BraidingMatrix) -> NCPolynomial:
    """[u, v] = v*u - p_vu * u*v for homogeneous u, v."""
    du = _homogeneous_degree(u, "braided_bracket")
    dv = _homogeneous_degree(v, "braided_bracket")
    if du is None or dv is None:
        return NCPolynomial.zero(u.rank)
    p_vu = chi(dv, du, matrix)
    return v * u - (u * v).scale(p_vu)


def minus_bracket(u: NCPolynomial, v: NCPolynomial) -> NCPolynomial:
    """[u, v]^- = v*u - u*v; no braiding scalar involved."""
    return v * u - u * v


def left_normed_minus(elements) -> NCPolynomial:
    """[u_1, u_2, ..., u_m]^- folded right to left: [u_1, [u_2, [...]]^-]^-."""
    elements = list(elements)
    if not elements:
        raise ValueError("left_normed_minus needs at least one element")
    acc = elements[-1]
    for u in reversed(elements[:-1]):
        acc = minus_bracket(u, acc)
    return acc


def _quotient_zero(p: NCPolynomial, matrix: BraidingMatrix) -> bool:
    if p.is_zero():
        return True
    from .oracle import get_oracle

    return get_oracle(matrix).is_zero(p)


def bracket_identity_check(u, v, w, matrix: BraidingMatrix) -> bool:
    """Whether [[u,v],w] = [u,[v,w]] + p_vw^-1 [[u,w],v] + (p_vw - p_vw^-1) v*[u,w]
    holds in the Nichols algebra quotient for the homogeneous triple u, v, w."""
    dv = _homogeneous_degree(v, "bracket_identity_check")
    dw = _homogeneous_degree(w, "bracket_identity_check")
    _homogeneous_degree(u, "bracket_identity_check")
    if dv is None or dw is None:
        return True
    p_vw = chi(dv, dw, matrix)
    lhs = braided_bracket(braided_bracket(u, v, matrix), w, matrix)
    rhs = braided_bracket(u, braided_bracket(v, w, matrix), matrix)
    rhs = rhs + braided_bracket(braided_bracket(u, w, matrix), v, matrix).scale(p_vw.inverse())
    mixed = embed(p_vw) - embed(p_vw.inverse())
    rhs = rhs + (v * braided_bracket(u, w, matrix)).scale(mixed)
    diff = lhs - rhs
    return _quotient_zero(diff, matrix)


def mixed_identity_check(u, v, w, matrix: BraidingMatrix) -> bool:
    """Whether [u, v*w] = p_wu [u,v]*w + v*[u,w] holds in the quotient."""
    du = _homogeneous_degree(u, "mixed_identity_check")
    dw = _homogeneous_degree(w, "mixed_identity_check")
    _homogeneous_degree(v, "mixed_identity_check")
    if du is None or dw is None:
        return True
    p_wu = chi(dw, du, matrix)
    lhs = braided_bracket(u, v * w, matrix)
    rhs = (braided_bracket(u, v, matrix) * w).scale(p_wu) + v * braided_bracket(u, w, matrix)
    diff = lhs - rhs
    return _quotient_zero(diff, matrix)
