"""Decision procedures and closed-form constructions for quantum-commuting
families, rank-2 quantum linear bases, and the verification sweeps tying graph
connectivity to Lie membership."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

from .braiding import BraidingMatrix, chi, ptilde
from .freealg import NCPolynomial, generator, minus_bracket
from .graphs import aug_graph, is_weakly_disconnected, pure_graph, support
from .oracle import BRAIDED, get_oracle
from .scalars import CycNumber, RootFraction, embed

_ONE = CycNumber.one()


class CommutingFamily:
    """Homogeneous elements u_1..u_k with u_i u_j = r_ij u_j u_i in the quotient.

    Ratios are p(deg u_i, deg u_j) for distinct members and 1 on equal members;
    every pairwise relation is verified against the oracle at construction.
    """

    __slots__ = ("members", "ratios", "matrix")

    def __init__(self, members, matrix: BraidingMatrix):
        members = tuple(members)
        if not members:
            raise ValueError("family needs at least one member")
        oracle = get_oracle(matrix)
        degrees = []
        for u in members:
            deg = u.degree_vector()
            if deg is None:
                raise ValueError("family members must be nonzero homogeneous")
            degrees.append(deg)
        k = len(members)
        ratios = []
        for i in range(k):
            row = []
            for j in range(k):
                if members[i] == members[j]:
                    r = RootFraction(0)
                else:
                    r = chi(degrees[i], degrees[j], matrix)
                row.append(r)
            ratios.append(tuple(row))
        for i in range(k):
            for j in range(k):
                lhs = members[i] * members[j]
                rhs = (members[j] * members[i]).scale(ratios[i][j])
                if not oracle.is_zero(lhs - rhs):
                    raise ValueError(
                        f"members {i + 1} and {j + 1} do not quantum-commute")
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "ratios", tuple(ratios))
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, *_):
        raise AttributeError("CommutingFamily is immutable")

    def __len__(self):
        return len(self.members)

    def ratio(self, i: int, j: int) -> RootFraction:
        """r_{u_i, u_j} with 1-based indices."""
        return self.ratios[i - 1][j - 1]

    def ratio_against(self, i: int, js) -> RootFraction:
        """r of u_i against the product of members u_j for j in js (1-based)."""
        acc = RootFraction(0)
        for j in js:
            acc = acc * self.ratio(i, j)
        return acc


def closed_form_left_normed(family: CommutingFamily):
    """The left-normed minus-bracket of the whole family, in closed form.

    Returns (coefficient, product): the scalar
    prod_{t<m} (1 - r_{u_t, u_{t+1}...u_m}) and the reversed product u_m...u_1,
    whose scaled combination equals the expanded bracket in the quotient.
    Each factor is the scalar picked up by one level of [u, z]- = zu - uz
    when u commutes past z.
    """
    m = len(family)
    coeff = _ONE
    for t in range(1, m):
        r = family.ratio_against(t, range(t + 1, m + 1))
        coeff = coeff * (_ONE - embed(r))
    prod = family.members[-1]
    for u in reversed(family.members[:-1]):
        prod = prod * u
    return coeff, prod


def ladder_closed_form(family: CommutingFamily, multiplicities):
    """Coefficient of l_k^{m_k} ... l_2^{m_2} [u_1]^- where l_i = [u_i, .]^-.

    multiplicities are (m_2, ..., m_k), one per member after the first.
    Returns (coefficient, lambdas) with lambda_i = 1 - r_{i,1} r_{i,2}^{m_2}
    ... r_{i,i-1}^{m_{i-1}}, the scalar one application of l_i contributes,
    and coefficient = prod lambda_i^{m_i}; the ladder then equals
    coefficient * u_1 u_2^{m_2} ... u_k^{m_k} in the quotient.
    """
    k = len(family)
    ms = tuple(multiplicities)
    if len(ms) != k - 1:
        raise ValueError(f"need {k - 1} multiplicities, got {len(ms)}")
    if any(m < 1 for m in ms):
        raise ValueError("multiplicities must be positive")
    lambdas = []
    coeff = _ONE
    for i in range(2, k + 1):
        r = family.ratio(i, 1)
        for t in range(2, i):
            r = r * family.ratio(i, t) ** ms[t - 2]
        lam = _ONE - embed(r)
        lambdas.append(lam)
        coeff = coeff * lam ** ms[i - 2]
    return coeff, lambdas


def ladder_expansion(family: CommutingFamily, multiplicities) -> NCPolynomial:
    """Direct iterated expansion l_k^{m_k} ... l_2^{m_2} [u_1]^-."""
    ms = tuple(multiplicities)
    acc = family.members[0]
    for i in range(2, len(family) + 1):
        for _ in range(ms[i - 2]):
            acc = minus_bracket(family.members[i - 1], acc)
    return acc


def ladder_monomial(family: CommutingFamily, multiplicities) -> NCPolynomial:
    """The reference monomial u_1 u_2^{m_2} ... u_k^{m_k}."""
    ms = tuple(multiplicities)
    acc = family.members[0]
    for i in range(2, len(family) + 1):
        for _ in range(ms[i - 2]):
            acc = acc * family.members[i - 1]
    return acc


def rank2_membership(alpha1: int, alpha2: int, family: CommutingFamily) -> bool:
    """Whether u_1^a1 u_2^a2 lies in the minus-bracket Lie subalgebra, decided
    by the divisibility criterion ord(r_21) does not divide a1, or ord(r_12)
    does not divide a2; generators are members, higher pure powers are not."""
    if len(family) != 2:
        raise ValueError("rank2_membership needs a two-member family")
    for u in family.members:
        if len(u.terms) != 1 or any(len(w) != 1 for w in u.terms):
            raise ValueError("family members must be generators")
    if alpha1 < 0 or alpha2 < 0:
        raise ValueError("exponents must be nonnegative")
    u1, u2 = family.members
    mono = NCPolynomial.unit(u1.rank)
    for _ in range(alpha1):
        mono = mono * u1
    for _ in range(alpha2):
        mono = mono * u2
    if get_oracle(family.matrix).is_zero(mono):
        raise ValueError(f"monomial ({alpha1},{alpha2}) vanishes in the quotient")
    total = alpha1 + alpha2
    if total == 0:
        return False
    if total == 1:
        return True
    if alpha1 == 0 or alpha2 == 0:
        return False
    ord21 = family.ratio(2, 1).order
    ord12 = family.ratio(1, 2).order
    return (alpha1 % ord21 != 0) or (alpha2 % ord12 != 0)


@dataclass(frozen=True)
class Rank2Basis:
    """Exponent pairs (a2, a1) of basis monomials x_2^{a2} x_1^{a1}; the two
    generators appear as (0, 1) and (1, 0)."""

    pairs: tuple
    truncated: bool


def quantum_linear_rank2_basis(matrix: BraidingMatrix, degree_cap: int = 10) -> Rank2Basis:
    """Basis exponents of the minus-bracket Lie subalgebra for a rank-2
    quantum linear braiding: generators plus every x_2^{a2} x_1^{a1} with
    1 <= a_i < N_i and ord(q_12) not dividing a2 or not dividing a1."""
    if matrix.n != 2:
        raise ValueError("rank-2 matrix required")
    e1, e2 = (1, 0), (0, 1)
    if not ptilde(e1, e2, matrix).is_one():
        raise ValueError("matrix is not quantum linear (q_12 q_21 != 1)")
    n1 = matrix.entry(1, 1).order
    n2 = matrix.entry(2, 2).order
    d = matrix.entry(1, 2).order
    truncated = n1 == 1 or n2 == 1
    hi1 = degree_cap if n1 == 1 else n1 - 1
    hi2 = degree_cap if n2 == 1 else n2 - 1
    pairs = [(0, 1), (1, 0)]
    for a2 in range(1, hi2 + 1):
        for a1 in range(1, hi1 + 1):
            if truncated and a1 + a2 > degree_cap:
                continue
            if a2 % d != 0 or a1 % d != 0:
                pairs.append((a2, a1))
    pairs.sort()
    return Rank2Basis(tuple(pairs), truncated)


def decide_lie_variants_coincide(matrix: BraidingMatrix) -> bool:
    """Whether both bracket variants generate the same subspace (namely V):
    true exactly when every q_ii is +-1 and every off-diagonal entry is 1."""
    n = matrix.n
    for i in range(1, n + 1):
        q = matrix.entry(i, i)
        if not (q * q).is_one():
            return False
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and not matrix.entry(i, j).is_one():
                return False
    return True


def decide_minus_lie_complement(matrix: BraidingMatrix) -> bool:
    """Whether the quotient splits as scalars plus the minus-bracket Lie
    subalgebra: every q_ii = -1, quantum linear off-diagonal, and every
    descending generator subset admits an ordering whose telescoping
    tail-ratio factors are all nonzero."""
    n = matrix.n
    minus_one = RootFraction(1, 2)
    for i in range(1, n + 1):
        if matrix.entry(i, i) != minus_one:
            return False
    units = [tuple(1 if t == i else 0 for t in range(n)) for i in range(n)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not ptilde(units[i - 1], units[j - 1], matrix).is_one():
                return False
    for m in range(2, n + 1):
        for subset in combinations(range(n, 0, -1), m):
            if not _subset_has_nonvanishing_order(subset, matrix):
                return False
    return True


def _subset_has_nonvanishing_order(letters, matrix: BraidingMatrix) -> bool:
    for perm in permutations(letters):
        ok = True
        for t in range(len(perm) - 1):
            r = RootFraction(0)
            for s in range(t + 1, len(perm)):
                r = r * matrix.entry(perm[t], perm[s])
            if r.is_one():
                ok = False
                break
        if ok:
            return True
    return False


# -- verification sweeps -------------------------------------------------

@dataclass
class SweepReport:
    checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violations,
            "ok": self.ok,
        }


def verify_connectivity_criterion(matrix: BraidingMatrix, max_len: int = 4) -> SweepReport:
    """Sweep all words up to max_len: for nonzero words (single-letter support
    requires q_ii != 1), support connectivity in the pure graph must agree
    with braided-bracket Lie membership."""
    n = matrix.n
    graph = pure_graph(matrix)
    oracle = get_oracle(matrix)
    report = SweepReport()
    cap = max(max_len, 6)
    for length in range(1, max_len + 1):
        for word in product(range(1, n + 1), repeat=length):
            supp = support(word)
            if len(supp) == 1 and matrix.entry(supp[0], supp[0]).is_one():
                report.skipped += 1
                continue
            if oracle.is_zero(NCPolynomial.from_word(word, n)):
                report.skipped += 1
                continue
            connected = graph.is_connected(supp)
            member = oracle.in_L(word, BRAIDED, cap)
            report.checked += 1
            if connected != member:
                report.violations.append(
                    {"word": list(word), "connected": connected, "member": member})
    return report


@lru_cache(maxsize=None)
def all_bracketings(m: int):
    """All full binary trees with m leaves; leaves are position indices."""

    def trees(lo, hi):
        if hi - lo == 1:
            return [lo]
        out = []
        for mid in range(lo + 1, hi):
            for left in trees(lo, mid):
                for right in trees(mid, hi):
                    out.append((left, right))
        return out

    return tuple(trees(0, m))


def apply_bracketing(tree, word, rank: int) -> NCPolynomial:
    """Evaluate one bracketing of the word's letters with the plain bracket."""
    if isinstance(tree, int):
        return generator(word[tree], rank)
    left, right = tree
    return minus_bracket(apply_bracketing(left, word, rank),
                         apply_bracketing(right, word, rank))


def verify_disconnected_brackets_vanish(matrix: BraidingMatrix, max_len: int = 5) -> SweepReport:
    """Sweep all words with weakly disconnected augmented-graph support: every
    bracketing built with the plain bracket must vanish in the quotient."""
    n = matrix.n
    graph = aug_graph(matrix)
    oracle = get_oracle(matrix)
    report = SweepReport()
    for length in range(2, max_len + 1):
        for word in product(range(1, n + 1), repeat=length):
            if not is_weakly_disconnected(word, graph):
                report.skipped += 1
                continue
            for tree in all_bracketings(length):
                poly = apply_bracketing(tree, word, n)
                report.checked += 1
                if not oracle.is_zero(poly):
                    report.violations.append({"word": list(word), "tree": repr(tree)})
    return report
