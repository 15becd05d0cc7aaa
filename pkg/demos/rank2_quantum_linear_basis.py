"""Basis of the plain-bracket Lie subalgebra for a rank-2 quantum linear space.

A rank-2 quantum linear braiding (q_12 q_21 = 1) with generator orders 3 and 5
and off-diagonal entry -1 produces a Lie subalgebra under [x, y]^- = yx - xy
that is NOT all of the span of nonzero monomials: the divisibility criterion
keeps exactly the monomials x_2^{a2} x_1^{a1} where ord(q_12) = 2 fails to
divide a2 or a1.  This script enumerates that basis and cross-checks a member
and two non-members against the generic span-membership oracle.

Run:  python3 demos/rank2_quantum_linear_basis.py
"""

from nichols import (MINUS, CommutingFamily, RootFraction, generator, in_L,
                     is_zero_in_nichols, NCPolynomial, quantum_linear,
                     quantum_linear_rank2_basis, rank2_membership)

R = RootFraction

# Diagonal entries of multiplicative orders 3 and 5, off-diagonal -1 (= R(1,2),
# i.e. the root of unity at 1/2 of a turn).  q_12 q_21 = 1 makes it quantum
# linear: the braided commutator of the generators vanishes in the quotient.
matrix = quantum_linear((R(1, 3), R(1, 5)), off=R(1, 2))

basis = quantum_linear_rank2_basis(matrix)
print(f"basis of the [.,.]^- Lie subalgebra ({len(basis.pairs)} monomials):")
for a2, a1 in basis.pairs:
    parts = [f"x2^{a2}" if a2 > 1 else "x2"] if a2 else []
    parts += [f"x1^{a1}" if a1 > 1 else "x1"] if a1 else []
    print(f"  (a2, a1) = ({a2}, {a1})   {' '.join(parts)}")

# The same answer must come out of the generic oracle: in_L builds level-by-
# level bracket bases and tests span membership by exact Gaussian elimination.
x1, x2 = generator(1, 2), generator(2, 2)
family = CommutingFamily([x1, x2], matrix)


def monomial(a2, a1):
    m = NCPolynomial.unit(2)
    for _ in range(a2):
        m = m * x2
    for _ in range(a1):
        m = m * x1
    return m


for a2, a1 in [(1, 2), (2, 2), (4, 2)]:
    m = monomial(a2, a1)
    word = tuple([2] * a2 + [1] * a1)
    nz = not is_zero_in_nichols(m, matrix)
    by_criterion = rank2_membership(a1, a2, family)
    by_oracle = in_L(word, matrix, MINUS)
    verdict = "member" if by_oracle else "not a member"
    print(f"x2^{a2} x1^{a1}: nonzero={nz}, criterion={by_criterion}, "
          f"oracle={by_oracle}  -> {verdict}")
    assert by_criterion == by_oracle

print("criterion and span oracle agree on all three spot checks")
