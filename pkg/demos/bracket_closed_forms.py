"""Closed forms for iterated plain brackets of quantum-commuting elements.

When the members of a family quantum-commute (u_i u_j = r_ij u_j u_i in the
quotient), every left-normed plain bracket [...[[u_1, u_2]^-, u_3]^-, ...]^-
collapses to a scalar multiple of a single monomial, and so do the "ladders"
that bracket repeatedly by the same element.  This script evaluates the closed
forms and verifies them against the direct bracket expansions in the quotient.

Run:  python3 demos/bracket_closed_forms.py
"""

from nichols import (CommutingFamily, RootFraction, coordinates, generator,
                     is_zero_in_nichols, ladder_closed_form, ladder_expansion,
                     ladder_monomial, left_normed_minus, closed_form_left_normed,
                     quantum_linear)

R = RootFraction

matrix = quantum_linear((R(1, 3), R(1, 5)), off=R(1, 2))
x1, x2 = generator(1, 2), generator(2, 2)
family = CommutingFamily([x2, x1], matrix)

print("commutation ratios as turn fractions: r(x2 past x1) =",
      family.ratio(1, 2).text(), "(i.e. -1),  r(x1 past x2) =",
      family.ratio(2, 1).text())

# Left-normed bracket of the whole family: [x2, x1]^- = x1 x2 - x2 x1, which
# the closed form writes as coeff * (reversed product).
coeff, prod = closed_form_left_normed(family)
direct = left_normed_minus(family.members)
print(f"[x2, x1]^-  =  {coeff} * ({prod.text()})")
assert is_zero_in_nichols(direct - prod.scale(coeff), matrix)
print("  matches the direct expansion in the quotient")

# Ladder: bracketing x2 by x1 twice multiplies the monomial x2 x1^2 by
# lambda^2 with lambda = 1 - r(x1 past x2); each rung contributes one factor.
coeff, lambdas = ladder_closed_form(family, (2,))
mono = ladder_monomial(family, (2,))
expanded = ladder_expansion(family, (2,))
print(f"double ladder coefficient = {coeff}, rung scalar = "
      f"{[str(l) for l in lambdas]}")
entries = len(coordinates(expanded, matrix).entries)
print(f"  monomial {mono.text()}, expansion has {entries} pairing entries")
assert entries > 0, "expansion should be nonzero in the quotient"
assert is_zero_in_nichols(expanded - mono.scale(coeff), matrix)
print("  closed form equals the iterated bracket expansion")
