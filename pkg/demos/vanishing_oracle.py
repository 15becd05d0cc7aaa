"""Tour of the skew-derivation oracle: vanishing, coordinates, Lie membership.

An element of the free algebra vanishes in the Nichols algebra quotient
exactly when every iterated skew derivation kills it.  Collecting the pairing
values against all dual words of the same degree gives exact coordinates for
the quotient image, which in turn powers dimension counts, span membership,
and the connectivity criterion: a nonzero monomial lies in the braided-bracket
Lie subalgebra iff its support is connected in the pure diagram graph.

Run:  python3 demos/vanishing_oracle.py
"""

from nichols import (BRAIDED, MINUS, RootFraction, a_chain, coordinates,
                     dim_component, generator, in_L, is_connected,
                     is_zero_in_nichols, lie_space_basis, pure_graph,
                     quantum_linear, skew_derive)

R = RootFraction

# A two-vertex chain: both diagonal entries -1, edge entry i (a quarter turn),
# so the generators truncate at the square and the braided commutator survives.
chain = a_chain(2, R(1, 2), edge=R(1, 4))
x1, x2 = generator(1, 2), generator(2, 2)

print("skew derivation: < y_1, x1 x2 > =", skew_derive(1, x1 * x2, chain).text())
print("vanishing:")
print("  x1^2        ->", is_zero_in_nichols(x1 * x1, chain))
print("  x1x2 - x2x1 ->", is_zero_in_nichols(x1 * x2 - x2 * x1, chain))

coords = coordinates(x1 * x2, chain)
print("coordinates of x1 x2 (dual word -> pairing value):")
for word, value in sorted(coords.entries.items()):
    print(f"  {word}: {value}")

profile = [dim_component(chain, d) for d in range(6)]
print("graded dimensions of the quotient:", profile, "(total", sum(profile), ")")
levels = [len(lie_space_basis(chain, d, BRAIDED)) for d in range(1, 5)]
print("braided-bracket Lie subspace levels 1..4:", levels)

# Quantum linear contrast: with q_12 q_21 = 1 the diagram graph has no edge,
# every mixed word is disconnected, and membership fails for all of them.
ql = quantum_linear((R(1, 3), R(1, 3)))
for matrix, name in ((chain, "chain"), (ql, "quantum linear")):
    graph = pure_graph(matrix)
    word = (1, 2)
    print(f"{name}: support of x1x2 connected = {is_connected(word, graph)}, "
          f"in braided Lie = {in_L(word, matrix, BRAIDED)}, "
          f"in plain Lie = {in_L(word, matrix, MINUS)}")
