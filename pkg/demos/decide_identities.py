"""Which ST(lambda) vanish on d x d matrices?

Walks through the refinement test, the rectangular table and the lattice of
non-identities for 3 x 3 matrices.
"""

from tensorpi import is_tpi, non_tpi_set, rect_tpi_table, refinement_graph
from tensorpi.decision import to_dot

# ST(2,2) is the classical identity for 2 x 2 matrices
print("ST(2,2), d=2:", is_tpi([2, 2], 2).describe())

# (3,1) is the staircase itself, so it survives; the witness shows the grouping
print("ST(3,1), d=2:", is_tpi([3, 1], 2).describe())

# padding with ones: (3,2) becomes (3,2,1,1,1,1) which groups into (5,3,1)
v = is_tpi([3, 2], 3)
print("ST(3,2), d=3:", v.describe())

# minimal rectangular identities m^n
for d, row in rect_tpi_table(5).items():
    print(d, " ".join(f"{m}^{n}" for m, n in row))

# all non-identities with parts >= 2 and weight <= 8, plus the single box
nodes = non_tpi_set(3, min_part=2, k_max=8, include_single_box=True)
print(len(nodes), "diagrams:", ", ".join(map(str, nodes)))

graph = refinement_graph(nodes)
print(graph.number_of_edges(), "covering relations")
print(to_dot(graph)[:200], "...")
