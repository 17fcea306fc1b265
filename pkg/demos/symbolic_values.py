"""Closed forms of ST(lambda) in d^2 variables.

For lambda of weight d^2 that is not an identity, ST(lambda) = det(x) J_lambda
with J_lambda in the group algebra of S_n. This script prints a few of them.
"""

from tensorpi import determine_c_d_sign, j_delta_central, phi_of_j
from tensorpi.tables import jdelta_text, jlambda_text

# Phi(J/C_d) is a signed sum of permutations with exactly d cycles
print("Phi for (2,1,1):", phi_of_j((2, 1, 1), 2))
print("Phi for (3,2,2,1,1):", phi_of_j((3, 2, 2, 1, 1), 3))

# the sign of C_d is found by evaluating the trace wedge on the elementary basis
for d in (2, 3, 4):
    print(f"sign of C_{d}:", determine_c_d_sign(d))

# J_lambda itself, with C_d taken positive and the common factor pulled out
print(jlambda_text((5, 3, 1), 3))

# the staircase in both central bases
for d in (2, 3, 4):
    print(jdelta_text(d, "omega"), end="")
    print(jdelta_text(d, "class"), end="")

central = j_delta_central(3)
print("omega coefficients for d=3:", {str(k): str(v) for k, v in central.omega_coeffs.items()})
