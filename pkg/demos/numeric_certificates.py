"""Checking symbolic answers against explicit matrix evaluations.

Everything is computed modulo a ~30-bit prime, so results are exact.
"""

import numpy as np

from tensorpi import certify, det_vec, determine_c_d_sign, eval_group_algebra, evaluate_st, j_lambda, random_matrices
from tensorpi.oracle import DEFAULT_PRIME as p, reduce

rng = np.random.default_rng(0)

# ST(2,2) vanishes on every quadruple of 2 x 2 matrices
xs = random_matrices(4, 2, p, rng)
print("ST(2,2) is zero:", not evaluate_st((2, 2), xs, p).any())

# ST(3,1) does not; it equals det(x) J with J = 2() - (1,2) once the sign of C_2 (negative) is applied
value = evaluate_st((3, 1), xs, p)
J = j_lambda((3, 1), 2).signed(determine_c_d_sign(2))
predicted = reduce(int(det_vec(xs, p)) * eval_group_algebra(J, 2, p), p)
print("ST(3,1) = det * J:", np.array_equal(value, predicted))

# the same check packaged as a report
for lam, d in [("2,2", 2), ("3,1", 2), ("2,1", 2), ("5,3,1", 3)]:
    r = certify(lam, d, trials=3)
    print(f"{lam:>6} d={d}: {r['verdict']:<8} ({r['tuples_checked']} tuples, {r['elapsed_ms']} ms)")
