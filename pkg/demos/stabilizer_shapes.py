"""Compare computed stabilizer algebras with hand-written parametrizations.

For the T-type plane the ten-parameter matrix family matches the solved
algebra exactly.  The P-type family matches once the u20 entry in position
(3, 4) carries coefficient -2.  For the order-5 plane, the transposed
sl2 family matches after flipping the signs of e2, e3, e4.
"""

from fractions import Fraction

from skewrank import PI5_ORDER5, PI_P, PI_T, stabilizer_algebra
from skewrank.linalg import transpose
from skewrank.normal_forms import pi5_sl2_family, pi_p_stabilizer_family, pi_t_stabilizer_family
from skewrank.stabilizer import same_algebra


def main():
    print("T-type family equals stabilizer:", same_algebra(stabilizer_algebra(PI_T).basis, pi_t_stabilizer_family()))

    stab_p = stabilizer_algebra(PI_P)
    fam = pi_p_stabilizer_family()
    names = "u00 u10 u20 u30 u40 u50 u11 u21 u12 u22".split()
    print("P-type directions outside the stabilizer:", [n for n, m in zip(names, fam) if not stab_p.contains(m)])
    fam[2][3][4] = Fraction(-2)
    print("  ... with the (3,4) entry set to -2*u20:", same_algebra(stab_p.basis, fam))

    sl = stabilizer_algebra(PI5_ORDER5, traceless=True)
    print("\norder-5 plane, sl5 stabilizer dimension:", sl.dim)
    print("x, y, z directions inside it:", [sl.contains(m) for m in pi5_sl2_family()])
    d = [[Fraction(int(i == j) * (1 if i < 2 else -1)) for j in range(5)] for i in range(5)]
    twisted = stabilizer_algebra(PI5_ORDER5.transform(d), traceless=True)
    print("transposed family stabilizes the sign-twisted plane:",
          same_algebra(twisted.basis, [transpose(m) for m in pi5_sl2_family()]))


if __name__ == "__main__":
    main()
