"""Planes of 5x5 skew matrices with no rank 2 point.

A plane of 5x5 skew matrices avoids the rank 2 locus exactly when the Gauss
quadrics of its generators have no common zero.  Such planes form a single
open orbit.  This script reduces a few random members of that orbit to the
three-parameter normal family and shows the stabilizer algebra of the base
point.  It then feeds in a plane through a decomposable tensor, which must be
rejected.
"""

import random

from skewrank import PI5_ORDER5, classify_plane_order5, stabilizer_algebra
from skewrank.errors import ChowIntersection
from skewrank.exterior import SkewTensor
from skewrank.fields import format_scalar
from skewrank.planes import random_gl
from skewrank.rank import MatrixSubspace


def main():
    rng = random.Random(5)
    for n in range(3):
        plane = PI5_ORDER5 if n == 0 else PI5_ORDER5.transform(random_gl(5, rng))
        rep = classify_plane_order5(plane)
        f = ", ".join(format_scalar(x) for x in rep.f_params)
        print(f"plane {n}: branch {rep.branch}, f = ({f}); "
              f"nonvanishing conditions hold: {rep.literal_constraint}; basis maps family onto plane: {rep.verify(plane)}")

    stab = stabilizer_algebra(PI5_ORDER5, traceless=True)
    print(f"\ntraceless stabilizer has dimension {stab.dim}; so the orbit has dimension 24 - 3 = 21,"
          " which is the full dimension of G(2, P^9)")
    for m in stab.basis:
        print("  ", [[format_scalar(x) for x in row] for row in m])

    gens = list(PI5_ORDER5.generators)
    gens[1] = SkewTensor.from_terms(5, [(1, 0, 4)])
    try:
        classify_plane_order5(MatrixSubspace(tuple(gens)))
    except ChowIntersection as exc:
        print("\nplane through e0^e4 rejected:", exc)


if __name__ == "__main__":
    main()
