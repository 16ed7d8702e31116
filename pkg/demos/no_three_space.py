"""No 3-dimensional linear space of 6x6 skew matrices has constant rank 4.

Any such space would have to contain a P-type plane, which we may take to be
spanned by w = e0e1 + e3e5, w' = e0e2 + e3e4, w'' = e0e3 + e4e5.  A fourth
generator W is then forced, condition by condition, into e0 ^ V, where every
element has rank 2.  The script replays those eliminations exactly and then
checks a batch of random 3-spaces with the general certificate.
"""

import random
from fractions import Fraction

from skewrank import MatrixSubspace, SkewTensor, corollary_chain, no_constant_rank_3space, random_plane
from skewrank.linalg import span

FREE = [(0, 1), (0, 2), (1, 2)] + [(i, j) for i in range(3) for j in range(3, 6)]


def describe(functionals):
    out = []
    for row in span(functionals):
        terms = [f"{'' if c == 1 else c}W{i}{j}" for (i, j), c in zip(FREE, row) if c]
        out.append(" + ".join(terms))
    return out


def main():
    t = lambda *terms: SkewTensor.from_terms(6, terms)
    omegas = (t((1, 0, 1), (1, 3, 5)), t((1, 0, 2), (1, 3, 4)), t((1, 0, 3), (1, 4, 5)))
    chain = corollary_chain(omegas, FREE)
    print("W^w^w = W^w'^w' = W^w''^w'' = 0 forces:", describe(chain.first))
    print("mixed products vanish, giving in addition:", describe(chain.first + chain.second))
    print("W^W^w'' restricted to what is left:", chain.quadric)
    print("every surviving W has rank <= 2:", chain.residual_decomposable)

    rng = random.Random(9)
    found = 0
    for n in range(50):
        plane = random_plane(["PlaneG", "PlaneT", "PlaneP", "Plane5"][n % 4], n)
        extra = SkewTensor(6, tuple(Fraction(rng.randint(-2, 2)) for _ in range(15)))
        found += bool(no_constant_rank_3space(MatrixSubspace(plane.generators + (extra,))))
    print(f"\nrandom 3-spaces through random planes with constant rank 4: {found} of 50")


if __name__ == "__main__":
    main()
