"""Walk through the four orbits of constant rank 4 planes of 6x6 skew matrices.

For each normal form we scramble it by a random change of basis, hand the
result to the classifier, and check that the returned witness maps the normal
form back onto the scrambled plane.  Two independent invariants (the special
line locus and kernel-section counts) are printed alongside.

    python demos/four_planes.py [seed]
"""

import sys

from skewrank import (
    LABELS,
    classify_plane,
    constant_rank_four,
    normal_form,
    plane_kernel_fingerprint,
    random_plane,
    special_locus,
    verify_witness,
)
from skewrank.fields import format_scalar


def show_matrix(m):
    width = max(len(format_scalar(x)) for row in m for x in row)
    for row in m:
        print("   ", " ".join(format_scalar(x).rjust(width) for x in row))


def main(seed=0):
    for label in LABELS:
        print(f"== {label} ==")
        nf = normal_form(label)
        for g in nf.generators:
            terms = [f"{format_scalar(c)}*e{i}e{j}" for (i, j), c in zip(
                [(i, j) for i in range(6) for j in range(i + 1, 6)], g.coeffs) if c]
            print("  generator:", " + ".join(terms))

        plane = random_plane(label, seed)
        cert = constant_rank_four(plane)
        print(f"  scrambled plane is constant rank 4: {bool(cert)}"
              f" (Macaulay rank {cert.macaulay.achieved_rank}/{cert.macaulay.target_rank})")

        rep = classify_plane(plane)
        print(f"  classifier says {rep.label}; witness verified: {verify_witness(rep, plane)}")
        if rep.witness is not None:
            print("  witness:")
            show_matrix(rep.witness)
        else:
            print("  hyperplane containing every image has dimension", len(rep.hyperplane_witness))
            print("  order-5 branch:", rep.order5.branch, "f =", [format_scalar(x) for x in rep.order5.f_params])

        locus = special_locus(plane)
        form = "" if locus.defining_form is None else f" ({locus.defining_form})"
        print(f"  special lines: {locus.kind}{form}")
        print("  kernel fingerprint:", plane_kernel_fingerprint(plane).to_json())
        print()


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 0)
