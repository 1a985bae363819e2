"""Build the 6-dimensional double of the quasitriangular sl2 bialgebra.

Assembles the bicrossed bracket on L + L*, the block operator, and the
canonical pairing form; verifies the double is a torsion-free Frobenius
algebra and that the adjoint of the block operator swaps its blocks.
Run with:  python demos/demo_double_and_pairing.py
"""

from lieb import (
    adjoint_operator,
    catalog,
    check_frobenius,
    check_lie_algebra,
    check_nijenhuis,
    manin_double,
)


def main():
    entry = catalog.get("nliebialg-a")
    sl2 = entry.structures["sl2"]
    dr = entry.structures["dr"]
    n_op, p_op = entry.structures["N"], entry.structures["P"]

    double, block, form = manin_double(sl2, dr, n_op, p_op)
    print("double basis:", " ".join(double.space.labels))
    print("bracket axioms on the double:", check_lie_algebra(double).verdict)
    print("block operator torsion-free:", check_nijenhuis(double, block).verdict)
    print("pairing form symmetric/invariant/nondegenerate:",
          check_frobenius(double, form).verdict)

    adjoint = adjoint_operator(form, block)
    swapped = all(
        adjoint.matrix[i][j] == p_op.matrix[i][j]
        and adjoint.matrix[3 + i][3 + j] == n_op.matrix[j][i]
        for i in range(3) for j in range(3))
    print("adjoint of N (+) P^T equals P (+) N^T:", swapped)


if __name__ == "__main__":
    main()
