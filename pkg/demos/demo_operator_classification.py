"""Survey the torsion-free operator classification on sl2.

Loads the seven shipped families, reports each symbolic verdict with the
assumptions it needed, exhibits the known defect of family 6, and refutes a
generic diagonal operator with an exact rational witness.
Run with:  python demos/demo_operator_classification.py
"""

from lieb import RefutedAt, SampleConfig, catalog, check_nijenhuis, refute_by_sampling
from lieb.multilinear import LinearOperator
from lieb.scalars import Scalar


def main():
    for family in range(1, 8):
        entry = catalog.get(f"nij-family-{family}")
        report = check_nijenhuis(entry.structures["sl2"], entry.structures["N"],
                                 entry.assumptions)
        used = ", ".join(str(a) for a in report.assumptions_used) or "none"
        print(f"family {family}: {report.verdict} (assumptions used: {used})")
        for residual in report.residuals[:1]:
            print(f"  residual at {residual.index}: {residual.value}")
        if "known_defect" in entry.metadata:
            print(f"  recorded defect: {entry.metadata['known_defect']}")

    sl2 = catalog.get("sl2").structures["sl2"]
    one, two, three = (Scalar.from_int(n) for n in (1, 2, 3))
    zero = Scalar.from_int(0)
    diag = LinearOperator(sl2.space, sl2.space,
                          [[one, zero, zero], [zero, two, zero], [zero, zero, three]])
    result = refute_by_sampling(lambda n: check_nijenhuis(sl2, n), {"n": diag},
                                SampleConfig(seed=7, trials=1))
    assert isinstance(result, RefutedAt)
    witness = result.report.residuals[0]
    print(f"diag(1,2,3) refuted: residual {witness.value} at index {witness.index}")


if __name__ == "__main__":
    main()
