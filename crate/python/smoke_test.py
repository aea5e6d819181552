"""Smoke test for the immsnp Python extension.

Build and install first:
    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/immsnp-*.whl
"""

import immsnp


def main():
    assert immsnp.partitions_of(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert immsnp.conjugate([3, 1]) == [2, 1, 1]
    assert immsnp.dominance_leq([2, 2], [3, 1])
    assert not immsnp.dominance_leq([3, 1], [2, 2])
    assert immsnp.character([2, 1], [3]) == -1
    table = immsnp.character_table(3)
    assert table[((2, 1), (1, 1, 1))] == 2

    h = immsnp.Matrix.jacobi_trudi([2, 1], 3)
    assert h.order == 2
    assert h.determinant() == immsnp.Polynomial.schur([2, 1], 3)
    perm = h.permanent()
    assert perm.schur_expand() == {(3,): 2, (2, 1): 1}
    imms = h.all_immanants()
    assert set(imms) == {(2,), (1, 1)}
    report = perm.snp_check()
    assert report["is_snp"] and report["support_size"] == 10

    g = immsnp.Matrix.giambelli([3, 3, 2], 3)
    lead = immsnp.leading_coefficients([3, 3, 2], 8)
    assert lead[(2,)][1] == 2 and lead[(1, 1)][1] == 1
    assert not g.immanant([1, 1]).is_zero()

    x = immsnp.Polynomial(2, [([1, 0], 1), ([0, 1], 1)])
    square = x * x
    assert square.coefficient([1, 1]) == 2
    assert square.terms() == [([2, 0], 1), ([1, 1], 2), ([0, 2], 1)]

    big = x
    for _ in range(6):
        big = big * big
    assert big.coefficient([32, 32]) == 1832624140942590534

    definition = immsnp.e_polynomial([2, 1], [3], 2)
    border = immsnp.e_polynomial([2, 1], [3], 2, method="border-formula")
    assert definition == border

    assert immsnp.rado_containment([2, 2], [3, 1], 2)
    families = immsnp.path_families("jt", [1], 2)
    assert len(families) == 2

    scan = immsnp.run_scan("giambelli", 4, jobs=2)
    assert scan["complete"] and scan["totals"]["counterexamples"] == 0

    try:
        immsnp.character([1, 2], [3])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid partition accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
