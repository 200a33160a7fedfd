"""Oracle for the split fixture F+F (coordinatewise product, identity Gram):
e0+e1 is idempotent with (c,c)=2 and L_c = I, so the 1-eigenspace has dim 2 and
Q_c(e0) != 0; e0 itself is an axis with A_0 = span{e1}, A_1/2 = 0."""

from fractions import Fraction as Fr

from common import eigenspace, in_span, vec_add, vec_is_zero, vec_scale, vec_sub


def mul(x, y):
    return [x[0] * y[0], x[1] * y[1]]

def form(x, y):
    return x[0] * y[0] + x[1] * y[1]


def main():
    e0, e1 = [Fr(1), Fr(0)], [Fr(0), Fr(1)]
    c = vec_add(e0, e1)
    assert mul(c, c) == c
    assert form(c, c) == 2
    print("c = e0+e1: idempotent, (c,c) = 2")

    # Frobenius holds for the identity Gram with coordinatewise product.
    for x in (e0, e1):
        for y in (e0, e1):
            for z in (e0, e1):
                assert form(mul(x, y), z) == form(x, mul(y, z))
    print("frobenius ok")

    Lc = [[Fr(1), Fr(0)], [Fr(0), Fr(1)]]
    assert len(eigenspace(Lc, Fr(1))) == 2
    print("L_c = I: eigenvalue 1 has multiplicity 2 (spectrum clause fails)")

    qc = vec_sub(mul(c, mul(c, e0)),
                 vec_scale(Fr(1, 2), vec_add(mul(c, e0), vec_scale(form(c, e0), c))))
    assert not vec_is_zero(qc)
    print("Q_c(e0) =", qc, "!= 0")

    L0 = [[Fr(1), Fr(0)], [Fr(0), Fr(0)]]
    assert form(e0, e0) == 1
    one_d = eigenspace(L0, Fr(1))
    zero_d = eigenspace(L0, Fr(0))
    half_d = eigenspace(L0, Fr(1, 2))
    assert len(one_d) == 1 and len(zero_d) == 1 and len(half_d) == 0
    assert in_span(zero_d, e1)
    print("e0: A_0 = span{e1}, A_1/2 = 0")

    # Frobenius-violating counterexample for the loader: same product with
    # Gram [[1,1],[0,1]] is not even symmetric, and (e0*e0, e1) != (e0, e0*e1).
    def bad_form(x, y):
        return x[0] * y[0] + x[0] * y[1] + x[1] * y[1]
    assert bad_form(e0, e1) != bad_form(e1, e0)
    assert bad_form(mul(e0, e0), e1) != bad_form(e0, mul(e0, e1))
    print("gram [[1,1],[0,1]]: asymmetric and non-Frobenius, loader must reject")

    print("split oracle: all checks passed")


if __name__ == "__main__":
    main()
