"""Oracle for the two-axis pair fixtures: spin factor m=2 with B(u,u)=B(v,v)=1,
B(u,v)=2*lam-1 gives axes a=(1+u)/2, b=(1+v)/2 with (a,b)=lam; the lam=1 fixture
uses B(v,v)=B(u,v)=0 and b=(1+u+v)/2.  Checks the decomposition sanity identities."""

from fractions import Fraction as Fr

from common import in_span, nullspace, vec_add, vec_is_zero, vec_scale, vec_sub

from spin_oracle import Spin


def decompose(A, a, x):
    alpha = A.form(a, x)
    x0 = vec_add(vec_sub(x, vec_scale(Fr(2), A.mul(a, x))), vec_scale(alpha, a))
    xh = vec_sub(vec_scale(Fr(2), A.mul(a, x)), vec_scale(2 * alpha, a))
    return alpha, x0, xh


def project0(A, a, x):
    return decompose(A, a, x)[1]


def check_pair(A, a, b, lam):
    assert A.mul(a, a) == a and A.mul(b, b) == b
    assert A.form(a, a) == 1 and A.form(b, b) == 1
    assert A.form(a, b) == lam
    alpha, b0, bh = decompose(A, a, b)
    assert alpha == lam
    assert vec_is_zero(vec_sub(b, vec_add(vec_scale(lam, a), vec_add(b0, bh))))
    assert A.mul(b0, b0) == vec_scale(1 - lam, b0)
    assert project0(A, a, A.mul(bh, bh)) == vec_scale(lam, b0)
    assert A.mul(bh, b0) == vec_scale(Fr(1, 2) * (1 - lam), bh)
    assert A.mul(bh, bh) == vec_add(vec_scale(lam * (1 - lam), a), vec_scale(lam, b0))
    assert A.form(b, bh) == 2 * lam * (1 - lam)
    assert A.form(b, b0) == (1 - lam) ** 2
    return b0, bh


def main():
    one = [Fr(1), Fr(0), Fr(0)]
    u = [Fr(0), Fr(1), Fr(0)]
    v = [Fr(0), Fr(0), Fr(1)]

    for lam in [Fr(0), Fr(1, 2), Fr(1, 4), Fr(1, 3), Fr(2, 5), Fr(-1), Fr(3)]:
        buv = 2 * lam - 1
        A = Spin([[Fr(1), buv], [buv, Fr(1)]])
        a = vec_scale(Fr(1, 2), vec_add(one, u))
        b = vec_scale(Fr(1, 2), vec_add(one, v))
        check_pair(A, a, b, lam)
        print(f"lam = {lam}: B(u,v) = {buv}, form(a,b) = {lam}, sanity identities ok")

    # lam = 1 fixture.
    A = Spin([[Fr(1), Fr(0)], [Fr(0), Fr(0)]])
    a = vec_scale(Fr(1, 2), vec_add(one, u))
    b = vec_scale(Fr(1, 2), vec_add(one, vec_add(u, v)))
    assert A.form(a, b) == 1
    b0, bh = check_pair(A, a, b, Fr(1))
    assert vec_is_zero(b0)
    assert bh == vec_scale(Fr(1, 2), v)
    rad = nullspace(A.gram())
    assert len(rad) == 1 and in_span(rad, v) and in_span(rad, bh)
    print("lam = 1: form(a,b) = 1, b0 = 0, bhalf = v/2 in the 1-dim form radical")

    print("pair lambda oracle: all checks passed")


if __name__ == "__main__":
    main()
