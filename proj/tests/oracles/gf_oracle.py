"""Modular arithmetic oracle: inverses used by the prime-field scalar parser."""


def main():
    assert pow(2, -1, 5) == 3
    print("1/2 over GF(5) = 3")
    assert pow(2, -1, 3) == 2
    print("1/2 over GF(3) = 2")
    assert pow(2, -1, 7) == 4
    print("1/2 over GF(7) = 4")
    assert (3 * pow(4, -1, 5)) % 5 == 2
    print("3/4 over GF(5) = 2")
    print("gf oracle: all checks passed")


if __name__ == "__main__":
    main()
