#!/usr/bin/env python3
"""Independent brute-force oracle for the frozen expected values in the test suites.

Plain Python integers, no shared code with the C++ implementation. Run it to
re-derive the computed constants frozen into tests/.
"""
import itertools
import functools
import sys
import math


def digits(n, b):
    if n == 0:
        return [0]
    out = []
    while n:
        out.append(n % b)
        n //= b
    return out


def dcount(n, b):
    return len(digits(n, b))


def subfact(n):
    # alternating sum cleared of denominators: sum (-1)^i n!/i!
    return sum((-1) ** i * (math.factorial(n) // math.factorial(i)) for i in range(n + 1))


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def hardy_bound(f, b, k):
    s = max(f(v) for v in range(b ** k))
    m = 1
    while not b ** (k * (m - 1)) > m * s:
        m += 1
    return s, m, (m - 1) * s


def hardy_scan(f, b, k, hi, lo=1):
    out = []
    B = b ** k
    table = [f(v) for v in range(B)]
    f = table.__getitem__
    for n in range(lo, hi + 1):
        t, x = 0, n
        while True:
            t += f(x % B)
            x //= B
            if x == 0:
                break
        if t == n:
            out.append(n)
    return out


def main():
    print("derangements(4) by permutation count:",
          sum(all(p[i] != i for i in range(4)) for p in itertools.permutations(range(4))))
    print("fib(55):", fib(55), "digit sum:", sum(digits(fib(55), 10)))
    print("subfactorial 23/26 digit counts:", dcount(subfact(23), 10), dcount(subfact(26), 10))

    for name, f in [("factorial", math.factorial), ("pow5", lambda d: d ** 5),
                    ("selfpow", lambda d: d ** d if d else 1)]:
        print("hardy_bound", name, hardy_bound(f, 10, 1))

    for name, f in [("pow3 k=2", lambda v: v ** 3)]:
        s, m, nmax = hardy_bound(f, 10, 2)
        print(name, (s, m, nmax), hardy_scan(f, 10, 2, nmax))
    for c in (2, 3, 4, 5):
        s, m, nmax = hardy_bound(lambda d: c ** d, 10, 1)
        if nmax <= 2_000_000:
            print("expbase", c, nmax, hardy_scan(lambda d: c ** d, 10, 1, nmax))
    s, m, nmax = hardy_bound(subfact, 10, 1)
    print("subfactorial", nmax, hardy_scan(subfact, 10, 1, nmax))

    # armstrong in small bases (order >= 2)
    for b in (3, 4):
        out = []
        m = 2
        while not b ** (m - 1) > m * (b - 1) ** m:
            for n in range(b ** (m - 1), b ** m):
                if sum(d ** m for d in digits(n, b)) == n:
                    out.append(n)
            m += 1
        print("armstrong base", b, out, "order ceiling", m)
    m = 1
    while not 10 ** (m - 1) > m * 9 ** m:
        m += 1
    print("armstrong base 10 order ceiling", m)

    # wells cutoffs by direct inequality
    n = 1
    while not all(k ** 4 < 10 ** (k - 1) for k in range(n, 101)):
        n += 1
    print("wells pow4 cutoff", n, [k for k in range(1, 101) if 10 ** (k - 1) <= k ** 4 < 10 ** k])

    # dudeney cutoffs: first n from which n > 9*D(F(n)) holds up to 2000
    for p in (1, 3):
        n = 1
        while not all(k > 9 * dcount(k ** p, 10) for k in range(n, 2001)):
            n += 1
        print("dudeney cutoff pow", p, n)
    for p in (2, 3):
        print("dudeney pow", p, [n for n in range(1, 101) if sum(digits(n ** p, 10)) == n])
    print("dudeney fib cap 100", [n for n in range(1, 101) if sum(digits(fib(n), 10)) == n])

    # powersum
    for p in (2, 3):
        smax = max(s for s in range(1, 5000) if s <= 9 * dcount(s ** p, 10))
        print("powersum", p, "s_max", smax)
    print("powersum p=2 scan", [n for n in range(1, 10 ** 4 + 1) if sum(digits(n, 10)) ** 2 == n])
    print("powersum p=2 b=2 scan", [n for n in range(1, 17) if sum(digits(n, 2)) ** 2 == n])

    # reversal multiples
    for m in (2, 3, 4, 5, 6):
        hits = []
        for n in range(10 ** (m - 1), 10 ** m):
            if n % 10 == 0:
                continue
            r = int(str(n)[::-1])
            if r != n and n % r == 0:
                hits.append((n, n // r))
        print("reversal", m, hits)

    # Piezas i=3, t=0
    fe, a, l = 257, 16, 64
    B = 10 ** (l * 3)
    x, y = a * (a * B - 1) // fe, a * (a + B) // fe
    print("piezas i=3 t=0 ok:", x * B + y == x * x + y * y, len(str(x)), len(str(y)))
    print("piezas i=3 t=0 x head/tail:", str(x)[:12], str(x)[-12:])

    # vitalis l=2
    l = 2
    x, y, z = int("1" + "6" * l), int("5" + "0" * l), int("3" + "3" * l)
    print("vitalis 2", x, y, z, x ** 3 + y ** 3 + z ** 3, int(f"{x}{y}{z}"))

    # self-power with 0^0 = 0, multiset-free direct check of the claimed extra value
    n = 438579088
    print("438579088 selfpow(0^0=0):", sum(d ** d if d else 0 for d in digits(n, 10)))


if __name__ == "__main__":
    sys.stdout.reconfigure(line_buffering=True)
    main()
