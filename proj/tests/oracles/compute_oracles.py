"""Independent reference values for the C++ test suites.

Run with `python3 tests/oracles/compute_oracles.py`. Uses sympy only; none
of this touches the C++ implementation. The printed values are frozen into
the doctest suites.
"""
from fractions import Fraction
from math import gcd
import sympy as sp

x, s, t = sp.symbols("x s t")


def phi(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def cyclotomic_by_division(m):
    num = sp.Poly(x**m - 1, x)
    for d in range(1, m):
        if m % d == 0:
            q, r = sp.div(num, cyclotomic_by_division(d))
            assert r.is_zero
            num = q
    return num


def char_sum_numeric(m, a, b, c):
    # brute-force numerical evaluation, then rational reconstruction
    z = sp.exp(2 * sp.pi * sp.I / m)
    total = 0
    for k in range(1, m):
        total += 2 * (z ** (c * k) - 1) / ((1 - z ** (-a * k)) * (1 - z ** (-b * k)))
    v = complex(sp.N(total / m, 40))
    assert abs(v.imag) < 1e-20
    return Fraction(v.real).limit_denominator(10 * m)


def local_int(g1, g2):
    p1, q1 = g1
    p2, q2 = g2
    res = sp.resultant(p1.subs(t, s) - p2, q1.subs(t, s) - q2, t)
    res = sp.Poly(sp.expand(res), s)
    terms = sorted(m[0] for m in res.monoms())
    return terms[0]


def gaps(a, b):
    sg = {i * a + j * b for i in range(b + 1) for j in range(a + 1)}
    return [n for n in range(1, a * b) if n not in sg]


if __name__ == "__main__":
    print("Phi_6 =", cyclotomic_by_division(6).as_expr())
    z3 = sp.exp(2 * sp.pi * sp.I / 3)
    print("(1-z3)(2+z3)/3 =", sp.nsimplify(sp.N(sp.expand((1 - z3) * (2 + z3) / 3))))
    for args in [(3, 2, 2, 2), (5, 2, 3, 2), (5, 2, 3, 3), (2, 1, 1, 1), (7, 3, 5, 3), (7, 2, 3, 1)]:
        print("I", args, "=", char_sum_numeric(*args))
    print("local (t,t^2) vs (t,-t^2):", local_int((t, t**2), (t, -t**2)))
    print("local (t^3,t^5) vs (t^3,2t^5):", local_int((t**3, t**5), (t**3, 2 * t**5)))
    print("local (t,t^5) vs (t,t^7):", local_int((t, t**5), (t, t**7)))
    print("local (t^2,t^3) vs (t^3,t^2):", local_int((t**2, t**3), (t**3, t**2)))
    print("local (t^2,t^3+t^4) vs (t^2,-t^3):", local_int((t**2, t**3 + t**4), (t**2, -t**3)))
    print("gaps(3,5) =", gaps(3, 5), "gaps(2,3) =", gaps(2, 3))
    triples = [(a, b, c) for c in range(4, 61) for b in range(3, c) for a in range(2, b)
               if gcd(a, b) == 1 and gcd(a, c) == 1 and gcd(b, c) == 1]
    print("admissible triples with d3<=60:", len(triples))
    for (d1, d2, d3) in [(2, 3, 5), (2, 3, 7), (2, 5, 7), (3, 4, 5), (3, 4, 7), (2, 3, 11)]:
        D = d1 * d2 * d3
        S = d1 + d2 + d3
        e = d1
        I = [char_sum_numeric(d, *[w % d for w in (d1, d2, d3) if w != d], e % d) if e % d else Fraction(0)
             for d in (d1, d2, d3)]
        dE = Fraction(e * e, D) + Fraction(e * S, D) + sum(I)
        print("sw", (d1, d2, d3), "I =", [str(v) for v in I], "d(E) =", dE)
    d1, d2, d3 = 2, 3, 5
    I = [char_sum_numeric(d, *[w % d for w in (d1, d2, d3) if w != d], 3 % d) if 3 % d else Fraction(0)
         for d in (d1, d2, d3)]
    print("sw (2,3,5) e=3 I =", [str(v) for v in I], "d =", Fraction(9, 30) + Fraction(30, 30) + sum(I))
