"""Independent exact values for the character unit tests.

Schur values come from semistandard-tableau enumeration (monomial
expansion), BC values from the Weyl ratio with Laplace-expansion
determinants over Fractions.  Neither path shares code with the library.
"""
from fractions import Fraction as F
from itertools import permutations, product
import math


def det(m):
    n = len(m)
    if n == 0:
        return F(1)
    total = F(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F(1)
        for i in range(n):
            term *= m[i][perm[i]]
        total += -term if inv % 2 else term
    return total


def ssyt(shape, n):
    """Yield fillings of a partition shape with entries 1..n, rows weak, columns strict."""
    cells = [(r, c) for r, ln in enumerate(shape) for c in range(ln)]

    def rec(k, fill):
        if k == len(cells):
            yield dict(fill)
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, fill[(r, c - 1)])
        if r > 0:
            lo = max(lo, fill[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            fill[(r, c)] = v
            yield from rec(k + 1, fill)
        fill.pop((r, c), None)

    yield from rec(0, {})


def schur_tableaux(lam, xs):
    total = F(0)
    for t in ssyt([p for p in lam if p > 0], len(xs)):
        term = F(1)
        for v in t.values():
            term *= xs[v - 1]
        total += term
    return total


def weyl(G, lam, zs):
    n = len(lam)

    def entry(i, j):
        z = zs[j]
        k = lam[i] + n - 1 - i
        if G == 'B':
            return sum(z ** t for t in range(-k, k + 1))
        if G == 'C':
            return (z ** (k + 1) - z ** (-(k + 1))) / (z - 1 / z)
        return z ** k + z ** (-k)

    num = det([[entry(i, j) for j in range(n)] for i in range(n)])
    den = F(1)
    for i in range(n):
        for j in range(i + 1, n):
            den *= zs[i] + 1 / zs[i] - zs[j] - 1 / zs[j]
    return num / den


q = F(1, 2)
print("s21(1,1/2)", schur_tableaux([2, 1], [F(1), q]))
print("s310 principal q=1/2", schur_tableaux([3, 1, 0], [F(1), q, q ** 2]))
pts = [F(2), F(3), F(5, 2)]
for G in "BCD":
    print(G, "(2,1,0) at (2,3,5/2)", weyl(G, [2, 1, 0], pts))
print("C(2,2) at (q,q^2)", weyl('C', [2, 2], [q, q ** 2]))
print("D(2,2,0) at (1,q,q^2)", weyl('D', [2, 2, 0], [F(1), q, q ** 2]))
print("B(2,1) principal q=1/4", weyl('B', [2, 1], [F(1, 2), F(1, 8)]))
print("C(3,1,0) principal q=1/2", weyl('C', [3, 1, 0], [q, q ** 2, q ** 3]))
print("D(3,1,1) principal q=1/2", weyl('D', [3, 1, 1], [F(1), q, q ** 2]))
e2 = [F(1), F(1, 2), F(1, 4)]
print("e2(1,1/2,1/4)", e2[0] * e2[1] + e2[0] * e2[2] + e2[1] * e2[2])
prod_inf = 1.0
import decimal
decimal.getcontext().prec = 50
p = decimal.Decimal(1)
for i in range(1, 200):
    p *= 1 - decimal.Decimal(1) / (decimal.Decimal(2) ** i)
print("(1/2;1/2)_inf", p)
