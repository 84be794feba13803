#!/usr/bin/env python3
#
# Copyright 2026 The quasifs Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the corpus group files and the golden indicator tables.

Everything here is independent of the C++ library: group tables are built
from concrete models (residues, permutations, quaternion units, integer
matrices), representations are checked to be irreducible homomorphisms, and
indicators are brute-force sums reduced modulo the cyclotomic polynomial
with sympy.

usage: make_group_files.py DATA_DIR
"""

import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

import sympy

Z = sympy.Symbol("z")


class Cyc:
    """Element of Q(zeta_N) as a sympy polynomial in z reduced mod Phi_N."""

    def __init__(self, n, poly):
        self.n = n
        self.poly = sympy.Poly(poly, Z, domain="QQ").rem(
            sympy.Poly(sympy.cyclotomic_poly(n, Z), Z, domain="QQ"))

    @classmethod
    def zeta(cls, n, e):
        return cls(n, Z ** (e % n))

    @classmethod
    def const(cls, n, c):
        return cls(n, sympy.Rational(c))

    def __add__(self, o):
        return Cyc(self.n, self.poly.as_expr() + o.poly.as_expr())

    def __sub__(self, o):
        return Cyc(self.n, self.poly.as_expr() - o.poly.as_expr())

    def __mul__(self, o):
        return Cyc(self.n, self.poly.as_expr() * o.poly.as_expr())

    def __neg__(self):
        return Cyc(self.n, -self.poly.as_expr())

    def conj(self):
        # z -> z^(n-1) on each monomial
        e = sympy.expand(self.poly.as_expr().subs(Z, Z ** (self.n - 1)))
        return Cyc(self.n, e)

    def is_zero(self):
        return self.poly.is_zero

    def rational(self):
        if self.poly.degree() > 0:
            raise ValueError(f"not rational: {self.poly.as_expr()}")
        c = self.poly.coeff_monomial(1)
        return Fraction(int(c.p), int(c.q))

    def text(self):
        terms = []
        for (e,), c in sorted(self.poly.terms(), reverse=True):
            c = Fraction(int(c.p), int(c.q))
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(1, n)), a[i][0] * b[0][j])
             for j in range(n)] for i in range(n)]


def mat_eq(a, b):
    return all((x - y).is_zero() for ra, rb in zip(a, b) for x, y in zip(ra, rb))


class Group:
    def __init__(self, name, conductor, elements, names, mul):
        self.name = name
        self.n = conductor
        self.elements = elements
        self.names = names
        index = {g: i for i, g in enumerate(elements)}
        self.table = [[index[mul(a, b)] for b in elements] for a in elements]
        self.irreps = []

    def add_irrep(self, name, rep):
        mats = [rep(g) for g in self.elements]
        m = len(self.elements)
        for a in range(m):
            for b in range(m):
                if not mat_eq(matmul(mats[a], mats[b]), mats[self.table[a][b]]):
                    raise AssertionError(f"{self.name}/{name} is not a homomorphism")
        chi = [sum((row[i] for i, row in enumerate(x)), Cyc.const(self.n, 0)) for x in mats]
        norm = sum((c * c.conj() for c in chi), Cyc.const(self.n, 0)).rational()
        if norm != m:
            raise AssertionError(f"{self.name}/{name} is not irreducible")
        self.irreps.append((name, mats, chi))

    def check_complete(self):
        total = sum(len(mats[0]) ** 2 for _, mats, _ in self.irreps)
        if total != len(self.elements):
            raise AssertionError(f"{self.name}: sum of squared dimensions {total}")

    def classical_indicators(self):
        m = len(self.elements)
        out = {}
        for name, _, chi in self.irreps:
            s = sum((chi[self.table[g][g]] for g in range(m)), Cyc.const(self.n, 0))
            out[name] = s.rational() / m
        return out

    def to_json(self):
        return {
            "name": self.name,
            "conductor": self.n,
            "elements": self.names,
            "table": self.table,
            "irreps": [{
                "name": name,
                "dimension": len(mats[0]),
                "matrices": [[[x.text() for x in row] for row in mat] for mat in mats],
            } for name, mats, _ in self.irreps],
        }


def one_by_one(n, e):
    return [[Cyc.zeta(n, e)]]


def cyclic(m):
    g = Group(f"Z/{m}", m, list(range(m)), [str(x) for x in range(m)], lambda a, b: (a + b) % m)
    for k in range(m):
        g.add_irrep(f"chi{k}", lambda x, k=k: one_by_one(m, k * x))
    return g


def symmetric3():
    perms = list(itertools.permutations(range(3)))
    compose = lambda p, q: tuple(p[q[x]] for x in range(3))

    def cycle_name(p):
        seen, parts = set(), []
        for s in range(3):
            if s in seen or p[s] == s:
                continue
            c, x = [], s
            while x not in seen:
                seen.add(x)
                c.append(str(x))
                x = p[x]
            parts.append("(" + "".join(c) + ")")
        return "".join(parts) or "()"

    def sign(p):
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        return -1 if inv % 2 else 1

    g = Group("S3", 1, perms, [cycle_name(p) for p in perms], compose)
    g.add_irrep("trivial", lambda p: [[Cyc.const(1, 1)]])
    g.add_irrep("sign", lambda p: [[Cyc.const(1, sign(p))]])
    basis = sympy.Matrix([[1, 0], [-1, 1], [0, -1]])  # e0 - e1, e1 - e2
    proj = (basis.T * basis).inv() * basis.T

    def standard(p):
        perm = sympy.zeros(3, 3)
        for x in range(3):
            perm[p[x], x] = 1
        m = proj * perm * basis
        return [[Cyc.const(1, m[i, j]) for j in range(2)] for i in range(2)]

    g.add_irrep("standard", standard)
    return g


def quaternion8():
    # (sign, unit) with unit in 1, i, j, k
    units = "1ijk"
    table = {("1", u): (1, u) for u in units}
    table.update({(u, "1"): (1, u) for u in units})
    table.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                  ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                  ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})

    def mul(a, b):
        s, u = table[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    elements = [(s, u) for u in units for s in (1, -1)]
    names = [("" if s > 0 else "-") + u for s, u in elements]
    g = Group("Q8", 4, elements, names, mul)
    quotient = {"1": (0, 0), "i": (1, 0), "j": (0, 1), "k": (1, 1)}
    g.add_irrep("trivial", lambda x: [[Cyc.const(4, 1)]])
    for name, (a, b) in (("sign_i", (0, 1)), ("sign_j", (1, 0)), ("sign_k", (1, 1))):
        g.add_irrep(name, lambda x, a=a, b=b: [[Cyc.const(4, (-1) ** (a * quotient[x[1]][0] + b * quotient[x[1]][1]))]])
    zero, one, i = Cyc.const(4, 0), Cyc.const(4, 1), Cyc.zeta(4, 1)
    spin = {"1": [[one, zero], [zero, one]], "i": [[i, zero], [zero, -i]],
            "j": [[zero, one], [-one, zero]], "k": [[zero, i], [i, zero]]}
    g.add_irrep("spin", lambda x: [[c if x[0] > 0 else -c for c in row] for row in spin[x[1]]])
    return g


def dihedral8():
    r = ((0, -1), (1, 0))
    s = ((1, 0), (0, -1))
    mul = lambda a, b: tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))
    ident = ((1, 0), (0, 1))
    elements, names, words = [], [], {}
    for b in range(2):
        for a in range(4):
            x = ident
            for _ in range(a):
                x = mul(x, r)
            if b:
                x = mul(x, s)
            elements.append(x)
            names.append(("r" + (str(a) if a > 1 else "") if a else "") + ("s" if b else "") or "e")
            words[x] = (a, b)
    g = Group("D4", 1, elements, names, mul)
    for name, er, es in (("trivial", 1, 1), ("chi_r+s-", 1, -1), ("chi_r-s+", -1, 1), ("chi_r-s-", -1, -1)):
        g.add_irrep(name, lambda x, er=er, es=es: [[Cyc.const(1, er ** words[x][0] * es ** words[x][1])]])
    g.add_irrep("standard", lambda x: [[Cyc.const(1, x[i][j]) for j in range(2)] for i in range(2)])
    return g


def cyclic_cocycle_exponent(m, q, a, b, c):
    return (q * a * ((b + c) // m)) % m


def twisted_dual_indicators(m, q):
    """nu(k_g) for k^{Z/m}_omega: omega(g, g, g)^-1 when g = g^-1, else 0."""
    out = {}
    for g in range(m):
        if (2 * g) % m:
            out[f"k_{g}"] = "0"
        else:
            out[f"k_{g}"] = Cyc.zeta(m, -cyclic_cocycle_exponent(m, q, g, g, g)).text()
    return out


def dump(value, indent=0):
    """JSON with short arrays kept on one line."""
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(value, dict):
        items = [f"{inner}{json.dumps(k)}: {dump(v, indent + 2)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    flat = json.dumps(value)
    if isinstance(value, list) and len(flat) > 100 and any(isinstance(x, (list, dict)) for x in value):
        return "[\n" + ",\n".join(inner + dump(x, indent + 2) for x in value) + "\n" + pad + "]"
    return flat


def main():
    data = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    groups = {f"z{m}": cyclic(m) for m in range(2, 9)}
    groups.update(s3=symmetric3(), q8=quaternion8(), d4=dihedral8())
    golden = {}
    for key, g in groups.items():
        g.check_complete()
        (data / "groups" / f"{key}.group.json").write_text(dump(g.to_json()) + "\n")
        golden[key] = {name: str(v) for name, v in g.classical_indicators().items()}
    (data / "golden" / "classical_indicators.json").write_text(dump(golden) + "\n")
    twisted = {f"z{m}w{q}": twisted_dual_indicators(m, q) for m, q in ((2, 0), (2, 1), (4, 0), (4, 1), (4, 2), (4, 3))}
    (data / "golden" / "twisted_dual_indicators.json").write_text(dump(twisted) + "\n")


if __name__ == "__main__":
    main()
