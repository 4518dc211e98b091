#!/usr/bin/env python3
"""Writes data/group_catalog.json: small groups with conjugacy classes and
centralizer character tables in the exact-value grammar read by parse_cyc.

Linear characters are found by brute force over homomorphisms to roots of
unity. Every centralizer in the catalog has at most one nonlinear irrep; its
character is the regular character minus the linear ones, divided by its
degree, and must come out integral.
"""
import argparse
import cmath
import itertools
import json
import math
from fractions import Fraction
from pathlib import Path

VERSION = 1


def perm_mul(a, b):
    # apply b first, then a
    return tuple(a[i] for i in b)


def cycle_str(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(str(j + 1))
            j = p[j]
        out.append("(" + "".join(c) + ")")
    return "".join(out) or "e"


def perm_group(perms):
    perms = sorted(set(perms), key=lambda p: (p != tuple(range(len(p))), cycle_str(p)))
    idx = {p: i for i, p in enumerate(perms)}
    mult = [[idx[perm_mul(a, b)] for b in perms] for a in perms]
    return [cycle_str(p) for p in perms], mult


def closure(gens):
    n = len(gens[0])
    elems = {tuple(range(n))}
    frontier = list(elems)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = perm_mul(a, g)
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
        frontier = nxt
    return list(elems)


def sign(p):
    s, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def quaternions():
    # elements (s, u): s in {1,-1}, u in 1,i,j,k
    table = {("1", "1"): (1, "1")}
    units = ["1", "i", "j", "k"]
    prod = {}
    for u in units:
        prod[("1", u)] = (1, u)
        prod[(u, "1")] = (1, u)
    for u in "ijk":
        prod[(u, u)] = (-1, "1")
    prod.update({("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    del table
    elems = [(s, u) for u in units for s in (1, -1)]
    names = [("" if s == 1 else "-") + u for s, u in elems]
    idx = {e: i for i, e in enumerate(elems)}

    def mul(a, b):
        s, u = prod[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    mult = [[idx[mul(a, b)] for b in elems] for a in elems]
    return names, mult


def groups():
    out = {}
    out["Z2"] = perm_group([(0, 1), (1, 0)])
    out["E2"] = perm_group(closure([(1, 0, 3, 2), (2, 3, 0, 1)]))
    out["S3"] = perm_group(itertools.permutations(range(3)))
    out["D4"] = perm_group(closure([(1, 2, 3, 0), (0, 3, 2, 1)]))
    out["Q8"] = quaternions()
    out["A4"] = perm_group([p for p in itertools.permutations(range(4)) if sign(p) == 1])
    return out


def analyse(names, mult):
    n = len(names)
    e = next(i for i in range(n) if all(mult[i][j] == j for j in range(n)))
    inv = [next(j for j in range(n) if mult[i][j] == e) for i in range(n)]

    def order(g):
        k, h = 1, g
        while h != e:
            h = mult[h][g]
            k += 1
        return k

    classes, seen = [], set()
    for g in range(n):
        if g in seen:
            continue
        cls = sorted({mult[mult[h][g]][inv[h]] for h in range(n)})
        seen.update(cls)
        classes.append(cls)
    classes.sort(key=lambda c: (order(c[0]), len(c), c[0]))
    return e, inv, order, classes


def root_str(k, m):
    f = Fraction(k, m)
    k, m = f.numerator % f.denominator, f.denominator
    if k == 0:
        return "1"
    if m == 2:
        return "-1"
    if m == 4:
        return "i" if k == 1 else "-i"
    return f"z{m}" if k == 1 else f"z{m}^{k}"


def characters(elems, mult, e, order):
    """Irreducible characters of the subgroup `elems` as lists of value strings."""
    m = math.lcm(*[order(g) for g in elems])
    # generating set
    gens, span = [], {e}
    for g in elems:
        if g not in span:
            gens.append(g)
            span = set(span)
            frontier = list(span)
            while frontier:
                nxt = []
                for a in frontier:
                    for s in gens:
                        c = mult[a][s]
                        if c not in span:
                            span.add(c)
                            nxt.append(c)
                frontier = nxt
    linear = []
    for ks in itertools.product(range(m), repeat=len(gens)):
        val = {e: 0}
        frontier, ok = [e], True
        while frontier and ok:
            nxt = []
            for a in frontier:
                for s, k in zip(gens, ks):
                    c, v = mult[a][s], (val[a] + k) % m
                    if c in val:
                        if val[c] != v:
                            ok = False
                            break
                    else:
                        val[c] = v
                        nxt.append(c)
                if not ok:
                    break
            frontier = nxt
        if ok and len(val) == len(elems):
            linear.append([val[g] for g in elems])
    linear.sort(key=lambda row: (any(row), [Fraction(v, m) for v in row]))
    table = [[root_str(v, m) for v in row] for row in linear]
    rest = len(elems) - len(linear)
    if rest:
        d = math.isqrt(rest)
        assert d * d == rest, "more than one nonlinear irrep"
        values = []
        for j, g in enumerate(elems):
            reg = len(elems) if g == e else 0
            s = sum(cmath.exp(2j * cmath.pi * row[j] / m) for row in linear)
            v = (reg - s) / d
            r = round(v.real)
            assert abs(v - r) < 1e-9, "nonintegral complement character"
            values.append(str(r))
        table.append(values)
    return table


def build():
    catalog = {"version": VERSION, "groups": []}
    for name, (names, mult) in groups().items():
        e, inv, order, classes = analyse(names, mult)
        cents = []
        for ci, cls in enumerate(classes):
            a = cls[0]
            cent = [g for g in range(len(names)) if mult[g][a] == mult[a][g]]
            cent.sort(key=lambda g: (g != e, g))
            chars = characters(cent, mult, e, order)
            cents.append({
                "class": ci,
                "rep": a,
                "elements": cent,
                "characters": [{"name": f"chi{k}", "values": row} for k, row in enumerate(chars)],
            })
        catalog["groups"].append({
            "name": name,
            "elements": names,
            "mult": mult,
            "classes": [{"name": names[c[0]], "elements": c} for c in classes],
            "centralizers": cents,
        })
    return catalog


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "group_catalog.json"))
    args = ap.parse_args()
    Path(args.out).write_text(json.dumps(build(), indent=1) + "\n")


if __name__ == "__main__":
    main()
