"""Regenerates data/golden/*.sys with SymPy, independently of this library.

    python3 tools/golden/make_golden.py

Each output holds the reduced Groebner basis over Z_32003 under grevlex
with the first variable most main; coefficients are in [0, p).
"""
import pathlib

import sympy
from sympy import Poly, groebner, symbols

P = 32003
OUT = pathlib.Path(__file__).resolve().parents[2] / "data" / "golden"


def cyclic(k):
    xs = symbols(" ".join(f"x{i + 1}" for i in range(k)))
    polys = []
    for d in range(1, k):
        polys.append(sum(sympy.prod(xs[(i + j) % k] for j in range(d)) for i in range(k)))
    polys.append(sympy.prod(xs) - 1)
    return xs, polys


def katsura(k):
    us = symbols(" ".join(f"u{i}" for i in range(k)))
    top = k - 1
    polys = [us[0] + 2 * sum(us[1:]) - 1]
    for m in range(top):
        q = -us[m]
        for l in range(-top, top + 1):
            a, b = abs(l), abs(m - l)
            if a <= top and b <= top:
                q += us[a] * us[b]
        polys.append(sympy.expand(q))
    return us, polys


def term_text(coeff, monom, names):
    factors = [str(coeff)] if coeff != 1 or not any(monom) else []
    for name, e in zip(names, monom):
        if e:
            factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors)


def write(name, gens, polys):
    g = groebner(polys, *gens, modulus=P, order="grevlex")
    names = [str(v) for v in gens]
    lines = [
        f"name: {name} reduced basis",
        f"provenance: sympy {sympy.__version__}, groebner(..., modulus={P}, order='grevlex'), "
        "via tools/golden/make_golden.py",
        "vars: " + " ".join(names),
    ]
    for f in g.exprs:
        p = Poly(f, *gens, modulus=P)
        terms = [term_text(int(c) % P, m, names) for m, c in p.terms(order="grevlex")]
        lines.append("poly: " + " + ".join(terms))
    (OUT / f"{name}.sys").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    write("cyclic3", *cyclic(3))
    write("cyclic4", *cyclic(4))
    write("katsura4", *katsura(4))
