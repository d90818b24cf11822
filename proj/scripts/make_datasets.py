#!/usr/bin/env python3
"""Generate the bundled JSON datasets in data/ and the fault fixtures in
tests/fixtures/.

Constructions:
  fibonacci    golden-ratio fusion ring {1, t | t^2 = 1 + t}, ring only.
  vec_z2       group ring Z[Z/2] with its Drinfeld double D(Z/2) as center
               (toric-code modular data), trivial grading.
  vec_z3       group ring Z[Z/3] with D(Z/3) = Z[Z/3 x Z/3] as center.
  rep_s3       character ring of S_3 with D(S_3) as center; the double's
               S-matrix is computed from conjugacy classes and centralizer
               characters, fusion rules via the Verlinde formula, and the
               forgetful map via induced characters.
  ising_graded Z/2-graded Ising ring {1, eps | sigma} with its 6-element
               graded center (toric code in grade 0, two simples in grade 1)
               and the e<->m swap automorphism.

Fault fixtures corrupt ising_graded: a wrong zeta row, and a Phi that
violates the crossed commutation relation.
"""

import itertools
import json
import os
from fractions import Fraction

import sympy as sp

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA = os.path.join(ROOT, "data")
FIXTURES = os.path.join(ROOT, "tests", "fixtures")

W = sp.exp(2 * sp.pi * sp.I / 3)  # primitive cube root of unity


def scalar_str(z):
    """Render an element of Q(zeta_3) as a GAP-style string."""
    z = sp.expand_complex(sp.expand(z))
    # solve z = x + y*W for rational x, y
    y = sp.simplify(sp.im(z) / sp.im(W))
    x = sp.simplify(sp.re(z) - y * sp.re(W))
    x, y = sp.nsimplify(x, rational=True), sp.nsimplify(y, rational=True)
    assert x.is_rational and y.is_rational, z
    assert sp.simplify(sp.expand_complex(x + y * W - z)) == 0, z

    def rat(q):
        q = sp.Rational(q)
        return f"{q.p}" if q.q == 1 else f"{q.p}/{q.q}"

    if y == 0:
        return rat(x)
    terms = []
    if x != 0:
        terms.append(rat(x))
    coeff = "" if y == 1 else ("-" if y == -1 else rat(y) + "*")
    term = coeff + "E(3)"
    if terms and not term.startswith("-"):
        terms.append("+" + term)
    else:
        terms.append(term)
    return "".join(terms)


def ring_json(labels, grades, unit, dual, constants):
    return {
        "basis": [{"label": l, "grade": g} for l, g in zip(labels, grades)],
        "unit": unit,
        "dual": {labels[i]: labels[j] for i, j in enumerate(dual)},
        "constants": sorted([i, j, k, n] for (i, j, k), n in constants.items() if n),
    }


def group_ring(labels, mul, inv):
    """Structure constants of a group ring from a multiplication table."""
    idx = {l: i for i, l in enumerate(labels)}
    constants = {}
    for a in labels:
        for b in labels:
            constants[(idx[a], idx[b], idx[mul(a, b)])] = 1
    dual = [idx[inv(l)] for l in labels]
    return constants, dual


def write(path, obj):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")
    print("wrote", path)


# ---------------------------------------------------------------------------
# fibonacci (ring only)

def fibonacci():
    return {
        "name": "fibonacci",
        "description": "Fibonacci fusion ring {1, t} with t*t = 1 + t.",
        "grading_order": 1,
        "ring_D": ring_json(
            ["1", "t"], [0, 0], ["1"], [0, 1],
            {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1, (1, 1, 1): 1},
        ),
    }


# ---------------------------------------------------------------------------
# vec_z2: Z[Z/2] with D(Z/2) (toric code) as center

def vec_z2():
    d_constants, d_dual = group_ring(
        ["1", "g"], lambda a, b: "1" if a == b else "g", lambda a: a)
    z_labels = ["1", "e", "m", "f"]
    table = {  # Z/2 x Z/2 written multiplicatively
        ("1", x): x for x in z_labels
    }
    pairs = {("e", "e"): "1", ("m", "m"): "1", ("f", "f"): "1",
             ("e", "m"): "f", ("e", "f"): "m", ("m", "f"): "e"}
    def zmul(a, b):
        if a == "1":
            return b
        if b == "1":
            return a
        if a == b:
            return "1"
        return pairs.get((a, b), pairs.get((b, a)))
    z_constants, z_dual = group_ring(z_labels, zmul, lambda a: a)
    smat = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
    return {
        "name": "vec_z2",
        "description": "Group ring Z[Z/2], trivial grading, with the "
                       "Drinfeld double D(Z/2) (toric-code modular data) as "
                       "center; zeta forgets the character coordinate.",
        "grading_order": 1,
        "ring_D": ring_json(["1", "g"], [0, 0], ["1"], d_dual, d_constants),
        "ring_Z": ring_json(z_labels, [0] * 4, ["1"], z_dual, z_constants),
        "zeta": [[1, 0], [1, 0], [0, 1], [0, 1]],
        "phi": {l: l for l in z_labels},
        "smatrix": {
            "entries": [[str(v) for v in row] for row in smat],
            "dims": ["1", "1", "1", "1"],
        },
    }


# ---------------------------------------------------------------------------
# vec_z3: Z[Z/3] with D(Z/3) = Z[Z/3 x Z/3]

def vec_z3():
    d_labels = ["1", "g", "g2"]
    d_constants, d_dual = group_ring(
        d_labels,
        lambda a, b: d_labels[(d_labels.index(a) + d_labels.index(b)) % 3],
        lambda a: d_labels[(-d_labels.index(a)) % 3],
    )
    z_labels = [f"a{a}c{j}" for a in range(3) for j in range(3)]
    idx = {l: i for i, l in enumerate(z_labels)}
    z_constants = {}
    for a, j, b, k in itertools.product(range(3), repeat=4):
        z_constants[(idx[f"a{a}c{j}"], idx[f"a{b}c{k}"],
                     idx[f"a{(a+b)%3}c{(j+k)%3}"])] = 1
    z_dual = [idx[f"a{(-a)%3}c{(-j)%3}"] for a in range(3) for j in range(3)]
    zeta = [[1 if c == a else 0 for c in range(3)]
            for a in range(3) for _ in range(3)]
    entries = [[scalar_str(W ** ((a * k + b * j) % 3))
                for b in range(3) for k in range(3)]
               for a in range(3) for j in range(3)]
    return {
        "name": "vec_z3",
        "description": "Group ring Z[Z/3], trivial grading, with "
                       "D(Z/3) = Z[Z/3 x Z/3] as center; basis a{i}c{j} is "
                       "(group element g^i, character g -> E(3)^j); "
                       "S_{(a,j),(b,k)} = E(3)^(ak+bj).",
        "grading_order": 1,
        "ring_D": ring_json(d_labels, [0] * 3, ["1"], d_dual, d_constants),
        "ring_Z": ring_json(z_labels, [0] * 9, ["a0c0"], z_dual, z_constants),
        "zeta": zeta,
        "phi": {l: l for l in z_labels},
        "smatrix": {"entries": entries, "dims": ["1"] * 9},
    }


# ---------------------------------------------------------------------------
# rep_s3: character ring of S_3 with the Drinfeld double D(S_3)

def s3_elements():
    return list(itertools.permutations(range(3)))


def compose(p, q):  # (p*q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(3))


def inverse(p):
    out = [0] * 3
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def rep_s3():
    G = s3_elements()
    e = (0, 1, 2)
    t = (1, 0, 2)          # transposition
    c = (1, 2, 0)          # 3-cycle
    c2 = compose(c, c)

    def centralizer(a):
        return [g for g in G if compose(g, a) == compose(a, g)]

    def sign(p):
        s = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if p[i] > p[j]:
                    s = -s
        return s

    def std_char(p):  # 2-dim irrep of S_3: fixed points - 1
        return sum(1 for i in range(3) if p[i] == i) - 1

    # simples: (label, class representative, character function on C(rep))
    def z3_char(k):
        def chi(g):
            s = 0
            x = e
            while x != g:
                x = compose(c, x)
                s += 1
            return W ** (k * s)
        return chi

    simples = [
        ("e.1",    e, lambda g: sp.Integer(1)),
        ("e.sgn",  e, lambda g: sp.Integer(sign(g))),
        ("e.std",  e, lambda g: sp.Integer(std_char(g))),
        ("t.plus", t, lambda g: sp.Integer(1)),
        ("t.minus", t, lambda g: sp.Integer(1 if g == e else -1)),
        ("r.1",    c, z3_char(0)),
        ("r.w",    c, z3_char(1)),
        ("r.w2",   c, z3_char(2)),
    ]
    labels = [s[0] for s in simples]
    n = len(simples)
    order = len(G)

    def conj(g, x):
        return compose(compose(g, x), inverse(g))

    # unnormalized S-matrix of D(G)
    S = sp.zeros(n, n)
    for i, (_, a, chi_a) in enumerate(simples):
        ca = len(centralizer(a))
        for j, (_, b, chi_b) in enumerate(simples):
            cb = len(centralizer(b))
            acc = sp.Integer(0)
            for g in G:
                gbg = conj(g, b)
                if compose(a, gbg) == compose(gbg, a):
                    acc += sp.conjugate(chi_a(gbg)) * sp.conjugate(chi_b(conj(inverse(g), a)))
            S[i, j] = sp.simplify(sp.Rational(order, ca * cb) * acc)

    dims = [sp.simplify(S[0, j]) for j in range(n)]
    total = sum(d * d for d in dims)
    assert total == order ** 2
    assert sp.simplify(sp.expand_complex(S - S.T)) == sp.zeros(n, n)
    assert sp.simplify(sp.expand_complex(S * S.conjugate() - total * sp.eye(n))) == sp.zeros(n, n)

    # fusion rules via the Verlinde formula with s = S / |G|
    s = S / order
    constants = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = sum(s[i, x] * s[j, x] * sp.conjugate(s[k, x]) / s[0, x]
                          for x in range(n))
                acc = sp.nsimplify(sp.simplify(sp.expand_complex(acc)))
                assert acc.is_integer and acc >= 0, (i, j, k, acc)
                if acc != 0:
                    constants[(i, j, k)] = int(acc)
    dual = [next(k for k in range(n) if constants.get((i, k, 0), 0) == 1)
            for i in range(n)]

    # forgetful map: induced characters decomposed over Rep(S_3) = {1, s, v}
    s3_irreps = [lambda g: 1, sign, std_char]
    zeta = []
    for _, a, chi_a in simples:
        cent = centralizer(a)
        # character of Ind_{C(a)}^G chi_a
        def ind(g, a=a, chi_a=chi_a, cent=cent):
            return sp.Rational(1, len(cent)) * sum(
                chi_a(conj(inverse(x), g)) for x in G if conj(inverse(x), g) in cent)
        row = []
        for irr in s3_irreps:
            mult = sp.Rational(1, order) * sum(
                ind(g) * sp.conjugate(sp.Integer(irr(g))) for g in G)
            mult = sp.nsimplify(sp.simplify(mult))
            assert mult.is_integer and mult >= 0
            row.append(int(mult))
        zeta.append(row)

    d_labels = ["1", "s", "v"]
    d_constants = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (0, 2, 2): 1,
                   (2, 0, 2): 1, (1, 1, 0): 1, (1, 2, 2): 1, (2, 1, 2): 1,
                   (2, 2, 0): 1, (2, 2, 1): 1, (2, 2, 2): 1}
    return {
        "name": "rep_s3",
        "description": "Character ring of S_3 ({1, s, v}: sign and standard "
                       "representations), trivial grading, with the Drinfeld "
                       "double D(S_3) as center. The double's S-matrix comes "
                       "from centralizer characters, its fusion rules from "
                       "the Verlinde formula, and zeta from induced "
                       "characters (see scripts/make_datasets.py).",
        "grading_order": 1,
        "ring_D": ring_json(d_labels, [0] * 3, ["1"], [0, 1, 2], d_constants),
        "ring_Z": ring_json(labels, [0] * n, ["e.1"], dual, constants),
        "zeta": zeta,
        "phi": {l: l for l in labels},
        "smatrix": {
            "entries": [[scalar_str(S[i, j]) for j in range(n)] for i in range(n)],
            "dims": [scalar_str(d) for d in dims],
        },
    }


# ---------------------------------------------------------------------------
# ising_graded: Z/2-graded Ising ring with its graded center

def ising_graded(phi_swap=("e", "m"), zeta_x1=None):
    d_labels = ["1", "eps", "sigma"]
    d_constants = {
        (0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1,
        (0, 2, 2): 1, (2, 0, 2): 1, (1, 2, 2): 1, (2, 1, 2): 1,
        (2, 2, 0): 1, (2, 2, 1): 1,
    }
    z_labels = ["1", "e", "m", "f", "X1", "X2"]
    zi = {l: i for i, l in enumerate(z_labels)}
    z_constants = {}
    toric = {("e", "e"): "1", ("m", "m"): "1", ("f", "f"): "1",
             ("e", "m"): "f", ("m", "e"): "f", ("e", "f"): "m",
             ("f", "e"): "m", ("m", "f"): "e", ("f", "m"): "e"}
    for a in ["1", "e", "m", "f"]:
        for b in ["1", "e", "m", "f"]:
            prod = b if a == "1" else (a if b == "1" else ("1" if a == b else toric[(a, b)]))
            z_constants[(zi[a], zi[b], zi[prod])] = 1
    # grade-0 action on X1, X2: e and m swap them, f fixes them
    action = {"1": {"X1": "X1", "X2": "X2"}, "e": {"X1": "X2", "X2": "X1"},
              "m": {"X1": "X2", "X2": "X1"}, "f": {"X1": "X1", "X2": "X2"}}
    for a in ["1", "e", "m", "f"]:
        for x in ["X1", "X2"]:
            z_constants[(zi[a], zi[x], zi[action[a][x]])] = 1
            z_constants[(zi[x], zi[a], zi[action[a][x]])] = 1
    # grade-1 products: Xi*Xi = 1 + f, X1*X2 = X2*X1 = e + m
    for x in ["X1", "X2"]:
        z_constants[(zi[x], zi[x], zi["1"])] = 1
        z_constants[(zi[x], zi[x], zi["f"])] = 1
    for x, y in [("X1", "X2"), ("X2", "X1")]:
        z_constants[(zi[x], zi[y], zi["e"])] = 1
        z_constants[(zi[x], zi[y], zi["m"])] = 1

    phi = {l: l for l in z_labels[:4]}
    a, b = phi_swap
    phi[a], phi[b] = b, a
    zeta = [[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 1, 0],
            zeta_x1 or [0, 0, 1], [0, 0, 1]]
    smat = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
    return {
        "name": "ising_graded",
        "description": "Z/2-graded Ising fusion ring {1, eps | sigma} with "
                       "its graded center: toric code in grade 0, two "
                       "simples X1, X2 in grade 1 swapped by e and m, and "
                       "the e<->m swap as Phi.",
        "grading_order": 2,
        "ring_D": ring_json(d_labels, [0, 0, 1], ["1"], [0, 1, 2], d_constants),
        "ring_Z": ring_json(z_labels, [0, 0, 0, 0, 1, 1], ["1"],
                            [0, 1, 2, 3, 4, 5], z_constants),
        "zeta": zeta,
        "phi": phi,
        "smatrix": {
            "entries": [[str(v) for v in row] for row in smat],
            "dims": ["1", "1", "1", "1"],
        },
    }


def main():
    write(os.path.join(DATA, "fibonacci.json"), fibonacci())
    write(os.path.join(DATA, "vec_z2.json"), vec_z2())
    write(os.path.join(DATA, "vec_z3.json"), vec_z3())
    write(os.path.join(DATA, "rep_s3.json"), rep_s3())
    write(os.path.join(DATA, "ising_graded.json"), ising_graded())

    bad_zeta = ising_graded(zeta_x1=[0, 0, 2])
    bad_zeta["name"] = "ising_bad_zeta"
    bad_zeta["description"] = "Fault fixture: ising_graded with zeta(X1) corrupted to 2*sigma."
    write(os.path.join(FIXTURES, "ising_bad_zeta.json"), bad_zeta)

    bad_phi = ising_graded(phi_swap=("e", "f"))
    bad_phi["name"] = "ising_bad_phi"
    bad_phi["description"] = "Fault fixture: ising_graded with Phi swapping e and f, violating the crossed relation."
    write(os.path.join(FIXTURES, "ising_bad_phi.json"), bad_phi)


if __name__ == "__main__":
    main()
