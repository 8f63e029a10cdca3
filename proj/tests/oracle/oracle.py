#!/usr/bin/env python3
"""Brute-force reference evaluator used to derive the frozen values in the C++ tests.

Everything here is written directly from the defining identities over plain
dense nested lists of Fractions. It shares no code with the library. Run it
and compare its printout with the constants hard-coded in tests/*.cpp.
"""
from fractions import Fraction as F
from itertools import product


def zeros(n):
    return [F(0)] * n


def add(*vs):
    out = zeros(len(vs[0]))
    for v in vs:
        out = [a + b for a, b in zip(out, v)]
    return out


def scale(c, v):
    return [c * a for a in v]


def neg(v):
    return scale(F(-1), v)


def sub(a, b):
    return add(a, neg(b))


def unit(n, i):
    v = zeros(n)
    v[i] = F(1)
    return v


def is_zero(v):
    return all(a == 0 for a in v)


def supp(v):
    return [i for i, a in enumerate(v) if a]


class LY:
    def __init__(self, n, binary=None, ternary=None):
        self.n = n
        self.b = [[zeros(n) for _ in range(n)] for _ in range(n)]
        self.t = [[[zeros(n) for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for (i, j), v in (binary or {}).items():
            self.b[i][j] = list(map(F, v))
            self.b[j][i] = neg(self.b[i][j])
        for (i, j, k), v in (ternary or {}).items():
            self.t[i][j][k] = list(map(F, v))
            self.t[j][i][k] = neg(self.t[i][j][k])

    def br(self, x, y):
        out = zeros(self.n)
        for i in supp(x):
            for j in supp(y):
                out = add(out, scale(x[i] * y[j], self.b[i][j]))
        return out

    def tr(self, x, y, z):
        out = zeros(self.n)
        for i in supp(x):
            for j in supp(y):
                for k in supp(z):
                    out = add(out, scale(x[i] * y[j] * z[k], self.t[i][j][k]))
        return out


def ly_violations(A):
    n = A.n
    e = [unit(n, i) for i in range(n)]
    br, tr = A.br, A.tr
    out = []
    for x, y, z in product(range(n), repeat=3):
        X, Y, Z = e[x], e[y], e[z]
        r = add(br(br(X, Y), Z), br(br(Y, Z), X), br(br(Z, X), Y),
                tr(X, Y, Z), tr(Y, Z, X), tr(Z, X, Y))
        if not is_zero(r):
            out.append(("jacobi", (x, y, z), r, zeros(n)))
    for x, y, z, w in product(range(n), repeat=4):
        X, Y, Z, W = e[x], e[y], e[z], e[w]
        r = add(tr(br(X, Y), Z, W), tr(br(Y, Z), X, W), tr(br(Z, X), Y, W))
        if not is_zero(r):
            out.append(("ternary-jacobi", (x, y, z, w), r, zeros(n)))
        lhs = tr(X, Y, br(Z, W))
        rhs = add(br(tr(X, Y, Z), W), br(Z, tr(X, Y, W)))
        if lhs != rhs:
            out.append(("derivation", (x, y, z, w), lhs, rhs))
    for x, y, z, w, t in product(range(n), repeat=5):
        X, Y, Z, W, T = e[x], e[y], e[z], e[w], e[t]
        lhs = tr(X, Y, tr(Z, W, T))
        rhs = add(tr(tr(X, Y, Z), W, T), tr(Z, tr(X, Y, W), T), tr(Z, W, tr(X, Y, T)))
        if lhs != rhs:
            out.append(("fundamental", (x, y, z, w, t), lhs, rhs))
    return out


# ---- matrices as lists of rows ----
def mzero(r, c):
    return [[F(0)] * c for _ in range(r)]


def mmul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), F(0)) for j in range(len(B[0]))]
            for i in range(len(A))]


def madd(*Ms):
    out = mzero(len(Ms[0]), len(Ms[0][0]))
    for M in Ms:
        out = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(out, M)]
    return out


def mscale(c, M):
    return [[c * a for a in r] for r in M]


def mneg(M):
    return mscale(F(-1), M)


def mT(M):
    return [list(r) for r in zip(*M)]


def mapply(M, v):
    return [sum((M[i][k] * v[k] for k in range(len(v))), F(0)) for i in range(len(M))]


def comm(A, B):
    return madd(mmul(A, B), mneg(mmul(B, A)))


def from_columns(cols):
    return mT(cols)


class Rep:
    def __init__(self, A, m, rho, mu):
        self.A, self.m, self.rho_b, self.mu_b = A, m, rho, mu

    def rho(self, x):
        out = mzero(self.m, self.m)
        for i, c in enumerate(x):
            if c:
                out = madd(out, mscale(c, self.rho_b[i]))
        return out

    def mu(self, x, y):
        out = mzero(self.m, self.m)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                if a * b:
                    out = madd(out, mscale(a * b, self.mu_b[i][j]))
        return out

    def D(self, x, y):
        return madd(self.mu(y, x), mneg(self.mu(x, y)), comm(self.rho(x), self.rho(y)),
                    mneg(self.rho(self.A.br(x, y))))


def adjoint(A):
    n = A.n
    e = [unit(n, i) for i in range(n)]
    rho = [from_columns([A.br(e[i], e[k]) for k in range(n)]) for i in range(n)]
    mu = [[from_columns([A.tr(e[k], e[i], e[j]) for k in range(n)]) for j in range(n)] for i in range(n)]
    return Rep(A, n, rho, mu)


def dual(R):
    n = R.A.n
    rho = [mneg(mT(R.rho_b[i])) for i in range(n)]
    mu = [[mT(R.mu_b[j][i]) for j in range(n)] for i in range(n)]
    return Rep(R.A, R.m, rho, mu)


def rep_violations(R):
    A, n = R.A, R.A.n
    e = [unit(n, i) for i in range(n)]
    out = []
    for x, y, z in product(range(n), repeat=3):
        X, Y, Z = e[x], e[y], e[z]
        r = madd(R.mu(A.br(X, Y), Z), mneg(mmul(R.mu(X, Z), R.rho(Y))), mmul(R.mu(Y, Z), R.rho(X)))
        if any(any(r_) for r_ in r):
            out.append(("mu-bracket-first", (x, y, z)))
        r = madd(R.mu(X, A.br(Y, Z)), mneg(mmul(R.rho(Y), R.mu(X, Z))), mmul(R.rho(Z), R.mu(X, Y)))
        if any(any(r_) for r_ in r):
            out.append(("mu-bracket-second", (x, y, z)))
        if R.rho(A.tr(X, Y, Z)) != comm(R.D(X, Y), R.rho(Z)):
            out.append(("rho-ternary", (x, y, z)))
    for x, y, z, w in product(range(n), repeat=4):
        X, Y, Z, W = e[x], e[y], e[z], e[w]
        r = madd(mmul(R.mu(Z, W), R.mu(X, Y)), mneg(mmul(R.mu(Y, W), R.mu(X, Z))),
                 mneg(R.mu(X, A.tr(Y, Z, W))), mmul(R.D(Y, Z), R.mu(X, W)))
        if any(any(r_) for r_ in r):
            out.append(("mu-quadratic", (x, y, z, w)))
        if madd(R.mu(A.tr(X, Y, Z), W), R.mu(Z, A.tr(X, Y, W))) != comm(R.D(X, Y), R.mu(Z, W)):
            out.append(("mu-ternary", (x, y, z, w)))
    return sorted(out)


def derived_violations(R):
    A, n = R.A, R.A.n
    e = [unit(n, i) for i in range(n)]
    out = []
    for x, y, z in product(range(n), repeat=3):
        X, Y, Z = e[x], e[y], e[z]
        r = madd(R.D(A.br(X, Y), Z), R.D(A.br(Y, Z), X), R.D(A.br(Z, X), Y))
        if any(any(r_) for r_ in r):
            out.append(("d-cyclic", (x, y, z)))
    for x, y, z, w in product(range(n), repeat=4):
        X, Y, Z, W = e[x], e[y], e[z], e[w]
        if madd(R.D(A.tr(X, Y, Z), W), R.D(Z, A.tr(X, Y, W))) != comm(R.D(X, Y), R.D(Z, W)):
            out.append(("d-derivation", (x, y, z, w)))
        rhs = madd(mmul(R.mu(X, W), R.mu(Z, Y)), mneg(mmul(R.mu(Y, W), R.mu(Z, X))),
                   mneg(mmul(R.mu(Z, W), R.D(X, Y))))
        if R.mu(A.tr(X, Y, Z), W) != rhs:
            out.append(("mu-ternary-expanded", (x, y, z, w)))
    return out


class PreLY:
    def __init__(self, n, star=None, braces=None):
        self.n = n
        self.s = [[zeros(n) for _ in range(n)] for _ in range(n)]
        self.a = [[[zeros(n) for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for (i, j), v in (star or {}).items():
            self.s[i][j] = list(map(F, v))
        for (i, j, k), v in (braces or {}).items():
            self.a[i][j][k] = list(map(F, v))

    def st(self, x, y):
        out = zeros(self.n)
        for i in supp(x):
            for j in supp(y):
                out = add(out, scale(x[i] * y[j], self.s[i][j]))
        return out

    def bc(self, x, y, z):
        out = zeros(self.n)
        for i in supp(x):
            for j in supp(y):
                for k in supp(z):
                    out = add(out, scale(x[i] * y[j] * z[k], self.a[i][j][k]))
        return out

    def assoc(self, x, y, z):
        return sub(self.st(self.st(x, y), z), self.st(x, self.st(y, z)))

    def bD(self, x, y, z):
        return add(self.bc(z, y, x), neg(self.bc(z, x, y)), self.assoc(y, x, z), neg(self.assoc(x, y, z)))

    def cm(self, x, y):
        return sub(self.st(x, y), self.st(y, x))

    def trC(self, x, y, z):
        return add(self.bD(x, y, z), self.bc(x, y, z), neg(self.bc(y, x, z)))


def pre_violations(P):
    n = P.n
    e = [unit(n, i) for i in range(n)]
    st, bc, bD, cm = P.st, P.bc, P.bD, P.cm
    out = []
    for x, y, z, w in product(range(n), repeat=4):
        X, Y, Z, W = e[x], e[y], e[z], e[w]
        r = add(bc(Z, cm(X, Y), W), neg(bc(st(Y, Z), X, W)), bc(st(X, Z), Y, W))
        if not is_zero(r):
            out.append(("pre-a", (x, y, z, w)))
        if bc(X, Y, cm(Z, W)) != sub(st(Z, bc(X, Y, W)), st(W, bc(X, Y, Z))):
            out.append(("pre-b", (x, y, z, w)))
        lhs = add(st(bD(X, Y, Z), W), st(bc(X, Y, Z), W), neg(st(bc(Y, X, Z), W)))
        rhs = sub(bD(X, Y, st(Z, W)), st(Z, bD(X, Y, W)))
        if lhs != rhs:
            out.append(("pre-e", (x, y, z, w)))
    for x, y, z, w, t in product(range(n), repeat=5):
        X, Y, Z, W, T = e[x], e[y], e[z], e[w], e[t]
        r = add(bc(bc(X, Y, Z), W, T), neg(bc(bc(X, Y, W), Z, T)), neg(bc(X, Y, bD(Z, W, T))),
                neg(bc(X, Y, bc(Z, W, T))), bc(X, Y, bc(W, Z, T)), bD(Z, W, bc(X, Y, T)))
        if not is_zero(r):
            out.append(("pre-c", (x, y, z, w, t)))
        lhs = add(bc(Z, bD(X, Y, W), T), bc(Z, bc(X, Y, W), T), neg(bc(Z, bc(Y, X, W), T)),
                  bc(Z, W, bD(X, Y, T)), bc(Z, W, bc(X, Y, T)), neg(bc(Z, W, bc(Y, X, T))))
        rhs = sub(bD(X, Y, bc(Z, W, T)), bc(bD(X, Y, Z), W, T))
        if lhs != rhs:
            out.append(("pre-d", (x, y, z, w, t)))
    return out


def pre_lemma_violations(P):
    n = P.n
    e = [unit(n, i) for i in range(n)]
    bc, bD, cm = P.bc, P.bD, P.cm
    out = []
    for x, y, z, w in product(range(n), repeat=4):
        X, Y, Z, W = e[x], e[y], e[z], e[w]
        if not is_zero(add(bD(cm(X, Y), Z, W), bD(cm(Y, Z), X, W), bD(cm(Z, X), Y, W))):
            out.append(("d-cyclic", (x, y, z, w)))
    for x, y, z, w, t in product(range(n), repeat=5):
        X, Y, Z, W, T = e[x], e[y], e[z], e[w], e[t]
        r = add(bD(X, Y, bD(Z, W, T)), neg(bD(bD(X, Y, Z), W, T)), neg(bD(bc(X, Y, Z), W, T)),
                bD(bc(Y, X, Z), W, T), neg(bD(Z, bD(X, Y, W), T)), neg(bD(Z, bc(X, Y, W), T)),
                bD(Z, bc(Y, X, W), T), neg(bD(Z, W, bD(X, Y, T))))
        if not is_zero(r):
            out.append(("d-fundamental", (x, y, z, w, t)))
    return out


def subadjacent(P):
    n = P.n
    e = [unit(n, i) for i in range(n)]
    A = LY(n)
    for i, j in product(range(n), repeat=2):
        A.b[i][j] = P.cm(e[i], e[j])
    for i, j, k in product(range(n), repeat=3):
        A.t[i][j][k] = P.trC(e[i], e[j], e[k])
    return A


def lr_rep(P):
    n = P.n
    e = [unit(n, i) for i in range(n)]
    rho = [from_columns([P.st(e[i], e[k]) for k in range(n)]) for i in range(n)]
    mu = [[from_columns([P.bc(e[k], e[i], e[j]) for k in range(n)]) for j in range(n)] for i in range(n)]
    return Rep(subadjacent(P), n, rho, mu)


def rbo_violations(R, T):
    A, m = R.A, R.m
    e = [unit(m, i) for i in range(m)]
    Tv = lambda v: mapply(T, v)
    out = []
    for u, v in product(range(m), repeat=2):
        U, V = e[u], e[v]
        lhs = A.br(Tv(U), Tv(V))
        rhs = Tv(sub(mapply(R.rho(Tv(U)), V), mapply(R.rho(Tv(V)), U)))
        if lhs != rhs:
            out.append(("binary", (u, v), lhs, rhs))
    for u, v, w in product(range(m), repeat=3):
        U, V, W = e[u], e[v], e[w]
        lhs = A.tr(Tv(U), Tv(V), Tv(W))
        inner = add(mapply(R.D(Tv(U), Tv(V)), W), mapply(R.mu(Tv(V), Tv(W)), U),
                    neg(mapply(R.mu(Tv(U), Tv(W)), V)))
        rhs = Tv(inner)
        if lhs != rhs:
            out.append(("ternary", (u, v, w), lhs, rhs))
    return out


def induced(R, T):
    m = R.m
    e = [unit(m, i) for i in range(m)]
    P = PreLY(m)
    for u, v in product(range(m), repeat=2):
        P.s[u][v] = mapply(R.rho(mapply(T, e[u])), e[v])
    for u, v, w in product(range(m), repeat=3):
        P.a[u][v][w] = mapply(R.mu(mapply(T, e[v]), mapply(T, e[w])), e[u])
    return P


def solve_square(M, b):
    n = len(M)
    A = [row[:] + [b[i]] for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c] / A[c][c]
                A[r] = [a - f * bb for a, bb in zip(A[r], A[c])]
    return [A[i][n] / A[i][i] for i in range(n)]


def omega_val(G, x, y):
    return sum((x[i] * G[i][j] * y[j] for i in range(len(x)) for j in range(len(y))), F(0))


def symplectic_violations(A, G):
    n = A.n
    e = [unit(n, i) for i in range(n)]
    w = lambda x, y: omega_val(G, x, y)
    out = []
    for x, y, z in product(range(n), repeat=3):
        X, Y, Z = e[x], e[y], e[z]
        if w(X, A.br(Y, Z)) + w(Y, A.br(Z, X)) + w(Z, A.br(X, Y)) != 0:
            out.append(("closed-binary", (x, y, z)))
    for x, y, z, q in product(range(n), repeat=4):
        X, Y, Z, W = e[x], e[y], e[z], e[q]
        s = (w(Z, A.tr(X, Y, W)) - w(X, A.tr(W, Z, Y)) + w(Y, A.tr(W, Z, X)) - w(W, A.tr(X, Y, Z)))
        if s != 0:
            out.append(("closed-ternary", (x, y, z, q)))
    return out


def compatible_from_symplectic(A, G):
    # omega(p, e_w) = rhs_w  <=>  (G^T p)_w = rhs_w
    n = A.n
    e = [unit(n, i) for i in range(n)]
    GT = mT(G)
    w = lambda x, y: omega_val(G, x, y)
    P = PreLY(n)
    for x, y in product(range(n), repeat=2):
        rhs = [-w(e[y], A.br(e[x], e[q])) for q in range(n)]
        P.s[x][y] = solve_square(GT, rhs)
    for x, y, z in product(range(n), repeat=3):
        rhs = [w(e[x], A.tr(e[q], e[z], e[y])) for q in range(n)]
        P.a[x][y][z] = solve_square(GT, rhs)
    return P


def semidirect(A, R):
    n, m = A.n, R.m
    N = n + m
    S = LY(N)
    E = [unit(N, i) for i in range(N)]
    def split(v):
        return v[:n], v[n:]
    for i, j in product(range(N), repeat=2):
        x, u = split(E[i])
        y, v = split(E[j])
        S.b[i][j] = A.br(x, y) + sub(mapply(R.rho(x), v), mapply(R.rho(y), u))
    for i, j, k in product(range(N), repeat=3):
        x, u = split(E[i])
        y, v = split(E[j])
        z, w = split(E[k])
        S.t[i][j][k] = A.tr(x, y, z) + add(mapply(R.D(x, y), w), mapply(R.mu(y, z), u),
                                           neg(mapply(R.mu(x, z), v)))
    return S


def canonical_omega(n):
    G = mzero(2 * n, 2 * n)
    for i in range(n):
        G[i][n + i] = F(-1)
        G[n + i][i] = F(1)
    return G


def tables(P, names=None):
    n = P.n
    rows = []
    for i, j in product(range(n), repeat=2):
        if not is_zero(P.s[i][j]):
            rows.append(f"  e{i+1}*e{j+1} = {fmt(P.s[i][j])}")
    for i, j, k in product(range(n), repeat=3):
        if not is_zero(P.a[i][j][k]):
            rows.append(f"  {{e{i+1},e{j+1},e{k+1}}} = {fmt(P.a[i][j][k])}")
    return "\n".join(rows) if rows else "  (zero)"


def ly_tables(A):
    n = A.n
    rows = []
    for i, j in product(range(n), repeat=2):
        if i < j and not is_zero(A.b[i][j]):
            rows.append(f"  [e{i+1},e{j+1}] = {fmt(A.b[i][j])}")
    for i, j, k in product(range(n), repeat=3):
        if i < j and not is_zero(A.t[i][j][k]):
            rows.append(f"  [[e{i+1},e{j+1},e{k+1}]] = {fmt(A.t[i][j][k])}")
    return "\n".join(rows) if rows else "  (zero)"


def fmt(v):
    return "(" + ", ".join(str(a) for a in v) + ")"


def ly2():
    return LY(2, {(0, 1): [1, 0]}, {(0, 1, 1): [1, 0]})


def ly4():
    return LY(4, {(0, 1): [0, 0, 0, 2]}, {(0, 1, 0): [0, 0, 0, 1]})


def pre2(a, b):
    a, b = F(a), F(b)
    return PreLY(2, {(1, 1): [a, 0], (1, 0): [-b, 0]},
                 {(0, 1, 1): [b * b, 0], (1, 1, 1): [-a * b, 0]})


def pre4(a):
    a = F(a)
    return PreLY(4, {(1, 1): [a, 0, 0, 0]}, {(1, 1, 1): [0, 0, 0, -a * a]})


def rbo_ly2_T(a, b):
    return [[F(0), F(a)], [F(0), F(b)]]


def rbo_ly4_T(a, b, c, d, e, f, g, h, k):
    return [[F(0), F(a), F(0), F(0)], [F(0)] * 4, [F(b), F(c), F(d), F(e)], [F(f), F(g), F(h), F(k)]]


def sl2():
    # h=e1, e=e2, f=e3 ; [h,e]=2e, [h,f]=-2f, [e,f]=h
    L = LY(3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]})
    e = [unit(3, i) for i in range(3)]
    for i, j, k in product(range(3), repeat=3):
        L.t[i][j][k] = L.br(L.br(e[i], e[j]), e[k])
    return L


def main():
    print("== ly_core ==")
    A = ly4()
    print("LY4 bracket2(e1+e2, e2) =", fmt(A.br([1, 1, 0, 0], unit(4, 1))))
    print("LY4 bracket3(e2,e1,e1) =", fmt(A.tr(unit(4, 1), unit(4, 0), unit(4, 0))))
    print("LY2 violations:", len(ly_violations(ly2())), " LY4 violations:", len(ly_violations(ly4())))
    bad = LY(2, {(0, 1): [1, 0]}, {(0, 1, 1): [0, 1]})
    vb = ly_violations(bad)
    counts = {}
    for v in vb:
        counts[v[0]] = counts.get(v[0], 0) + 1
    print("LY2 with [[e1,e2,e2]]=e2: violations per axiom", counts)
    for v in sorted(vb)[:3]:
        print("   ", v[0], tuple(i + 1 for i in v[1]), fmt(v[2]), fmt(v[3]))
    S = sl2()
    print("sl2-LY ternary constants:")
    print(ly_tables(S))
    print("sl2-LY violations:", len(ly_violations(S)))
    # homomorphism diag(1,2)
    A2 = ly2()
    phi = [[F(1), F(0)], [F(0), F(2)]]
    e = [unit(2, 0), unit(2, 1)]
    print("diag(1,2) binary at (e1,e2): lhs", fmt(mapply(phi, A2.br(e[0], e[1]))), "rhs",
          fmt(A2.br(mapply(phi, e[0]), mapply(phi, e[1]))))

    print("== rep ==")
    R = adjoint(A2)
    print("adjoint LY2: D(e1,e2) e2 =", fmt(mapply(R.D(e[0], e[1]), e[1])))
    print("ad_e2 =", R.rho_b[1], " mu(e2,e2) =", R.mu_b[1][1])
    print("adjoint LY2 violations:", rep_violations(R), derived_violations(R))
    R0 = Rep(A2, 2, R.rho_b, [[mzero(2, 2)] * 2 for _ in range(2)])
    print("adjoint LY2 with mu=0 violations:", rep_violations(R0))
    Rd = dual(R)
    print("coadjoint LY2 rho*(e2) =", Rd.rho_b[1])
    print("coadjoint LY2 violations:", rep_violations(Rd), derived_violations(Rd))
    R4 = adjoint(ly4())
    print("adjoint/coadjoint LY4 violations:", rep_violations(R4), derived_violations(R4),
          rep_violations(dual(R4)), derived_violations(dual(R4)))
    Sd = semidirect(A2, R)
    print("semidirect(LY2, ad): violations", len(ly_violations(Sd)))
    print(ly_tables(Sd))

    print("== quadratic ==")
    Sl = sl2()
    e3 = [unit(3, i) for i in range(3)]
    adm = adjoint(Sl)
    K = [[sum(mmul(adm.rho_b[i], adm.rho_b[j])[k][k] for k in range(3)) for j in range(3)] for i in range(3)]
    print("Killing gram of sl2:", K)

    def quad_viol(A, G):
        n = A.n
        ee = [unit(n, i) for i in range(n)]
        out = []
        for x, y, z in product(range(n), repeat=3):
            l = omega_val(G, A.br(ee[x], ee[y]), ee[z])
            r = -omega_val(G, ee[y], A.br(ee[x], ee[z]))
            if l != r:
                out.append(("invr1", (x + 1, y + 1, z + 1), l, r))
        for x, y, z, w in product(range(n), repeat=4):
            l = omega_val(G, A.tr(ee[x], ee[y], ee[z]), ee[w])
            r = omega_val(G, ee[x], A.tr(ee[w], ee[z], ee[y]))
            if l != r:
                out.append(("invr2", (x + 1, y + 1, z + 1, w + 1), l, r))
        return out
    print("sl2/Killing invariance violations:", quad_viol(Sl, K))
    I2 = [[F(1), F(0)], [F(0), F(1)]]
    print("LY2/identity violations:", [(a, b, str(c), str(d)) for a, b, c, d in quad_viol(A2, I2)])
    Kp = [row[:] for row in K]
    Kp[0][1] += 1
    # iso check on perturbed gram (B# = gram^T)
    Bs = mT(Kp)
    cad = dual(adm)
    bad_iso = []
    for i in range(3):
        if mmul(Bs, adm.rho_b[i]) != mmul(cad.rho_b[i], Bs):
            bad_iso.append(("rho", i + 1))
    for i, j in product(range(3), repeat=2):
        if mmul(Bs, adm.mu_b[i][j]) != mmul(cad.mu_b[i][j], Bs):
            bad_iso.append(("mu", i + 1, j + 1))
    print("sl2 perturbed gram iso violations:", bad_iso)
    Bs = mT(K)
    ok = all(mmul(Bs, adm.rho_b[i]) == mmul(cad.rho_b[i], Bs) for i in range(3)) and all(
        mmul(Bs, adm.mu_b[i][j]) == mmul(cad.mu_b[i][j], Bs) for i in range(3) for j in range(3))
    print("sl2 Killing iso holds:", ok)

    print("== pre_ly ==")
    for a, b in [(1, 1), (2, 3), (-1, 5), (F(5, 3), 2), (0, 0)]:
        P = pre2(a, b)
        print(f"pre2(a={a},b={b}) axioms:", len(pre_violations(P)), "lemma:", len(pre_lemma_violations(P)))
    for a in [1, 2, -1, F(5, 3)]:
        P = pre4(a)
        print(f"pre4(a={a}) axioms:", len(pre_violations(P)), "lemma:", len(pre_lemma_violations(P)))
    P = pre2(1, 1)
    print("pre2(1,1) associator(e2,e1,e2) =", fmt(P.assoc(unit(2, 1), unit(2, 0), unit(2, 1))))
    print("pre2(1,1) braces_D(e1,e2,e2) =", fmt(P.bD(unit(2, 0), unit(2, 1), unit(2, 1))))
    print("subadjacent(pre2(1,1)):\n" + ly_tables(subadjacent(P)))
    print("subadjacent(pre2(2,3)):\n" + ly_tables(subadjacent(pre2(2, 3))))
    print("subadjacent(pre4(1)):\n" + ly_tables(subadjacent(pre4(1))))
    L = lr_rep(P)
    print("lr pre2(1,1): L_e2 =", L.rho_b[1], "rep violations", rep_violations(L))
    print("Id is RBO for lr(pre2(1,1)):", rbo_violations(L, [[F(1), F(0)], [F(0), F(1)]]))
    L4 = lr_rep(pre4(1))
    print("lr pre4(1) rep violations", rep_violations(L4),
          "Id RBO:", rbo_violations(L4, [[F(int(i == j)) for j in range(4)] for i in range(4)]))

    print("== rbo ==")
    for a, b in [(1, 1), (2, 3), (-1, 5)]:
        print(f"rbo_ly2 ({a},{b}) RBO violations:", rbo_violations(adjoint(ly2()), rbo_ly2_T(a, b)))
    for params in [(1, 2, 3, 4, 5, 6, 7, 8, 9), (-1, F(1, 2), 0, 3, -2, F(7, 3), 1, -4, 5),
                   (2, -3, F(5, 3), 0, 1, 1, -1, F(1, 4), 6)]:
        print(f"rbo_ly4 {params} RBO violations:", rbo_violations(adjoint(ly4()), rbo_ly4_T(*params)))
    v = rbo_violations(adjoint(ly2()), [[F(1), F(0)], [F(0), F(1)]])
    print("identity on LY2 violations:", [(a, tuple(i + 1 for i in b), fmt(c), fmt(d)) for a, b, c, d in v])
    Pi = induced(adjoint(ly2()), rbo_ly2_T(2, 3))
    print("induced(LY2, ad, 2, 3):\n" + tables(Pi))
    print("   axioms", len(pre_violations(Pi)), "lemma", len(pre_lemma_violations(Pi)))
    Pi = induced(adjoint(ly2()), rbo_ly2_T(1, 1))
    print("subadjacent(induced(LY2, ad, 1, 1)):\n" + ly_tables(subadjacent(Pi)))
    Pe = induced(adjoint(ly4()), rbo_ly4_T(1, 2, 3, 4, 5, 6, 7, 8, 9))
    print("induced(LY4, ad, rbo_ly4 1..9):\n" + tables(Pe))
    print("   axioms", len(pre_violations(Pe)))

    print("== symplectic ==")
    G = [[F(0), F(1)], [F(-1), F(0)]]
    print("LY2/omega12=1 symplectic violations:", symplectic_violations(ly2(), G))
    print("LY2/omega12=5 symplectic violations:",
          symplectic_violations(ly2(), [[F(0), F(5)], [F(-5), F(0)]]))
    T = [[F(0), F(1)], [F(-1), F(0)]]  # inverse of G^T (pairing convention)
    print("rbo(coadjoint LY2, T) violations:", rbo_violations(dual(adjoint(ly2())), T))
    bad = LY(2, {(0, 1): [1, 0]}, {(0, 1, 1): [0, 1]})
    print("perturbed LY2: symplectic", symplectic_violations(bad, G), "rbo",
          [(a, b) for a, b, _, _ in rbo_violations(dual(adjoint(bad)), T)])
    Pc = compatible_from_symplectic(ly2(), G)
    print("compatible pre-LY of (LY2, omega):\n" + tables(Pc))
    print("   axioms", len(pre_violations(Pc)), "lemma", len(pre_lemma_violations(Pc)))
    print("   subadjacent:\n" + ly_tables(subadjacent(Pc)))

    print("== phase space ==")
    for name, P in [("pre2(1,1)", pre2(1, 1)), ("pre4(1)", pre4(1)), ("zero2", PreLY(2))]:
        h = subadjacent(P)
        tot = semidirect(h, dual(lr_rep(P)))
        n = P.n
        G = canonical_omega(n)
        print(name, "total LY violations", len(ly_violations(tot)),
              "symplectic violations", len(symplectic_violations(tot, G)))
        Q = compatible_from_symplectic(tot, G)
        restr = all(Q.s[i][j][:n] == P.s[i][j] and not any(Q.s[i][j][n:]) for i in range(n) for j in range(n))
        restr = restr and all(Q.a[i][j][k][:n] == P.a[i][j][k] and not any(Q.a[i][j][k][n:])
                              for i in range(n) for j in range(n) for k in range(n))
        print("   compatible Q axioms", len(pre_violations(Q)) if n <= 2 else "(skipped)",
              "restriction matches input", restr)
    print("== quadratic pre-LY regression: pre2(1,1) with omega12=1 ==")
    P = pre2(1, 1)
    G = [[F(0), F(1)], [F(-1), F(0)]]
    Ac = subadjacent(P)
    n = 2
    ee = [unit(n, i) for i in range(n)]
    v1 = [(x, y, z) for x, y, z in product(range(n), repeat=3)
          if omega_val(G, P.st(ee[x], ee[y]), ee[z]) != -omega_val(G, ee[y], Ac.br(ee[x], ee[z]))]
    v3 = [(x, y, z, w) for x, y, z, w in product(range(n), repeat=4)
          if omega_val(G, P.bc(ee[x], ee[y], ee[z]), ee[w]) != omega_val(G, ee[x], Ac.tr(ee[w], ee[z], ee[y]))]
    v2 = [(x, y, z, w) for x, y, z, w in product(range(n), repeat=4)
          if omega_val(G, P.bD(ee[x], ee[y], ee[z]), ee[w]) != -omega_val(G, ee[z], Ac.tr(ee[x], ee[y], ee[w]))]
    print("inv1 violations", [tuple(i + 1 for i in t) for t in v1])
    print("inv3 violations", [tuple(i + 1 for i in t) for t in v3])
    print("inv2 violations", [tuple(i + 1 for i in t) for t in v2])


if __name__ == "__main__":
    main()
