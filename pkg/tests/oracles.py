"""Brute-force reference implementations used to cross-check the engine.

Everything here works on plain Python lists straight from the definitions and
enumerates full ideal lattices, so it is only meant for rings with a few dozen
elements.
"""

from __future__ import annotations

import itertools


class Oracle:
    def __init__(self, R):
        self.R = R
        self.n = R.size
        self.E = range(self.n)
        self.a = R.add.tolist()
        self.m = R.mul.tolist()
        self.one = R.one
        self.neg = R.neg.tolist()

    # -- elements ---------------------------------------------------------------

    def powers(self, x, upto):
        out, p = [], x
        for _ in range(upto):
            out.append(p)
            p = self.m[p][x]
        return out

    def nilpotent(self, x):
        return 0 in self.powers(x, self.n + 1)

    def nil(self):
        return {x for x in self.E if self.nilpotent(x)}

    def center(self):
        return {a for a in self.E if all(self.m[a][x] == self.m[x][a] for x in self.E)}

    def hypercenter(self, bound=None):
        bound = bound or 2 * self.n + 1
        return {
            a
            for a in self.E
            if all(any(self.m[a][p] == self.m[p][a] for p in self.powers(x, bound)) for x in self.E)
        }

    def quasi_regular(self, x):
        # x o y = x + y - xy = 0 for some y (right quasi-inverse)
        return any(self.a[self.a[x][y]][self.neg[self.m[x][y]]] == 0 for y in self.E)

    def satisfies_P(self, x):
        return x in self.powers(x, self.n + 2)[1:]

    # -- ideal lattices -----------------------------------------------------------

    def closure(self, gens, side):
        S = {0} | set(gens)
        while True:
            new = set(S)
            for s in S:
                for t in S:
                    new.add(self.a[s][t])
                for r in self.E:
                    if side in ("left", "two_sided"):
                        new.add(self.m[r][s])
                    if side in ("right", "two_sided"):
                        new.add(self.m[s][r])
            if new == S:
                return frozenset(S)
            S = new

    def ideals(self, side):
        """Every ideal of the given side, by adjoining one element at a time."""
        start = self.closure([], side)
        seen = {start}
        todo = [start]
        while todo:
            I = todo.pop()
            for x in self.E:
                if x not in I:
                    J = self.closure(I | {x}, side)
                    if J not in seen:
                        seen.add(J)
                        todo.append(J)
        return seen

    def maximal(self, side):
        proper = [I for I in self.ideals(side) if len(I) < self.n]
        return {I for I in proper if not any(I < J for J in proper)}

    def essential(self, A, side):
        return all(len(A & J) > 1 for J in self.ideals(side) if len(J) > 1)

    def jacobson(self):
        good = [I for I in self.ideals("two_sided") if all(self.quasi_regular(x) for x in I)]
        return frozenset().union(*good)

    def is_prime(self, P):
        if len(P) == self.n:
            return False
        for x in self.E:
            if x in P:
                continue
            for y in self.E:
                if y not in P and all(self.m[self.m[x][r]][y] in P for r in self.E):
                    return False
        return True

    def prime_radical(self):
        primes = [P for P in self.ideals("two_sided") if self.is_prime(P)]
        out = set(self.E)
        for P in primes:
            out &= P
        return out

    # -- annihilators -------------------------------------------------------------

    def l(self, X):
        return frozenset(s for s in self.E if all(self.m[s][x] == 0 for x in X))

    def r(self, X):
        return frozenset(s for s in self.E if all(self.m[x][s] == 0 for x in X))

    def Rb(self, b):
        return frozenset(self.m[r][b] for r in self.E)

    def bR(self, b):
        return frozenset(self.m[b][r] for r in self.E)

    def idempotents(self):
        return [e for e in self.E if self.m[e][e] == e]

    def singular(self, side):
        if side == "left":
            return {x for x in self.E if self.essential(self.l([x]), "left")}
        return {x for x in self.E if self.essential(self.r([x]), "right")}

    # -- properties -------------------------------------------------------------

    def zero_pairs(self):
        return [(u, v) for u in self.E for v in self.E if self.m[u][v] == 0]

    def insertion(self, target, pairs=None):
        pairs = self.zero_pairs() if pairs is None else pairs
        return all(self.m[self.m[u][r]][v] in target for u, v in pairs for r in self.E)

    def decide(self, pid):
        n, m, E = self.n, self.m, self.E
        nil = self.nil()
        if pid == "reduced":
            return nil == {0}
        if pid == "reversible":
            return all(m[v][u] == 0 for u, v in self.zero_pairs())
        if pid == "semicommutative":
            return self.insertion({0})
        if pid == "h_semicommutative":
            return self.insertion(self.hypercenter())
        if pid == "central_semicommutative":
            return self.insertion(self.center())
        if pid == "weakly_semicommutative":
            return self.insertion(nil)
        if pid == "nil_semicommutative_1":
            return self.insertion({0}, [(u, v) for u, v in self.zero_pairs() if u in nil and v in nil])
        if pid == "nil_semicommutative_2":
            return self.insertion(nil, [(u, v) for u in E for v in E if m[u][v] in nil])
        if pid == "j_semicommutative":
            return self.insertion(self.jacobson())
        if pid == "ifp_hwang":
            return all(
                any(all(m[m[u][r]][w] == 0 for r in E) for w in E if w != 0)
                for u, v in self.zero_pairs()
                if v != 0
            )
        if pid == "abelian":
            C = self.center()
            return all(e in C for e in self.idempotents())
        if pid == "directly_finite":
            return all(m[v][u] == self.one for u in E for v in E if m[u][v] == self.one)
        if pid == "two_primal":
            return nil == self.prime_radical()
        if pid == "ni_ring":
            return self.closure(nil, "two_sided") == frozenset(nil)
        if pid == "vn_regular":
            return all(any(m[m[a][x]][a] == a for x in E) for a in E)
        if pid == "strongly_regular":
            return all(any(m[m[a][a]][x] == a for x in E) for a in E)
        if pid == "pi_regular":
            return all(
                any(any(m[m[p][x]][p] == p for x in E) for p in self.powers(a, n + 1)) for a in E
            )
        if pid == "nil_singular":
            return self.singular("left") <= nil and self.singular("right") <= nil
        if pid == "left_sf":
            return all(all(a in {m[a][k] for k in M} for a in M) for M in self.maximal("left"))
        if pid == "gw_maximal_left":
            return all(
                all(any(all(m[p][r] in L for r in E) for p in self.powers(a, n + 1)) for a in L)
                for L in self.maximal("left")
            )
        if pid in ("gp_v_prime_left", "wnil_injective_simple_singulars"):
            us = [u for u in E if u != 0 and (pid == "gp_v_prime_left" or u in nil)]
            return all(self.extends(K, u) for K in self.simple_singular() for u in us)
        if pid in ("left_pp", "semi_left_pp"):
            gens = self.idempotents() if pid == "left_pp" else E
            allowed = {self.Rb(b) for b in gens}
            return all(self.l([a]) in allowed for a in E)
        if pid in ("right_pp", "semi_right_pp"):
            gens = self.idempotents() if pid == "right_pp" else E
            allowed = {self.bR(b) for b in gens}
            return all(self.r([a]) in allowed for a in E)
        if pid in ("left_pq_baer", "semi_left_pq"):
            gens = self.idempotents() if pid == "left_pq_baer" else E
            allowed = {self.Rb(b) for b in gens}
            return all(self.l(self.closure([a], "left")) in allowed for a in E)
        if pid in ("right_pq_baer", "semi_right_pq"):
            gens = self.idempotents() if pid == "right_pq_baer" else E
            allowed = {self.bR(b) for b in gens}
            return all(self.r(self.closure([a], "right")) in allowed for a in E)
        if pid in ("baer", "semi_baer"):
            gens = self.idempotents() if pid == "baer" else E
            left = {self.Rb(b) for b in gens}
            right = {self.bR(b) for b in gens}
            # left annihilator ideals are exactly the left ideals L with l(r(L)) = L
            ok_l = all(L in left for L in self.ideals("left") if self.l(self.r(L)) == L)
            ok_r = all(I in right for I in self.ideals("right") if self.r(self.l(I)) == I)
            return ok_l and ok_r
        if pid in ("quasi_baer", "semi_quasi_baer"):
            gens = self.idempotents() if pid == "quasi_baer" else E
            left = {self.Rb(b) for b in gens}
            right = {self.bR(b) for b in gens}
            return all(self.l(I) in left and self.r(I) in right for I in self.ideals("two_sided"))
        raise KeyError(pid)

    def simple_singular(self):
        return [K for K in self.maximal("left") if self.essential(K, "left")]

    def extends(self, K, u):
        """Some u^k != 0 makes every hom R u^k -> R/K extend, by enumerating the homs."""
        m, E = self.m, self.E
        coset = {y: frozenset(self.a[y][k] for k in K) for y in E}
        for w in dict.fromkeys(self.powers(u, self.n + 1)):
            if w == 0:
                continue
            Rw = sorted({m[s][w] for s in E})
            all_extend = True
            for target in {coset[y] for y in E}:
                mrep = min(target)
                # the assignment s*w -> s*m is a function iff it is well defined
                image = {}
                ok = True
                for s in E:
                    key, val = m[s][w], coset[m[s][mrep]]
                    if image.setdefault(key, val) != val:
                        ok = False
                        break
                if not ok or len(image) != len(Rw):
                    continue
                if not any(coset[m[w][y]] == target for y in E):
                    all_extend = False
                    break
            if all_extend:
                return True
        return False

    def armendariz(self, d):
        polys = list(itertools.product(self.E, repeat=d + 1))
        for f in polys:
            for g in polys:
                prod = [0] * (2 * d + 1)
                for i, x in enumerate(f):
                    for j, y in enumerate(g):
                        prod[i + j] = self.a[prod[i + j]][self.m[x][y]]
                if all(c == 0 for c in prod) and any(self.m[x][y] for x in f for y in g):
                    return False
        return True


# properties the oracle can decide without a unity
UNITY_FREE = (
    "reduced",
    "reversible",
    "semicommutative",
    "h_semicommutative",
    "central_semicommutative",
    "weakly_semicommutative",
    "nil_semicommutative_1",
    "nil_semicommutative_2",
    "j_semicommutative",
    "ifp_hwang",
    "abelian",
    "two_primal",
    "ni_ring",
    "vn_regular",
    "strongly_regular",
    "pi_regular",
    "nil_singular",
)

NEED_UNITY = (
    "directly_finite",
    "left_sf",
    "gw_maximal_left",
    "gp_v_prime_left",
    "wnil_injective_simple_singulars",
    "left_pp",
    "right_pp",
    "left_pq_baer",
    "right_pq_baer",
    "baer",
    "quasi_baer",
    "semi_left_pp",
    "semi_right_pp",
    "semi_left_pq",
    "semi_right_pq",
    "semi_baer",
    "semi_quasi_baer",
)


def naive_axiom_violation(add, mul):
    """First failing law in the same order as the engine, by plain triple loops."""
    n = len(add)
    E = range(n)
    if any(add[0][x] != x or add[x][0] != x for x in E):
        return "additive_identity", None
    if any(add[x][y] != add[y][x] for x in E for y in E):
        return "additive_commutativity", None
    laws = [
        ("additive_associativity", lambda x, y, z: add[add[x][y]][z] == add[x][add[y][z]]),
        ("additive_inverse", None),
        ("multiplicative_associativity", lambda x, y, z: mul[mul[x][y]][z] == mul[x][mul[y][z]]),
        ("left_distributivity", lambda x, y, z: mul[x][add[y][z]] == add[mul[x][y]][mul[x][z]]),
        ("right_distributivity", lambda x, y, z: mul[add[x][y]][z] == add[mul[x][z]][mul[y][z]]),
    ]
    for name, law in laws:
        if law is None:
            if any(all(add[x][y] != 0 for y in E) for x in E):
                return name, None
            continue
        for x, y, z in itertools.product(E, E, E):
            if not law(x, y, z):
                return name, (x, y, z)
    return None


def labelled(R, *labels):
    """Element indices for the given labels."""
    return [R.labels.index(s) for s in labels]
