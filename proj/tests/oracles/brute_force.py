"""Independent brute-force oracle for the frozen expected values in the C++ tests.

Everything here is computed from first principles: the wreath-product law on
((c_1..c_n), sigma) pairs, the order as the transitive closure of
``x -> x*s`` whenever finv strictly increases, and covers as the transitive
reduction of that closure. No cover criterion, comparison formula or meet/join
formula is used. Run: ``python3 tests/oracles/brute_force.py``.
"""
import itertools
from collections import deque


def mul(r, g, h):
    (c, s), (d, t) = g, h
    n = len(s)
    return (tuple((c[t[i] - 1] + d[i]) % r for i in range(n)),
            tuple(s[t[i] - 1] for i in range(n)))


def inv_count(s):
    return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])


def finv(r, g):
    return r * inv_count(g[1]) + sum(g[0])


def gens(r, n):
    out = {}
    ident = tuple(range(1, n + 1))
    for i in range(1, n):
        d = tuple(1 if k == i - 1 else 0 for k in range(n))
        p = list(ident)
        p[i - 1], p[i] = p[i], p[i - 1]
        out["a%d" % i] = (d, tuple(p))
    for i in range(1, n + 1):
        out["b%d" % i] = (tuple(1 if k == i - 1 else 0 for k in range(n)), ident)
    return out


def elements(r, n):
    return [(c, s) for s in itertools.permutations(range(1, n + 1))
            for c in itertools.product(range(r), repeat=n)]


def signed(g):
    c, s = g
    return ",".join(str(-v if ci else v) for ci, v in zip(c, s))


def parse_signed(txt):
    vals = [int(x) for x in txt.split(",")]
    return (tuple(1 if v < 0 else 0 for v in vals), tuple(abs(v) for v in vals))


class Poset:
    def __init__(self, r, n):
        self.r, self.n = r, n
        self.els = elements(r, n)
        self.g = gens(r, n)
        # defining relation: x -> x*s when finv grows (any amount)
        self.rel = {x: [mul(r, x, s) for s in self.g.values()
                        if finv(r, mul(r, x, s)) > finv(r, x)] for x in self.els}
        self.up = {}
        for x in self.els:
            seen = {x}
            q = deque([x])
            while q:
                y = q.popleft()
                for z in self.rel[y]:
                    if z not in seen:
                        seen.add(z)
                        q.append(z)
            self.up[x] = seen
        self.covers = {x: [y for y in self.up[x] if y != x and not any(
            z != x and z != y and y in self.up[z] for z in self.up[x])] for x in self.els}

    def leq(self, x, y):
        return y in self.up[x]

    def meet(self, x, y):
        low = [z for z in self.els if self.leq(z, x) and self.leq(z, y)]
        best = [z for z in low if all(self.leq(w, z) for w in low)]
        assert len(best) == 1
        return best[0]

    def join(self, x, y):
        hi = [z for z in self.els if self.leq(x, z) and self.leq(y, z)]
        best = [z for z in hi if all(self.leq(z, w) for w in hi)]
        assert len(best) == 1
        return best[0]

    def mobius(self, x, y):
        memo = {}
        order = sorted([z for z in self.up[x] if self.leq(z, y)], key=lambda z: finv(self.r, z))
        for z in order:
            memo[z] = 1 if z == x else -sum(memo[w] for w in memo if w != z and self.leq(w, z))
        return memo[y]

    def label(self, x, y):
        labs = [k for k, s in self.g.items() if mul(self.r, x, s) == y]
        assert len(labs) == 1
        return labs[0]

    def chains(self, x, y):
        if x == y:
            return [[]]
        out = []
        for z in sorted(self.covers[x]):
            if self.leq(z, y):
                for w in self.chains(z, y):
                    out.append([self.label(x, z)] + w)
        return out


def tits_neighbors(word):
    def idx(l):
        return l[0], int(l[1:])
    out = set()
    for p in range(len(word) - 1):
        (k1, i), (k2, j) = idx(word[p]), idx(word[p + 1])
        rep = None
        if k1 == "b" and k2 == "b" and i != j:
            rep = [word[p + 1], word[p]]
        elif k1 == "a" and k2 == "b" and j not in (i, i + 1):
            rep = [word[p + 1], word[p]]
        elif k1 == "b" and k2 == "a" and i not in (j, j + 1):
            rep = [word[p + 1], word[p]]
        elif k1 == "a" and k2 == "b" and j == i + 1:
            rep = ["b%d" % i, "a%d" % i]
        elif k1 == "b" and k2 == "a" and i == j:
            rep = ["a%d" % i, "b%d" % (i + 1)]
        elif k1 == "a" and k2 == "a" and abs(i - j) > 1:
            rep = [word[p + 1], word[p]]
        if rep:
            out.add(tuple(word[:p] + rep + word[p + 2:]))
    for p in range(len(word) - 3):
        f = word[p:p + 4]
        for i in range(1, 20):
            x = ["a%d" % i, "a%d" % (i + 1), "b%d" % (i + 1), "a%d" % i]
            y = ["a%d" % (i + 1), "b%d" % (i + 1), "a%d" % i, "a%d" % (i + 1)]
            if f == x:
                out.add(tuple(word[:p] + y + word[p + 4:]))
            if f == y:
                out.add(tuple(word[:p] + x + word[p + 4:]))
    return out


def diameter(words):
    ws = {tuple(w) for w in words}
    best = 0
    for s in ws:
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for v in tits_neighbors(list(u)):
                if v in ws and v not in dist:
                    dist[v] = dist[u] + 1
                    q.append(v)
        assert len(dist) == len(ws)
        best = max(best, max(dist.values()))
    return best


def polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def main():
    b2 = Poset(2, 2)
    e = ((0, 0), (1, 2))
    print("B2 rank sizes", [sum(1 for x in b2.els if finv(2, x) == k) for k in range(5)])
    print("B2 edges", sorted((signed(x), signed(y), b2.label(x, y)) for x in b2.els for y in b2.covers[x]))
    print("compose(-2,1 ; 2,-1) =", signed(mul(2, parse_signed("-2,1"), parse_signed("2,-1"))))
    g = parse_signed("-2,1")
    print("inverse(-2,1) =", [signed(h) for h in b2.els if mul(2, g, h) == e])
    mu0 = ((1, 1), (2, 1))
    print("dual(-1,2) =", signed(mul(2, parse_signed("-1,2"), mu0)))
    print("meet(-1,2 ; 1,-2) =", signed(b2.meet(parse_signed("-1,2"), parse_signed("1,-2"))))
    print("join(-1,2 ; 1,-2) =", signed(b2.join(parse_signed("-1,2"), parse_signed("1,-2"))))
    print("mobius(12, -1-2) =", b2.mobius(e, parse_signed("-1,-2")))
    print("mobius(12, -2-1) =", b2.mobius(e, parse_signed("-2,-1")))
    top = parse_signed("-2,-1")
    ch = b2.chains(e, top)
    print("chains [12,-2-1]:", sorted("".join(w) for w in ch), "diameter", diameter(ch))
    print("chains [12,-1-2]:", sorted("".join(w) for w in b2.chains(e, parse_signed("-1,-2"))))
    wd = [0] * 3
    for x in b2.els:
        wd[sum(1 for y in b2.els if x in b2.covers[y])] += 1
    print("B2 wdes genfun", wd)
    no_complement = [signed(x) for x in b2.els
                     if b2.meet(parse_signed("1,-2"), x) == e and b2.join(parse_signed("1,-2"), x) == top]
    print("complements of 1,-2 in B2:", no_complement)

    b3 = Poset(2, 3)
    print("B3 rank sizes", [sum(1 for x in b3.els if finv(2, x) == k) for k in range(10)])
    print("B3 edge count", sum(len(v) for v in b3.covers.values()))
    p, s = parse_signed("2,-1,-3"), parse_signed("-1,3,-2")
    print("B3 meet", signed(b3.meet(p, s)), "join", signed(b3.join(p, s)))
    id3 = ((0, 0, 0), (1, 2, 3))
    full = b3.chains(id3, ((1, 1, 1), (3, 2, 1)))
    print("B3 full chains", len(full))
    for r, n in [(3, 2), (3, 1)]:
        P = Poset(r, n)
        wd = {}
        for x in P.els:
            k = sum(1 for y in P.els if x in P.covers[y])
            wd[k] = wd.get(k, 0) + 1
        print("G(%d,%d) wdes" % (r, n), sorted(wd.items()))
    eul = [0] * 3
    for s in itertools.permutations(range(1, 4)):
        eul[sum(1 for i in range(2) if s[i] > s[i + 1])] += 1
    print("E_3", eul)
    print("prod [2][4][6]", polymul(polymul([1, 1], [1, 1, 1, 1]), [1] * 6))


if __name__ == "__main__":
    main()
