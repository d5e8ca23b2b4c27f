#!/usr/bin/env python3
"""Brute-force ideal theory from the definitions, for freezing test values.

Reads .quant files with a minimal parser, works on explicit subsets, and
never uses the apex shortcut. Prints one fact per line.
"""
import itertools
import sys


def parse(path):
    lines = [l.split("#")[0].strip() for l in open(path, encoding="utf-8")]
    lines = [l for l in lines if l]
    name = lines[0].split()[1]
    labels = lines[1].split(":", 1)[1].split()
    idx = {l: k for k, l in enumerate(labels)}
    n = len(labels)
    k = 3
    pairs = []
    while lines[k] != "mul:":
        a, _, b = lines[k].split()
        pairs.append((idx[a], idx[b]))
        k += 1
    k += 1
    mul = [[0] * n for _ in range(n)]
    while lines[k] != "end":
        row, rest = lines[k].split(":", 1)
        for j, e in enumerate(rest.split()):
            mul[idx[row.strip()]][j] = idx[e]
        k += 1
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        leq[a][b] = True
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if leq[i][m] and leq[m][j]:
                    leq[i][j] = True
    return name, labels, leq, mul


class Q:
    def __init__(self, path):
        self.name, self.labels, self.leq, self.mul = parse(path)
        self.n = len(self.labels)
        r = range(self.n)
        self.bot = next(x for x in r if all(self.leq[x][y] for y in r))
        self.top = next(x for x in r if all(self.leq[y][x] for y in r))

    def join(self, a, b):
        ubs = [u for u in range(self.n) if self.leq[a][u] and self.leq[b][u]]
        return next(u for u in ubs if all(self.leq[u][v] for v in ubs))

    def is_ideal(self, s):
        if not s:
            return False
        for x in s:
            for y in range(self.n):
                if self.leq[y][x] and y not in s:
                    return False
            for y in s:
                if self.join(x, y) not in s:
                    return False
        return True

    def ideals(self):
        out = []
        for bits in itertools.product([0, 1], repeat=self.n):
            s = frozenset(k for k in range(self.n) if bits[k])
            if self.is_ideal(s):
                out.append(s)
        return out

    def closure(self, s):
        """Least ideal containing s (intersection of all ideals over s)."""
        full = frozenset(range(self.n))
        out = full
        for i in self.all_ideals:
            if s <= i:
                out = out & i
        return out

    def product(self, i, j):
        return self.closure(frozenset(self.mul[x][y] for x in i for y in j))

    def show(self, s):
        return "{" + ",".join(self.labels[k] for k in sorted(s)) + "}"

    def power_in(self, x, s):
        p = x
        for _ in range(self.n + 1):
            if p in s:
                return True
            p = self.mul[p][x]
        return False


def analyse(path):
    q = Q(path)
    q.all_ideals = q.ideals()
    full = frozenset(range(q.n))
    ideals = q.all_ideals
    proper = [i for i in ideals if i != full]
    prime = {i for i in proper
             if all(x in i or y in i for x in range(q.n) for y in range(q.n) if q.mul[x][y] in i)}
    radical = {i: frozenset(x for x in range(q.n) if q.power_in(x, i)) for i in ideals}
    primary = {i for i in proper
               if all(x in i or q.power_in(y, i) for x in range(q.n) for y in range(q.n) if q.mul[x][y] in i)}
    irreducible = {i for i in ideals
                   if not any(j & k == i and j != i and k != i for j in ideals for k in ideals)}
    strong = {i for i in ideals
              if all(j <= i or k <= i for j in ideals for k in ideals if j & k <= i)}
    distributive = all(a & (q.closure(b | c)) == q.closure((a & b) | (a & c))
                       for a in ideals for b in ideals for c in ideals)

    print("instance", q.name)
    print("ideals", " ".join(q.show(i) for i in sorted(ideals, key=lambda s: (len(s), sorted(s)))))
    print("spectrum", " ".join(q.show(i) for i in sorted(prime, key=lambda s: (len(s), sorted(s)))))
    for i in sorted(ideals, key=lambda s: (len(s), sorted(s))):
        flags = []
        if i in prime:
            flags.append("prime")
        if i in primary:
            flags.append("primary")
        if i in irreducible:
            flags.append("irreducible")
        if i in strong:
            flags.append("strongly_irreducible")
        print("ideal", q.show(i), "radical", q.show(radical[i]), " ".join(flags))
    print("arithmetic", "yes" if distributive else "no")
    print("irreducible_equals_strong", "yes" if irreducible == strong else "no")
    for i, j in itertools.product(ideals, repeat=2):
        print("product", q.show(i), q.show(j), q.show(q.product(i, j)))
    for i in proper:
        candidates = [p for p in primary if i <= p]
        best = None
        for r in range(1, len(candidates) + 1):
            for combo in itertools.combinations(candidates, r):
                meet = full
                for c in combo:
                    meet = meet & c
                if meet != i:
                    continue
                rads = [radical[c] for c in combo]
                if len(set(rads)) != len(rads):
                    continue
                if any(frozenset.intersection(full, *[d for d in combo if d is not c]) <= c for c in combo):
                    continue
                best = best or []
                best.append(sorted(q.show(c) for c in combo))
        if best is None:
            print("decomposition", q.show(i), "none")
        else:
            for b in sorted(best):
                print("decomposition", q.show(i), " ".join(b))


if __name__ == "__main__":
    for p in sys.argv[1:]:
        analyse(p)
