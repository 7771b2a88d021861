"""Independent reference values for the test suite.

The level-n graph is rebuilt from scratch with a union-find over (sheet, grid
point) pairs. Because every edge has the same length 1/d_n, its Kirchhoff
spectrum follows from the transition matrix P = D^-1 A: each eigenvalue
mu = cos(theta) in (-1, 1) yields theta + 2 pi k and 2 pi - theta + 2 pi k,
and theta in pi*Z carries the cycle-space multiplicities. Spectral zeta values
of the finite graphs then reduce to Hurwitz zeta sums evaluated with mpmath.
"""

import itertools
import json
import sys

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def d(seq, n):
    out = 1
    for i in range(n):
        out *= seq[i % len(seq)]
    return out


def build(seq, n):
    dn = d(seq, n)
    sheets = 1 << n
    parent = list(range(sheets * (dn + 1)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    def node(s, t):
        return s * (dn + 1) + t

    for i in range(1, n + 1):
        di, dprev = d(seq, i), d(seq, i - 1)
        step = dn // di
        for m in range(1, di):
            if (m * dprev) % di == 0:
                continue  # already a wormhole of a lower level
            t = m * step
            for s in range(sheets):
                union(node(s, t), node(s ^ (1 << (i - 1)), t))
    roots = sorted({find(a) for a in range(len(parent))})
    index = {r: k for k, r in enumerate(roots)}
    edges = []
    for s in range(sheets):
        for t in range(dn):
            edges.append((index[find(node(s, t))], index[find(node(s, t + 1))]))
    return len(roots), edges, dn


def theta_spectrum(seq, n):
    """(theta values in (0, pi) with multiplicity, V, E, bipartite, d_n)."""
    V, edges, dn = build(seq, n)
    A = np.zeros((V, V))
    for u, v in edges:
        A[u, v] += 1
        A[v, u] += 1
    deg = A.sum(axis=1)
    S = A / np.sqrt(np.outer(deg, deg))
    mu = np.linalg.eigvalsh(S)
    colour = [-1] * V
    adj = [[] for _ in range(V)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    bip = True
    colour[0] = 0
    stack = [0]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if colour[b] < 0:
                colour[b] = 1 - colour[a]
                stack.append(b)
            elif colour[b] == colour[a]:
                bip = False
    interior = [float(np.arccos(m)) for m in mu if -1 + 1e-9 < m < 1 - 1e-9]
    return interior, V, len(edges), bip, dn


def low_eigenvalues(seq, n, cutoff):
    thetas, V, E, bip, dn = theta_spectrum(seq, n)
    out = [0.0]
    k = 0
    while True:
        base = 2 * np.pi * k
        vals = []
        for th in thetas:
            vals += [base + th, base + 2 * np.pi - th]
        vals += [base + 2 * np.pi] * (E - V + 2)
        vals += [base + np.pi] * (E - V + 2 if bip else E - V)
        vals = sorted((v * dn) ** 2 for v in vals)
        out += [v for v in vals if v <= cutoff]
        if (base * dn) ** 2 > cutoff:
            break
        k += 1
    return sorted(out)


def zeta_finite(seq, n, s):
    thetas, V, E, bip, dn = theta_spectrum(seq, n)
    s = mp.mpc(s)
    two_pi = 2 * mp.pi
    total = mp.mpf(0)
    for th in thetas:
        a = mp.mpf(th) / two_pi
        total += mp.zeta(2 * s, a) + mp.zeta(2 * s, 1 - a)
    total += (E - V + 2) * mp.zeta(2 * s, 1)
    total += (E - V + 2 if bip else E - V) * mp.zeta(2 * s, mp.mpf(1) / 2)
    return total * two_pi ** (-2 * s) * mp.mpf(dn) ** (-2 * s)


def main():
    out = {"graphs": [], "eigenvalues": [], "zeta_finite": [], "special": {}}
    for seq, n in [([2], 1), ([2], 2), ([2], 3), ([3], 1), ([3], 2), ([5], 1), ([5], 2), ([2, 3], 2), ([2, 3], 3)]:
        V, edges, dn = build(seq, n)
        out["graphs"].append({"j": seq, "n": n, "vertices": V, "edges": len(edges)})
    for seq, n in [([2], 1), ([2], 2), ([3], 1), ([3], 2), ([2, 3], 2)]:
        out["eigenvalues"].append({"j": seq, "n": n, "cutoff": 400,
                                   "values": low_eigenvalues(seq, n, 400)})
    for seq, n, s in itertools.product([[2], [3], [2, 3]], [1, 2, 4], ["1.5", "2", "3", "2+1j"]):
        z = zeta_finite(seq, n, mp.mpmathify(s))
        out["zeta_finite"].append({"j": seq, "m": n, "s": s,
                                   "re": float(mp.re(z)), "im": float(mp.im(z))})
    sp = out["special"]
    sp["zeta_R(0.5+14.134725141i)_abs"] = float(abs(mp.zeta(mp.mpc(0.5, 14.134725141))))
    sp["zeta_R(2+3i)"] = [float(mp.re(mp.zeta(mp.mpc(2, 3)))), float(mp.im(mp.zeta(mp.mpc(2, 3))))]
    sp["zeta_R(-2.5+1i)"] = [float(mp.re(mp.zeta(mp.mpc(-2.5, 1)))), float(mp.im(mp.zeta(mp.mpc(-2.5, 1))))]
    sp["zeta_H(2.5,0.3)"] = float(mp.zeta(2.5, 0.3))
    sp["zeta_H(-1.5,0.25)"] = float(mp.zeta(-1.5, 0.25))
    sp["zeta_H(3+4i,0.75)"] = [float(mp.re(mp.zeta(mp.mpc(3, 4), 0.75))), float(mp.im(mp.zeta(mp.mpc(3, 4), 0.75)))]
    sp["zeta_H(0.5+20i,1.5)"] = [float(mp.re(mp.zeta(mp.mpc(0.5, 20), 1.5))), float(mp.im(mp.zeta(mp.mpc(0.5, 20), 1.5)))]
    sp["zeta_R(-40+0.5i)"] = [float(mp.re(mp.zeta(mp.mpc(-40, 0.5)))), float(mp.im(mp.zeta(mp.mpc(-40, 0.5))))]
    json.dump(out, sys.stdout, indent=1)


if __name__ == "__main__":
    main()
