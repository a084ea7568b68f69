"""Brute-force references that share no code with the package."""

from itertools import combinations, combinations_with_replacement, product

import sympy


def divides(g, h):
    return all(a <= b for a, b in zip(g, h))


def minimal_by_pairs(gens):
    gens = set(map(tuple, gens))
    return {g for g in gens if not any(h != g and divides(h, g) for h in gens)}


def lcm(ms):
    return tuple(max(col) for col in zip(*ms))


def expand_power_product(ideals, a):
    """All products of a_i generators of each I_i, minimalized by pairwise filtering."""
    n = len(ideals[0][0])
    choices = [list(combinations_with_replacement(I, k)) for I, k in zip(ideals, a)]
    out = set()
    for pick in product(*choices):
        mono = [0] * n
        for group in pick:
            for g in group:
                mono = [x + y for x, y in zip(mono, g)]
        out.add(tuple(mono))
    return minimal_by_pairs(out)


def taylor_betti(gens):
    """Multigraded Betti numbers from the Taylor resolution tensored with the field.

    Basis of homological degree j in multidegree b: subsets of size j+1 with lcm b.
    The differential keeps a face only when removing an element leaves the lcm unchanged.
    """
    gens = sorted(set(map(tuple, gens)))
    by_lcm = {}
    for k in range(1, len(gens) + 1):
        for sigma in combinations(range(len(gens)), k):
            by_lcm.setdefault(lcm([gens[i] for i in sigma]), {}).setdefault(k - 1, []).append(sigma)
    betti = {}
    for b, chains in by_lcm.items():
        top = max(chains)
        ranks = {}
        for j in range(1, top + 1):
            src, dst = chains.get(j, []), chains.get(j - 1, [])
            if not src or not dst:
                ranks[j] = 0
                continue
            index = {s: i for i, s in enumerate(dst)}
            M = sympy.zeros(len(src), len(dst))
            for r, sigma in enumerate(src):
                for pos in range(len(sigma)):
                    face = sigma[:pos] + sigma[pos + 1:]
                    if face in index:
                        M[r, index[face]] = (-1) ** pos
            ranks[j] = M.rank()
        for j in range(top + 1):
            dim = len(chains.get(j, [])) - ranks.get(j, 0) - ranks.get(j + 1, 0)
            if dim:
                betti[(j, b)] = dim
    return betti


def k_polynomial(gens):
    """Numerator of the multigraded Hilbert series of the ideal, by inclusion-exclusion."""
    gens = sorted(set(map(tuple, gens)))
    poly = {}
    for k in range(1, len(gens) + 1):
        for sigma in combinations(gens, k):
            b = lcm(sigma)
            poly[b] = poly.get(b, 0) + (-1) ** (k + 1)
    return {b: c for b, c in poly.items() if c}


def reduced_homology_sympy(faces):
    faces = [tuple(sorted(f)) for f in faces]
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    if not by_dim:
        return {}
    ranks = {}
    for d in range(0, max(by_dim) + 1):
        src, dst = by_dim.get(d, []), by_dim.get(d - 1, [])
        if not src or not dst:
            ranks[d] = 0
            continue
        index = {f: i for i, f in enumerate(dst)}
        M = sympy.zeros(len(src), len(dst))
        for r, f in enumerate(src):
            for pos in range(len(f)):
                M[r, index[f[:pos] + f[pos + 1:]]] = (-1) ** pos
        ranks[d] = M.rank()
    out = {}
    for d in range(-1, max(by_dim) + 1):
        dim = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if dim:
            out[d] = dim
    return out
