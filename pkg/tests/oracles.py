"""Reference computations that share no code path with the walk search."""

from itertools import combinations_with_replacement

from toric_ugb.binomial import Binomial, a_degree, canonicalize, is_primitive_bruteforce


def fiber_graver(g, max_degree):
    """Graver elements of degree <= max_degree, straight from the definitions.

    Every monomial of degree d is grouped by its A-degree; any two monomials in
    one fibre with disjoint supports give a binomial of I_G, which is kept when
    the brute-force primitivity test accepts it.
    """
    found = set()
    for d in range(1, max_degree + 1):
        fibres = {}
        for combo in combinations_with_replacement(range(g.m), d):
            vec = [0] * g.m
            for e in combo:
                vec[e] += 1
            fibres.setdefault(a_degree(g, vec), []).append(tuple(vec))
        for monos in fibres.values():
            for i, u in enumerate(monos):
                for v in monos[i + 1:]:
                    if any(a and b for a, b in zip(u, v)):
                        continue
                    b = canonicalize(Binomial(u, v))
                    if is_primitive_bruteforce(b, g, cap=64):
                        found.add(b)
    return found
