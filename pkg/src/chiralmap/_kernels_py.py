"""Pure-Python Cayley-graph kernels.

Same interface as the compiled ``_kernels`` module; used when the extension
is not built, or for degrees the packed representation cannot hold.
Permutations are passed as tuples of images.
"""

from __future__ import annotations

from collections import deque


def cayley_enumerate(gens, degree, bound):
    """Number of elements of ``<gens>``, or -1 once more than ``bound`` are found."""
    ident = tuple(range(degree))
    seen = {ident}
    queue = deque([ident])
    gens = [tuple(g) for g in gens]
    while queue:
        g = queue.popleft()
        for x in gens:
            h = tuple([x[p] for p in g])
            if h not in seen:
                if len(seen) >= bound:
                    return -1
                seen.add(h)
                queue.append(h)
    return len(seen)


def extend_homomorphism(gens, images, degree, bound):
    """Check whether ``gens[j] -> images[j]`` extends to a homomorphism.

    Walks the Cayley graph of ``<gens>`` carrying the candidate image of each
    element.  Returns ``(status, count)``: status 1 when every rediscovered
    element agrees with its stored image, 0 on the first disagreement, and
    -1 if the group has more than ``bound`` elements.
    """
    ident = tuple(range(degree))
    phi = {ident: ident}
    queue = deque([ident])
    pairs = [(tuple(x), tuple(y)) for x, y in zip(gens, images)]
    while queue:
        g = queue.popleft()
        fg = phi[g]
        for x, y in pairs:
            h = tuple([x[p] for p in g])
            fh = tuple([y[p] for p in fg])
            known = phi.get(h)
            if known is None:
                if len(phi) >= bound:
                    return -1, len(phi)
                phi[h] = fh
                queue.append(h)
            elif known != fh:
                return 0, len(phi)
    return 1, len(phi)
