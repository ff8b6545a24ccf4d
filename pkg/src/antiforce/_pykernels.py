"""Pure-Python kernels. Reference behaviour for ``_ckernels`` and the fallback
for ``n > 64`` or when the extension is not built.

All masks are Python ints: ``adj[v]`` / ``avail[v]`` are neighbour bitsets,
``partner`` is a sequence with ``partner[partner[v]] == v``.
"""


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def alternating_cycle(n, partner, avail, limit):
    """First M-alternating cycle with at most ``limit`` M-edges.

    ``avail[v]`` lists the usable non-matching neighbours of ``v``. Cycles are
    reported from their least vertex ``a0``, starting with the matching edge
    at ``a0``, so each cycle has exactly one representation. Search order is
    ascending ``a0`` then ascending next vertex, so among cycles of one length
    the lexicographically least sequence comes first. Returns the vertex
    sequence or ``None``.
    """
    if limit < 2:
        return None
    for a0 in range(n):
        b0 = partner[a0]
        if b0 < a0:
            continue
        higher = ~((1 << (a0 + 1)) - 1)
        seq = [a0, b0]

        def extend(b, visited, depth):
            if depth >= 2 and avail[b] >> a0 & 1:
                return True
            if depth == limit:
                return False
            for c in _bits(avail[b] & higher & ~visited):
                d = partner[c]
                if d < a0:
                    continue
                seq.append(c)
                seq.append(d)
                if extend(d, visited | 1 << c | 1 << d, depth + 1):
                    return True
                del seq[-2:]
            return False

        if extend(b0, 1 << a0 | 1 << b0, 1):
            return seq
    return None


def count_alternating_4cycles(n, partner, avail):
    """Number of 4-cycles alternating between matching and ``avail`` edges."""
    total = 0
    for x in range(n):
        y = partner[x]
        if y < x:
            continue
        for w in _bits(avail[x]):
            pw = partner[w]
            if min(w, pw) < x:
                continue
            if avail[y] >> pw & 1:
                total += 1
    return total


def perfect_matchings(n, adj, alive, limit):
    """Perfect matchings of the subgraph induced by the ``alive`` mask.

    Branches on the least unmatched vertex, neighbours ascending. Each result
    is a partner list with ``-1`` on dead vertices. Stops after ``limit``
    results when ``limit > 0``.
    """
    out = []
    partner = [-1] * n
    if (alive).bit_count() % 2:
        return out

    def rec(free):
        if not free:
            out.append(tuple(partner))
            return limit > 0 and len(out) >= limit
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        for w in _bits(adj[v] & rest):
            partner[v] = w
            partner[w] = v
            if rec(rest & ~(1 << w)):
                return True
            partner[w] = -1
        partner[v] = -1
        return False

    rec(alive)
    return out
