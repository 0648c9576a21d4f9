"""Pure-Python counting kernels.

Same interface as the compiled ``_ckernels`` module; used when the extension
is not built and as the reference the benchmark compares against.
"""
from collections import defaultdict

BACKEND = "python"


def profile_count(n, k, matchings):
    """Count k-distant noncrossing partitions (or matchings) of [n].

    Vertices are scanned left to right.  The state is the set of vacancies
    (vertices whose arc to the right is still open).  Closing an arc at ``i``
    onto vacancy ``v`` creates a k-distant crossing exactly when a younger
    vacancy ``v2 > v`` has ``i - v2 >= k``.  Vacancies younger than ``k`` are
    kept individually in a bitmask (bit ``t`` is age ``t + 1``); older ones are
    interchangeable, since only the youngest of them may ever be closed, and
    are kept as a count.  For ``k == 0`` a transient's own fresh half edge is
    a blocking vacancy, so transients are excluded.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if matchings and n % 2:
        return 0
    if n == 0:
        return 1
    width = min(max(k - 1, 0), n - 1)
    overflow = 1 << width
    allow_transient = not matchings and k >= 1
    states = {(0, 0): 1}
    for i in range(1, n + 1):
        budget = n - i
        nxt = defaultdict(int)

        def push(mask, old, fresh, c):
            mask = (mask << 1) | fresh
            if mask & overflow:
                mask ^= overflow
                old += 1
            if bin(mask).count("1") + old <= budget:
                nxt[mask, old] += c

        for (mask, old), c in states.items():
            push(mask, old, 1, c)  # opener
            if not matchings:
                push(mask, old, 0, c)  # singleton
            closes = []
            bits = mask
            while bits:
                low = bits & -bits
                closes.append((mask ^ low, old))
                bits ^= low
            if old:
                closes.append((mask, old - 1))
            for m2, o2 in closes:
                push(m2, o2, 0, c)  # closer
                if allow_transient:
                    push(m2, o2, 1, c)
        states = nxt
    return states.get((0, 0), 0)


def rgs_completions(n, matchings, prefix=()):
    """Restricted-growth strings of length n extending ``prefix``, lexicographic.

    The yielded list is reused between iterations.
    """
    word = list(prefix) + [0] * (n - len(prefix))
    sizes = []
    for b in prefix:
        if b == len(sizes):
            sizes.append(1)
        elif 0 <= b < len(sizes):
            sizes[b] += 1
        else:
            raise ValueError(f"invalid restricted-growth prefix {prefix!r}")
    if matchings:
        if n % 2 or any(s > 2 for s in sizes):
            return
    open_blocks = sum(1 for s in sizes if s == 1) if matchings else 0
    if matchings and open_blocks > n - len(prefix):
        return

    def rec(pos, open_blocks):
        if pos == n:
            if not matchings or open_blocks == 0:
                yield word
            return
        remaining = n - pos
        for b in range(len(sizes) + 1):
            if b == len(sizes):
                if matchings and open_blocks + 1 > remaining - 1:
                    continue
                sizes.append(1)
                word[pos] = b
                yield from rec(pos + 1, open_blocks + 1)
                sizes.pop()
            else:
                if matchings and sizes[b] != 1:
                    continue
                sizes[b] += 1
                word[pos] = b
                yield from rec(pos + 1, open_blocks - 1)
                sizes[b] -= 1

    yield from rec(len(prefix), open_blocks)


def crossing_distance_histogram(n, matchings, prefix=()):
    """Histogram of the largest crossing distance over all objects.

    For each partition (or matching) the value recorded is
    ``max(j1 - i2)`` over crossing arc pairs ``i1 < i2 <= j1 < j2``, or -1 when
    it has no crossing at all.  It is k-distant noncrossing iff the value is
    below k.
    """
    hist = defaultdict(int)
    for word in rgs_completions(n, matchings, prefix):
        last = {}
        arcs = []
        for pos, b in enumerate(word, 1):
            if b in last:
                arcs.append((last[b], pos))
            last[b] = pos
        # arcs are in increasing closer order, so only i1 < i2 <= j1 is left to test
        best = -1
        for a in range(len(arcs)):
            i1, j1 = arcs[a]
            for c in range(a + 1, len(arcs)):
                i2 = arcs[c][0]
                if i1 < i2 <= j1 and j1 - i2 > best:
                    best = j1 - i2
        hist[best] += 1
    return dict(hist)
