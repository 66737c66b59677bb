"""Pure-Python canonical labelling kernel (fallback for the compiled one)."""


def _other_ends(labs):
    first = {}
    oe = [0] * len(labs)
    for s, lab in enumerate(labs):
        if lab in first:
            t = first[lab]
            oe[s], oe[t] = t, s
        else:
            first[lab] = s
    return oe


def _labelling(labs, oe, n, n_arcs, start):
    new = [0] * (n_arcs + 1)
    entry = [-1] * n
    order = []
    cnt = 0
    s = start
    ptr = 0
    while True:
        # walk the strand leaving slot s until it closes up
        c = s >> 2
        if entry[c] < 0:
            entry[c] = s & 3
            order.append(c)
        while not new[labs[s]]:
            cnt += 1
            new[labs[s]] = cnt
            s = oe[s]
            c = s >> 2
            if entry[c] < 0:
                entry[c] = s & 3
                order.append(c)
            s ^= 2
        if cnt == n_arcs:
            break
        s = -1
        while ptr < len(order):
            c = order[ptr]
            for k in range(4):
                r = 4 * c + ((entry[c] + k) & 3)
                if not new[labs[r]]:
                    s = r
                    break
            if s >= 0:
                break
            ptr += 1
        if s < 0:
            s = 4 * min(c for c in range(n) if entry[c] < 0)
    out = []
    for c in order:
        a, b, x, y = (new[labs[4 * c + p]] for p in range(4))
        out.extend((a, b, x, y) if a < x else (x, y, a, b))
    return out, order


def best_labelling(labs, n, n_arcs):
    """Lexicographically least relabelled PD sequence over all start slots.

    ``labs`` is the flat list of 4*n arc labels (1-based).  Returns the
    flat label list and the crossing order that produced it.
    """
    oe = _other_ends(labs)
    best = None
    best_order = None
    for start in range(4 * n):
        cand, order = _labelling(labs, oe, n, n_arcs, start)
        if best is None or cand < best:
            best, best_order = cand, order
    return best, best_order
