"""Pure-Python state-sum kernel (fallback when the extension is not built)."""


def state_histogram(arcs, n_arcs, loops):
    n = len(arcs) // 4
    width = n_arcs + loops + 2
    hist = [[0] * width for _ in range(n + 1)]
    a_pairs = [((arcs[4 * k], arcs[4 * k + 1]), (arcs[4 * k + 2], arcs[4 * k + 3]))
               for k in range(n)]
    b_pairs = [((arcs[4 * k + 1], arcs[4 * k + 2]), (arcs[4 * k + 3], arcs[4 * k]))
               for k in range(n)]
    for state in range(1 << n):
        parent = list(range(n_arcs))
        merges = 0
        na = 0
        for k in range(n):
            if state >> k & 1:
                na += 1
                pairs = a_pairs[k]
            else:
                pairs = b_pairs[k]
            for a, b in pairs:
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
                    merges += 1
        hist[na][n_arcs - merges + loops] += 1
    return hist
