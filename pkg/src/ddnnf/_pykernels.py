"""Pure-Python counting-graph sweeps (fallback for ``_ckernels``).

Graph layout shared with the compiled kernels: ``kind[i]`` is one of
LIT/TRUE/FALSE/AND/OR from ``nnf``; children of node ``i`` are
``idx[ptr[i]:ptr[i+1]]``; nodes are topologically ordered, root last.
"""

AND = 3
OR = 4

IMPLEMENTATION = "python"


def evaluate(kind, ptr, idx, val):
    """Fill ``val`` (leaf values pre-set) bottom-up. Returns the number of nodes visited."""
    n = len(kind)
    for i in range(n):
        k = kind[i]
        if k == AND:
            v = 1
            for j in range(ptr[i], ptr[i + 1]):
                v *= val[idx[j]]
            val[i] = v
        elif k == OR:
            v = 0
            for j in range(ptr[i], ptr[i + 1]):
                v += val[idx[j]]
            val[i] = v
    return n


def differentiate(kind, ptr, idx, val):
    """Partial derivative of the root value w.r.t. every node.

    Returns ``(pd, edges_visited)``. The sibling products at And nodes come
    from prefix/suffix products, so no division is needed.
    """
    n = len(kind)
    pd = [0] * n
    pd[n - 1] = 1
    edges = 0
    for i in range(n - 1, -1, -1):
        k = kind[i]
        if k == OR:
            p = pd[i]
            for j in range(ptr[i], ptr[i + 1]):
                pd[idx[j]] += p
                edges += 1
        elif k == AND:
            p = pd[i]
            lo, hi = ptr[i], ptr[i + 1]
            m = hi - lo
            if m == 1:
                pd[idx[lo]] += p
            elif m == 2:
                a, c = idx[lo], idx[lo + 1]
                pd[a] += p * val[c]
                pd[c] += p * val[a]
            else:
                suffix = [1] * (m + 1)
                for t in range(m - 1, -1, -1):
                    suffix[t] = suffix[t + 1] * val[idx[lo + t]]
                prefix = p
                for t in range(m):
                    c = idx[lo + t]
                    pd[c] += prefix * suffix[t + 1]
                    prefix *= val[c]
            edges += m
    return pd, edges
