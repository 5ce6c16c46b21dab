"""Pure-Python canonical-labeling kernel.

Works on a dense integer encoding of one connected fat graph: half-edges
are ``0..n-1``, ``sigma[i]`` is the next half-edge counterclockwise at
the same vertex and ``inv[i]`` the other half of the same edge.

The canonical code is the lexicographic minimum, over all starting
half-edges, of the byte string

    [number of vertices] [valences in visit order] [relabelled inv]

produced by a breadth-first relabelling: starting at ``h0`` we label
the whole fan of its vertex in sigma-order, then process the partners
of the labelled half-edges first-in-first-out, labelling each untouched
fan as it is reached.  Two connected graphs are isomorphic exactly when
their minimal codes agree, and the number of starts achieving the
minimum is the order of the automorphism group.

:mod:`fatcob._canon_fast` is a compiled drop-in replacement; the active
backend is chosen in :mod:`fatcob._canon`.
"""

BACKEND = "python"


def relabel_from(sigma, inv, n, h0):
    """BFS relabelling started at ``h0``.

    Returns ``(new_label, visit_order, valences)`` where ``new_label``
    maps old index -> new index (-1 when unreachable) and
    ``visit_order`` is its inverse list.
    """
    nl = [-1] * n
    order = []
    valences = []

    def sweep(h):
        cnt = 0
        cur = h
        while nl[cur] < 0:
            nl[cur] = len(order)
            order.append(cur)
            cur = sigma[cur]
            cnt += 1
        valences.append(cnt)

    sweep(h0)
    i = 0
    while i < len(order):
        p = inv[order[i]]
        if nl[p] < 0:
            sweep(p)
        i += 1
    return nl, order, valences


def code_from(sigma, inv, n, h0):
    """Code of the relabelling started at ``h0`` (graph must be connected)."""
    nl, order, valences = relabel_from(sigma, inv, n, h0)
    if len(order) != n:
        raise ValueError("graph is not connected")
    return bytes([len(valences)]) + bytes(valences) + \
        bytes(nl[inv[order[k]]] for k in range(n))


def is_connected(sigma, inv, n):
    if n == 0:
        return True
    _, order, _ = relabel_from(sigma, inv, n, 0)
    return len(order) == n


def min_code(sigma, inv, n):
    """Minimal code over all starts, with automorphism count.

    Returns ``(code, aut, best_start)``; ``aut`` is the number of
    starting half-edges whose code equals the minimum, i.e. the order
    of the automorphism group of the connected fat graph.
    """
    best = None
    best_start = 0
    aut = 0
    for h0 in range(n):
        code = code_from(sigma, inv, n, h0)
        if best is None or code < best:
            best, best_start, aut = code, h0, 1
        elif code == best:
            aut += 1
    return best, aut, best_start


def census_code(sigma, inv, n):
    """Minimal code, or ``None`` when the graph is disconnected."""
    if n == 0:
        return b"\x00"
    nl, order, valences = relabel_from(sigma, inv, n, 0)
    if len(order) != n:
        return None
    best = bytes([len(valences)]) + bytes(valences) + \
        bytes(nl[inv[order[k]]] for k in range(n))
    for h0 in range(1, n):
        code = code_from(sigma, inv, n, h0)
        if code < best:
            best = code
    return best
