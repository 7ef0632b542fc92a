"""Token motion planning on the vertices of a colored graph.

Configurations are tuples of vertices with pairwise distinct colors, one
per token.  A legal move slides one token along an edge to a vertex whose
color clashes with no other token; these moves are exactly the 1-skeleton
edges of the configuration complex, so breadth-first search plans
shortest move sequences.  Unordered planning treats the tokens as
indistinguishable (sorted configurations).
"""

from __future__ import annotations


def _check_configuration(graph, config, ordered):
    config = tuple(int(v) for v in config)
    for v in config:
        if not 0 <= v < graph.nv:
            raise ValueError(f"no vertex {v}")
    colors = [graph.colors[v] for v in config]
    if len(set(colors)) != len(colors):
        raise ValueError(f"configuration {config} has a color clash")
    if not ordered:
        config = tuple(sorted(config))
    return config


def legal_moves(graph, config, ordered=True):
    """All configurations one single-token move away, in canonical order.

    A token may move along an edge to a vertex whose color differs from
    every other token's color (in particular the vertex is unoccupied).

    >>> from .graphs import standard_graph
    >>> k5 = standard_graph("complete", [5])
    >>> legal_moves(k5, (0, 1))
    [(0, 2), (0, 3), (0, 4), (2, 1), (3, 1), (4, 1)]
    """
    config = _check_configuration(graph, config, ordered)
    out = set()
    for slot, v in enumerate(config):
        others = config[:slot] + config[slot + 1 :]
        other_colors = {graph.colors[u] for u in others}
        for j in graph.incident[v]:
            t, h = graph.edges[j]
            w = h if v == t else t
            if graph.colors[w] in other_colors:
                continue
            nxt = config[:slot] + (w,) + config[slot + 1 :]
            if not ordered:
                nxt = tuple(sorted(nxt))
            out.add(nxt)
    return sorted(out)


def _simultaneous_moves(graph, config, ordered):
    """Neighbors across cubes of any dimension.

    Several tokens may move at once when the traversed edges together with
    the resting tokens are pairwise color-disjoint; the step lands on the
    antipodal corner of the cube the moves span.
    """
    config = _check_configuration(graph, config, ordered)
    n = len(config)
    masks = graph.cell_masks
    out = set()

    def extend(slot, moves, used):
        if slot == n:
            if moves:
                nxt = list(config)
                for s, j in moves:
                    t, h = graph.edges[j]
                    nxt[s] = h if config[s] == t else t
                out.add(tuple(sorted(nxt)) if not ordered else tuple(nxt))
            return
        v = config[slot]
        vm = masks[v]
        if not vm & used:
            extend(slot + 1, moves, used | vm)
        for j in graph.incident[v]:
            em = masks[graph.edge_cell(j)]
            if not em & used:
                extend(slot + 1, moves + ((slot, j),), used | em)

    extend(0, (), 0)
    return sorted(out)


def shortest_path(graph, start, goal, ordered=True, simultaneous=False):
    """Minimum-length move sequence between two configurations, or None.

    Breadth-first search over configurations with canonical (sorted)
    neighbor expansion, so results are deterministic.  Returns the list of
    visited configurations from start to goal inclusive; ``None`` means the
    goal is in a different component.  With ``simultaneous`` a step may
    move several tokens at once (cube-diagonal metric).
    """
    start = _check_configuration(graph, start, ordered)
    goal = _check_configuration(graph, goal, ordered)
    if len(start) != len(goal):
        raise ValueError("start and goal have different token counts")
    if start == goal:
        return [start]
    neighbors = _simultaneous_moves if simultaneous else legal_moves
    parent = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for config in frontier:
            for nb in neighbors(graph, config, ordered):
                if nb in parent:
                    continue
                parent[nb] = config
                if nb == goal:
                    path = [nb]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(nb)
        frontier = nxt
    return None


def path_moves(path):
    """Turn a configuration path into (token, from, to) triples.

    For unordered paths the token index refers to the position in the
    sorted configuration that changed.
    """
    moves = []
    for a, b in zip(path, path[1:]):
        changed = [i for i, (x, y) in enumerate(zip(a, b)) if x != y]
        if len(changed) == 1:
            i = changed[0]
            moves.append((i, a[i], b[i]))
        else:
            # unordered steps can shift several slots; report the moved vertex
            gone = set(a) - set(b)
            new = set(b) - set(a)
            if len(gone) == 1 and len(new) == 1:
                src = gone.pop()
                moves.append((a.index(src), src, new.pop()))
            else:
                for i in changed:
                    moves.append((i, a[i], b[i]))
    return moves


def replay(graph, start, moves, ordered=True):
    """Apply (token, from, to) triples, validating every step.

    Raises ``ValueError`` when a step is not a legal single-token move;
    returns the final configuration.
    """
    config = _check_configuration(graph, start, ordered)
    for token, frm, to in moves:
        if not 0 <= token < len(config) or config[token] != frm:
            raise ValueError(f"move {token}: token is not at vertex {frm}")
        nxt = config[:token] + (to,) + config[token + 1 :]
        if not ordered:
            nxt = tuple(sorted(nxt))
        if nxt not in legal_moves(graph, config, ordered):
            raise ValueError(f"move {(token, frm, to)} from {config} is illegal")
        config = nxt
    return config
