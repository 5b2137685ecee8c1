"""Ring perception: a minimum cycle basis of the molecular graph.

Candidate cycles are generated Horton-style (shortest path tree through
every vertex plus one closing edge), sorted by length, and added greedily
while linearly independent over GF(2) on edge incidence vectors. For a
connected graph the basis has exactly |bonds| - |atoms| + 1 cycles.
"""

from __future__ import annotations

from collections import deque


def _shortest_path_tree(adj: list[list[tuple[int, int]]], root: int) -> tuple[list[int], list[int]]:
    """BFS parents and depths from root; parent of unreachable/-root is -1."""
    n = len(adj)
    parent = [-1] * n
    depth = [-1] * n
    depth[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v, _ in adj[u]:
            if depth[v] == -1:
                depth[v] = depth[u] + 1
                parent[v] = u
                queue.append(v)
    return parent, depth


def _path_to_root(parent: list[int], node: int) -> list[int]:
    path = [node]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def minimum_cycle_basis(n_atoms: int, bonds: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Return basis cycles as ordered atom tuples, shortest first.

    Accepts disconnected graphs; the basis then has
    |bonds| - |atoms| + |components| cycles.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n_atoms)]
    bond_index = {}
    for bi, (a, b) in enumerate(bonds):
        adj[a].append((b, bi))
        adj[b].append((a, bi))
        bond_index[(min(a, b), max(a, b))] = bi

    components = 0
    seen = [False] * n_atoms
    for start in range(n_atoms):
        if not seen[start]:
            components += 1
            stack = [start]
            seen[start] = True
            while stack:
                u = stack.pop()
                for v, _ in adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
    dimension = len(bonds) - n_atoms + components
    if dimension <= 0:
        return []

    # Horton candidates: for each root r and non-tree-ish edge (u, v),
    # cycle = path(r..u) + (u,v) + path(v..r) when the two paths share
    # only the root.
    candidates: dict[frozenset[int], tuple[int, ...]] = {}
    for root in range(n_atoms):
        parent, depth = _shortest_path_tree(adj, root)
        for bi, (u, v) in enumerate(bonds):
            if depth[u] == -1 or depth[v] == -1:
                continue
            if parent[u] == v or parent[v] == u:
                continue
            pu = _path_to_root(parent, u)
            pv = _path_to_root(parent, v)
            if set(pu) & set(pv) != {root}:
                continue
            cycle = pu[::-1] + pv[:-1]  # root..u, then v..(just before root)
            edge_set = frozenset(_cycle_edge_indices(cycle, bond_index))
            if edge_set not in candidates:
                candidates[edge_set] = tuple(cycle)

    ordered = sorted(candidates.items(), key=lambda kv: (len(kv[1]), kv[1]))

    # Greedy GF(2) independence via Gaussian elimination on edge bitmasks,
    # keyed by lowest set bit.
    pivots: dict[int, int] = {}
    basis_cycles: list[tuple[int, ...]] = []
    for edge_set, cycle in ordered:
        mask = 0
        for ei in edge_set:
            mask |= 1 << ei
        residue = mask
        while residue:
            low = residue & -residue
            if low not in pivots:
                pivots[low] = residue
                basis_cycles.append(cycle)
                break
            residue ^= pivots[low]
        if len(basis_cycles) == dimension:
            break

    basis_cycles.sort(key=lambda c: (len(c), c))
    return basis_cycles


def _cycle_edge_indices(cycle: list[int], bond_index: dict[tuple[int, int], int]) -> list[int]:
    edges = []
    for i, a in enumerate(cycle):
        b = cycle[(i + 1) % len(cycle)]
        edges.append(bond_index[(min(a, b), max(a, b))])
    return edges
