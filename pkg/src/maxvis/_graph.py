"""Digraph helpers shared by the spectral and assignment machinery."""


def tarjan_scc(n, adjacency):
    """Strongly connected components of a digraph on nodes 0..n-1.

    ``adjacency[i]`` is an iterable of successors of i.  Iterative
    formulation so 500-node pipelines do not hit the recursion limit.
    Returns a list of components (each a sorted list of nodes) in an
    unspecified order.
    """
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack = []
    components = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, iter(adjacency[root]))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, succ = work[-1]
            advanced = False
            for w in succ:
                if index[w] == -1:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(adjacency[w])))
                    advanced = True
                    break
                if on_stack[w]:
                    if index[w] < lowlink[v]:
                        lowlink[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if lowlink[v] < lowlink[parent]:
                    lowlink[parent] = lowlink[v]
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                components.append(comp)
    return components


def simple_cycles(adjacency, n):
    """Yield every simple cycle as a node list [v0, v1, ..., vk-1].

    Each cycle is produced exactly once, rooted at its smallest node.
    Intended for brute-force oracles (n <= 8 or so).
    """
    on_path = [False] * n
    path = []

    def extend(start, v):
        for w in adjacency[v]:
            if w == start:
                yield list(path)
            elif w > start and not on_path[w]:
                path.append(w)
                on_path[w] = True
                yield from extend(start, w)
                on_path[w] = False
                path.pop()

    for s in range(n):
        path = [s]
        on_path[s] = True
        yield from extend(s, s)
        on_path[s] = False


def simple_paths(adjacency, n, src, dst):
    """Yield every simple path src -> dst (node lists, len >= 2 entries).

    Oracle helper: max path weight between distinct nodes for checking
    closure entries at small n.
    """
    if src == dst:
        raise ValueError("simple_paths expects distinct endpoints")
    on_path = [False] * n
    path = [src]
    on_path[src] = True

    def extend(v):
        for w in adjacency[v]:
            if w == dst:
                yield path + [dst]
            elif not on_path[w]:
                path.append(w)
                on_path[w] = True
                yield from extend(w)
                on_path[w] = False
                path.pop()

    yield from extend(src)


def max_bipartite_matching(n, allowed):
    """Size of a maximum matching rows -> columns.

    ``allowed[i]`` lists the columns usable by row i.  Kuhn's augmenting
    path algorithm; O(n * E) which is plenty for feasibility checks.
    """
    match_col = [-1] * n

    def try_row(i, seen):
        for j in allowed[i]:
            if not seen[j]:
                seen[j] = True
                if match_col[j] == -1 or try_row(match_col[j], seen):
                    match_col[j] = i
                    return True
        return False

    size = 0
    for i in range(n):
        if try_row(i, [False] * n):
            size += 1
    return size
