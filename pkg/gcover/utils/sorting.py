def dependency_sort(initial, dependencies, key=None):
    """
    Orders `initial` and everything reachable through `dependencies` so each
    node comes after all of its dependencies. Nodes that become ready at the
    same time are ordered by `key` (default: the nodes themselves), so the
    result is deterministic.
    """
    key = key or (lambda node: node)
    # Collect the full graph first
    edges = {}
    pending = list(initial)
    while pending:
        node = pending.pop()
        if node in edges:
            continue
        edges[node] = [dep for dep in dependencies(node) if dep is not None]
        pending.extend(dep for dep in edges[node] if dep not in edges)
    # Repeatedly take every node whose dependencies are all placed
    result = []
    placed = set()
    while len(result) < len(edges):
        ready = sorted(
            (node for node, deps in edges.items() if node not in placed and all(dep in placed for dep in deps)),
            key=key,
        )
        if not ready:
            stuck = sorted((node for node in edges if node not in placed), key=key)
            raise ValueError("Circular dependency detected between: {}".format(stuck))
        result.extend(ready)
        placed.update(ready)
    return result
