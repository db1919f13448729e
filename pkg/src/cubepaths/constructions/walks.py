import networkx as nx
import numpy as np

from cubepaths.config import MAX_EULER_DIM, VERTEX_DTYPE
from cubepaths.cube import Decomposition, all_vertices, check_dim, coordinate_bit, num_edges


def hypercube_graph(n: int) -> nx.Graph:
    """``Q_n`` with integer vertices, edges inserted coordinate by coordinate."""
    graph = nx.Graph()
    vertices = all_vertices(n)
    graph.add_nodes_from(vertices.tolist())
    for i in range(1, n + 1):
        lo = vertices[(vertices & coordinate_bit(i)) == 0]
        graph.add_edges_from(zip(lo.tolist(), (lo | coordinate_bit(i)).tolist()))
    return graph


def eulerian_walk_decomposition(n: int, k: int) -> Decomposition:
    """Cut an Eulerian circuit of ``Q_n`` (``n`` even) into walks of length ``k``.

    Works for every ``k`` dividing ``n 2^(n-1)``; the pieces are walks, not paths.
    """
    n = check_dim(n)
    if n % 2:
        raise ValueError(f"Q_{n} has odd degree and no Eulerian circuit")
    if n > MAX_EULER_DIM:
        raise ValueError(f"Eulerian circuits are limited to n <= {MAX_EULER_DIM}")
    if k < 1 or num_edges(n) % k:
        raise ValueError(f"k={k} does not divide the {num_edges(n)} edges of Q_{n}")
    circuit = [0] + [v for _, v in nx.eulerian_circuit(hypercube_graph(n), source=0)]
    vertices = np.array(circuit, dtype=VERTEX_DTYPE)
    index = np.arange(num_edges(n) // k)[:, None] * k + np.arange(k + 1)[None, :]
    return Decomposition(n, k, vertices[index])
