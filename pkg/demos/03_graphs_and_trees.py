"""A small road network, then a binary search tree."""

# %%
from mdsl import graph as G
from mdsl.graph import Graph

roads = [("A", "B", 4), ("A", "C", 1), ("C", "B", 2), ("B", "D", 5), ("C", "D", 8)]
# store each road in both directions so the graph is undirected
g = Graph("ABCD", roads + [(d, s, w) for s, d, w in roads])
print(G.convert(g))
print("undirected:", G.is_undirected(g))

# %%
print("shortest distances from A:", G.dijkstra(g, "A"))
print("bfs:", G.bfs(g, "A"), "dfs:", G.dfs(g, "A"))

# %%
mst = G.prim(g)
print("prim:", mst, "weight", G.total_weight(mst))
print("kruskal weight:", G.total_weight(G.kruskal(g)))

# %%
# Degrees count both directions, so every undirected graph passes the parity test.
print("euler circuit:", G.has_euler_circuit(g))
print("hamiltonian circuit:", G.has_hamiltonian_circuit(g))
one_way = Graph([1, 2, 3], [(1, 2, 1), (2, 3, 1)])
print("path 1->2->3, euler path but no circuit:", G.has_euler_path_not_circuit(one_way))

# %%
from mdsl import tree as T
from mdsl.frontend import render

t = T.from_list([4, 2, 7, 1, 3, 5, 8, 6])
print(render(t))
print("preorder", T.preorder(t))
print("inorder", T.inorder(t))
print("contains 7:", T.search(t, 7), "contains 9:", T.search(t, 9))
print("balanced:", T.is_balanced(t), "height:", T.height(t))
print("mirror inorder", T.inorder(T.reflect(t)))
