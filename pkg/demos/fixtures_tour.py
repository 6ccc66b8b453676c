# coding: utf-8

# # Bricks, removable classes and hubs
#
# A tour of the five fixture graphs: which edges can be deleted while the
# graph stays matching covered, and which vertices touch every such class.

# In[1]:

from brickwork import named_graph, is_brick, removable_classes, wheel_like_hubs
from brickwork.matching import enumerate_perfect_matchings


# Each fixture is a brick. The number of perfect matchings grows quickly even
# on eight vertices.

# In[2]:

for name in ("k4", "w5", "w7", "c6bar", "r8"):
    G = named_graph(name)
    print(name, G.n, G.m, "brick" if is_brick(G) else "-", len(enumerate_perfect_matchings(G)), "perfect matchings")


# Removable classes: a single edge, or a doubleton that only works as a pair.
# The odd wheels have only spokes; K4 and C6bar have only doubletons.

# In[3]:

for name in ("k4", "w5", "w7", "c6bar", "r8"):
    G = named_graph(name)
    print(name, [str(c) for c in removable_classes(G)])


# A hub meets an edge of every removable class. Odd wheels have exactly one,
# K4 has four, C6bar and R8 have none.

# In[4]:

for name in ("k4", "w5", "w7", "c6bar", "r8"):
    print(name, "hubs:", wheel_like_hubs(named_graph(name)))
