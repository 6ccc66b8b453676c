# coding: utf-8

# # Planar wheel-like bricks on few vertices
#
# Generate every connected graph on 4 and 6 vertices, keep the planar
# bricks and look for wheel-like ones. Only K4 and W5 turn up.

# In[1]:

import numpy as np

from brickwork.census import generate_connected_graphs, verify_main_theorem, analyze
from brickwork.io import parse_any


# In[2]:

graphs = [G for n in (4, 6) for G in generate_connected_graphs(n)]
verdict = verify_main_theorem(graphs)
print(verdict.checked, "graphs,", verdict.planar_bricks, "planar bricks")
print("wheel-like:", verdict.wheel_like, "passed:", verdict.passed)


# Removable class counts against maximum degree, over all bricks in the set.

# In[3]:

reports = [analyze(G) for G in graphs]
bricks = [r for r in reports if r.brick]
slack = np.array([r.removable_class_count - r.max_degree for r in bricks])
print(len(bricks), "bricks; smallest surplus of classes over max degree:", slack.min())


# In[4]:

for s in verdict.wheel_like:
    print(s, analyze(parse_any(s)).hubs)
