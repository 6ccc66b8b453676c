# coding: utf-8

# # Splicing two odd wheels
#
# Glue W5 at its hub to W5 at a rim vertex whose spoke has three copies.
# The result is a 10-vertex brick that is wheel-like yet not planar.

# In[1]:

from brickwork.census import WheelSpliceInstance, wheel_splice_predicate, wheel_splice_census
from brickwork.census.wheels import nonplanarity_witness
from brickwork import is_brick, is_planar, wheel_like_hubs
from brickwork.planarity import validate_witness


# In[2]:

theta = ((5, 0), (6, 5), (7, 4), (8, 6), (9, 7))
inst = WheelSpliceInstance(5, 5, (1, 1, 1, 1, 1), (3, 1, 1, 1, 1), 5, 0, theta)
W = inst.graph
print(W.n, "vertices,", W.m, "edges; brick:", is_brick(W), "planar:", is_planar(W))
print("hubs:", wheel_like_hubs(W), "closed form says wheel-like:", wheel_splice_predicate(inst))


# The K3,3 subdivision is built around the two rim vertices that receive the
# rim edges, plus the hub of the other wheel.

# In[3]:

w = nonplanarity_witness(inst)
print(w.kind, "branch", w.branch, "valid:", validate_witness(W, w))


# A small family, compared against brute force. The full run over rims of
# length 3, 5 and 7 is `brickwork verify --suite wiwj`.

# In[4]:

v = wheel_splice_census((3, 5), max_multiplicity=1)
print({k: v.summary()[k] for k in ("instances", "bricks", "wheel_like", "passed")})
