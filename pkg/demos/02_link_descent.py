"""
Pushing a cycle into a link
===========================

If a cycle is not a boundary, neither is its restriction to the link of any
face of its support.  The restriction just drops the face from every term and
corrects the sign by the parity of moving that face to the front.
"""

# %%
from syzygy import SimplicialComplex, descend, find_nonbounding_cycle, is_boundary, reduced_homology_dim
from syzygy.homology import Chain

gamma = SimplicialComplex.from_names(["ab", "cd", "ce", "de"], "abcde")
sigma = Chain.from_names(gamma, {"cd": 1, "de": 1, "ce": -1})
print("sigma =", sigma, "  in", gamma)

# %%
for A in ["c", "d", "cd"]:
    out = descend(gamma, sigma, gamma.face(A))
    dim = out.sigma_A.dim
    print(f"A={A:3} link={str(out.link):8} sigma_A={str(out.sigma_A):10} "
          f"bounds={is_boundary(out.sigma_A)}  dim H_{dim}={reduced_homology_dim(out.link, dim)}")

# %%
# A zero-dimensional cycle that is not top-dimensional behaves differently:
# its restriction to lk(a) = <b> is the empty face, and [b] bounds it.
zero = Chain.from_names(gamma, {"a": 1, "c": -1})
out = descend(gamma, zero, gamma.face("a"))
print("a - c over a:", out.sigma_A, "in", out.link, "bounds:", is_boundary(out.sigma_A))

# %%
# A two-dimensional example: the cycle of the complex below lives on eight
# triangles.  Every face of its support passes the descent test.
delta = SimplicialComplex.from_names(["acd", "ace", "ade", "bcd", "bce", "bde", "ab"], "abcde")
cycle = find_nonbounding_cycle(delta, 2)
print("cycle:", cycle)
bad = [A for A in sorted(delta.faces) if set(A) <= set().union(*map(set, cycle.support))
       and any(set(A) <= set(F) for F in cycle.support)
       and is_boundary(descend(delta, cycle, A).sigma_A)]
print("faces whose descended cycle bounds:", bad)
