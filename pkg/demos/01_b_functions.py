# %% [markdown]
# # b-functions by elimination
#
# The operator x*d - a*s kills x^(a*s).  Adding the function itself (x^a)
# and eliminating x and d leaves a polynomial in s alone: the b-function
# of x^a, up to the usual shift.

# %%
from paraweyl import buchberger_r, eliminate_to_a, parse_operator, LeftIdealPresentation
from paraweyl.oracle import bounded_membership, expand_witness
from paraweyl.weyl import WeylOperator


def left_ideal(gens, n, p):
    return LeftIdealPresentation([parse_operator(g, n, p) for g in gens], n, p)


# %%
cases = {
    "x^s": left_ideal(["x1*d1 - s1", "x1"], 1, 1),
    "x^(2s)": left_ideal(["x1*d1 - 2*s1", "x1^2"], 1, 1),
    "x1^s1 * x2^s2": left_ideal(["x1*d1 - s1", "x2*d2 - s2", "x1*x2"], 2, 2),
}

for name, J in cases.items():
    G = buchberger_r(J)
    print(f"{name}: reduced basis has {len(G)} elements")
    for g in G:
        print("   ", g)
    print("  eliminant:", *eliminate_to_a(G).generators)

# %% [markdown]
# The basis alone is a claim.  The bounded oracle searches for explicit
# cofactors, which we can multiply back out.

# %%
J = cases["x^(2s)"]
b = eliminate_to_a(buchberger_r(J)).generators[0]
target = WeylOperator.from_comm(b, 1)
res = bounded_membership(target, J.generators, 6)
print(res.verdict.value, "at degree", res.bound)
for c, g in zip(res.cofactors, J.generators):
    print(f"  ({c}) * ({g})")
print("sums back to the target:", expand_witness(res.cofactors, J.generators) == target)
