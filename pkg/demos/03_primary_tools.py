# %% [markdown]
# # Multipliers for primary components
#
# In Q[s] the ideal (s^3 - s^2) splits as (s^2) ∩ (s - 1).  We build a
# polynomial that lies in the radical of the first component but not the
# component itself, then a separator that kills everything except it.

# %%
from paraweyl import CommIdeal, PrimaryComponentInput, lemma21_f, parse_comm, thm22_h


def comm_ideal(*gens, p=1):
    return CommIdeal([parse_comm(g, p) for g in gens], p)


first = PrimaryComponentInput(comm_ideal("s1^2"), comm_ideal("s1"))
second = PrimaryComponentInput(comm_ideal("s1 - 1"), comm_ideal("s1 - 1"))

f = lemma21_f(first)
print("f =", f)
print("  in the radical:", first.p.contains(f))
print("  outside q:", not first.q.contains(f))
print("  f * s1 in q:", first.q.contains(f * parse_comm("s1", 1)))

# %%
h = thm22_h([first, second], 0)
whole = first.q & second.q
print("h =", h)
print("  h outside (s1^2):", not first.q.contains(h))
print("  h * (s1) inside the whole ideal:", whole.contains(h * parse_comm("s1", 1)))

# %% [markdown]
# A component in two variables needs a higher power before it falls into q.

# %%
c = PrimaryComponentInput(comm_ideal("s1^3", "s1*s2", "s2^2", p=2), comm_ideal("s1", "s2", p=2))
print("f =", lemma21_f(c))
