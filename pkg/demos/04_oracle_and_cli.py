# %% [markdown]
# # The bounded oracle, and the same pipeline from the command line
#
# The oracle knows nothing about Groebner bases: it solves a linear system
# over Q for cofactors of bounded degree.  When it says IN, the cofactors
# are the proof.  When it runs out of degree it says so and nothing more.

# %%
import subprocess
import sys
from pathlib import Path

from paraweyl import bounded_membership, parse_operator

gens = [parse_operator("x1*d1 - s1", 1, 1), parse_operator("x1", 1, 1)]
for text in ["s1 + 1", "s1", "x1^2*d1"]:
    res = bounded_membership(parse_operator(text, 1, 1), gens, 4)
    print(f"{text:>10}: {res.verdict.value}")

# %% [markdown]
# Everything above is also reachable through `python -m paraweyl`.

# %%
data = Path(__file__).parent / "data"
runs = [
    ["eliminate", data / "monomials.ideal"],
    ["verify-lemma24", data / "monomials.ideal", "--prime", "wrong"],
    ["dense-open", data / "product.ideal", "--samples", "3"],
    ["specialize", data / "product.ideal", "--point", "good"],
    ["thm22-h", data / "primary.ideal", "--index", "1"],
]
for argv in runs:
    argv = [str(a) for a in argv]
    proc = subprocess.run([sys.executable, "-m", "paraweyl", *argv], capture_output=True, text=True)
    print("$ paraweyl", " ".join(a if "/" not in a else Path(a).name for a in argv))
    print(proc.stdout.rstrip(), f"(exit {proc.returncode})\n")
