# %% [markdown]
# # Where do the fibres survive?
#
# Take J = (x1*d1 - s1, x2*d2 - s2, x1*x2).  Setting s to a point alpha gives
# an ideal of the ordinary Weyl algebra, and the quotient is nonzero only
# when alpha lies on the zero set of (s1+1)(s2+1).  Here we certify this on
# the component s1 = -1.

# %%
from fractions import Fraction

from paraweyl import (
    CommIdeal,
    LeftIdealPresentation,
    RationalPoint,
    dense_open_certificate,
    fiber_nonzero,
    parse_comm,
    parse_operator,
    specialize_gb,
)
from paraweyl.errors import PreconditionError

J = LeftIdealPresentation(
    [parse_operator(g, 2, 2) for g in ["x1*d1 - s1", "x2*d2 - s2", "x1*x2"]], 2, 2
)
p = CommIdeal([parse_comm("s1 + 1", 2)], 2)

# %%
cert = dense_open_certificate(J, p, count=8)
print("basis of J + Rp:")
for P in cert.basis:
    print("   ", P)
print("h =", cert.h)
for sample in cert.samples:
    verdict = "NONZERO" if sample.nonzero else "ZERO"
    print(f"  {sample.point}: {verdict}")

# %% [markdown]
# Away from Z((s1+1)(s2+1)) the fibre collapses.  The point (2, -1) sits on
# the other component s2 = -1, so its fibre survives.  On Z(h) the
# specialization of the basis is refused with h as the witness.

# %%
for alpha in ([0, 0], [Fraction(1, 2), 3], [2, -1]):
    print(RationalPoint(alpha), "NONZERO" if fiber_nonzero(J, alpha) else "ZERO")

try:
    specialize_gb(cert.basis, p, [-1, -1])
except PreconditionError as exc:
    print("refused at (-1, -1):", exc, "| witness:", exc.witness)
