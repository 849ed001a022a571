"""Tour of the built-in splitting schemes and their validation reports.

Each scheme approximates e^{(H1 + i H2) t} by alternating dissipative
factors (complex coefficients a_i, positive real part) with unitary
factors (real positive coefficients b_i).  Higher order needs complex
a_i: beyond order two no real choice keeps every dissipative step
stable.
"""
from wavesplit.schemes import builtin_schemes, validate_scheme

for scheme in builtin_schemes():
    print(f"\n{scheme.name}  (order {scheme.order}, "
          f"{len(scheme.a)} dissipative / {len(scheme.b)} unitary stages)")
    print(f"  sum a = {sum(scheme.a):.15g}")
    print(f"  sum b = {sum(scheme.b):.15g}")
    print("  a[0] =", scheme.a[0])
    print("  a[-1] =", scheme.a[-1])

print("\nvalidation:")
for scheme in builtin_schemes():
    print(" ", validate_scheme(scheme).summary())
