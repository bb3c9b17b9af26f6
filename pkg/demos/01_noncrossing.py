"""Noncrossing partitions: counts, the Kreweras complement and Moebius values."""

from graphfree import (alt_union, catalan, cumulants_to_moments, enumerate_nc,
                       format_partition, kreweras, moebius, moments_to_cumulants,
                       parse_partition, top)

for n in range(1, 9):
    print(f"|NC({n})| = {len(enumerate_nc(n))} (Catalan {catalan(n)})")

pi = parse_partition("1,4,5|2,3|6,8|7", 8)
kr = kreweras(pi)
print("\npi      =", format_partition(pi))
print("Kr(pi)  =", format_partition(kr))
# pi on the odd points, Kr(pi) on the even points of 1..16
print("union   =", format_partition(alt_union(pi, kr)))
print("Kr(Kr(pi)) is pi rotated:", format_partition(kreweras(kr)))

bottom4 = enumerate_nc(4)[0]
print("\nmu(0_4, 1_4) =", moebius(bottom4, top(4)))

# semicircle: only the second cumulant survives
m = cumulants_to_moments([0, 1, 0, 0, 0, 0, 0, 0])
print("moments of k = (0,1,0,...):", [int(x) for x in m])
print("back to cumulants:", [int(x) for x in moments_to_cumulants(m)])
