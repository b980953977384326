"""The finite field pipeline on a B6 ideal arrangement, step by step.

The ideal is specified by the generating boxes of its complement.  The
pipeline: diagram and signatures -> block partition -> weighted point counts
at a plan of valid primes -> exact Lagrange interpolation -> coboundary
polynomial -> Tutte polynomial -> characteristic polynomial and regions.
"""

from idealtutte import (
    arrangement_of,
    coboundary_polynomial,
    coboundary_to_tutte,
    complement,
    generating_boxes,
    ideal_from_boxes,
    partition_in_accordance,
    prime_plan,
    region_count,
    root_poset,
    root_system_type,
    signature_table,
    tutte_to_characteristic,
)
from idealtutte.ffmethod import coboundary_ideal_at_prime

poset = root_poset(root_system_type("B", 6))
ideal = ideal_from_boxes(poset, [(1, 4), (2, 0), (4, -5)])
comp = complement(ideal)

print(f"ideal of B6 with |I| = {len(ideal)}; complement has {len(comp)} hyperplanes:")
print("  ", sorted(comp.tuple_set()))
print("generating boxes:", generating_boxes(comp))

print("\nsignatures (which generating box sets mention each integer):")
for x, s in signature_table(comp).items():
    print(f"  s({x:3d}) = {sorted(s)}")

bp = partition_in_accordance(comp)
print("\npartition in accordance:", " | ".join(str(set(b)) for b in bp.blocks))
print("A-block adjacency R:", bp.r_sets, " B-block adjacency R_A:", bp.ra_sets, "S:", bp.s_sets)
print("zero column sets R0:", bp.r0, "S0:", bp.s0)

rank = arrangement_of(ideal).rank()
plan = prime_plan("B", rank)
print(f"\nrank {rank}; prime plan {plan.primes}")
p = plan.primes[0]
profile = coboundary_ideal_at_prime(bp, p)
print(f"chi-bar({p}, t) = {profile.to_text('t')}")

cb = coboundary_polynomial(ideal)
print(f"\ncoboundary polynomial has {len(cb.coeffs)} terms; chi-bar(q, 1) = q^{rank}:",
      cb.evaluate(97, 1) == 97 ** rank)

tutte = coboundary_to_tutte(cb, rank)
print(f"Tutte polynomial T(x, y), {len(tutte.coeffs)} terms:")
print(" ", tutte.to_text())
print("T(2,2) = 2^#hyperplanes:", tutte.evaluate(2, 2) == 2 ** len(comp))

chi = tutte_to_characteristic(tutte, 6, rank)
print("\ncharacteristic polynomial:", chi.to_text("q"))
print("regions:", region_count(tutte, 6, rank))
