"""Linear quotients, colon ideals, and the decomposition function b.

Run:  python3 demos/01_linear_quotients.py
"""

from cellres import check_regularity, find_linear_quotient_order, parse_ideal
from cellres.ideals import OrderedIdeal

# A squarefree ideal in five variables, given in an order that works.
ideal = parse_ideal("x1*x3*x4, x1*x3*x5, x1*x2*x4, x1*x4*x5, x2*x3*x4, x2*x3*x5")
print("I =", ideal)

# Each colon ideal (m_1,...,m_{j-1}) : m_j is generated by variables;
# that is what "linear quotients" means for this order.
for j in range(1, ideal.k + 1):
    colon = sorted(ideal.colon_by_generator(j), key=lambda m: m.support())
    print("  (m_1..m_%d) : m_%d = <%s>" % (j - 1, j, ", ".join(map(str, colon))))

# set(m_j) collects the variable indices of those colons.
print("set table:", ideal.set_table())

# b(m) is the first generator in order dividing m.  It drives both the
# differential of the resolution and the geometry of its supporting
# complex.  Regularity (set(b(x_t m)) inside set(m)) is what makes the
# closed-form differential valid; it holds here.
report = check_regularity(ideal)
print("b regular:", report.regular, " commutation witnesses:", report.star_witnesses)

# Shuffle the generators and ask for a working order back.
shuffled = OrderedIdeal(ideal.n, list(reversed(ideal.gens)))
order = find_linear_quotient_order(shuffled)
print("recovered linear-quotient order (1-based):", order)

# Not every ideal has one.
print("order for <x1*x2, x3*x4>:", find_linear_quotient_order(parse_ideal("x1*x2, x3*x4")))
