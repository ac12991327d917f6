# The mathematical layer: exact algebra, factorial bases, difference operators,
# Fischer decompositions, the quaternionic operators and the claim registry.
