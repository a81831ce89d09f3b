"""N-independent normalised averages and their dualities."""
from betaqt import superint
from betaqt.partitions import partitions_of

for n in (2, 3, 4):
    for kappa in partitions_of(n):
        print(kappa, "jack:", superint.duality_check_jack(kappa),
              "macdonald:", superint.duality_check_macdonald(kappa))
print("characteristic polynomial N=3 =", superint.char_poly_average(3))
