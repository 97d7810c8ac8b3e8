#pragma once

#include <vector>

#include "bordism/f2poly.hpp"
#include "bordism/partitions.hpp"

namespace bordism {

using SteenrodWord = std::vector<int>;  // (i1, i2, ...) = Sq^i1 Sq^i2 ...

// Lucas: binom(n, k) mod 2 for n >= 0
inline bool binom2(long n, long k) { return k >= 0 && n >= k && (k & ~n) == 0; }

F2Polynomial sq_on_w(int i, int j);
F2Polynomial sq_on_poly(int i, const F2Polynomial& p);
ThomElement sq_on_thom(int i, const ThomElement& t);
ThomElement milnor_q(int k, const ThomElement& t);
ThomElement iterated_sq(const SteenrodWord& word, const ThomElement& t);
F2Polynomial iterated_sq(const SteenrodWord& word, const F2Polynomial& p);

// same operations on w-polynomials stored as index multisets
namespace sq {
const PartitionCombination& on_w(int i, int j);
PartitionCombination on_monomial(int i, const Partition& m);
PartitionCombination on_poly(int i, const PartitionCombination& p);
PartitionCombination on_thom(int i, const PartitionCombination& p);
}  // namespace sq

}  // namespace bordism
