#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bordism/f2poly.hpp"
#include "bordism/linf2.hpp"
#include "bordism/partitions.hpp"

namespace bordism {

enum class Spectrum { MO, MSO, MSPINC, MSPIN };

std::string to_string(Spectrum s);
Spectrum parse_spectrum(const std::string& s);

struct IdealGenerator {
    int degree;
    PartitionCombination poly;  // w-polynomial as index multisets, with w1 set to 0
};

// H*(M; F2) as a quotient of F2[w1, w2, ...] U, valid through max_degree.
//
// Each ideal generator is w_j plus terms in lower variables (w1, w2, w3 and
// θ_k = w_{2^k+1} + ...), so the leading variables are pairwise coprime and the
// quotient is the polynomial ring on the remaining "standard" variables. The
// normal form substitutes each eliminated variable by its tail.
class Presentation {
public:
    Presentation(Spectrum s, int max_degree);

    Spectrum spectrum() const { return spectrum_; }
    int max_degree() const { return d_; }
    const std::vector<IdealGenerator>& generators() const { return gens_; }

    bool eliminated(int j) const { return eliminated_.at(j); }
    const PartitionIndex& basis(int n) const { return basis_.at(n); }
    size_t dim(int n) const { return basis_.at(n).size(); }

    // normal form of w_j, in quotient coordinates of degree j
    const BitVec& rho_w(int j) const { return rho_w_.at(j); }
    BitVec normal_form(const PartitionCombination& wpoly, int n) const;
    BitVec normal_form(const ThomElement& t) const;
    PartitionCombination representative(const BitVec& coords, int n) const;
    // normal forms of every degree-n w-monomial, indexed like enumerate_partitions(n, false)
    const std::vector<BitVec>& monomial_normal_forms(int n) const;

    // degreewise span of the ideal inside all degree-n w-monomials
    BitMatrix ideal_subspace(int n) const;

    BitVec unit() const;
    BitVec mul(const BitVec& a, int da, const BitVec& b, int db) const;
    // multiply by a standard monomial
    BitVec mul_monomial(const Partition& m, const BitVec& b, int db) const;

private:
    void build_tables();

    Spectrum spectrum_;
    int d_;
    std::vector<IdealGenerator> gens_;
    std::vector<bool> eliminated_;
    std::vector<PartitionIndex> basis_;
    std::vector<std::vector<std::vector<int>>> mulvar_;  // [j][n][i] -> index in degree n + j
    std::vector<BitVec> rho_w_;
    mutable std::mutex mu_;
    mutable std::vector<std::unique_ptr<std::vector<BitVec>>> mono_nf_;
    mutable std::vector<std::unique_ptr<PartitionIndex>> all_idx_;
};

}  // namespace bordism
