#pragma once

#include <map>
#include <string>
#include <vector>

#include "bordism/linf2.hpp"
#include "bordism/partitions.hpp"
#include "bordism/spectra.hpp"
#include "bordism/symm.hpp"

namespace bordism {

struct GeneratorRecord {
    int degree = 0;
    PartitionCombination element;  // in Thom's basis {Y_λ}
    bool torsion = false;
    std::string name;  // Z_n for a single λ⊔λ, T_n otherwise

    bool operator==(const GeneratorRecord&) const = default;
};

struct SearchOptions {
    bool torsion = false;              // seed with (Q0,Q1)-torsion and flag generators
    bool polynomial_fallback = false;  // seed with all torsion polynomials, not just monomials
};

// Degreewise computation of im(π_* M -> 𝔑_*) in Thom's basis.
//
// In degree n the decomposables D_n = A^+ H^*(M) are spanned by Sq^i(bU) over
// quotient monomials b of degree n - i. A class y in 𝔑_n is in the image iff
// the functional it defines on H^n(M) kills D_n; that functional sends P_λ U
// to the Y_λ-coordinate, so the image is N·Ann(D_n) with N[λ] = ρ(P_λ).
class ImageSearch {
public:
    ImageSearch(Spectrum s, int max_degree, Symm& symm, SearchOptions opt = {});

    void run();

    Spectrum spectrum() const { return spectrum_; }
    int max_degree() const { return d_; }
    const std::vector<GeneratorRecord>& generators() const { return gens_; }
    const PartitionIndex& lambda(int n) const { return lambda_.at(n); }
    const Subspace& image(int n) const { return image_.at(n); }
    const Subspace& torsion(int n) const { return torsion_.at(n); }  // empty unless opt.torsion
    size_t quotient_dim(int n) const { return pres_.dim(n); }
    size_t decomposable_rank(int n) const { return drank_.at(n); }
    const Presentation& presentation() const { return pres_; }

private:
    void build_squares();
    BitVec sq_thom(int i, const BitVec& x, int n) const;
    std::vector<BitVec> torsion_seed(int n) const;
    BitMatrix rho_p_lambda(int n) const;
    void choose_generators(int n);

    Spectrum spectrum_;
    int d_, top_;
    Symm& symm_;
    SearchOptions opt_;
    Presentation pres_;
    // sqU_[m][b][i] = Sq^i(bU) for quotient monomial b of degree m
    std::vector<std::vector<std::vector<BitVec>>> sqU_;
    std::vector<PartitionIndex> lambda_;
    std::vector<Subspace> image_, torsion_;
    std::vector<size_t> drank_;
    std::vector<GeneratorRecord> gens_;
};

std::vector<GeneratorRecord> compute_image(Spectrum s, int d, Symm& symm);
std::vector<GeneratorRecord> compute_torsion_flags(Spectrum s, int d, Symm& symm, bool polynomial_fallback = false);

// coordinates over the non-dyadic partitions of n; throws on a foreign term
BitVec to_vector(const PartitionCombination& c, const PartitionIndex& lambda);
PartitionCombination from_vector(const BitVec& v, const PartitionIndex& lambda);

struct GeneratorMonomial {
    std::vector<int> factors;  // indices into the record list, non-decreasing
    PartitionCombination element;
    bool has_torsion = false;
};
std::vector<GeneratorMonomial> generator_monomials(const std::vector<GeneratorRecord>& records, int n);
std::string monomial_name(const std::vector<GeneratorRecord>& records, const std::vector<int>& factors);

// span of all products of generators of total degree n
Subspace image_subspace(const std::vector<GeneratorRecord>& records, int n, bool torsion_only = false);

struct TorsionRankTable {
    std::map<int, int> ranks;
    static TorsionRankTable published();  // degrees 0..33
};

struct CrosscheckRow {
    int degree, expected, computed;
    bool ok;
};
struct CrosscheckReport {
    std::vector<CrosscheckRow> rows;
    bool ok = true;
};
CrosscheckReport rank_crosscheck(const std::vector<GeneratorRecord>& records, const TorsionRankTable& table, int d);

struct Relation {
    enum class Kind { Beta, Two, Square } kind;
    std::string generator;
    std::vector<std::vector<int>> u_terms;  // Square only: each term a list of Z indices
    std::string text() const;
};

struct PresentationReport {
    Spectrum spectrum = Spectrum::MSPINC;
    int max_degree = 0;
    std::vector<GeneratorRecord> generators;  // includes formal beta in degree 2
    std::vector<Relation> relations;
};

PresentationReport assemble_presentation(const std::vector<GeneratorRecord>& records, int d,
                                         Spectrum s = Spectrum::MSPINC);

struct DoldMembership {
    bool in_image = false, torsion = false;
};
DoldMembership check_dold_membership(int i, const std::vector<GeneratorRecord>& records, Symm& symm);

}  // namespace bordism
