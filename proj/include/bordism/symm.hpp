#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "bordism/f2poly.hpp"
#include "bordism/linf2.hpp"
#include "bordism/partitions.hpp"

namespace bordism {

struct TransitionMatrix {
    enum class Direction { MInE, EInM };

    int degree = 0;
    Direction direction = Direction::MInE;
    std::shared_ptr<const PartitionIndex> partitions;  // all partitions of degree, canonical order
    // MInE: m_λ = Σ_μ bits[λ][μ] e_μ.  EInM: e_μ = Σ_λ bits[μ][λ] m_λ.
    BitMatrix bits;
};

class Symm {
public:
    static constexpr uint32_t cache_version = 1;

    // empty cache_dir disables the disk cache
    explicit Symm(std::string cache_dir = "", unsigned threads = 0);

    const TransitionMatrix& monomial_to_elementary(int n);
    const TransitionMatrix& elementary_to_monomial(int n);
    const PartitionIndex& partitions(int n) { return *monomial_to_elementary(n).partitions; }

    // P_λ with e_i read as w_i, as index multisets (w-monomial form)
    PartitionCombination p_lambda_parts(const Partition& lambda);
    F2Polynomial p_lambda(const Partition& lambda);
    ThomElement thom_basis_element(const Partition& lambda);
    // coordinates in the m-basis of a homogeneous w-polynomial, w_i read as e_i
    PartitionCombination express_in_m_basis(const F2Polynomial& p);
    BitVec express_in_m_basis(const BitVec& wcoords, int n);

    const std::string& cache_dir() const { return dir_; }

private:
    struct Pair {
        TransitionMatrix m_in_e, e_in_m;
    };
    const Pair& get(int n);
    std::unique_ptr<Pair> build(int n);
    bool load(int n, Pair& out) const;
    void store(const Pair& p) const;

    std::string dir_;
    unsigned threads_;
    std::mutex mu_;
    std::map<int, std::unique_ptr<Pair>> tables_;
};

}  // namespace bordism
