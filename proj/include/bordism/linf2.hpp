#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bordism {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o)
    {
        for (size_t k = 0; k < w_.size(); ++k)
            w_[k] ^= o.w_[k];
        return *this;
    }
    bool any() const;
    bool none() const { return !any(); }
    size_t count() const;
    int lowest() const { return next(0); }
    int next(size_t from) const;  // first set bit >= from, or -1
    bool dot(const BitVec& o) const;
    std::vector<int> ones() const;

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }
    bool operator==(const BitVec&) const = default;

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
    explicit BitMatrix(size_t cols) : cols_(cols) {}

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    BitVec& operator[](size_t i) { return rows_[i]; }
    const BitVec& operator[](size_t i) const { return rows_[i]; }
    void push_back(BitVec v);
    const std::vector<BitVec>& row_list() const { return rows_; }
    bool operator==(const BitMatrix&) const = default;

    static BitMatrix identity(size_t n);
    BitMatrix operator*(const BitMatrix& o) const;
    BitVec apply(const BitVec& v) const;  // M v

private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct Rref {
    BitMatrix R;  // nonzero rows only, ordered by pivot
    std::vector<int> pivots;
};

Rref rref(const BitMatrix& m);
size_t rank(const BitMatrix& m);
BitMatrix nullspace(const BitMatrix& m);  // rows span {x : m x = 0}
std::vector<int> quotient_complement(const BitMatrix& span);
bool member(const BitVec& v, const BitMatrix& span);

// Row space grown one vector at a time. Each stored row has its lowest set bit
// as pivot, so reduce() yields the canonical representative of v + S with no
// pivot bits set.
class Subspace {
public:
    explicit Subspace(size_t dim = 0) : dim_(dim), piv_(dim, -1) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }
    bool insert(const BitVec& v);
    bool contains(const BitVec& v) const { return reduce(v).none(); }
    BitVec reduce(BitVec v) const;
    bool contains_all(const Subspace& o) const;
    bool operator==(const Subspace& o) const { return rank() == o.rank() && contains_all(o); }
    BitMatrix basis() const;  // reduced row echelon, pivots ascending
    std::vector<int> pivots() const;

private:
    size_t dim_;
    std::vector<int> piv_;
    std::vector<BitVec> rows_;
};

}  // namespace bordism
