#include "bordism/linf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace bordism {

bool BitVec::any() const
{
    for (auto x : w_)
        if (x)
            return true;
    return false;
}

size_t BitVec::count() const
{
    size_t c = 0;
    for (auto x : w_)
        c += std::popcount(x);
    return c;
}

int BitVec::next(size_t from) const
{
    if (from >= n_)
        return -1;
    size_t k = from >> 6;
    uint64_t x = w_[k] & (~uint64_t(0) << (from & 63));
    while (true) {
        if (x)
            return static_cast<int>(k * 64 + std::countr_zero(x));
        if (++k == w_.size())
            return -1;
        x = w_[k];
    }
}

bool BitVec::dot(const BitVec& o) const
{
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); ++k)
        acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
}

std::vector<int> BitVec::ones() const
{
    std::vector<int> r;
    for (int i = lowest(); i >= 0; i = next(i + 1))
        r.push_back(i);
    return r;
}

void BitMatrix::push_back(BitVec v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("row width mismatch");
    rows_.push_back(std::move(v));
}

BitMatrix BitMatrix::identity(size_t n)
{
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m[i].set(i);
    return m;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const
{
    if (cols_ != o.rows())
        throw std::invalid_argument("dimension mismatch");
    BitMatrix r(rows(), o.cols());
    for (size_t i = 0; i < rows(); ++i)
        for (int k = rows_[i].lowest(); k >= 0; k = rows_[i].next(k + 1))
            r[i] ^= o[k];
    return r;
}

BitVec BitMatrix::apply(const BitVec& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("width mismatch");
    BitVec r(rows());
    for (size_t i = 0; i < rows(); ++i)
        if (rows_[i].dot(v))
            r.set(i);
    return r;
}

BitVec Subspace::reduce(BitVec v) const
{
    if (v.size() != dim_)
        throw std::invalid_argument("width mismatch");
    for (int p = v.lowest(); p >= 0; p = v.next(p + 1))
        if (piv_[p] >= 0)
            v ^= rows_[piv_[p]];
    return v;
}

bool Subspace::insert(const BitVec& v)
{
    BitVec r = reduce(v);
    int p = r.lowest();
    if (p < 0)
        return false;
    piv_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

bool Subspace::contains_all(const Subspace& o) const
{
    for (auto& r : o.rows_)
        if (!contains(r))
            return false;
    return true;
}

std::vector<int> Subspace::pivots() const
{
    std::vector<int> p;
    for (size_t c = 0; c < dim_; ++c)
        if (piv_[c] >= 0)
            p.push_back(static_cast<int>(c));
    return p;
}

BitMatrix Subspace::basis() const
{
    auto piv = pivots();
    std::vector<BitVec> rows;
    rows.reserve(piv.size());
    for (int p : piv)
        rows.push_back(rows_[piv_[p]]);
    // back-substitute so every pivot column is a unit column
    for (size_t i = rows.size(); i-- > 0;)
        for (size_t k = i + 1; k < rows.size(); ++k)
            if (rows[i].test(piv[k]))
                rows[i] ^= rows[k];
    BitMatrix m(dim_);
    for (auto& r : rows)
        m.push_back(std::move(r));
    return m;
}

Rref rref(const BitMatrix& m)
{
    Subspace s(m.cols());
    for (auto& r : m.row_list())
        s.insert(r);
    return {s.basis(), s.pivots()};
}

size_t rank(const BitMatrix& m)
{
    Subspace s(m.cols());
    for (auto& r : m.row_list())
        s.insert(r);
    return s.rank();
}

BitMatrix nullspace(const BitMatrix& m)
{
    auto [R, piv] = rref(m);
    std::vector<char> is_piv(m.cols(), 0);
    for (int p : piv)
        is_piv[p] = 1;
    BitMatrix ns(m.cols());
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f])
            continue;
        BitVec v(m.cols());
        v.set(f);
        for (size_t i = 0; i < R.rows(); ++i)
            if (R[i].test(f))
                v.set(piv[i]);
        ns.push_back(std::move(v));
    }
    return ns;
}

std::vector<int> quotient_complement(const BitMatrix& span)
{
    auto piv = rref(span).pivots;
    std::vector<int> out;
    size_t j = 0;
    for (int c = 0; c < static_cast<int>(span.cols()); ++c) {
        if (j < piv.size() && piv[j] == c) {
            ++j;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

bool member(const BitVec& v, const BitMatrix& span)
{
    if (v.size() != span.cols())
        throw std::invalid_argument("width mismatch");
    Subspace s(span.cols());
    for (auto& r : span.row_list())
        s.insert(r);
    return s.contains(v);
}

}  // namespace bordism
