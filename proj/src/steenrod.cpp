#include "bordism/steenrod.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace bordism::sq {

namespace {

std::mutex mu;
std::map<std::pair<int, int>, PartitionCombination> wu_memo;

struct KeyHash {
    size_t operator()(const std::pair<int, Partition>& k) const noexcept
    {
        return PartitionHash{}(k.second) * 31 + static_cast<size_t>(k.first);
    }
};
std::unordered_map<std::pair<int, Partition>, PartitionCombination, KeyHash> mono_memo;

PartitionCombination wu(int i, int j)
{
    PartitionCombination r;
    if (i == 0) {
        r.toggle(Partition{j});
        return r;
    }
    if (i > j)
        return r;
    for (int k = 0; k <= i; ++k) {
        long top = static_cast<long>(j) + k - i - 1;
        // top = -1 only at i = j, k = 0, giving w_j^2
        bool odd = top == -1 ? k == 0 : binom2(top, k);
        if (!odd)
            continue;
        std::vector<int> parts{j + k};
        if (i - k > 0)
            parts.push_back(i - k);
        r.toggle(Partition(std::move(parts)));
    }
    return r;
}

}  // namespace

const PartitionCombination& on_w(int i, int j)
{
    if (i < 0 || j < 1)
        throw std::invalid_argument("bad square index");
    std::lock_guard lk(mu);
    auto key = std::make_pair(i, j);
    auto it = wu_memo.find(key);
    if (it == wu_memo.end())
        it = wu_memo.emplace(key, wu(i, j)).first;
    return it->second;
}

PartitionCombination on_monomial(int i, const Partition& m)
{
    if (i == 0)
        return PartitionCombination{m};
    int deg = m.degree();
    if (i > deg)
        return {};
    if (m.length() == 1)
        return on_w(i, m.parts[0]);
    {
        std::lock_guard lk(mu);
        auto it = mono_memo.find({i, m});
        if (it != mono_memo.end())
            return it->second;
    }
    // Cartan on the first factor
    int j = m.parts[0];
    Partition rest;
    rest.parts.assign(m.parts.begin() + 1, m.parts.end());
    PartitionCombination r;
    for (int a = 0; a <= std::min(i, j); ++a) {
        if (i - a > deg - j)
            continue;
        r += on_w(a, j) * on_monomial(i - a, rest);
    }
    std::lock_guard lk(mu);
    mono_memo.emplace(std::make_pair(i, m), r);
    return r;
}

PartitionCombination on_poly(int i, const PartitionCombination& p)
{
    PartitionCombination r;
    for (auto& m : p.terms())
        r += on_monomial(i, m);
    return r;
}

PartitionCombination on_thom(int i, const PartitionCombination& p)
{
    // Sq^k U = w_k U
    PartitionCombination r;
    for (int a = 0; a <= i; ++a) {
        auto s = on_poly(a, p);
        if (s.empty())
            continue;
        r += a == i ? s : s * PartitionCombination{Partition{i - a}};
    }
    return r;
}

}  // namespace bordism::sq

namespace bordism {

F2Polynomial sq_on_w(int i, int j) { return from_partitions(sq::on_w(i, j)); }

F2Polynomial sq_on_poly(int i, const F2Polynomial& p)
{
    if (!p.is_homogeneous())
        throw std::invalid_argument("sq_on_poly needs a homogeneous polynomial");
    return from_partitions(sq::on_poly(i, to_partitions(p)));
}

ThomElement sq_on_thom(int i, const ThomElement& t)
{
    if (!t.poly.is_homogeneous())
        throw std::invalid_argument("sq_on_thom needs a homogeneous element");
    return {from_partitions(sq::on_thom(i, to_partitions(t.poly)))};
}

ThomElement milnor_q(int k, const ThomElement& t)
{
    if (k == 0)
        return sq_on_thom(1, t);
    if (k != 1)
        throw std::invalid_argument("only Q0 and Q1 are supported");
    auto p = to_partitions(t.poly);
    auto r = sq::on_thom(1, sq::on_thom(2, p)) + sq::on_thom(2, sq::on_thom(1, p));
    return {from_partitions(r)};
}

ThomElement iterated_sq(const SteenrodWord& word, const ThomElement& t)
{
    auto p = to_partitions(t.poly);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0)
            throw std::invalid_argument("negative square index");
        p = sq::on_thom(*it, p);
    }
    return {from_partitions(p)};
}

F2Polynomial iterated_sq(const SteenrodWord& word, const F2Polynomial& poly)
{
    auto p = to_partitions(poly);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0)
            throw std::invalid_argument("negative square index");
        p = sq::on_poly(*it, p);
    }
    return from_partitions(p);
}

}  // namespace bordism
