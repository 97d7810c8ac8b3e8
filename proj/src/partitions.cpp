#include "bordism/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bordism {

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
    for (int x : parts)
        if (x <= 0)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::degree() const
{
    int s = 0;
    for (int x : parts)
        s += x;
    return s;
}

bool Partition::nondyadic() const
{
    return std::none_of(parts.begin(), parts.end(), is_dyadic);
}

bool canonical_less(const Partition& a, const Partition& b)
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    return std::lexicographical_compare(b.parts.begin(), b.parts.end(), a.parts.begin(), a.parts.end());
}

size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    uint64_t h = 1469598103934665603ull;
    for (int x : p.parts) {
        h ^= static_cast<uint64_t>(x);
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h ^ (h >> 29));
}

namespace {

void gen(int rest, int maxpart, const std::vector<bool>& allowed, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (rest == 0) {
        Partition p;
        p.parts = cur;
        out.push_back(std::move(p));
        return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
        if (!allowed[k])
            continue;
        cur.push_back(k);
        gen(rest - k, k, allowed, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions_if(int n, const std::vector<bool>& allowed)
{
    if (n < 0)
        throw std::invalid_argument("negative degree");
    if (static_cast<int>(allowed.size()) <= n)
        throw std::invalid_argument("allowed-part table too short");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, allowed, cur, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int n, bool nondyadic_only)
{
    std::vector<bool> allowed(n + 1, true);
    if (nondyadic_only)
        for (int k = 1; k <= n; ++k)
            allowed[k] = !is_dyadic(k);
    return enumerate_partitions_if(n, allowed);
}

Partition concat(const Partition& a, const Partition& b)
{
    Partition r;
    r.parts.resize(a.parts.size() + b.parts.size());
    std::merge(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(), r.parts.begin(), std::greater<>());
    return r;
}

Partition conjugate(const Partition& p)
{
    Partition r;
    if (p.empty())
        return r;
    r.parts.assign(p.parts[0], 0);
    for (int x : p.parts)
        for (int i = 0; i < x; ++i)
            ++r.parts[i];
    return r;
}

std::string to_string(const Partition& p)
{
    std::string s = "(";
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p.parts[i]);
    }
    return s + ')';
}

Partition parse_partition(std::string_view s)
{
    auto trim = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ')
            v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ')
            v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("partition must look like (5,5,2)");
    s = trim(s.substr(1, s.size() - 2));
    std::vector<int> parts;
    while (!s.empty()) {
        size_t comma = s.find(',');
        auto tok = trim(s.substr(0, comma));
        if (tok.empty())
            throw std::invalid_argument("empty partition part");
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad partition part");
            v = v * 10 + (c - '0');
        }
        parts.push_back(v);
        if (comma == std::string_view::npos)
            break;
        s = s.substr(comma + 1);
    }
    return Partition(std::move(parts));
}

PartitionIndex::PartitionIndex(std::vector<Partition> list) : list_(std::move(list))
{
    pos_.reserve(list_.size() * 2);
    for (size_t i = 0; i < list_.size(); ++i)
        pos_.emplace(list_[i], static_cast<int>(i));
}

int PartitionIndex::find(const Partition& p) const
{
    auto it = pos_.find(p);
    return it == pos_.end() ? -1 : it->second;
}

PartitionCombination::PartitionCombination(std::initializer_list<Partition> ps)
{
    for (auto& p : ps)
        toggle(p);
}

void PartitionCombination::toggle(const Partition& p)
{
    auto [it, fresh] = terms_.insert(p);
    if (!fresh)
        terms_.erase(it);
}

int PartitionCombination::degree() const
{
    int d = -1;
    for (auto& p : terms_) {
        if (d == -1)
            d = p.degree();
        else if (d != p.degree())
            return -1;
    }
    return d;
}

std::vector<Partition> PartitionCombination::sorted() const
{
    std::vector<Partition> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
}

PartitionCombination& PartitionCombination::operator+=(const PartitionCombination& o)
{
    for (auto& p : o.terms_)
        toggle(p);
    return *this;
}

PartitionCombination operator*(const PartitionCombination& a, const PartitionCombination& b)
{
    PartitionCombination r;
    for (auto& x : a.terms_)
        for (auto& y : b.terms_)
            r.toggle(concat(x, y));
    return r;
}

PartitionCombination square(const PartitionCombination& c)
{
    PartitionCombination r;
    for (auto& p : c.terms())
        r.toggle(concat(p, p));
    return r;
}

std::string to_string(const PartitionCombination& c)
{
    if (c.empty())
        return "0";
    std::string s;
    for (auto& p : c.sorted()) {
        if (!s.empty())
            s += " + ";
        s += to_string(p);
    }
    return s;
}

}  // namespace bordism
