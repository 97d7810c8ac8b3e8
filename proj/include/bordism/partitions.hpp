#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace bordism {

// k is dyadic when k = 2^a - 1
inline bool is_dyadic(int k) { return k >= 1 && ((k + 1) & k) == 0; }

struct Partition {
    std::vector<int> parts;  // non-increasing

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int degree() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    bool nondyadic() const;
    bool operator==(const Partition&) const = default;
};

// graded, then reverse lexicographic on the sorted parts: (n) comes first
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

struct PartitionHash {
    size_t operator()(const Partition& p) const noexcept;
};

std::vector<Partition> enumerate_partitions(int n, bool nondyadic_only);
// partitions of n whose parts all satisfy allowed(part)
std::vector<Partition> enumerate_partitions_if(int n, const std::vector<bool>& allowed);

Partition concat(const Partition& a, const Partition& b);
Partition conjugate(const Partition& p);

std::string to_string(const Partition& p);
Partition parse_partition(std::string_view s);

// position of each partition in a fixed list
class PartitionIndex {
public:
    PartitionIndex() = default;
    explicit PartitionIndex(std::vector<Partition> list);

    const std::vector<Partition>& list() const { return list_; }
    size_t size() const { return list_.size(); }
    const Partition& operator[](size_t i) const { return list_[i]; }
    int find(const Partition& p) const;

private:
    std::vector<Partition> list_;
    std::unordered_map<Partition, int, PartitionHash> pos_;
};

// A mod-2 combination of partitions. Also used for w-polynomials: a w-monomial
// is the multiset of its indices.
class PartitionCombination {
public:
    PartitionCombination() = default;
    PartitionCombination(std::initializer_list<Partition> ps);

    void toggle(const Partition& p);
    bool contains(const Partition& p) const { return terms_.count(p) != 0; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    int degree() const;  // -1 when empty or inhomogeneous
    std::vector<Partition> sorted() const;
    const std::unordered_set<Partition, PartitionHash>& terms() const { return terms_; }

    PartitionCombination& operator+=(const PartitionCombination& o);
    friend PartitionCombination operator+(PartitionCombination a, const PartitionCombination& b) { return a += b; }
    friend PartitionCombination operator*(const PartitionCombination& a, const PartitionCombination& b);
    bool operator==(const PartitionCombination& o) const { return terms_ == o.terms_; }

private:
    std::unordered_set<Partition, PartitionHash> terms_;
};

PartitionCombination square(const PartitionCombination& c);
std::string to_string(const PartitionCombination& c);

}  // namespace bordism
