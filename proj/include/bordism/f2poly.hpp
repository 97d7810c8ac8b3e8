#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bordism/partitions.hpp"

namespace bordism {

struct GradedVariable {
    char family = 'w';
    int index = 1;
    int degree = 1;

    auto operator<=>(const GradedVariable& o) const
    {
        if (auto c = family <=> o.family; c != 0)
            return c;
        return index <=> o.index;
    }
    bool operator==(const GradedVariable& o) const { return family == o.family && index == o.index; }
};

inline GradedVariable wvar(int i) { return {'w', i, i}; }

class F2Monomial {
public:
    F2Monomial() = default;
    F2Monomial(GradedVariable v, int e = 1);

    int degree() const;
    int exponent(const GradedVariable& v) const;
    bool is_one() const { return e_.empty(); }
    const std::vector<std::pair<GradedVariable, int>>& exponents() const { return e_; }

    friend F2Monomial operator*(const F2Monomial& a, const F2Monomial& b);
    bool operator==(const F2Monomial&) const = default;

private:
    std::vector<std::pair<GradedVariable, int>> e_;  // sorted by variable, no zero exponents
};

// graded; within a degree, exponent vectors compared from the smallest
// variable up, larger exponent first
struct MonomialOrder {
    bool operator()(const F2Monomial& a, const F2Monomial& b) const;
};

class F2Polynomial {
public:
    F2Polynomial() = default;
    F2Polynomial(const F2Monomial& m) { m_.insert(m); }
    static F2Polynomial one() { return F2Polynomial(F2Monomial()); }
    static F2Polynomial var(GradedVariable v) { return F2Polynomial(F2Monomial(v)); }

    bool is_zero() const { return m_.empty(); }
    size_t size() const { return m_.size(); }
    bool contains(const F2Monomial& m) const { return m_.count(m) != 0; }
    void toggle(const F2Monomial& m);
    const std::set<F2Monomial, MonomialOrder>& monomials() const { return m_; }

    bool is_homogeneous() const;
    int degree() const;  // -1 for zero; throws when inhomogeneous
    F2Polynomial component(int deg) const;

    F2Polynomial& operator+=(const F2Polynomial& o);
    friend F2Polynomial operator+(F2Polynomial a, const F2Polynomial& b) { return a += b; }
    friend F2Polynomial operator*(const F2Polynomial& a, const F2Polynomial& b);
    bool operator==(const F2Polynomial&) const = default;

private:
    std::set<F2Monomial, MonomialOrder> m_;
};

F2Polynomial add(const F2Polynomial& p, const F2Polynomial& q);
F2Polynomial mul(const F2Polynomial& p, const F2Polynomial& q);
// drops every monomial with some variable at or above its nilpotency exponent
F2Polynomial truncate(const F2Polynomial& p, const std::map<GradedVariable, int>& rules);
F2Polynomial truncated_mul(const F2Polynomial& p, const F2Polynomial& q, const std::map<GradedVariable, int>& rules);

std::string to_string(const F2Monomial& m);
std::string to_string(const F2Polynomial& p);
F2Polynomial parse_wpoly(const std::string& s);  // "w4*w6*w7^2 + w6^4"

// w-polynomials <-> index multisets
PartitionCombination to_partitions(const F2Polynomial& p);
F2Polynomial from_partitions(const PartitionCombination& c);
F2Monomial wmonomial(const Partition& p);

struct ThomElement {
    F2Polynomial poly;  // coefficient of U
    int degree() const { return poly.degree(); }
    bool operator==(const ThomElement&) const = default;
};

}  // namespace bordism
