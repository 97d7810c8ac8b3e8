#include "bordism/f2poly.hpp"

#include <cctype>
#include <stdexcept>

namespace bordism {

F2Monomial::F2Monomial(GradedVariable v, int e)
{
    if (v.degree < 1)
        throw std::invalid_argument("variable degree must be positive");
    if (e > 0)
        e_.emplace_back(v, e);
}

int F2Monomial::degree() const
{
    int d = 0;
    for (auto& [v, e] : e_)
        d += v.degree * e;
    return d;
}

int F2Monomial::exponent(const GradedVariable& v) const
{
    for (auto& [u, e] : e_)
        if (u == v)
            return e;
    return 0;
}

F2Monomial operator*(const F2Monomial& a, const F2Monomial& b)
{
    F2Monomial r;
    auto i = a.e_.begin(), j = b.e_.begin();
    while (i != a.e_.end() || j != b.e_.end()) {
        if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first))
            r.e_.push_back(*i++);
        else if (i == a.e_.end() || j->first < i->first)
            r.e_.push_back(*j++);
        else {
            r.e_.emplace_back(i->first, i->second + j->second);
            ++i, ++j;
        }
    }
    return r;
}

bool MonomialOrder::operator()(const F2Monomial& a, const F2Monomial& b) const
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    auto& x = a.exponents();
    auto& y = b.exponents();
    size_t i = 0;
    for (; i < x.size() && i < y.size(); ++i) {
        if (x[i].first != y[i].first)
            return x[i].first < y[i].first;  // a has the smaller variable, b has exponent 0 there
        if (x[i].second != y[i].second)
            return x[i].second > y[i].second;
    }
    return x.size() > y.size();
}

void F2Polynomial::toggle(const F2Monomial& m)
{
    auto [it, fresh] = m_.insert(m);
    if (!fresh)
        m_.erase(it);
}

bool F2Polynomial::is_homogeneous() const
{
    return m_.empty() || m_.begin()->degree() == m_.rbegin()->degree();
}

int F2Polynomial::degree() const
{
    if (m_.empty())
        return -1;
    if (!is_homogeneous())
        throw std::logic_error("inhomogeneous polynomial has no degree");
    return m_.begin()->degree();
}

F2Polynomial F2Polynomial::component(int deg) const
{
    F2Polynomial r;
    for (auto& m : m_)
        if (m.degree() == deg)
            r.m_.insert(m);
    return r;
}

F2Polynomial& F2Polynomial::operator+=(const F2Polynomial& o)
{
    for (auto& m : o.m_)
        toggle(m);
    return *this;
}

F2Polynomial operator*(const F2Polynomial& a, const F2Polynomial& b)
{
    F2Polynomial r;
    for (auto& x : a.m_)
        for (auto& y : b.m_)
            r.toggle(x * y);
    return r;
}

F2Polynomial add(const F2Polynomial& p, const F2Polynomial& q) { return p + q; }
F2Polynomial mul(const F2Polynomial& p, const F2Polynomial& q) { return p * q; }

static bool survives(const F2Monomial& m, const std::map<GradedVariable, int>& rules)
{
    for (auto& [v, e] : m.exponents()) {
        auto it = rules.find(v);
        if (it != rules.end() && e >= it->second)
            return false;
    }
    return true;
}

F2Polynomial truncate(const F2Polynomial& p, const std::map<GradedVariable, int>& rules)
{
    F2Polynomial r;
    for (auto& m : p.monomials())
        if (survives(m, rules))
            r.toggle(m);
    return r;
}

F2Polynomial truncated_mul(const F2Polynomial& p, const F2Polynomial& q, const std::map<GradedVariable, int>& rules)
{
    F2Polynomial r;
    for (auto& x : p.monomials())
        for (auto& y : q.monomials()) {
            auto m = x * y;
            if (survives(m, rules))
                r.toggle(m);
        }
    return r;
}

std::string to_string(const F2Monomial& m)
{
    if (m.is_one())
        return "1";
    std::string s;
    for (auto& [v, e] : m.exponents()) {
        if (!s.empty())
            s += '*';
        s += v.family;
        s += std::to_string(v.index);
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

std::string to_string(const F2Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (auto& m : p.monomials()) {
        if (!s.empty())
            s += " + ";
        s += to_string(m);
    }
    return s;
}

F2Polynomial parse_wpoly(const std::string& s)
{
    F2Polynomial out;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    auto number = [&] {
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("expected a number at position " + std::to_string(i));
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return v;
    };
    while (true) {
        F2Monomial m;
        bool zero = false;
        while (true) {
            skip();
            if (i < s.size() && s[i] == 'w') {
                ++i;
                int idx = number();
                if (idx < 1)
                    throw std::invalid_argument("w index must be positive");
                int e = 1;
                skip();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = number();
                }
                m = m * F2Monomial(wvar(idx), e);
            } else {
                int c = number();
                if (c % 2 == 0)
                    zero = true;
            }
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!zero)
            out.toggle(m);
        skip();
        if (i == s.size())
            break;
        if (s[i] != '+')
            throw std::invalid_argument("unexpected character at position " + std::to_string(i));
        ++i;
    }
    return out;
}

F2Monomial wmonomial(const Partition& p)
{
    F2Monomial m;
    for (int x : p.parts)
        m = m * F2Monomial(wvar(x));
    return m;
}

PartitionCombination to_partitions(const F2Polynomial& p)
{
    PartitionCombination c;
    for (auto& m : p.monomials()) {
        std::vector<int> parts;
        for (auto& [v, e] : m.exponents()) {
            if (v.family != 'w')
                throw std::invalid_argument("not a w-polynomial");
            parts.insert(parts.end(), e, v.index);
        }
        c.toggle(Partition(std::move(parts)));
    }
    return c;
}

F2Polynomial from_partitions(const PartitionCombination& c)
{
    F2Polynomial p;
    for (auto& m : c.terms())
        p.toggle(wmonomial(m));
    return p;
}

}  // namespace bordism
