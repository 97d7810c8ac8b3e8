#include "bordism/manifolds.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>

namespace bordism {

Atom Atom::rp(int k)
{
    if (k < 0)
        throw std::invalid_argument("negative projective dimension");
    return {k, 0};
}

Atom Atom::dold_pair(int m, int n)
{
    if (m < 0 || n < 0)
        throw std::invalid_argument("negative Dold parameters");
    return {m, n};
}

Atom Atom::dold(int i)
{
    if (i < 1 || i % 2 == 0 || is_dyadic(i))
        throw std::invalid_argument("D_i needs i odd and i + 1 not a power of two, got " + std::to_string(i));
    int r = std::countr_zero(static_cast<unsigned>(i + 1));
    int s = ((i + 1) >> r) / 2;
    return {(1 << r) - 1, s << r};
}

std::string to_string(const Atom& a)
{
    if (a.is_rp())
        return "RP" + std::to_string(a.m);
    return "P(" + std::to_string(a.m) + "," + std::to_string(a.n) + ")";
}

ManifoldExpression ManifoldExpression::product(std::vector<Atom> atoms)
{
    std::sort(atoms.begin(), atoms.end());
    ManifoldExpression e;
    e.summands.push_back(std::move(atoms));
    return e;
}

int ManifoldExpression::dimension() const
{
    int d = -1;
    for (auto& s : summands) {
        int k = 0;
        for (auto& a : s)
            k += a.dimension();
        if (d >= 0 && k != d)
            throw std::invalid_argument("summands of different dimensions");
        d = k;
    }
    return std::max(d, 0);
}

ManifoldExpression& ManifoldExpression::operator+=(const ManifoldExpression& o)
{
    summands.insert(summands.end(), o.summands.begin(), o.summands.end());
    return *this;
}

ManifoldExpression operator*(const ManifoldExpression& a, const ManifoldExpression& b)
{
    ManifoldExpression r;
    for (auto& x : a.summands)
        for (auto& y : b.summands) {
            std::vector<Atom> p = x;
            p.insert(p.end(), y.begin(), y.end());
            std::sort(p.begin(), p.end());
            r.summands.push_back(std::move(p));
        }
    return r;
}

std::string to_string(const ManifoldExpression& e)
{
    if (e.summands.empty())
        return "0";
    std::string out;
    for (auto& s : e.summands) {
        if (!out.empty())
            out += " + ";
        if (s.empty()) {
            out += "pt";
            continue;
        }
        for (size_t i = 0; i < s.size();) {
            size_t j = i;
            while (j < s.size() && s[j] == s[i])
                ++j;
            if (i)
                out += " x ";
            out += to_string(s[i]);
            if (j - i > 1)
                out += "^" + std::to_string(j - i);
            i = j;
        }
    }
    return out;
}

ParseError::ParseError(const std::string& what, size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos)
{
}

namespace {

class ManifoldParser {
public:
    explicit ManifoldParser(std::string_view s) : s_(s) {}

    ManifoldExpression parse()
    {
        auto e = sum();
        skip();
        if (i_ != s_.size())
            throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
        return e;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool eat(std::string_view tok)
    {
        skip();
        if (s_.substr(i_, tok.size()) == tok) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    int number()
    {
        skip();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (start == i_)
            throw ParseError("expected a number", start);
        if (i_ - start > 6)
            throw ParseError("number too large", start);
        return std::stoi(std::string(s_.substr(start, i_ - start)));
    }
    ManifoldExpression sum()
    {
        auto e = product();
        while (eat("+") || eat("⊔"))
            e += product();
        return e;
    }
    ManifoldExpression product()
    {
        auto e = factor();
        while (eat("x") || eat("*") || eat("×"))
            e = e * factor();
        return e;
    }
    ManifoldExpression factor()
    {
        auto base = primary();
        if (!eat("^"))
            return base;
        size_t at = i_;
        int k = number();
        if (k < 1)
            throw ParseError("exponent must be positive", at);
        auto e = base;
        for (int t = 1; t < k; ++t)
            e = e * base;
        return e;
    }
    ManifoldExpression primary()
    {
        skip();
        size_t at = i_;
        try {
            if (eat("(")) {
                auto e = sum();
                if (!eat(")"))
                    throw ParseError("expected ')'", i_);
                return e;
            }
            if (eat("RP"))
                return ManifoldExpression::product({Atom::rp(number())});
            if (eat("P(")) {
                int m = number();
                if (!eat(","))
                    throw ParseError("expected ','", i_);
                int n = number();
                if (!eat(")"))
                    throw ParseError("expected ')'", i_);
                return ManifoldExpression::product({Atom::dold_pair(m, n)});
            }
            if (eat("D"))
                return ManifoldExpression::product({Atom::dold(number())});
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), at);
        }
        throw ParseError("expected RP<n>, D<n>, P(m,n) or '('", at);
    }

    std::string_view s_;
    size_t i_ = 0;
};

}  // namespace

ManifoldExpression parse_manifold(std::string_view text) { return ManifoldParser(text).parse(); }

PartitionCombination parse_y_expression(std::string_view text)
{
    PartitionCombination out;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
            ++i;
    };
    auto number = [&] {
        bool brace = i < text.size() && text[i] == '{';
        if (brace)
            ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            throw ParseError("expected a number", start);
        int v = std::stoi(std::string(text.substr(start, i - start)));
        if (brace) {
            if (i >= text.size() || text[i] != '}')
                throw ParseError("expected '}'", i);
            ++i;
        }
        return v;
    };
    bool zero = false;
    while (true) {
        skip();
        std::vector<int> parts;
        bool any = false;
        while (i < text.size() && (text[i] == 'Y' || text[i] == '1' || text[i] == '0')) {
            if (text[i] == '1' || text[i] == '0') {
                zero = zero || text[i] == '0';
                ++i;
                any = true;
                skip();
                continue;
            }
            ++i;
            if (i < text.size() && text[i] == '_')
                ++i;
            int k = number();
            int e = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = number();
            }
            parts.insert(parts.end(), e, k);
            any = true;
            skip();
        }
        if (!any)
            throw ParseError("expected a Y monomial", i);
        if (!zero)
            out.toggle(Partition(parts));
        zero = false;
        if (i == text.size())
            break;
        if (text[i] != '+')
            throw ParseError("unexpected '" + std::string(1, text[i]) + "'", i);
        ++i;
    }
    return out;
}

namespace {

// H*(P(m,n)) = F2[c,d]/(c^{m+1}, d^{n+1}). A degree-j element is a bit per
// power b of d, standing for c^{j-2b} d^b.
struct AtomRing {
    int m, n;

    bool valid(int j, int b) const { return b >= 0 && b <= n && j - 2 * b >= 0 && j - 2 * b <= m; }
    BitVec zero() const { return BitVec(n + 1); }

    BitVec mul(const BitVec& x, int i, const BitVec& y, int j) const
    {
        BitVec r = zero();
        for (int a = x.lowest(); a >= 0; a = x.next(a + 1))
            for (int b = y.lowest(); b >= 0; b = y.next(b + 1))
                if (valid(i + j, a + b))
                    r.flip(a + b);
        return r;
    }

    using Total = std::vector<BitVec>;  // by degree 0..dim

    Total mul(const Total& x, const Total& y) const
    {
        int top = m + 2 * n;
        Total r(top + 1, zero());
        for (int i = 0; i <= top; ++i)
            for (int j = 0; i + j <= top; ++j)
                if (x[i].any() && y[j].any())
                    r[i + j] ^= mul(x[i], i, y[j], j);
        return r;
    }

    Total one_plus(std::initializer_list<std::pair<int, int>> cd) const  // 1 + Σ c^a d^b
    {
        Total r(m + 2 * n + 1, zero());
        r[0].set(0);
        for (auto [a, b] : cd)
            if (valid(a + 2 * b, b))
                r[a + 2 * b].flip(b);
        return r;
    }

    Total tangent() const
    {
        Total w = one_plus({});
        Total f1 = one_plus({{1, 0}}), f2 = one_plus({{1, 0}, {0, 1}});
        for (int k = 0; k < m; ++k)
            w = mul(w, f1);
        for (int k = 0; k <= n; ++k)
            w = mul(w, f2);
        return w;
    }
};

AtomRing::Total normal_of(const AtomRing& R, const AtomRing::Total& w)
{
    int top = R.m + 2 * R.n;
    AtomRing::Total wb(top + 1, R.zero());
    wb[0].set(0);
    for (int j = 1; j <= top; ++j)
        for (int i = 1; i <= j; ++i)
            if (w[i].any() && wb[j - i].any())
                wb[j] ^= R.mul(w[i], i, wb[j - i], j - i);
    return wb;
}

PartitionCombination atom_p_numbers(const Atom& a, Bundle bundle, Symm& symm)
{
    static std::mutex mu;
    static std::map<std::pair<Atom, int>, PartitionCombination> cache;
    std::lock_guard lk(mu);
    auto key = std::make_pair(a, static_cast<int>(bundle));
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    AtomRing R{a.m, a.n};
    int top = a.dimension();
    auto w = R.tangent();
    if (bundle == Bundle::Normal)
        w = normal_of(R, w);

    // ⟨w_μ, [M]⟩ for all μ, built up by degree
    std::vector<std::vector<BitVec>> prod(top + 1);
    std::vector<PartitionIndex> idx;
    for (int j = 0; j <= top; ++j) {
        idx.emplace_back(enumerate_partitions(j, false));
        for (auto& mu : idx[j].list()) {
            if (j == 0) {
                prod[0].push_back(w[0]);
                continue;
            }
            int k = mu.parts[0];
            Partition rest;
            rest.parts.assign(mu.parts.begin() + 1, mu.parts.end());
            const BitVec& sub = prod[j - k][idx[j - k].find(rest)];
            prod[j].push_back(sub.any() && w[k].any() ? R.mul(w[k], k, sub, j - k) : R.zero());
        }
    }
    const auto& tm = symm.monomial_to_elementary(top);
    const auto& all = *tm.partitions;
    BitVec val(all.size());
    for (size_t t = 0; t < all.size(); ++t) {
        const BitVec& v = prod[top][idx[top].find(all[t])];
        if (v.test(a.n))  // top cell c^m d^n
            val.set(t);
    }
    PartitionCombination out;
    for (size_t l = 0; l < all.size(); ++l)
        if (tm.bits[l].dot(val))
            out.toggle(all[l]);
    cache.emplace(key, out);
    return out;
}

}  // namespace

PartitionCombination p_numbers(const ManifoldExpression& e, Bundle b, Symm& symm)
{
    e.dimension();
    PartitionCombination out;
    for (auto& s : e.summands) {
        PartitionCombination acc{Partition{}};
        for (auto& a : s) {
            acc = acc * atom_p_numbers(a, b, symm);
            if (acc.empty())
                break;
        }
        out += acc;
    }
    return out;
}

bool sw_number(const ManifoldExpression& e, const Partition& mono, Symm& symm)
{
    int n = e.dimension();
    if (mono.degree() != n)
        throw std::invalid_argument("monomial degree " + std::to_string(mono.degree()) + " differs from dimension " +
                                    std::to_string(n));
    if (e.summands.empty())
        return false;
    const auto& tm = symm.elementary_to_monomial(n);
    const BitVec& row = tm.bits[tm.partitions->find(mono)];
    bool r = false;
    auto p = p_numbers(e, Bundle::Tangent, symm);
    for (auto& lam : p.terms())
        r ^= row.test(tm.partitions->find(lam));
    return r;
}

PartitionCombination thom_class(const ManifoldExpression& e, Symm& symm)
{
    PartitionCombination out;
    auto p = p_numbers(e, Bundle::Normal, symm);
    for (auto& lam : p.terms())
        if (lam.nondyadic())
            out.toggle(lam);
    return out;
}

bool orientability_check(int i)
{
    Atom a = Atom::dold(i);
    AtomRing R{a.m, a.n};
    return R.tangent()[1].none();
}

const std::vector<TableRow>& thom_generator_table()
{
    static const std::vector<TableRow> rows = {
        {"Y2", "RP2"},
        {"Y4", "RP4 + RP2^2"},
        {"Y5", "D5"},
        {"Y6", "RP6"},
        {"Y8", "RP8 + RP4^2 + RP4 x RP2^2 + RP2^4"},
        {"Y9", "D9 + D5 x RP4 + D5 x RP2^2"},
        {"Y10", "RP10 + RP2^5"},
        {"Y11", "D11 + D9 x RP2"},
        {"Y12", "RP12 + RP6^2 + RP8 x RP2^2 + D5^2 x RP2 + RP4^3"},
        // D5 x RP8 is often misprinted as D8 x RP5
        {"Y13", "D13 + D11 x RP2 + D9 x RP4 + D5 x RP8 + D5 x RP4 x RP2^2"},
        {"Y14", "RP14"},
        {"Y16", "RP16 + RP12 x RP2^2 + RP8^2 + RP8 x RP4^2 + RP8 x RP2^4 + RP6^2 x RP4 + RP6 x D5^2"
                " + D5^2 x RP2^3 + RP4^4 + RP4^2 x RP2^4 + RP4 x RP2^6 + RP2^8"},
        {"Y17", "D17 + D13 x RP4 + D13 x RP2^2 + RP12 x D5 + D11 x RP6 + D11 x RP4 x RP2 + D11 x RP2^3"
                " + D9 x RP8 + D9 x RP6 x RP2 + RP8 x D5 x RP2^2 + RP6^2 x D5 + D5^3 x RP2"
                " + D5 x RP4^2 x RP2^2 + D5 x RP4 x RP2^4 + D5 x RP2^6"},
    };
    return rows;
}

const std::vector<TableRow>& dold_square_table()
{
    static const std::vector<TableRow> rows = {
        {"Y5^2", "D5^2"},
        {"Y9^2 + Y5^2 Y4^2", "D9^2"},
        {"Y11^2 + Y9^2 Y2^2 + Y5^2 Y4^2 Y2^2", "D11^2"},
        {"Y13^2 + Y11^2 Y2^2 + Y9^2 Y4^2 + Y8^2 Y5^2", "D13^2"},
    };
    return rows;
}

TableReport verify_table(const std::vector<TableRow>& rows, Symm& symm, int through)
{
    TableReport rep;
    for (auto& row : rows) {
        RowResult r;
        r.row = row;
        auto m = parse_manifold(row.manifold);
        r.degree = m.dimension();
        if (through >= 0 && r.degree > through)
            continue;
        r.expected = parse_y_expression(row.element);
        r.computed = thom_class(m, symm);
        r.pass = r.expected == r.computed;
        rep.pass = rep.pass && r.pass;
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

const std::string& t24_expression()
{
    // Y9 Y5^3, not the degree-19 misprint Y9 Y5^2
    static const std::string s =
        "Y14 Y5^2 + Y13 Y11 + Y13 Y9 Y2 + Y13 Y6 Y5 + Y13 Y5 Y2^3 + Y12 Y5^2 Y2 + Y11^2 Y2"
        " + Y11 Y9 Y4 + Y11 Y8 Y5 + Y11 Y6 Y5 Y2 + Y11 Y5 Y4^2 + Y11 Y5 Y4 Y2^2 + Y10 Y5^2 Y4"
        " + Y10 Y5^2 Y2^2 + Y9^2 Y4 Y2 + Y9^2 Y2^3 + Y9 Y8 Y5 Y2 + Y9 Y6 Y5 Y4 + Y9 Y6 Y5 Y2^2"
        " + Y9 Y5^3 + Y9 Y5 Y4^2 Y2 + Y6^2 Y5^2 Y2 + Y5^4 Y4 + Y5^2 Y4^3 Y2 + Y5^2 Y4^2 Y2^3";
    return s;
}

// As usually printed: 30 summands, the last 8 repeating earlier ones (so
// cancelling in pairs) and no summand for Y5^4 Y2^2.
const std::string& milnor24_printed_manifold()
{
    static const std::string s =
        "RP2^6 x RP6^2 + RP4^6 + RP2 x RP4^3 x D5^2 + RP2^2 x RP4^2 x RP6^2"
        " + RP2^4 x RP8^2 + RP2^3 x RP4 x D5 x D9 + RP4^2 x D5^2 x RP6"
        " + RP2^2 x D5 x RP6 x D9 + RP6^4 + D5^2 x RP6 x RP8"
        " + RP4^2 x RP8^2 + D5^3 x D9 + RP4 x D5^2 x RP10"
        " + RP2^2 x RP10^2 + RP4^2 x D5 x D11 + RP2^2 x D9 x D11"
        " + RP2 x D5^2 x RP12 + RP2 x RP4 x D5 x D13 + D5 x RP6 x D13"
        " + D5^2 x RP14 + RP12^2 + D11 x D13 + RP2^6 x RP6^2 + RP4^6"
        " + RP2^2 x RP4^2 x RP6^2 + RP2^4 x RP8^2 + RP6^4"
        " + RP4^2 x RP8^2 + RP2^2 x RP10^2 + RP12^2";
    return s;
}

// the 22 distinct summands plus D5^4 x RP2^2
const std::string& milnor24_manifold()
{
    static const std::string s =
        "RP2^6 x RP6^2 + RP4^6 + RP2 x RP4^3 x D5^2 + RP2^2 x RP4^2 x RP6^2"
        " + RP2^4 x RP8^2 + RP2^3 x RP4 x D5 x D9 + RP4^2 x D5^2 x RP6"
        " + RP2^2 x D5 x RP6 x D9 + RP6^4 + D5^2 x RP6 x RP8"
        " + RP4^2 x RP8^2 + D5^3 x D9 + RP4 x D5^2 x RP10"
        " + RP2^2 x RP10^2 + RP4^2 x D5 x D11 + RP2^2 x D9 x D11"
        " + RP2 x D5^2 x RP12 + RP2 x RP4 x D5 x D13 + D5 x RP6 x D13"
        " + D5^2 x RP14 + RP12^2 + D11 x D13 + D5^4 x RP2^2";
    return s;
}

PartitionCombination milnor24_class()
{
    return parse_y_expression(t24_expression()) +
           parse_y_expression("Y12^2 + Y10^2 Y2^2 + Y8^2 Y4^2 + Y8^2 Y2^4 + Y6^2 Y4^2 Y2^2 + Y5^4 Y2^2 + Y4^6");
}

MilnorReport verify_milnor24(Symm& symm, const std::string& manifold)
{
    MilnorReport rep;
    auto m = parse_manifold(manifold);
    auto p = p_numbers(m, Bundle::Tangent, symm);
    const auto& tm = symm.elementary_to_monomial(24);
    auto number = [&](const Partition& mono) {
        const BitVec& row = tm.bits[tm.partitions->find(mono)];
        bool r = false;
        for (auto& lam : p.terms())
            r ^= row.test(tm.partitions->find(lam));
        return r;
    };
    rep.numbers_ok = true;
    for (auto mono : {Partition{7, 7, 6, 4}, Partition{6, 6, 6, 6}, Partition{4, 4, 4, 4, 4, 4},
                      Partition{6, 6, 4, 4, 4}, Partition{8, 8, 4, 4}}) {
        bool v = number(mono);
        rep.listed.emplace_back(mono, v);
        rep.numbers_ok = rep.numbers_ok && v;
    }
    for (auto& mono : tm.partitions->list()) {
        bool v = number(mono);
        if (v)
            rep.nonzero_numbers.push_back(mono);
        if (mono.parts.back() > 2)
            continue;
        ++rep.spin_monomials_checked;
        if (v)
            rep.nonzero_spin_numbers.push_back(mono);
    }
    rep.spin_ok = rep.nonzero_spin_numbers.empty();
    rep.expected = milnor24_class();
    rep.computed = thom_class(m, symm);
    rep.class_ok = rep.expected == rep.computed;
    return rep;
}

}  // namespace bordism
