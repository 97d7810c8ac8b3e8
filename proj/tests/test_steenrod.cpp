#include <doctest.h>

#include <stdexcept>

#include <map>
#include <random>

#include "bordism/spectra.hpp"
#include "bordism/steenrod.hpp"
#include "support.hpp"

using namespace bordism;

namespace {

using Exps = std::vector<int>;
using XPoly = std::map<Exps, bool>;  // polynomial in x_1..x_N, mod 2

void add_term(XPoly& p, const Exps& e)
{
    auto [it, fresh] = p.emplace(e, true);
    if (!fresh)
        p.erase(it);
}

XPoly xmul(const XPoly& a, const XPoly& b)
{
    XPoly r;
    for (auto& [ea, _] : a)
        for (auto& [eb, __] : b) {
            Exps e(ea.size());
            for (size_t s = 0; s < e.size(); ++s)
                e[s] = ea[s] + eb[s];
            add_term(r, e);
        }
    return r;
}

XPoly elementary(int j, int N)
{
    XPoly r;
    for (uint32_t mask = 0; mask < (1u << N); ++mask)
        if (std::popcount(mask) == j) {
            Exps e(N);
            for (int s = 0; s < N; ++s)
                e[s] = mask >> s & 1;
            add_term(r, e);
        }
    return r;
}

// Sq^i on a monomial in degree-one classes: Sq(x) = x + x^2 and Cartan
void sq_x(int i, const Exps& e, size_t s, Exps& cur, XPoly& out)
{
    if (s == e.size()) {
        if (i == 0)
            add_term(out, cur);
        return;
    }
    for (int k = 0; k <= std::min(i, e[s]); ++k)
        if (binom2(e[s], k)) {
            cur[s] = e[s] + k;
            sq_x(i - k, e, s + 1, cur, out);
        }
}

XPoly sq_x(int i, const XPoly& p)
{
    XPoly r;
    for (auto& [e, _] : p) {
        Exps cur(e.size());
        XPoly part;
        sq_x(i, e, 0, cur, part);
        for (auto& [f, __] : part)
            add_term(r, f);
    }
    return r;
}

// read off the m-basis coefficients of a symmetric polynomial, then convert to w-monomials
PartitionCombination symmetric_to_w(const XPoly& p, int degree)
{
    auto& s = support::symm();
    auto& t = s.monomial_to_elementary(degree);
    PartitionCombination r;
    for (auto& [e, _] : p) {
        if (!std::is_sorted(e.rbegin(), e.rend()))
            continue;
        std::vector<int> parts;
        for (int x : e)
            if (x)
                parts.push_back(x);
        int row = t.partitions->find(Partition(parts));
        for (int c : t.bits[row].ones())
            r.toggle((*t.partitions)[c]);
    }
    return r;
}

PartitionCombination oracle_sq(int i, const Partition& mono, int N)
{
    XPoly p{{Exps(N, 0), true}};
    for (int j : mono.parts)
        p = xmul(p, elementary(j, N));
    return symmetric_to_w(sq_x(i, p), mono.degree() + i);
}

}  // namespace

TEST_SUITE("steenrod")
{
    TEST_CASE("binomial parity")
    {
        std::vector<std::vector<int>> pascal{{1}};
        for (int n = 1; n < 64; ++n) {
            std::vector<int> row(n + 1, 1);
            for (int k = 1; k < n; ++k)
                row[k] = pascal[n - 1][k - 1] ^ pascal[n - 1][k];
            pascal.push_back(row);
        }
        for (int n = 0; n < 64; ++n) {
            for (int k = 0; k <= n; ++k)
                CHECK(binom2(n, k) == (pascal[n][k] == 1));
            CHECK_FALSE(binom2(n, n + 1));
            CHECK_FALSE(binom2(n, -1));
        }
    }

    TEST_CASE("Wu formula agrees with the splitting principle")
    {
        // Sq^i e_j = m_(2^i 1^(j-i)) in the roots
        for (int j = 1; j <= 14; ++j)
            for (int i = 0; i <= j + 1; ++i) {
                PartitionCombination expect;
                if (i <= j) {
                    std::vector<int> parts(i, 2);
                    parts.insert(parts.end(), j - i, 1);
                    auto& t = support::symm().monomial_to_elementary(i + j);
                    int row = t.partitions->find(Partition(parts));
                    for (int c : t.bits[row].ones())
                        expect.toggle((*t.partitions)[c]);
                }
                CHECK_MESSAGE(sq::on_w(i, j) == expect, "Sq^" << i << " w" << j);
            }
        CHECK(sq::on_w(2, 2) == PartitionCombination{Partition{2, 2}});
        CHECK(sq::on_w(1, 2) == PartitionCombination{Partition{3}, Partition{2, 1}});
        CHECK(sq_on_w(2, 3) == parse_wpoly("w5 + w1*w4 + w2*w3"));
    }

    TEST_CASE("squares on monomials agree with the splitting principle")
    {
        for (int n = 1; n <= 6; ++n)
            for (auto& mono : enumerate_partitions(n, false))
                for (int i = 1; i <= n && n + i <= 9; ++i)
                    CHECK_MESSAGE(sq::on_monomial(i, mono) == oracle_sq(i, mono, n + i),
                                  "Sq^" << i << " on " << to_string(mono));
    }

    TEST_CASE("Cartan formula on random products")
    {
        std::mt19937_64 gen(3);
        auto random_poly = [&](int deg) {
            auto all = enumerate_partitions(deg, false);
            PartitionCombination p;
            for (auto& m : all)
                if (gen() % 2)
                    p.toggle(m);
            return p;
        };
        for (int t = 0; t < 40; ++t) {
            int da = 1 + gen() % 5, db = 1 + gen() % 5, i = gen() % 6;
            auto a = random_poly(da), b = random_poly(db);
            PartitionCombination rhs;
            for (int k = 0; k <= i; ++k)
                rhs += sq::on_poly(k, a) * sq::on_poly(i - k, b);
            CHECK(sq::on_poly(i, a * b) == rhs);
        }
    }

    TEST_CASE("instability and the Thom class")
    {
        for (int n = 1; n <= 8; ++n)
            for (auto& m : enumerate_partitions(n, false)) {
                CHECK(sq::on_monomial(n, m) == square(PartitionCombination{m}));
                CHECK(sq::on_monomial(n + 1, m).empty());
            }
        // Sq^k U = w_k U
        for (int k = 0; k <= 6; ++k)
            CHECK(sq::on_thom(k, PartitionCombination{Partition{}}) ==
                  (k ? PartitionCombination{Partition{k}} : PartitionCombination{Partition{}}));
    }

    TEST_CASE("Adem relations on Thom elements")
    {
        for (int n = 0; n <= 10; ++n)
            for (auto& m : enumerate_partitions(n, false)) {
                PartitionCombination x{m};
                auto s = [&](std::vector<int> w) { return to_partitions(iterated_sq(w, ThomElement{from_partitions(x)}).poly); };
                CHECK(s({1, 1}).empty());
                CHECK(s({1, 2}) == s({3}));
                CHECK(s({2, 2}) == s({3, 1}));
                CHECK(s({2, 3}) == s({5}) + s({4, 1}));
                CHECK(s({3, 2}).empty());
            }
    }

    TEST_CASE("Milnor primitives square to zero and commute")
    {
        auto q0 = [](const PartitionCombination& p) { return sq::on_thom(1, p); };
        auto q1 = [](const PartitionCombination& p) {
            return sq::on_thom(1, sq::on_thom(2, p)) + sq::on_thom(2, sq::on_thom(1, p));
        };
        for (int n = 0; n <= 20; ++n)
            for (auto& m : enumerate_partitions(n, false)) {
                PartitionCombination x{m};
                CHECK(q0(q0(x)).empty());
                CHECK(q1(q1(x)).empty());
                CHECK(q0(q1(x)) == q1(q0(x)));
                if (n <= 8) {
                    ThomElement t{from_partitions(x)};
                    CHECK(to_partitions(milnor_q(0, t).poly) == q0(x));
                    CHECK(to_partitions(milnor_q(1, t).poly) == q1(x));
                }
            }
        CHECK_THROWS_AS(milnor_q(2, ThomElement{F2Polynomial::one()}), std::invalid_argument);
    }

    TEST_CASE("Sq8 Sq4 Sq2 w3 in oriented cohomology")
    {
        auto p = sq::on_poly(8, sq::on_poly(4, sq::on_poly(2, PartitionCombination{Partition{3}})));
        CHECK(p.size() == 95);
        size_t without_w1 = 0;
        for (auto& m : p.terms())
            without_w1 += std::find(m.parts.begin(), m.parts.end(), 1) == m.parts.end();
        CHECK(without_w1 == 38);
        Presentation mso(Spectrum::MSO, 17);
        CHECK(mso.normal_form(p, 17).count() == 38);
        CHECK(iterated_sq(SteenrodWord{8, 4, 2}, parse_wpoly("w3")) == from_partitions(p));
    }
}
