#include <doctest.h>

#include <stdexcept>

#include <random>

#include "bordism/spectra.hpp"
#include "bordism/steenrod.hpp"

using namespace bordism;

namespace {

// partitions of n with no part in the excluded set
size_t count_avoiding(int n, std::vector<int> excluded)
{
    std::vector<size_t> c(n + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= n; ++k)
        if (std::find(excluded.begin(), excluded.end(), k) == excluded.end())
            for (int m = k; m <= n; ++m)
                c[m] += c[m - k];
    return c[n];
}

std::vector<int> excluded(Spectrum s)
{
    switch (s) {
    case Spectrum::MO: return {};
    case Spectrum::MSO: return {1};
    case Spectrum::MSPINC: return {1, 3, 5, 9, 17, 33};
    case Spectrum::MSPIN: return {1, 2, 3, 5, 9, 17, 33};
    }
    return {};
}

const Spectrum all_spectra[] = {Spectrum::MO, Spectrum::MSO, Spectrum::MSPINC, Spectrum::MSPIN};

}  // namespace

TEST_SUITE("spectra")
{
    TEST_CASE("names")
    {
        for (auto s : all_spectra)
            CHECK(parse_spectrum(to_string(s)) == s);
        CHECK(parse_spectrum("mspinc") == Spectrum::MSPINC);
        CHECK_THROWS_AS(parse_spectrum("mu"), std::invalid_argument);
    }

    TEST_CASE("quotient dimensions match the free polynomial count")
    {
        for (auto s : all_spectra) {
            Presentation p(s, 24);
            for (int n = 0; n <= 24; ++n)
                CHECK_MESSAGE(p.dim(n) == count_avoiding(n, excluded(s)), to_string(s) << " n=" << n);
        }
        Presentation spinc(Spectrum::MSPINC, 6);
        std::vector<size_t> small;
        for (int n = 0; n <= 6; ++n)
            small.push_back(spinc.dim(n));
        CHECK(small == std::vector<size_t>{1, 0, 1, 0, 2, 0, 3});
    }

    TEST_CASE("standard monomials complement the ideal")
    {
        for (auto s : all_spectra) {
            Presentation p(s, 16);
            for (int n = 0; n <= 16; ++n) {
                auto ideal = p.ideal_subspace(n);
                PartitionIndex all(enumerate_partitions(n, false));
                CHECK(rank(ideal) + p.dim(n) == all.size());
                auto stacked = ideal;
                for (auto& b : p.basis(n).list()) {
                    BitVec e(all.size());
                    e.set(all.find(b));
                    stacked.push_back(e);
                }
                CHECK(rank(stacked) == all.size());
                // every ideal element has normal form zero
                for (auto& row : ideal.row_list()) {
                    PartitionCombination c;
                    for (int i : row.ones())
                        c.toggle(all[i]);
                    CHECK(p.normal_form(c, n).none());
                }
            }
        }
    }

    TEST_CASE("ideal generators: w1, then the Sq-chain from w3")
    {
        Presentation p(Spectrum::MSPINC, 33);
        std::vector<int> degs;
        for (auto& g : p.generators())
            degs.push_back(g.degree);
        CHECK(degs == std::vector<int>{1, 3, 5, 9, 17, 33});
        // θ_{k+1} = Sq^{2^k} θ_k modulo w1
        Presentation mso(Spectrum::MSO, 33);
        for (size_t k = 1; k + 1 < p.generators().size(); ++k) {
            auto& a = p.generators()[k];
            auto& b = p.generators()[k + 1];
            auto next = sq::on_poly(a.degree - 1, a.poly);
            CHECK(mso.normal_form(next + b.poly, b.degree).none());
        }
        Presentation spin(Spectrum::MSPIN, 9);
        CHECK(spin.eliminated(2));
        CHECK_FALSE(p.eliminated(2));
        CHECK(p.eliminated(17));
    }

    TEST_CASE("normal form is a ring homomorphism")
    {
        std::mt19937_64 gen(5);
        for (auto s : all_spectra) {
            Presentation p(s, 20);
            for (int t = 0; t < 30; ++t) {
                int da = 1 + gen() % 10, db = 1 + gen() % 10;
                PartitionCombination a, b;
                for (auto& m : enumerate_partitions(da, false))
                    if (gen() % 3 == 0)
                        a.toggle(m);
                for (auto& m : enumerate_partitions(db, false))
                    if (gen() % 3 == 0)
                        b.toggle(m);
                CHECK(p.normal_form(a * b, da + db) == p.mul(p.normal_form(a, da), da, p.normal_form(b, db), db));
            }
        }
    }

    TEST_CASE("representatives and monomial normal forms")
    {
        Presentation p(Spectrum::MSPINC, 14);
        for (int n = 0; n <= 14; ++n) {
            auto& nf = p.monomial_normal_forms(n);
            auto all = enumerate_partitions(n, false);
            REQUIRE(nf.size() == all.size());
            for (size_t i = 0; i < all.size(); ++i)
                CHECK(nf[i] == p.normal_form(PartitionCombination{all[i]}, n));
            for (size_t i = 0; i < p.dim(n); ++i) {
                BitVec e(p.dim(n));
                e.set(i);
                CHECK(p.normal_form(p.representative(e, n), n) == e);
            }
        }
        CHECK_THROWS_AS(p.normal_form(PartitionCombination{Partition{15}}, 15), std::out_of_range);
        CHECK_THROWS_AS(p.normal_form(PartitionCombination{Partition{4}}, 5), std::invalid_argument);
    }
}
