#pragma once

#include <cstdlib>
#include <random>
#include <regex>
#include <string>

#include "bordism/manifolds.hpp"
#include "bordism/steenrod.hpp"
#include "bordism/primitives.hpp"
#include "paper_data.hpp"

namespace support {

using namespace bordism;

inline Symm& symm()
{
    static Symm s([] {
        const char* e = std::getenv("BORDISM_CACHE");
        return std::string(e ? e : "");
    }());
    return s;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(20240611);
    return g;
}

// "Z10^2 Z8 + Z4" with Z_{2k} read as Y_k^2
inline PartitionCombination parse_z(const std::string& text)
{
    PartitionCombination out;
    std::regex term(R"([^+]+)"), factor(R"(Z(\d+)(?:\^(\d+))?)");
    for (std::sregex_iterator t(text.begin(), text.end(), term), end; t != end; ++t) {
        std::string s = t->str();
        std::vector<int> parts;
        for (std::sregex_iterator f(s.begin(), s.end(), factor); f != end; ++f) {
            int z = std::stoi((*f)[1]), e = (*f)[2].matched ? std::stoi((*f)[2]) : 1;
            if (z % 2)
                throw std::invalid_argument("odd Z index");
            parts.insert(parts.end(), 2 * e, z / 2);
        }
        if (!parts.empty())
            out.toggle(Partition(parts));
    }
    return out;
}

// T24 with its printed degree-19 term "Y9 Y5^2" read as Y9 Y5^3
inline std::string t24_corrected()
{
    std::string s = paper::T24;
    auto at = s.find(" + Y9 Y5^2 + ");
    if (at == std::string::npos)
        throw std::logic_error("T24 text changed");
    s.replace(at, 13, " + Y9 Y5^3 + ");
    return s;
}

inline PartitionCombination paper_t(int n)
{
    switch (n) {
    case 24: return parse_y_expression(t24_corrected());
    case 29: return parse_y_expression(paper::T29);
    case 31: return parse_y_expression(paper::T31);
    case 32: return parse_y_expression(paper::T32);
    case 33: return parse_y_expression(paper::T33);
    }
    throw std::invalid_argument("no T" + std::to_string(n));
}

inline GeneratorRecord record(int degree, PartitionCombination e, bool torsion, std::string name)
{
    GeneratorRecord g;
    g.degree = degree;
    g.element = std::move(e);
    g.torsion = torsion;
    g.name = std::move(name);
    return g;
}

// the published spin^c list; Y15^2 (15 is dyadic) read as Y8^2
inline std::vector<GeneratorRecord> paper_spinc(int d)
{
    std::vector<GeneratorRecord> g;
    for (int k : paper::spinc_square_indices) {
        int j = k == 15 ? 8 : k;
        if (2 * j <= d)
            g.push_back(record(2 * j, PartitionCombination{Partition{j, j}}, j % 2 == 1, "Z" + std::to_string(2 * j)));
    }
    for (int n : {24, 29, 31, 32, 33})
        if (n <= d)
            g.push_back(record(n, paper_t(n), true, "T" + std::to_string(n)));
    return g;
}

inline std::vector<GeneratorRecord> paper_spin(int d)
{
    std::vector<GeneratorRecord> g;
    for (auto& text : paper::spin_generators) {
        PartitionCombination e;
        std::string rest = text;
        for (int n : {24, 29})
            if (rest.rfind("T" + std::to_string(n), 0) == 0) {
                e = paper_t(n);
                rest = rest.substr(3);
                if (rest.rfind(" + ", 0) == 0)
                    rest = rest.substr(3);
            }
        if (!rest.empty())
            e += parse_y_expression(rest);
        int deg = e.degree();
        if (deg <= d)
            g.push_back(record(deg, e, false, "G" + std::to_string(deg)));
    }
    return g;
}

// Image computed on the MO side: functionals on H^n(MO) that kill A^+ H^*(MO)
// and a given ideal, read in Thom's basis. The ideal is the span of the
// monomials with a part outside `allowed` plus `extra` times all monomials.
inline Subspace image_from_mo(int n, const PartitionIndex& lambda, std::vector<bool> allowed,
                              const std::vector<PartitionCombination>& extra = {})
{
    allowed.resize(n + 1, true);
    allowed[0] = false;
    PartitionIndex keep(enumerate_partitions_if(n, allowed));
    auto project = [&](const PartitionCombination& c) {
        BitVec v(keep.size());
        for (auto& m : c.terms())
            if (int k = keep.find(m); k >= 0)
                v.flip(k);
        return v;
    };
    Subspace span(keep.size());
    for (int i = 1; i <= n; ++i)
        for (auto& b : enumerate_partitions(n - i, false))
            span.insert(project(sq::on_thom(i, PartitionCombination{b})));
    for (auto& g : extra) {
        int d = g.degree();
        if (d < 1 || d > n)
            continue;
        for (auto& m : enumerate_partitions(n - d, false))
            span.insert(project(g * PartitionCombination{m}));
    }
    BitMatrix rows = span.basis();
    BitMatrix functionals = nullspace(rows);
    std::vector<BitVec> p;
    for (auto& l : lambda.list()) {
        auto pl = symm().p_lambda_parts(l);
        p.push_back(project(pl));
    }
    Subspace out(lambda.size());
    for (auto& f : functionals.row_list()) {
        BitVec y(lambda.size());
        for (size_t l = 0; l < p.size(); ++l)
            if (p[l].dot(f))
                y.set(l);
        out.insert(y);
    }
    return out;
}

// spin: every Stiefel-Whitney number involving w1 or w2 vanishes
inline Subspace abp_spin_image(int n, const PartitionIndex& lambda)
{
    std::vector<bool> allowed(n + 1, true);
    if (n >= 1)
        allowed[1] = false;
    if (n >= 2)
        allowed[2] = false;
    return image_from_mo(n, lambda, allowed);
}

// spin^c: w1 = 0 and the Sq-chain from w3
inline Subspace mo_side_spinc_image(int n, const PartitionIndex& lambda)
{
    std::vector<bool> allowed(n + 1, true);
    if (n >= 1)
        allowed[1] = false;
    std::vector<PartitionCombination> extra;
    static const Presentation pres(Spectrum::MSPINC, 33);
    for (auto& g : pres.generators())
        if (g.degree > 1)
            extra.push_back(g.poly);
    return image_from_mo(n, lambda, allowed, extra);
}

}  // namespace support
