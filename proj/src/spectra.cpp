#include "bordism/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "bordism/steenrod.hpp"

namespace bordism {

std::string to_string(Spectrum s)
{
    switch (s) {
    case Spectrum::MO: return "MO";
    case Spectrum::MSO: return "MSO";
    case Spectrum::MSPINC: return "MSPINC";
    case Spectrum::MSPIN: return "MSPIN";
    }
    return "?";
}

Spectrum parse_spectrum(const std::string& s)
{
    std::string u;
    for (char c : s)
        if (c != '^' && c != '-' && c != '_')
            u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u == "MO") return Spectrum::MO;
    if (u == "MSO") return Spectrum::MSO;
    if (u == "MSPINC") return Spectrum::MSPINC;
    if (u == "MSPIN") return Spectrum::MSPIN;
    throw std::invalid_argument("unknown spectrum '" + s + "'");
}

namespace {

PartitionCombination drop_w1(const PartitionCombination& p)
{
    PartitionCombination r;
    for (auto& m : p.terms())
        if (m.parts.empty() || m.parts.back() != 1)
            r.toggle(m);
    return r;
}

}  // namespace

Presentation::Presentation(Spectrum s, int max_degree) : spectrum_(s), d_(max_degree)
{
    if (d_ < 0)
        throw std::invalid_argument("negative max degree");
    eliminated_.assign(d_ + 1, false);
    auto add = [&](int deg, PartitionCombination p) {
        if (deg > d_)
            return;
        eliminated_[deg] = true;
        gens_.push_back({deg, std::move(p)});
    };
    if (s != Spectrum::MO)
        add(1, PartitionCombination{Partition{1}});
    if (s == Spectrum::MSPIN)
        add(2, PartitionCombination{Partition{2}});
    if (s == Spectrum::MSPINC || s == Spectrum::MSPIN) {
        // θ_0 = w3, θ_{k+1} = Sq^{2^{k+1}} θ_k
        PartitionCombination theta{Partition{3}};
        int deg = 3;
        for (int k = 0; deg <= d_; ++k) {
            add(deg, theta);
            int step = 1 << (k + 1);
            if (deg + step > d_)
                break;
            theta = drop_w1(sq::on_poly(step, theta));
            deg += step;
        }
        std::sort(gens_.begin(), gens_.end(), [](auto& a, auto& b) { return a.degree < b.degree; });
    }
    build_tables();
}

void Presentation::build_tables()
{
    std::vector<bool> allowed(d_ + 1, true);
    for (int j = 1; j <= d_; ++j)
        allowed[j] = !eliminated_[j];
    basis_.clear();
    for (int n = 0; n <= d_; ++n)
        basis_.emplace_back(enumerate_partitions_if(n, allowed));

    mulvar_.assign(d_ + 1, {});
    for (int j = 1; j <= d_; ++j) {
        if (eliminated_[j])
            continue;
        mulvar_[j].resize(d_ - j + 1);
        for (int n = 0; n + j <= d_; ++n) {
            auto& tab = mulvar_[j][n];
            tab.resize(basis_[n].size());
            for (size_t i = 0; i < basis_[n].size(); ++i)
                tab[i] = basis_[n + j].find(concat(basis_[n][i], Partition{j}));
        }
    }

    rho_w_.assign(d_ + 1, BitVec());
    rho_w_[0] = unit();
    for (int j = 1; j <= d_; ++j) {
        rho_w_[j] = BitVec(basis_[j].size());
        if (!eliminated_[j]) {
            rho_w_[j].set(basis_[j].find(Partition{j}));
            continue;
        }
        auto g = std::find_if(gens_.begin(), gens_.end(), [&](auto& x) { return x.degree == j; });
        PartitionCombination tail = g->poly;
        if (!tail.contains(Partition{j}))
            throw std::logic_error("ideal generator in degree " + std::to_string(j) + " lacks its leading variable");
        tail.toggle(Partition{j});
        rho_w_[j] = normal_form(tail, j);  // only lower variables occur in the tail
    }
    mono_nf_.clear();
    mono_nf_.resize(d_ + 1);
    all_idx_.clear();
    all_idx_.resize(d_ + 1);
}

BitVec Presentation::unit() const
{
    BitVec u(1);
    u.set(0);
    return u;
}

BitVec Presentation::mul_monomial(const Partition& m, const BitVec& b, int db) const
{
    int deg = db + m.degree();
    if (deg > d_)
        throw std::out_of_range("product beyond presentation degree");
    BitVec r(basis_[deg].size());
    for (int s = b.lowest(); s >= 0; s = b.next(s + 1)) {
        int idx = s, dd = db;
        for (int j : m.parts) {
            idx = mulvar_[j][dd][idx];
            dd += j;
        }
        r.flip(idx);
    }
    return r;
}

BitVec Presentation::mul(const BitVec& a, int da, const BitVec& b, int db) const
{
    if (da + db > d_)
        throw std::out_of_range("product beyond presentation degree");
    BitVec r(basis_[da + db].size());
    for (int t = a.lowest(); t >= 0; t = a.next(t + 1))
        r ^= mul_monomial(basis_[da][t], b, db);
    return r;
}

BitVec Presentation::normal_form(const PartitionCombination& wpoly, int n) const
{
    if (n < 0 || n > d_)
        throw std::out_of_range("degree outside presentation");
    BitVec r(basis_[n].size());
    for (auto& m : wpoly.terms()) {
        if (m.degree() != n)
            throw std::invalid_argument("inhomogeneous input to normal_form");
        BitVec v = unit();
        int deg = 0;
        for (int j : m.parts) {
            if (eliminated_[j]) {
                v = mul(rho_w_[j], j, v, deg);
                if (v.none())
                    break;
            } else {
                v = mul_monomial(Partition{j}, v, deg);
            }
            deg += j;
        }
        if (v.any())
            r ^= v;
    }
    return r;
}

BitVec Presentation::normal_form(const ThomElement& t) const
{
    if (t.poly.is_zero())
        return BitVec(0);
    int n = t.poly.degree();
    return normal_form(to_partitions(t.poly), n);
}

PartitionCombination Presentation::representative(const BitVec& coords, int n) const
{
    PartitionCombination c;
    for (int i = coords.lowest(); i >= 0; i = coords.next(i + 1))
        c.toggle(basis_[n][i]);
    return c;
}

const std::vector<BitVec>& Presentation::monomial_normal_forms(int n) const
{
    std::lock_guard lk(mu_);
    for (int m = 0; m <= n; ++m) {
        if (mono_nf_[m])
            continue;
        all_idx_[m] = std::make_unique<PartitionIndex>(enumerate_partitions(m, false));
        auto out = std::make_unique<std::vector<BitVec>>();
        out->reserve(all_idx_[m]->size());
        if (m == 0) {
            out->push_back(unit());
        } else {
            for (auto& mu : all_idx_[m]->list()) {
                int j = mu.parts[0], dm = m - j;
                Partition rest;
                rest.parts.assign(mu.parts.begin() + 1, mu.parts.end());
                const BitVec& sub = (*mono_nf_[dm])[all_idx_[dm]->find(rest)];
                if (sub.none())
                    out->push_back(BitVec(basis_[m].size()));
                else if (eliminated_[j])
                    out->push_back(mul(rho_w_[j], j, sub, dm));
                else
                    out->push_back(mul_monomial(Partition{j}, sub, dm));
            }
        }
        mono_nf_[m] = std::move(out);
    }
    return *mono_nf_[n];
}

BitMatrix Presentation::ideal_subspace(int n) const
{
    if (n < 0 || n > d_)
        throw std::out_of_range("degree outside presentation");
    PartitionIndex all(enumerate_partitions(n, false));
    BitMatrix m(all.size());
    for (auto& g : gens_) {
        if (g.degree > n)
            continue;
        for (auto& mono : enumerate_partitions(n - g.degree, false)) {
            BitVec row(all.size());
            for (auto& t : g.poly.terms())
                row.flip(all.find(concat(t, mono)));
            m.push_back(std::move(row));
        }
    }
    return m;
}

}  // namespace bordism
