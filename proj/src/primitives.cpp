#include "bordism/primitives.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bordism/manifolds.hpp"
#include "bordism/steenrod.hpp"

namespace bordism {

namespace {

bool wants_torsion(Spectrum s, const SearchOptions& o) { return o.torsion && s == Spectrum::MSPINC; }

// a single partition in which every part occurs an even number of times
bool single_square(const PartitionCombination& c)
{
    if (c.size() != 1)
        return false;
    const auto& p = c.terms().begin()->parts;
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i])
            ++j;
        if ((j - i) % 2)
            return false;
        i = j;
    }
    return true;
}

}  // namespace

ImageSearch::ImageSearch(Spectrum s, int max_degree, Symm& symm, SearchOptions opt)
    : spectrum_(s),
      d_(max_degree),
      top_(wants_torsion(s, opt) ? max_degree + 3 : max_degree),
      symm_(symm),
      opt_(opt),
      pres_(s, top_)
{
    if (max_degree < 0)
        throw std::invalid_argument("negative degree");
    opt_.torsion = wants_torsion(s, opt);
}

// Sq(bU) = Sq(w_j) Sq(b'U) for b = w_j b'. Components kept: those landing in
// degree <= d, plus Sq^1..Sq^3 up to top for the Milnor operations.
void ImageSearch::build_squares()
{
    auto needed = [&](int m, int k) { return m + k <= top_ && (m + k <= d_ || k <= 3); };
    std::vector<std::vector<BitVec>> sqw(top_ + 1);  // sqw[j][i] = ρ(Sq^i w_j)
    for (int j = 1; j <= top_; ++j)
        for (int i = 0; i <= j && i + j <= top_; ++i)
            sqw[j].push_back(pres_.normal_form(sq::on_w(i, j), i + j));

    sqU_.assign(top_ + 1, {});
    for (int m = 0; m <= top_; ++m) {
        const auto& B = pres_.basis(m);
        sqU_[m].resize(B.size());
        for (size_t bi = 0; bi < B.size(); ++bi) {
            auto& out = sqU_[m][bi];
            if (m == 0) {
                for (int k = 0; needed(0, k); ++k)
                    out.push_back(k == 0 ? pres_.unit() : pres_.rho_w(k));
                continue;
            }
            const Partition& b = B[bi];
            int j = b.parts[0], dr = m - j;
            Partition rest;
            rest.parts.assign(b.parts.begin() + 1, b.parts.end());
            const auto& sr = sqU_[dr][pres_.basis(dr).find(rest)];
            for (int k = 0; needed(m, k); ++k) {
                BitVec acc(pres_.dim(m + k));
                for (int i = 0; i <= std::min(j, k); ++i) {
                    if (i >= static_cast<int>(sqw[j].size()) || k - i >= static_cast<int>(sr.size()))
                        continue;
                    const BitVec& a = sqw[j][i];
                    const BitVec& c = sr[k - i];
                    if (a.none() || c.none())
                        continue;
                    if (a.count() <= c.count())
                        acc ^= pres_.mul(a, i + j, c, dr + k - i);
                    else
                        acc ^= pres_.mul(c, dr + k - i, a, i + j);
                }
                out.push_back(std::move(acc));
            }
        }
    }
}

BitVec ImageSearch::sq_thom(int i, const BitVec& x, int n) const
{
    BitVec r(pres_.dim(n + i));
    for (int b = x.lowest(); b >= 0; b = x.next(b + 1))
        r ^= sqU_[n][b].at(i);
    return r;
}

std::vector<BitVec> ImageSearch::torsion_seed(int n) const
{
    size_t dim = pres_.dim(n);
    auto q0 = [&](const BitVec& x) { return sq_thom(1, x, n); };
    auto q1 = [&](const BitVec& x) {
        BitVec r = sq_thom(1, sq_thom(2, x, n), n + 2);
        r ^= sq_thom(2, sq_thom(1, x, n), n + 1);
        return r;
    };
    std::vector<BitVec> seed;
    if (!opt_.polynomial_fallback) {
        for (size_t b = 0; b < dim; ++b) {
            BitVec x(dim);
            x.set(b);
            if (q0(x).none() && q1(x).none())
                seed.push_back(std::move(x));
        }
        return seed;
    }
    // ker Q0 ∩ ker Q1: nullspace of the transposed map
    size_t d1 = pres_.dim(n + 1), d3 = pres_.dim(n + 3);
    BitMatrix T(dim);
    for (size_t r = 0; r < d1 + d3; ++r)
        T.push_back(BitVec(dim));
    for (size_t b = 0; b < dim; ++b) {
        BitVec x(dim);
        x.set(b);
        BitVec a = q0(x), c = q1(x);
        for (int r : a.ones())
            T[r].set(b);
        for (int r : c.ones())
            T[d1 + r].set(b);
    }
    return nullspace(T).row_list();
}

BitMatrix ImageSearch::rho_p_lambda(int n) const
{
    const auto& tm = symm_.monomial_to_elementary(n);
    const auto& nf = pres_.monomial_normal_forms(n);
    const auto& all = *tm.partitions;
    if (all.size() != nf.size())
        throw std::logic_error("partition lists disagree");
    const auto& lam = lambda_[n];
    BitMatrix N(lam.size(), pres_.dim(n));
    for (size_t l = 0; l < lam.size(); ++l) {
        const BitVec& row = tm.bits[all.find(lam[l])];
        for (int mu = row.lowest(); mu >= 0; mu = row.next(mu + 1))
            N[l] ^= nf[mu];
    }
    return N;
}

void ImageSearch::run()
{
    build_squares();
    lambda_.clear();
    image_.clear();
    torsion_.clear();
    drank_.clear();
    gens_.clear();
    for (int n = 0; n <= d_; ++n) {
        lambda_.emplace_back(enumerate_partitions(n, true));
        size_t dim = pres_.dim(n);
        Subspace D(dim);
        for (int i = 1; i <= n; ++i)
            for (auto& row : sqU_[n - i])
                if (static_cast<int>(row.size()) > i)
                    D.insert(row[i]);
        drank_.push_back(D.rank());

        BitMatrix N = rho_p_lambda(n);
        auto push = [&](const BitMatrix& ann, Subspace& into) {
            for (auto& g : ann.row_list()) {
                BitVec y(lambda_[n].size());
                for (size_t l = 0; l < N.rows(); ++l)
                    if (N[l].dot(g))
                        y.set(l);
                into.insert(y);
            }
            if (into.rank() != ann.rows())
                throw std::logic_error("annihilator does not embed in degree " + std::to_string(n));
        };
        BitMatrix ann = nullspace(D.basis());
        image_.emplace_back(lambda_[n].size());
        if (n == 0) {
            ann = BitMatrix(1);
            ann.push_back(pres_.unit());
        }
        push(ann, image_[n]);

        torsion_.emplace_back(lambda_[n].size());
        if (opt_.torsion && n > 0) {
            Subspace Dt = D;
            for (auto& v : torsion_seed(n))
                Dt.insert(v);
            push(nullspace(Dt.basis()), torsion_[n]);
        }
        if (n > 0)
            choose_generators(n);
    }
}

void ImageSearch::choose_generators(int n)
{
    const auto& lam = lambda_[n];
    Subspace span(lam.size()), tspan(lam.size());
    for (auto& m : generator_monomials(gens_, n)) {
        BitVec v = to_vector(m.element, lam);
        if (!image_[n].contains(v))
            throw std::logic_error("product of image classes left the image in degree " + std::to_string(n));
        span.insert(v);
        if (m.has_torsion)
            tspan.insert(v);
    }
    int zi = -1;
    if (n % 2 == 0 && n > 0)
        zi = lam.find(Partition(std::vector<int>{n / 2, n / 2}));

    auto offer = [&](const Subspace& pool, bool torsion) {
        std::vector<BitVec> cands;
        if (zi >= 0) {
            BitVec z(lam.size());
            z.set(zi);
            if (pool.contains(z))
                cands.push_back(z);
        }
        BitMatrix basis = pool.basis();
        for (auto& r : basis.row_list())
            cands.push_back(r);
        for (auto& v : cands) {
            if (span.contains(v))
                continue;
            bool single = zi >= 0 && v.count() == 1 && v.test(zi);
            BitVec rep = single ? v : (torsion ? tspan.reduce(v) : span.reduce(v));
            span.insert(rep);
            if (torsion)
                tspan.insert(rep);
            GeneratorRecord g;
            g.degree = n;
            g.element = from_vector(rep, lam);
            g.torsion = torsion;
            g.name = (single_square(g.element) ? "Z" : "T") + std::to_string(n);
            gens_.push_back(std::move(g));
        }
    };
    if (opt_.torsion)
        offer(torsion_[n], true);
    offer(image_[n], false);
    if (span.rank() != image_[n].rank())
        throw std::logic_error("generators do not span the image in degree " + std::to_string(n));

    // disambiguate repeated names within a degree
    std::map<std::string, int> seen;
    for (auto& g : gens_)
        if (g.degree == n && seen[g.name]++ > 0)
            g.name += "_" + std::to_string(seen[g.name]);
}

std::vector<GeneratorRecord> compute_image(Spectrum s, int d, Symm& symm)
{
    ImageSearch search(s, d, symm);
    search.run();
    return search.generators();
}

std::vector<GeneratorRecord> compute_torsion_flags(Spectrum s, int d, Symm& symm, bool polynomial_fallback)
{
    SearchOptions o;
    o.torsion = true;
    o.polynomial_fallback = polynomial_fallback;
    ImageSearch search(s, d, symm, o);
    search.run();
    return search.generators();
}

BitVec to_vector(const PartitionCombination& c, const PartitionIndex& lambda)
{
    BitVec v(lambda.size());
    for (auto& p : c.terms()) {
        int i = lambda.find(p);
        if (i < 0)
            throw std::invalid_argument("term " + to_string(p) + " outside the index");
        v.flip(i);
    }
    return v;
}

PartitionCombination from_vector(const BitVec& v, const PartitionIndex& lambda)
{
    PartitionCombination c;
    for (int i = v.lowest(); i >= 0; i = v.next(i + 1))
        c.toggle(lambda[i]);
    return c;
}

std::vector<GeneratorMonomial> generator_monomials(const std::vector<GeneratorRecord>& records, int n)
{
    std::vector<GeneratorMonomial> out;
    std::vector<int> stack;
    PartitionCombination one{Partition{}};
    auto rec = [&](auto&& self, size_t from, int left, const PartitionCombination& acc, bool tors) -> void {
        if (left == 0) {
            if (!stack.empty())
                out.push_back({stack, acc, tors});
            return;
        }
        for (size_t k = from; k < records.size(); ++k) {
            const auto& g = records[k];
            if (g.degree <= 0 || g.degree > left)
                continue;
            stack.push_back(static_cast<int>(k));
            self(self, k, left - g.degree, acc * g.element, tors || g.torsion);
            stack.pop_back();
        }
    };
    rec(rec, 0, n, one, false);
    return out;
}

std::string monomial_name(const std::vector<GeneratorRecord>& records, const std::vector<int>& factors)
{
    std::string s;
    for (size_t i = 0; i < factors.size();) {
        size_t j = i;
        while (j < factors.size() && factors[j] == factors[i])
            ++j;
        if (!s.empty())
            s += '*';
        s += records[factors[i]].name;
        if (j - i > 1)
            s += '^' + std::to_string(j - i);
        i = j;
    }
    return s.empty() ? "1" : s;
}

Subspace image_subspace(const std::vector<GeneratorRecord>& records, int n, bool torsion_only)
{
    PartitionIndex lam(enumerate_partitions(n, true));
    Subspace S(lam.size());
    if (n == 0) {
        if (!torsion_only)
            S.insert(to_vector(PartitionCombination{Partition{}}, lam));
        return S;
    }
    for (auto& m : generator_monomials(records, n))
        if (!torsion_only || m.has_torsion)
            S.insert(to_vector(m.element, lam));
    return S;
}

TorsionRankTable TorsionRankTable::published()
{
    TorsionRankTable t;
    for (int n = 0; n <= 33; ++n)
        t.ranks[n] = 0;
    for (auto [n, r] : std::initializer_list<std::pair<int, int>>{
             {10, 1}, {14, 1}, {18, 3}, {20, 1}, {22, 5}, {24, 2}, {26, 9}, {28, 4},
             {29, 1}, {30, 14}, {31, 1}, {32, 8}, {33, 2}})
        t.ranks[n] = r;
    return t;
}

CrosscheckReport rank_crosscheck(const std::vector<GeneratorRecord>& records, const TorsionRankTable& table, int d)
{
    CrosscheckReport rep;
    for (int n = 0; n <= d; ++n) {
        auto it = table.ranks.find(n);
        if (it == table.ranks.end())
            continue;
        int got = static_cast<int>(image_subspace(records, n, true).rank());
        bool ok = got == it->second;
        rep.rows.push_back({n, it->second, got, ok});
        rep.ok = rep.ok && ok;
    }
    return rep;
}

std::string Relation::text() const
{
    switch (kind) {
    case Kind::Beta:
        return "beta*" + generator + " = 0";
    case Kind::Two:
        return "2*" + generator + " = 0";
    case Kind::Square: {
        std::string s = generator + "^2 = ";
        for (size_t t = 0; t < u_terms.size(); ++t) {
            if (t)
                s += " + ";
            const auto& z = u_terms[t];
            for (size_t i = 0; i < z.size();) {
                size_t j = i;
                while (j < z.size() && z[j] == z[i])
                    ++j;
                if (i)
                    s += '*';
                s += "Z" + std::to_string(z[i]);
                if (j - i > 1)
                    s += '^' + std::to_string(j - i);
                i = j;
            }
        }
        return s;
    }
    }
    return {};
}

PresentationReport assemble_presentation(const std::vector<GeneratorRecord>& records, int d, Spectrum s)
{
    PresentationReport rep;
    rep.spectrum = s;
    rep.max_degree = d;
    if (s == Spectrum::MSPINC && d >= 2) {
        GeneratorRecord beta;
        beta.degree = 2;
        beta.name = "beta";
        rep.generators.push_back(beta);
    }
    for (auto& g : records)
        rep.generators.push_back(g);
    for (auto& g : records) {
        if (!g.torsion)
            continue;
        rep.relations.push_back({Relation::Kind::Beta, g.name, {}});
        rep.relations.push_back({Relation::Kind::Two, g.name, {}});
    }
    // T^2 = U with U the image of T under Y_λ -> Y_λ^2 = Z_{2λ}
    for (auto& g : records) {
        if (g.name.empty() || g.name[0] != 'T')
            continue;
        Relation r{Relation::Kind::Square, g.name, {}};
        for (auto& lam : g.element.sorted()) {
            std::vector<int> z;
            for (int k : lam.parts)
                z.push_back(2 * k);
            r.u_terms.push_back(std::move(z));
        }
        rep.relations.push_back(std::move(r));
    }
    return rep;
}

DoldMembership check_dold_membership(int i, const std::vector<GeneratorRecord>& records, Symm& symm)
{
    if (i < 1)
        throw std::invalid_argument("Dold index must be positive");
    auto m = ManifoldExpression::product({Atom::dold(i), Atom::dold(i)});
    auto cls = thom_class(m, symm);
    PartitionIndex lam(enumerate_partitions(2 * i, true));
    BitVec v = to_vector(cls, lam);
    DoldMembership r;
    r.in_image = image_subspace(records, 2 * i).contains(v);
    r.torsion = image_subspace(records, 2 * i, true).contains(v);
    return r;
}

}  // namespace bordism
