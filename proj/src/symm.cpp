#include "bordism/symm.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace bordism {

namespace {

constexpr char kMagic[8] = {'B', 'O', 'R', 'D', 'S', 'Y', 'M', 'M'};

struct Group {
    int value, mult;
};

// e_{ν-row} * e_k expanded in m: XOR into out every m_λ with odd coefficient
// in m_ν e_k. t[g] parts of value v_g are raised to v_g + 1; value 0 stands
// for fresh variables.
class PieriExpander {
public:
    PieriExpander(const PartitionIndex& target, int k) : target_(target), k_(k) {}

    void expand(const Partition& nu, BitVec& out)
    {
        groups_.clear();
        for (size_t i = 0; i < nu.parts.size();) {
            size_t j = i;
            while (j < nu.parts.size() && nu.parts[j] == nu.parts[i])
                ++j;
            groups_.push_back({nu.parts[i], static_cast<int>(j - i)});
            i = j;
        }
        groups_.push_back({0, k_});
        t_.assign(groups_.size(), 0);
        out_ = &out;
        rec(0, k_);
    }

private:
    int mult_of(int value) const
    {
        for (auto& g : groups_)
            if (g.value == value)
                return g.mult;
        return 0;
    }

    void rec(size_t g, int rest)
    {
        if (g + 1 == groups_.size()) {
            t_[g] = rest;
            emit();
            return;
        }
        int hi = std::min(groups_[g].mult, rest);
        for (int t = 0; t <= hi; ++t) {
            t_[g] = t;
            rec(g + 1, rest - t);
        }
    }

    void emit()
    {
        // multiplicity of v+1 in λ must contain t_v bitwise (Lucas)
        for (size_t g = 0; g < groups_.size(); ++g) {
            if (!t_[g])
                continue;
            int up = groups_[g].value + 1;
            int m = t_[g];
            for (size_t h = 0; h < groups_.size(); ++h)
                if (groups_[h].value == up)
                    m += groups_[h].mult - t_[h];
            if ((t_[g] & m) != t_[g])
                return;
        }
        parts_.clear();
        for (size_t g = 0; g < groups_.size(); ++g) {
            int v = groups_[g].value;
            if (v > 0)
                parts_.insert(parts_.end(), groups_[g].mult - t_[g], v);
            parts_.insert(parts_.end(), t_[g], v + 1);
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        lam_.parts = parts_;
        int idx = target_.find(lam_);
        if (idx < 0)
            throw std::logic_error("Pieri expansion left the degree");
        out_->flip(idx);
    }

    const PartitionIndex& target_;
    int k_;
    std::vector<Group> groups_;
    std::vector<int> t_;
    std::vector<int> parts_;
    Partition lam_;
    BitVec* out_ = nullptr;
};

template <class F>
void parallel_for(size_t n, unsigned threads, F&& f)
{
    if (threads <= 1 || n < 64) {
        for (size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex emu;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            try {
                for (size_t i; (i = next.fetch_add(1)) < n;)
                    f(i);
            } catch (...) {
                std::lock_guard lk(emu);
                err = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
}

}  // namespace

Symm::Symm(std::string cache_dir, unsigned threads) : dir_(std::move(cache_dir)), threads_(threads)
{
    if (threads_ == 0)
        threads_ = std::max(1u, std::thread::hardware_concurrency());
}

const Symm::Pair& Symm::get(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative degree");
    std::lock_guard lk(mu_);
    for (int m = 0; m <= n; ++m) {
        if (tables_.count(m))
            continue;
        auto p = std::make_unique<Pair>();
        if (load(m, *p)) {
            tables_[m] = std::move(p);
            continue;
        }
        tables_[m] = build(m);
        store(*tables_[m]);
    }
    return *tables_.at(n);
}

const TransitionMatrix& Symm::monomial_to_elementary(int n) { return get(n).m_in_e; }
const TransitionMatrix& Symm::elementary_to_monomial(int n) { return get(n).e_in_m; }

std::unique_ptr<Symm::Pair> Symm::build(int n)
{
    auto idx = std::make_shared<const PartitionIndex>(enumerate_partitions(n, false));
    const size_t N = idx->size();
    auto out = std::make_unique<Pair>();
    BitMatrix B(N, N);

    if (n == 0) {
        B[0].set(0);
    } else {
        parallel_for(N, threads_, [&](size_t r) {
            const Partition& mu = (*idx)[r];
            int k = mu.parts.back();
            Partition rest;
            rest.parts.assign(mu.parts.begin(), mu.parts.end() - 1);
            const Pair& lower = *tables_.at(n - k);
            const auto& lidx = *lower.e_in_m.partitions;
            const BitVec& row = lower.e_in_m.bits[lidx.find(rest)];
            PieriExpander ex(*idx, k);
            for (int c = row.lowest(); c >= 0; c = row.next(c + 1))
                ex.expand(lidx[c], B[r]);
        });
    }

    // Ordering rows by the conjugate makes B upper unitriangular: e_μ has
    // leading term m_{μ'} and every other λ in its support is dominated by μ'.
    std::vector<int> conj(N);
    for (size_t i = 0; i < N; ++i)
        conj[i] = idx->find(conjugate((*idx)[i]));
    std::vector<int> row_at(N);
    for (size_t i = 0; i < N; ++i)
        row_at[conj[i]] = static_cast<int>(i);
    BitMatrix X(N, N);
    for (size_t r = N; r-- > 0;) {
        const BitVec& u = B[row_at[r]];
        if (u.lowest() != static_cast<int>(r))
            throw std::logic_error("transition matrix is singular in degree " + std::to_string(n));
        X[r].set(r);
        for (int c = u.next(r + 1); c >= 0; c = u.next(c + 1))
            X[r] ^= X[c];
    }
    BitMatrix inv(N, N);
    parallel_for(N, threads_, [&](size_t r) {
        const BitVec& x = X[r];
        for (int c = x.lowest(); c >= 0; c = x.next(c + 1))
            inv[r].set(row_at[c]);
    });

    out->m_in_e = {n, TransitionMatrix::Direction::MInE, idx, std::move(inv)};
    out->e_in_m = {n, TransitionMatrix::Direction::EInM, idx, std::move(B)};
    return out;
}

namespace {

std::filesystem::path cache_file(const std::string& dir, int n)
{
    return std::filesystem::path(dir) / ("symm-v" + std::to_string(Symm::cache_version) + "-" + std::to_string(n) + ".bin");
}

template <class T>
void put(std::ostream& os, T v) { os.write(reinterpret_cast<const char*>(&v), sizeof v); }
template <class T>
bool get_raw(std::istream& is, T& v) { return bool(is.read(reinterpret_cast<char*>(&v), sizeof v)); }

}  // namespace

bool Symm::load(int n, Pair& out) const
{
    if (dir_.empty())
        return false;
    std::ifstream is(cache_file(dir_, n), std::ios::binary);
    if (!is)
        return false;
    char magic[8];
    uint32_t ver, deg, count;
    if (!is.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0)
        return false;
    if (!get_raw(is, ver) || ver != cache_version || !get_raw(is, deg) || deg != static_cast<uint32_t>(n) || !get_raw(is, count))
        return false;
    auto expected = enumerate_partitions(n, false);
    if (count != expected.size())
        return false;
    for (auto& p : expected) {
        uint8_t len;
        if (!get_raw(is, len) || len != p.parts.size())
            return false;
        for (int x : p.parts) {
            uint8_t v;
            if (!get_raw(is, v) || v != x)
                return false;
        }
    }
    auto idx = std::make_shared<const PartitionIndex>(std::move(expected));
    auto read_matrix = [&](BitMatrix& m) {
        m = BitMatrix(count, count);
        for (size_t r = 0; r < count; ++r) {
            auto& w = m[r].words();
            if (!is.read(reinterpret_cast<char*>(w.data()), static_cast<std::streamsize>(w.size() * 8)))
                return false;
        }
        return true;
    };
    BitMatrix minv, b;
    if (!read_matrix(minv) || !read_matrix(b))
        return false;
    out.m_in_e = {n, TransitionMatrix::Direction::MInE, idx, std::move(minv)};
    out.e_in_m = {n, TransitionMatrix::Direction::EInM, idx, std::move(b)};
    return true;
}

void Symm::store(const Pair& p) const
{
    if (dir_.empty())
        return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    auto final_path = cache_file(dir_, p.m_in_e.degree);
    auto tmp = final_path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            return;  // cache is best effort
        os.write(kMagic, 8);
        put<uint32_t>(os, cache_version);
        put<uint32_t>(os, p.m_in_e.degree);
        put<uint32_t>(os, static_cast<uint32_t>(p.m_in_e.partitions->size()));
        for (auto& part : p.m_in_e.partitions->list()) {
            put<uint8_t>(os, static_cast<uint8_t>(part.parts.size()));
            for (int x : part.parts)
                put<uint8_t>(os, static_cast<uint8_t>(x));
        }
        for (const BitMatrix* m : {&p.m_in_e.bits, &p.e_in_m.bits})
            for (size_t r = 0; r < m->rows(); ++r) {
                auto& w = (*m)[r].words();
                os.write(reinterpret_cast<const char*>(w.data()), static_cast<std::streamsize>(w.size() * 8));
            }
        if (!os)
            return;
    }
    std::filesystem::rename(tmp, final_path, ec);
    if (ec)
        std::filesystem::remove(tmp, ec);
}

PartitionCombination Symm::p_lambda_parts(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("P_lambda needs a non-empty partition");
    auto& t = monomial_to_elementary(lambda.degree());
    const BitVec& row = t.bits[t.partitions->find(lambda)];
    PartitionCombination c;
    for (int i = row.lowest(); i >= 0; i = row.next(i + 1))
        c.toggle((*t.partitions)[i]);
    return c;
}

F2Polynomial Symm::p_lambda(const Partition& lambda) { return from_partitions(p_lambda_parts(lambda)); }

ThomElement Symm::thom_basis_element(const Partition& lambda)
{
    if (!lambda.nondyadic())
        throw std::invalid_argument("dyadic partition " + to_string(lambda) + " indexes no Thom basis element");
    if (lambda.empty())
        return {F2Polynomial::one()};
    return {p_lambda(lambda)};
}

BitVec Symm::express_in_m_basis(const BitVec& wcoords, int n)
{
    auto& t = elementary_to_monomial(n);
    BitVec out(t.partitions->size());
    for (int i = wcoords.lowest(); i >= 0; i = wcoords.next(i + 1))
        out ^= t.bits[i];
    return out;
}

PartitionCombination Symm::express_in_m_basis(const F2Polynomial& p)
{
    if (p.is_zero())
        return {};
    int n = p.degree();
    auto& idx = partitions(n);
    BitVec w(idx.size());
    auto parts = to_partitions(p);
    for (auto& m : parts.terms())
        w.flip(idx.find(m));
    BitVec m = express_in_m_basis(w, n);
    PartitionCombination c;
    for (int i = m.lowest(); i >= 0; i = m.next(i + 1))
        c.toggle(idx[i]);
    return c;
}

}  // namespace bordism
