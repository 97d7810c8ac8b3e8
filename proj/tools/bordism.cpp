// bordism: images of spin and spin^c bordism in the unoriented bordism ring

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "report.hpp"

using namespace bordism;
using report::ordered_json;

namespace {

enum Exit { Ok = 0, Mismatch = 1, Usage = 2 };

struct RunConfig {
    std::string spectrum = "mspinc";
    int max_degree = -1;
    std::string cache_dir;
    std::string format = "text";
    bool torsion_fallback = false;
    bool no_cache = false;
};

std::string default_cache_dir()
{
    if (const char* e = std::getenv("BORDISM_CACHE"); e && *e)
        return e;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
        return std::string(x) + "/bordism";
    if (const char* h = std::getenv("HOME"); h && *h)
        return std::string(h) + "/.cache/bordism";
    return "";
}

bool json_out(const RunConfig& c) { return c.format == "json"; }

std::string wmono(const Partition& p)
{
    std::string s;
    for (size_t i = p.parts.size(); i > 0;) {
        size_t j = i;
        while (j > 0 && p.parts[j - 1] == p.parts[i - 1])
            --j;
        s += (s.empty() ? "w" : "*w") + std::to_string(p.parts[i - 1]);
        if (i - j > 1)
            s += "^" + std::to_string(i - j);
        i = j;
    }
    return s.empty() ? "1" : s;
}

int cmd_image(const RunConfig& c, const std::string& input)
{
    Spectrum s;
    int d;
    std::vector<GeneratorRecord> gens;
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in)
            throw CLI::ValidationError("--input", "cannot read " + input);
        gens = report::generators_from_json(ordered_json::parse(in), s, d);
    } else {
        s = parse_spectrum(c.spectrum);
        d = c.max_degree < 0 ? 24 : c.max_degree;
        Symm symm(c.no_cache ? "" : c.cache_dir);
        SearchOptions o;
        o.torsion = true;
        o.polynomial_fallback = c.torsion_fallback;
        ImageSearch search(s, d, symm, o);
        search.run();
        gens = search.generators();
    }
    int code = Ok;
    std::string note;
    if (s == Spectrum::MSPINC) {
        auto cr = rank_crosscheck(gens, TorsionRankTable::published(), std::min(d, 33));
        if (!cr.ok) {
            code = Mismatch;
            for (auto& r : cr.rows)
                if (!r.ok)
                    note += "torsion rank mismatch in degree " + std::to_string(r.degree) + ": expected " +
                            std::to_string(r.expected) + ", got " + std::to_string(r.computed) + "\n";
        }
    }
    if (json_out(c))
        std::cout << report::generators_json(s, d, gens).dump(2) << '\n';
    else
        std::cout << report::generators_text(gens);
    std::cerr << note;
    return code;
}

int cmd_presentation(const RunConfig& c)
{
    int d = c.max_degree < 0 ? 33 : c.max_degree;
    Symm symm(c.no_cache ? "" : c.cache_dir);
    auto gens = compute_torsion_flags(Spectrum::MSPINC, d, symm, c.torsion_fallback);
    auto rep = assemble_presentation(gens, d);
    if (json_out(c))
        std::cout << report::presentation_json(rep).dump(2) << '\n';
    else
        std::cout << report::presentation_text(rep);
    return Ok;
}

int cmd_manifold(const RunConfig& c, const std::string& text, const std::vector<std::string>& numbers)
{
    ManifoldExpression m;
    try {
        m = parse_manifold(text);
        m.dimension();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    }
    Symm symm(c.no_cache ? "" : c.cache_dir);
    auto cls = thom_class(m, symm);
    ordered_json nums = ordered_json::object();
    std::string lines;
    for (auto& t : numbers) {
        auto p = to_partitions(parse_wpoly(t));
        if (p.size() != 1)
            throw CLI::ValidationError("--sw", "expected a single w-monomial: " + t);
        bool v = sw_number(m, *p.terms().begin(), symm);
        nums[t] = v ? 1 : 0;
        lines += "<" + t + ", [M]> = " + (v ? "1" : "0") + "\n";
    }
    if (json_out(c)) {
        ordered_json j;
        j["manifold"] = to_string(m);
        j["dimension"] = m.dimension();
        j["class"] = report::partitions_json(cls);
        j["numbers"] = nums;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << to_string(cls) << '\n' << lines;
    }
    return Ok;
}

int verify_tables(const RunConfig& c, int through)
{
    Symm symm(c.no_cache ? "" : c.cache_dir);
    bool pass = true;
    ordered_json rows = ordered_json::array();
    for (auto* tbl : {&thom_generator_table(), &dold_square_table()}) {
        auto rep = verify_table(*tbl, symm, through);
        pass = pass && rep.pass;
        for (auto& r : rep.rows) {
            if (json_out(c))
                rows.push_back({{"element", r.row.element}, {"manifold", r.row.manifold}, {"pass", r.pass}});
            else
                std::cout << (r.pass ? "pass  " : "FAIL  ") << r.row.element << "  <-  " << r.row.manifold
                          << (r.pass ? "" : "  (got " + to_string(r.computed) + ")") << '\n';
        }
    }
    if (json_out(c))
        std::cout << ordered_json{{"suite", "tables"}, {"pass", pass}, {"rows", rows}}.dump(2) << '\n';
    return pass ? Ok : Mismatch;
}

int verify_milnor(const RunConfig& c)
{
    Symm symm(c.no_cache ? "" : c.cache_dir);
    auto r = verify_milnor24(symm);
    if (json_out(c)) {
        ordered_json listed = ordered_json::object();
        for (auto& [m, v] : r.listed)
            listed[wmono(m)] = v;
        ordered_json j{{"suite", "milnor24"},
                       {"pass", r.pass()},
                       {"listed_numbers", listed},
                       {"spin_numbers_checked", r.spin_monomials_checked},
                       {"nonzero_spin_numbers", r.nonzero_spin_numbers.size()},
                       {"class_matches", r.class_ok}};
        std::cout << j.dump(2) << '\n';
    } else {
        for (auto& [m, v] : r.listed)
            std::cout << wmono(m) << " = " << v << '\n';
        std::cout << "numbers with w1 or w2: " << r.spin_monomials_checked << " checked, "
                  << r.nonzero_spin_numbers.size() << " nonzero\n"
                  << "class " << (r.class_ok ? "matches" : "differs") << '\n'
                  << (r.pass() ? "pass" : "FAIL") << '\n';
    }
    return r.pass() ? Ok : Mismatch;
}

int verify_ranks(const RunConfig& c)
{
    int d = c.max_degree < 0 ? 31 : c.max_degree;
    if (d > 33)
        throw CLI::ValidationError("--max-degree", "the rank table covers degrees up to 33");
    Symm symm(c.no_cache ? "" : c.cache_dir);
    auto gens = compute_torsion_flags(Spectrum::MSPINC, d, symm, c.torsion_fallback);
    auto rep = rank_crosscheck(gens, TorsionRankTable::published(), d);
    if (json_out(c)) {
        ordered_json rows = ordered_json::array();
        for (auto& r : rep.rows)
            rows.push_back({{"degree", r.degree}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.ok}});
        std::cout << ordered_json{{"suite", "ranks"}, {"pass", rep.ok}, {"rows", rows}}.dump(2) << '\n';
    } else {
        for (auto& r : rep.rows)
            std::cout << r.degree << '\t' << r.expected << '\t' << r.computed << (r.ok ? "" : "\tMISMATCH") << '\n';
        std::cout << (rep.ok ? "pass" : "FAIL") << '\n';
    }
    return rep.ok ? Ok : Mismatch;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Images of spin and spin^c bordism in unoriented bordism"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.cache_dir = default_cache_dir();

    auto common = [&](CLI::App* sub) {
        sub->add_option("--max-degree", cfg.max_degree, "largest degree to compute")->check(CLI::NonNegativeNumber);
        sub->add_option("--cache-dir", cfg.cache_dir, "transition matrix cache (env BORDISM_CACHE)");
        sub->add_flag("--no-cache", cfg.no_cache, "do not read or write the cache");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--torsion-fallback", cfg.torsion_fallback, "seed torsion with all (Q0,Q1)-torsion classes");
    };

    std::string input;
    auto* image = app.add_subcommand("image", "ring generators of the image");
    common(image);
    image->add_option("--spectrum", cfg.spectrum, "mo, mso, mspin or mspinc")
        ->check(CLI::IsMember({"mo", "mso", "mspin", "mspinc"}, CLI::ignore_case));
    image->add_option("--input", input, "re-emit a generator file instead of computing");

    auto* pres = app.add_subcommand("presentation", "generators and relations for spin^c");
    common(pres);

    std::string expr;
    std::vector<std::string> numbers;
    auto* mf = app.add_subcommand("manifold", "class of a manifold in Thom's basis");
    common(mf);
    mf->add_option("expression", expr, "e.g. \"RP4 x RP2^2 + D5^2\"")->required();
    mf->add_option("--sw", numbers, "Stiefel-Whitney number to evaluate, e.g. w4*w6*w7^2");

    int through = -1;
    auto* verify = app.add_subcommand("verify", "check published data");
    verify->require_subcommand(1);
    auto* vt = verify->add_subcommand("tables", "manifold representative tables");
    common(vt);
    vt->add_option("--through", through, "only rows up to this dimension");
    auto* vm = verify->add_subcommand("milnor24", "the 24-dimensional spin manifold");
    common(vm);
    auto* vr = verify->add_subcommand("ranks", "2-torsion ranks of spin^c bordism");
    common(vr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }

    try {
        if (*image)
            return cmd_image(cfg, input);
        if (*pres)
            return cmd_presentation(cfg);
        if (*mf)
            return cmd_manifold(cfg, expr, numbers);
        if (*vt)
            return verify_tables(cfg, through);
        if (*vm)
            return verify_milnor(cfg);
        if (*vr)
            return verify_ranks(cfg);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Mismatch;
    }
    return Usage;
}
