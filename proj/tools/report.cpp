#include "report.hpp"

#include <sstream>

namespace bordism::report {

ordered_json partitions_json(const PartitionCombination& c)
{
    ordered_json a = ordered_json::array();
    for (auto& p : c.sorted())
        a.push_back(p.parts);
    return a;
}

PartitionCombination partitions_from_json(const ordered_json& j)
{
    PartitionCombination c;
    for (auto& p : j)
        c.toggle(Partition(p.get<std::vector<int>>()));
    return c;
}

namespace {

ordered_json record_json(const GeneratorRecord& g)
{
    ordered_json r;
    r["degree"] = g.degree;
    r["name"] = g.name;
    r["partitions"] = partitions_json(g.element);
    r["torsion"] = g.torsion;
    return r;
}

}  // namespace

ordered_json generators_json(Spectrum s, int max_degree, const std::vector<GeneratorRecord>& gens)
{
    ordered_json j;
    j["spectrum"] = to_string(s);
    j["max_degree"] = max_degree;
    j["generators"] = ordered_json::array();
    for (auto& g : gens)
        j["generators"].push_back(record_json(g));
    return j;
}

std::vector<GeneratorRecord> generators_from_json(const ordered_json& j, Spectrum& s, int& max_degree)
{
    s = parse_spectrum(j.at("spectrum").get<std::string>());
    max_degree = j.at("max_degree").get<int>();
    std::vector<GeneratorRecord> out;
    for (auto& r : j.at("generators")) {
        GeneratorRecord g;
        g.degree = r.at("degree").get<int>();
        g.name = r.at("name").get<std::string>();
        g.element = partitions_from_json(r.at("partitions"));
        g.torsion = r.at("torsion").get<bool>();
        out.push_back(std::move(g));
    }
    return out;
}

ordered_json presentation_json(const PresentationReport& p)
{
    ordered_json j = generators_json(p.spectrum, p.max_degree, p.generators);
    j["relations"] = ordered_json::array();
    for (auto& r : p.relations) {
        ordered_json o;
        switch (r.kind) {
        case Relation::Kind::Beta: o["kind"] = "beta"; break;
        case Relation::Kind::Two: o["kind"] = "two"; break;
        case Relation::Kind::Square: o["kind"] = "square"; break;
        }
        o["generator"] = r.generator;
        if (r.kind == Relation::Kind::Square)
            o["u"] = r.u_terms;
        o["text"] = r.text();
        j["relations"].push_back(std::move(o));
    }
    return j;
}

std::string generators_text(const std::vector<GeneratorRecord>& gens)
{
    std::ostringstream os;
    if (gens.empty())
        os << "(no generators)\n";
    for (auto& g : gens) {
        os << g.degree << '\t' << g.name << (g.torsion ? "\ttorsion\t" : "\t\t");
        if (g.element.size() <= 4)
            os << to_string(g.element);
        else
            os << g.element.size() << " terms";
        os << '\n';
    }
    return os.str();
}

std::string presentation_text(const PresentationReport& p)
{
    std::ostringstream os;
    os << "generators:";
    for (auto& g : p.generators)
        os << ' ' << g.name;
    os << "\nrelations:";
    if (p.relations.empty())
        os << " none";
    os << '\n';
    for (auto& r : p.relations)
        os << "  " << r.text() << '\n';
    return os.str();
}

}  // namespace bordism::report
