#include "toric/report.hpp"

#include <algorithm>
#include <sstream>

namespace toric::report {

namespace {

// Left-aligned columns separated by " | ", with a rule under the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return "";
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::string line;
        for (std::size_t c = 0; c < rows[k].size(); ++c) {
            if (c) line += " | ";
            line += rows[k][c] + std::string(width[c] - rows[k][c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
        if (k == 0) {
            std::string rule;
            for (std::size_t c = 0; c < width.size(); ++c) rule += (c ? "-+-" : "") + std::string(width[c], '-');
            out << rule << "\n";
        }
    }
    return out.str();
}

std::vector<std::string> coord_strings(const SectorElement& g) {
    std::vector<std::string> out;
    for (const auto& q : g.coords) out.push_back(to_string(q));
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
    return out;
}

std::vector<std::size_t> one_based(const FacetSet& s) {
    std::vector<std::size_t> out;
    for (std::size_t i : s) out.push_back(i + 1);
    return out;
}

std::string ideal_string(const SRPresentation& pres) {
    std::vector<std::string> gens;
    for (const auto& g : pres.ideal_generators()) gens.push_back(to_string(Monomial::squarefree(pres.num_vars(), g)));
    return "<" + join(gens, ", ") + ">";
}

std::vector<std::string> ideal_list(const SRPresentation& pres) {
    std::vector<std::string> gens;
    for (const auto& g : pres.ideal_generators()) gens.push_back(to_string(Monomial::squarefree(pres.num_vars(), g)));
    return gens;
}

std::string ring_string(std::size_t m) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));
    return "Z[" + join(vars, ",") + "]";
}

} // namespace

std::string sector_name(std::size_t k) {
    return "g" + std::to_string(k);
}

std::string product_entry(const StructureConstant& sc) {
    if (sc.is_zero()) return "0";
    const std::string target = "1_" + sector_name(*sc.target);
    if (sc.virtual_class.is_one() && sc.euler_class.is_one()) return target;
    return "(" + to_string(sc.virtual_class) + ")*(" + to_string(sc.euler_class) + ")*" + target;
}

std::string class_string(const CRClass& a) {
    if (a.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [k, p] : a.components) parts.push_back("(" + to_string(p) + ")*1_" + sector_name(k));
    return join(parts, " + ");
}

Json diagnostic_json(const std::optional<Diagnostic>& d) {
    if (!d) return Json{{"valid", true}};
    return Json{{"valid", false}, {"condition", std::string(to_string(d->failure))}, {"detail", d->detail}};
}

std::string diagnostic_pretty(const std::optional<Diagnostic>& d) {
    if (!d) return "valid\n";
    return "invalid: " + std::string(to_string(d->failure)) + ": " + d->detail + "\n";
}

Json vertices_json(const FaceComplex& fc) {
    Json list = Json::array();
    for (std::size_t k = 0; k < fc.vertices.size(); ++k) {
        const auto& v = fc.vertices[k];
        Json point = Json::array();
        for (const auto& q : v.point) point.push_back(to_string(q));
        list.push_back(Json{{"index", k + 1}, {"point", point}, {"facets", one_based(v.facets)}});
    }
    return Json{{"vertices", list}};
}

std::string vertices_pretty(const FaceComplex& fc) {
    std::vector<std::vector<std::string>> rows{{"vertex", "point", "facets"}};
    for (std::size_t k = 0; k < fc.vertices.size(); ++k) {
        std::vector<std::string> pt;
        for (const auto& q : fc.vertices[k].point) pt.push_back(to_string(q));
        rows.push_back({"v" + std::to_string(k + 1), "(" + join(pt, ",") + ")", to_string(fc.vertices[k].facets)});
    }
    return render_table(rows);
}

Json complex_json(const FaceComplex& fc) {
    Json nonfaces = Json::array();
    for (const auto& s : fc.minimal_nonfaces) nonfaces.push_back(one_based(s));
    Json edges = Json::array();
    for (const auto& e : fc.edges) {
        edges.push_back(Json{{"v", e.v + 1}, {"w", e.w + 1}, {"j", e.j + 1}, {"i", e.i + 1}});
    }
    Json facets = Json::array();
    for (const auto& v : fc.vertices) facets.push_back(one_based(v.facets));
    return Json{{"num_facets", fc.num_facets},
                {"dimension", fc.dim},
                {"maximal_faces", facets},
                {"minimal_nonfaces", nonfaces},
                {"edges", edges}};
}

std::string complex_pretty(const FaceComplex& fc) {
    std::ostringstream out;
    out << "facets: " << fc.num_facets << ", dimension: " << fc.dim << "\n";
    std::vector<std::string> maximal;
    for (const auto& v : fc.vertices) maximal.push_back(to_string(v.facets));
    out << "maximal faces: " << join(maximal, " ") << "\n";
    std::vector<std::string> nonfaces;
    for (const auto& s : fc.minimal_nonfaces) nonfaces.push_back(to_string(s));
    out << "minimal non-faces: " << join(nonfaces, " ") << "\n";
    out << "edges:\n";
    std::vector<std::vector<std::string>> rows{{"v", "w", "j (v only)", "i (w only)"}};
    for (const auto& e : fc.edges) {
        rows.push_back({"v" + std::to_string(e.v + 1), "v" + std::to_string(e.w + 1), std::to_string(e.j + 1),
                        std::to_string(e.i + 1)});
    }
    out << render_table(rows);
    return out.str();
}

Json sectors_json(const SectorTable& table) {
    Json list = Json::array();
    for (std::size_t k = 0; k < table.size(); ++k) {
        const auto& g = table[k];
        Json fixed = Json::array();
        for (std::size_t v : table.fixed_vertices(k)) fixed.push_back(v + 1);
        list.push_back(Json{{"index", k},
                            {"name", sector_name(k)},
                            {"coords", coord_strings(g)},
                            {"roots_of_unity", root_of_unity_string(g)},
                            {"support", one_based(g.support())},
                            {"fixed_face_vertices", fixed},
                            {"age", to_string(age(g))},
                            {"degree_shift", to_string(2 * age(g))},
                            {"ideal", ideal_list(table.module(k))}});
    }
    return Json{{"sectors", list}};
}

std::string sectors_pretty(const SectorTable& table) {
    std::vector<std::vector<std::string>> rows{
        {"g", "element", "support", "fixed face", "coords", "2age", "sector ideal"}};
    for (std::size_t k = 0; k < table.size(); ++k) {
        const auto& g = table[k];
        std::vector<std::string> fixed;
        for (std::size_t v : table.fixed_vertices(k)) fixed.push_back("v" + std::to_string(v + 1));
        rows.push_back({sector_name(k), root_of_unity_string(g), to_string(g.support()), join(fixed, ","),
                        "(" + join(coord_strings(g), ",") + ")", to_string(2 * age(g)), ideal_string(table.module(k))});
    }
    return render_table(rows);
}

Json sr_json(const SectorTable& table) {
    const std::size_t m = table.complex().num_facets;
    Json modules = Json::array();
    for (std::size_t k = 0; k < table.size(); ++k) {
        modules.push_back(Json{{"sector", k},
                               {"tau", one_based(table.module(k).tau())},
                               {"degree_shift", to_string(2 * age(table[k]))},
                               {"ideal", ideal_list(table.module(k))}});
    }
    return Json{{"ring", ring_string(m)}, {"ideal", ideal_list(table.module(0))}, {"sector_modules", modules}};
}

std::string sr_pretty(const SectorTable& table) {
    const std::size_t m = table.complex().num_facets;
    std::ostringstream out;
    out << "SR = " << ring_string(m) << " / " << ideal_string(table.module(0)) << "\n";
    out << "H_orb = ";
    for (std::size_t k = 0; k < table.size(); ++k) {
        out << (k ? "\n      + " : "") << ring_string(m) << " / " << ideal_string(table.module(k)) << "  ["
            << sector_name(k) << ", shift " << to_string(2 * age(table[k])) << "]";
    }
    out << "\n";
    return out.str();
}

Json product_table_json(const ChenRuanRing& ring) {
    Json entries = Json::array();
    for (const auto& row : ring.multiplication_table()) {
        for (const auto& sc : row) {
            Json e{{"g", sc.g}, {"h", sc.h}, {"entry", product_entry(sc)}};
            if (sc.is_zero()) {
                e["zero"] = true;
            } else {
                e["zero"] = false;
                e["target"] = *sc.target;
                e["virtual_class"] = to_string(sc.virtual_class);
                e["euler_class"] = to_string(sc.euler_class);
            }
            entries.push_back(std::move(e));
        }
    }
    return Json{{"size", ring.sectors().size()}, {"entries", entries}};
}

std::string product_table_pretty(const ChenRuanRing& ring) {
    const std::size_t n = ring.sectors().size();
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"g\\h"};
    for (std::size_t h = 0; h < n; ++h) header.push_back("1_" + sector_name(h));
    rows.push_back(header);
    for (const auto& row : ring.multiplication_table()) {
        std::vector<std::string> r{"1_" + sector_name(row.front().g)};
        for (const auto& sc : row) r.push_back(product_entry(sc));
        rows.push_back(std::move(r));
    }
    return render_table(rows);
}

Json class_json(const ChenRuanRing& ring, const CRClass& a) {
    Json comps = Json::array();
    for (const auto& [k, p] : a.components) comps.push_back(Json{{"sector", k}, {"polynomial", to_string(p)}});
    Json out{{"components", comps}};
    if (auto d = ring.rational_degree(a)) {
        out["degree"] = to_string(*d);
    } else {
        out["degree"] = nullptr;
    }
    return out;
}

std::string class_pretty(const ChenRuanRing& ring, const CRClass& a) {
    std::string out = class_string(a) + "\n";
    if (auto d = ring.rational_degree(a)) {
        out += "degree " + to_string(*d) + "\n";
    } else {
        out += "degree: not homogeneous\n";
    }
    return out;
}

Json nh_json(const ChenRuanRing& ring, const NHClass& a) {
    Json comps = Json::array();
    for (const auto& [key, p] : a.components) {
        comps.push_back(Json{{"sector", key.first},
                             {"vertex", key.second + 1},
                             {"facets", one_based(ring.complex().vertices[key.second].facets)},
                             {"polynomial", to_string(p)}});
    }
    return Json{{"components", comps}};
}

std::string nh_pretty(const ChenRuanRing& ring, const NHClass& a) {
    if (a.components.empty()) return "0\n";
    std::vector<std::vector<std::string>> rows{{"sector", "vertex", "facets", "restriction"}};
    for (const auto& [key, p] : a.components) {
        rows.push_back({sector_name(key.first), "v" + std::to_string(key.second + 1),
                        to_string(ring.complex().vertices[key.second].facets), to_string(p)});
    }
    return render_table(rows);
}

Json check_json(const std::vector<PropertyResult>& results) {
    Json list = Json::array();
    bool all = true;
    for (const auto& r : results) {
        list.push_back(Json{{"property", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        all = all && r.passed;
    }
    return Json{{"passed", all}, {"properties", list}};
}

std::string check_pretty(const std::vector<PropertyResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    return out.str();
}

} // namespace toric::report
