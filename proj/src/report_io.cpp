#include "modcohom/report_io.hpp"

#include <fstream>
#include <sstream>

namespace modcohom {

namespace {

using json = nlohmann::ordered_json;

std::string weight_key(Weight w) {
    return "[" + std::to_string(w.a) + "," + std::to_string(w.b) + "]";
}

Weight weight_from_key(const std::string& key) {
    auto comma = key.find(',');
    return {std::stoll(key.substr(1, comma - 1)),
            std::stoll(key.substr(comma + 1, key.size() - comma - 2))};
}

std::string factors_summary(const DegreeCohomology& deg) {
    if (deg.factors.empty() && deg.residual.empty()) return deg.total == 0 ? "0" : "?";
    std::string out;
    for (const auto& f : deg.factors) {
        if (!out.empty()) out += " + ";
        out += factor_name(f);
    }
    if (!deg.residual.empty()) {
        if (!out.empty()) out += " + ";
        out += "residual{";
        bool first = true;
        for (const auto& [w, m] : deg.residual) {
            if (!first) out += ",";
            out += weight_key(w) + ":" + std::to_string(m);
            first = false;
        }
        out += "}";
    }
    return out;
}

}  // namespace

std::string factor_name(const CohomFactor& f) {
    std::string base = f.weight.is_zero()
                           ? "k"
                           : "L(" + std::to_string(f.weight.a) + "," + std::to_string(f.weight.b) +
                                 ")^(" + std::to_string(f.twist) + ")";
    if (f.mult == 1) return base;
    return std::to_string(f.mult) + "*" + base;
}

json report_to_json(const CohomologyReport& report) {
    json j;
    j["p"] = report.p;
    j["algebra"] = report.algebra;
    j["module"] = {{"family", report.module_family},
                   {"weight", {report.module_weight.a, report.module_weight.b}}};
    j["cohomology"] = json::array();
    for (std::size_t n = 0; n < report.degrees.size(); ++n) {
        const auto& deg = report.degrees[n];
        json entry;
        entry["degree"] = n;
        entry["dim"] = deg.total;
        entry["weights"] = json::object();
        for (const auto& [w, d] : deg.weight_dims) entry["weights"][weight_key(w)] = d;
        entry["factors"] = json::array();
        for (const auto& f : deg.factors) {
            entry["factors"].push_back(
                {{"weight", {f.weight.a, f.weight.b}}, {"twist", f.twist}, {"mult", f.mult}});
        }
        entry["residual"] = json::object();
        for (const auto& [w, m] : deg.residual) entry["residual"][weight_key(w)] = m;
        j["cohomology"].push_back(std::move(entry));
    }
    return j;
}

CohomologyReport report_from_json(const json& j) {
    CohomologyReport report;
    report.p = j.at("p").get<std::uint32_t>();
    report.algebra = j.at("algebra").get<std::string>();
    report.module_family = j.at("module").at("family").get<std::string>();
    report.module_weight = {j.at("module").at("weight")[0].get<std::int64_t>(),
                            j.at("module").at("weight")[1].get<std::int64_t>()};
    report.module_label = report.module_family == "trivial"
                              ? "trivial"
                              : report.module_family + "(" + std::to_string(report.module_weight.a) +
                                    "," + std::to_string(report.module_weight.b) + ")";
    for (const auto& entry : j.at("cohomology")) {
        DegreeCohomology deg;
        deg.total = entry.at("dim").get<std::size_t>();
        for (const auto& [key, val] : entry.at("weights").items()) {
            deg.weight_dims[weight_from_key(key)] = val.get<std::size_t>();
        }
        for (const auto& f : entry.at("factors")) {
            deg.factors.push_back({{f.at("weight")[0].get<std::int64_t>(),
                                    f.at("weight")[1].get<std::int64_t>()},
                                   f.at("twist").get<int>(),
                                   f.at("mult").get<std::size_t>()});
            report.decomposed = true;
        }
        for (const auto& [key, val] : entry.at("residual").items()) {
            deg.residual[weight_from_key(key)] = val.get<std::size_t>();
        }
        report.degrees.push_back(std::move(deg));
    }
    return report;
}

std::string render_report(const CohomologyReport& report, const std::string& format,
                          bool only_nonzero, std::size_t lo, std::size_t hi) {
    if (report.degrees.empty()) throw std::invalid_argument("empty report");
    hi = std::min(hi, report.degrees.size() - 1);
    lo = std::min(lo, hi);
    if (format == "json") {
        json j = report_to_json(report);
        json filtered = json::array();
        for (const auto& entry : j["cohomology"]) {
            std::size_t n = entry["degree"].get<std::size_t>();
            if (n < lo || n > hi) continue;
            if (only_nonzero && entry["dim"].get<std::size_t>() == 0) continue;
            filtered.push_back(entry);
        }
        j["cohomology"] = std::move(filtered);
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "p,algebra,family,r,s,degree,weight_a,weight_b,dim,factors\n";
        for (std::size_t n = lo; n <= hi; ++n) {
            const auto& deg = report.degrees[n];
            if (deg.total == 0) {
                if (!only_nonzero) {
                    os << report.p << "," << report.algebra << "," << report.module_family << ","
                       << report.module_weight.a << "," << report.module_weight.b << ","
                       << n << ",,,0,0\n";
                }
                continue;
            }
            std::string summary = factors_summary(deg);
            for (const auto& [w, d] : deg.weight_dims) {
                os << report.p << "," << report.algebra << "," << report.module_family << ","
                   << report.module_weight.a << "," << report.module_weight.b << "," << n << ","
                   << w.a << "," << w.b << "," << d << ",\"" << summary << "\"\n";
            }
        }
        return os.str();
    }
    if (format == "text") {
        std::ostringstream os;
        os << "H*(" << report.algebra << ", " << report.module_label << ") over F_" << report.p
           << "\n";
        for (std::size_t n = lo; n <= hi; ++n) {
            const auto& deg = report.degrees[n];
            if (only_nonzero && deg.total == 0) continue;
            os << "  H^" << n << "  dim " << deg.total;
            if (deg.total != 0) {
                os << "  = " << factors_summary(deg) << "  weights:";
                for (const auto& [w, d] : deg.weight_dims) os << " " << w.str() << ":" << d;
            }
            os << "\n";
        }
        return os.str();
    }
    throw std::invalid_argument("unknown format '" + format + "'");
}

json repr_to_json(const Representation& rep) {
    json j;
    j["label"] = rep.label;
    j["algebra"] = rep.algebra.name;
    j["p"] = rep.field.p;
    j["dim"] = rep.dim;
    j["highest_weight"] = {rep.highest_weight.a, rep.highest_weight.b};
    j["weights"] = json::array();
    for (const auto& w : rep.weights) j["weights"].push_back({w.a, w.b});
    j["actions"] = json::object();
    for (std::size_t x = 0; x < rep.algebra.dim(); ++x) {
        json trips = json::array();
        for (std::size_t r = 0; r < rep.dim; ++r) {
            for (const auto& e : rep.actions[x].row(r)) trips.push_back({r, e.col, e.val});
        }
        j["actions"][rep.algebra.basis[x]] = std::move(trips);
    }
    return j;
}

std::string cache_key(std::uint32_t p, const std::string& algebra, const ModuleSelector& sel) {
    return std::string("v") + kVersion + "_p" + std::to_string(p) + "_" + algebra + "_" +
           sel.family + "_" + std::to_string(sel.r) + "_" + std::to_string(sel.s);
}

std::optional<CohomologyReport> cache_load(const std::filesystem::path& dir,
                                           const std::string& key) {
    std::filesystem::path file = dir / (key + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        return report_from_json(j);
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt cache entry: recompute
    }
}

void cache_store(const std::filesystem::path& dir, const std::string& key,
                 const CohomologyReport& report) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / (key + ".json"));
    out << report_to_json(report).dump(2) << "\n";
}

}  // namespace modcohom
