// modcohom: exact Lie algebra cohomology tables for sl3/gl3 over F_p.
//
// Subcommands:
//   table   cohomology of one module (dims, weights, composition factors)
//   scan    sweep all restricted (r,s) of a family, list nonzero cohomology
//   verify  run a named expectation suite, exit 1 on any mismatch
//   char    formal character of one module
//
// Exit codes: 0 success / all-pass, 1 verification mismatch, 2 usage error,
// 3 internal inconsistency.

#include "modcohom/report_io.hpp"
#include "modcohom/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace modcohom;
using json = nlohmann::ordered_json;

int usage_exit(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << payload;
}

std::pair<std::size_t, std::size_t> parse_degrees(const std::string& text, std::size_t top) {
    if (text.empty()) return {0, top};
    auto sep = text.find("..");
    std::size_t len = 2;
    if (sep == std::string::npos) {
        sep = text.find('-');
        len = 1;
    }
    try {
        if (sep == std::string::npos) {
            std::size_t n = std::stoul(text);
            return {n, n};
        }
        return {std::stoul(text.substr(0, sep)), std::stoul(text.substr(sep + len))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad degree range '" + text + "'");
    }
}

struct CommonOpts {
    std::uint64_t p = 0;
    std::string algebra = "sl3";
    std::string format = "text";
    std::string out_path;
    unsigned threads = 1;
};

int cmd_table(const CommonOpts& opt, const std::string& module_text, const std::string& degrees,
              const std::string& cache_dir_flag, bool only_nonzero,
              const std::string& dump_module_path, const std::string& dump_blocks_dir) {
    PrimeField f = make_prime_field(opt.p);
    ModuleSelector sel = parse_selector(module_text);

    std::string cache_dir = cache_dir_flag;
    if (cache_dir.empty()) {
        if (const char* env = std::getenv("MODCOHOM_CACHE")) cache_dir = env;
    }

    std::optional<CohomologyReport> report;
    std::string key = cache_key(f.p, opt.algebra, sel);
    bool want_dumps = !dump_module_path.empty() || !dump_blocks_dir.empty();
    if (!cache_dir.empty() && !want_dumps) report = cache_load(cache_dir, key);

    if (!report) {
        Representation rep = build_module(f, sel);
        if (opt.algebra == "gl3") rep = as_gl3_module(rep);
        const LieAlgebraSpec& g = opt.algebra == "gl3" ? gl3_spec() : sl3_spec();
        if (!dump_module_path.empty()) {
            std::ofstream dm(dump_module_path);
            dm << repr_to_json(rep).dump(2) << "\n";
        }
        GradedComplex rcx = restrict_to_pXT(build_complex(g, rep));
        if (!dump_blocks_dir.empty()) {
            std::filesystem::create_directories(dump_blocks_dir);
            for (std::size_t n = 0; n < rcx.degrees.size(); ++n) {
                for (const auto& [mu, blk] : rcx.degrees[n].blocks) {
                    std::ofstream bf(std::filesystem::path(dump_blocks_dir) /
                                     ("d" + std::to_string(n) + "_w" + std::to_string(mu.a) + "_" +
                                      std::to_string(mu.b) + ".txt"));
                    write_block_triplets(rcx, n, mu, bf);
                }
            }
        }
        CohomologyReport computed = cohomology(rcx, opt.threads);
        computed.module_family = sel.family;
        computed.module_weight = {sel.r, sel.s};
        computed.module_label = rep.label;
        CharacterTable table(f);
        decompose(computed, table);
        if (!cache_dir.empty()) cache_store(cache_dir, key, computed);
        report = std::move(computed);
    }

    auto [lo, hi] = parse_degrees(degrees, report->degrees.size() - 1);
    emit(render_report(*report, opt.format, only_nonzero, lo, hi), opt.out_path);
    return 0;
}

int cmd_scan(const CommonOpts& opt, const std::string& family, bool only_nonzero, bool force) {
    PrimeField f = make_prime_field(opt.p);
    if (f.p > 7 && !force) {
        return usage_exit("scan over p=" + std::to_string(f.p) +
                          " iterates " + std::to_string(f.p * f.p) +
                          " modules; pass --force to run it anyway");
    }
    static const char* kFamilies[] = {"simple", "weyl", "induced", "verma"};
    if (std::find(std::begin(kFamilies), std::end(kFamilies), family) == std::end(kFamilies)) {
        return usage_exit("scan family must be simple|weyl|induced|verma");
    }
    std::vector<ScanEntry> entries = scan_family(f, opt.algebra, family, opt.threads);

    std::ostringstream os;
    bool failures = false;
    if (opt.format == "json") {
        json j;
        j["p"] = f.p;
        j["algebra"] = opt.algebra;
        j["family"] = family;
        j["results"] = json::array();
        for (const auto& e : entries) {
            if (only_nonzero && !e.peculiar()) continue;
            json row;
            row["weight"] = {e.weight.a, e.weight.b};
            row["nonzero"] = e.peculiar();
            if (!e.ok) {
                row["error"] = e.error;
                failures = true;
            }
            json degs = json::object();
            for (const auto& [n, d] : e.nonzero_degrees) degs[std::to_string(n)] = d;
            row["degrees"] = std::move(degs);
            j["results"].push_back(std::move(row));
        }
        os << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        os << "p,algebra,family,r,s,nonzero,degrees\n";
        for (const auto& e : entries) {
            if (only_nonzero && !e.peculiar()) continue;
            if (!e.ok) failures = true;
            os << f.p << "," << opt.algebra << "," << family << "," << e.weight.a << ","
               << e.weight.b << "," << (e.peculiar() ? 1 : 0) << ",\"";
            bool first = true;
            for (const auto& [n, d] : e.nonzero_degrees) {
                if (!first) os << " ";
                os << n << ":" << d;
                first = false;
            }
            os << "\"\n";
        }
    } else {
        os << "scan " << opt.algebra << " family=" << family << " over F_" << f.p << "\n";
        std::size_t shown = 0;
        for (const auto& e : entries) {
            if (!e.ok) {
                failures = true;
                os << "  " << e.weight.str() << "  ERROR: " << e.error << "\n";
                ++shown;
                continue;
            }
            if (only_nonzero && !e.peculiar()) continue;
            os << "  " << e.weight.str() << (e.peculiar() ? "  nonzero at" : "  zero");
            for (const auto& [n, d] : e.nonzero_degrees) os << " H^" << n << "=" << d;
            os << "\n";
            ++shown;
        }
        os << shown << " modules listed, " << entries.size() << " scanned\n";
    }
    emit(os.str(), opt.out_path);
    return failures ? 3 : 0;
}

int cmd_verify(const CommonOpts& opt, const std::string& suite) {
    SuiteResult res = run_suite(suite, static_cast<std::uint32_t>(opt.p), opt.threads);
    std::ostringstream os;
    if (opt.format == "json") {
        json j;
        j["suite"] = res.suite;
        j["p"] = res.p;
        j["rows"] = json::array();
        for (const auto& row : res.rows) {
            j["rows"].push_back({{"name", row.name}, {"pass", row.pass}, {"detail", row.detail}});
        }
        j["passed"] = res.rows.size() - res.fail_count();
        j["failed"] = res.fail_count();
        os << j.dump(2) << "\n";
    } else {
        os << "suite " << res.suite << " at p=" << res.p << "\n";
        for (const auto& row : res.rows) {
            os << (row.pass ? "  [PASS] " : "  [FAIL] ") << row.name;
            if (!row.pass && !row.detail.empty()) os << "  --" << row.detail;
            os << "\n";
        }
        os << res.rows.size() - res.fail_count() << " passed, " << res.fail_count()
           << " failed\n";
    }
    emit(os.str(), opt.out_path);
    return res.all_pass() ? 0 : 1;
}

int cmd_char(const CommonOpts& opt, const std::string& module_text) {
    PrimeField f = make_prime_field(opt.p);
    ModuleSelector sel = parse_selector(module_text);
    Representation rep = build_module(f, sel);
    Character ch = character(rep);

    std::ostringstream os;
    if (opt.format == "json") {
        json j;
        j["p"] = f.p;
        j["module"] = {{"family", sel.family}, {"weight", {sel.r, sel.s}}};
        j["dim"] = rep.dim;
        j["character"] = json::object();
        for (const auto& [w, m] : ch.mult) {
            j["character"]["[" + std::to_string(w.a) + "," + std::to_string(w.b) + "]"] = m;
        }
        os << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        os << "p,family,r,s,weight_a,weight_b,mult\n";
        for (const auto& [w, m] : ch.mult) {
            os << f.p << "," << sel.family << "," << sel.r << "," << sel.s << "," << w.a << ","
               << w.b << "," << m << "\n";
        }
    } else {
        os << "ch " << rep.label << " over F_" << f.p << " (dim " << rep.dim << ")\n";
        for (const auto& [w, m] : ch.mult) os << "  " << w.str() << ": " << m << "\n";
    }
    emit(os.str(), opt.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology of sl3/gl3 over prime fields"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string module_text, degrees, cache_dir, family, suite;
    bool only_nonzero = false, force = false;
    std::string dump_module_path, dump_blocks_dir;

    auto add_common = [&](CLI::App* cmd, bool with_algebra = true) {
        cmd->add_option("--p", opt.p, "prime modulus, p > 3")->required();
        if (with_algebra) {
            cmd->add_option("--algebra", opt.algebra, "sl3 or gl3")
                ->check(CLI::IsMember({"sl3", "gl3"}));
        }
        cmd->add_option("--format", opt.format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", opt.out_path, "write output to file");
        cmd->add_option("--threads", opt.threads, "worker count for block tasks");
    };

    CLI::App* table = app.add_subcommand("table", "cohomology table of one module");
    add_common(table);
    table->add_option("--module", module_text, "trivial or family:r,s")->required();
    table->add_option("--degrees", degrees, "degree range, e.g. 0..8 or 4");
    table->add_option("--cache", cache_dir, "cache directory (or MODCOHOM_CACHE)");
    table->add_flag("--only-nonzero", only_nonzero, "omit zero degrees");
    table->add_option("--dump-module", dump_module_path, "write module JSON dump");
    table->add_option("--dump-blocks", dump_blocks_dir, "write per-block sparse triplets");

    CLI::App* scan = app.add_subcommand("scan", "sweep all restricted weights of a family");
    add_common(scan);
    scan->add_option("--family", family, "simple, weyl, induced or verma")->required();
    scan->add_flag("--only-nonzero", only_nonzero, "list only modules with nonzero cohomology");
    scan->add_flag("--force", force, "allow scans beyond p=7");

    CLI::App* verify = app.add_subcommand("verify", "run a named expectation suite");
    add_common(verify, false);
    verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));

    CLI::App* chr = app.add_subcommand("char", "formal character of one module");
    add_common(chr, false);
    chr->add_option("--module", module_text, "trivial or family:r,s")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) {
            return cmd_table(opt, module_text, degrees, cache_dir, only_nonzero, dump_module_path,
                             dump_blocks_dir);
        }
        if (scan->parsed()) return cmd_scan(opt, family, only_nonzero, force);
        if (verify->parsed()) return cmd_verify(opt, suite);
        if (chr->parsed()) return cmd_char(opt, module_text);
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::NotPrime:
            case Errc::CharTooSmall:
            case Errc::WeightOutOfRange:
                return 2;
            default:
                return 3;
        }
    } catch (const std::invalid_argument& e) {
        return usage_exit(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
