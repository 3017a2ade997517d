#include "modcohom/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace modcohom {

namespace {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(n));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

struct BlockDims {
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::size_t kernel = 0;  // counted from the kernel basis, not cols - rank
};

}  // namespace

bool CohomologyReport::all_zero() const {
    return std::all_of(degrees.begin(), degrees.end(),
                       [](const DegreeCohomology& d) { return d.total == 0; });
}

CohomologyReport cohomology(const GradedComplex& cx, unsigned threads) {
    const std::size_t top = cx.degrees.size() - 1;  // dim g
    std::vector<std::map<Weight, BlockDims>> dims(top + 1);
    std::vector<std::pair<std::size_t, Weight>> tasks;
    for (std::size_t n = 0; n <= top; ++n) {
        for (const auto& [mu, blk] : cx.degrees[n].blocks) {
            dims[n][mu] = BlockDims{blk.size(), 0, 0};
            tasks.emplace_back(n, mu);
        }
    }
    parallel_for(tasks.size(), threads, [&](std::size_t k) {
        auto [n, mu] = tasks[k];
        MatrixGFp blk = block_matrix(cx, n, mu);
        RankKernel rk = rank_and_kernel(blk);
        BlockDims& d = dims[n][mu];
        d.rank = rk.rank;
        d.kernel = rk.kernel.dim();
    });

    CohomologyReport rep;
    rep.p = cx.field.p;
    rep.algebra = cx.algebra.name;
    rep.module_label = cx.module_label;
    rep.degrees.resize(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        auto& out = rep.degrees[n];
        for (const auto& [mu, d] : dims[n]) {
            std::size_t prev_cols = 0, prev_rank = 0;
            if (n > 0) {
                auto it = dims[n - 1].find(mu);
                if (it != dims[n - 1].end()) {
                    prev_cols = it->second.cols;
                    prev_rank = it->second.rank;
                }
            }
            // direct: dim ker d^n - rank d^{n-1}
            std::int64_t direct = static_cast<std::int64_t>(d.kernel) -
                                  static_cast<std::int64_t>(prev_rank);
            // cocycle counting: Z^n + Z^{n-1} - C^{n-1}
            std::int64_t counted = static_cast<std::int64_t>(d.cols - d.rank) +
                                   static_cast<std::int64_t>(prev_cols - prev_rank) -
                                   static_cast<std::int64_t>(prev_cols);
            if (direct != counted || direct < 0) {
                throw Error(Errc::InternalInconsistency,
                            "cohomology dimension routes disagree at degree " + std::to_string(n) +
                                ", weight " + mu.str());
            }
            if (direct > 0) {
                out.weight_dims[mu] = static_cast<std::size_t>(direct);
                out.total += static_cast<std::size_t>(direct);
            }
        }
    }
    return rep;
}

const Character& CharacterTable::at(Weight w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    if (!is_restricted(w, field_.p)) {
        throw Error(Errc::WeightOutOfRange, "character table asked for non-restricted " + w.str());
    }
    Character ch = character(simple_module(field_, w.a, w.b));
    return cache_.emplace(w, std::move(ch)).first->second;
}

CharacterDecomposition decompose_character(std::map<Weight, std::size_t> multiset,
                                           CharacterTable& table) {
    CharacterDecomposition out;
    for (;;) {
        std::erase_if(multiset, [](const auto& e) { return e.second == 0; });
        if (multiset.empty()) return out;
        // dominance-maximal weights; pick the lexicographically largest
        Weight chosen{};
        bool have = false;
        for (const auto& [w, m] : multiset) {
            bool dominated = false;
            for (const auto& [v, mv] : multiset) {
                if (v != w && dominance_leq(w, v)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                chosen = w;  // map order is ascending, last maximal wins
                have = true;
            }
        }
        if (!have) {
            throw Error(Errc::InternalInconsistency, "no maximal weight in nonempty multiset");
        }
        if (!is_dominant(chosen)) {
            throw Error(Errc::NonDominantMaximal,
                        "maximal remaining weight " + chosen.str() + " is not dominant");
        }
        if (!is_restricted(chosen, table.field().p)) {
            out.residual = multiset;
            return out;
        }
        std::size_t mult = multiset.at(chosen);
        const Character& ch = table.at(chosen);
        bool fits = true;
        for (const auto& [w, m] : ch.mult) {
            auto it = multiset.find(w);
            if (it == multiset.end() || it->second < mult * m) {
                fits = false;
                break;
            }
        }
        if (!fits) {
            out.residual = multiset;
            return out;
        }
        for (const auto& [w, m] : ch.mult) multiset[w] -= mult * m;
        out.factors.push_back({chosen, 1, mult});
    }
}

void decompose(CohomologyReport& report, CharacterTable& table) {
    const std::int64_t p = report.p;
    for (std::size_t n = 0; n < report.degrees.size(); ++n) {
        auto& deg = report.degrees[n];
        deg.factors.clear();
        deg.residual.clear();
        if (deg.weight_dims.empty()) continue;
        std::map<Weight, std::size_t> untwisted;
        for (const auto& [w, d] : deg.weight_dims) {
            if (!w.divisible_by(p)) {
                throw Error(Errc::WeightOutOfRange,
                            "degree " + std::to_string(n) + " carries weight " + w.str() +
                                " not divisible by p");
            }
            untwisted[w.divided_by(p)] = d;
        }
        CharacterDecomposition dc = decompose_character(std::move(untwisted), table);
        deg.factors = std::move(dc.factors);
        for (const auto& [w, m] : dc.residual) deg.residual[w * p] = m;

        std::size_t accounted = 0;
        for (const auto& fac : deg.factors) accounted += fac.mult * table.at(fac.weight).total();
        for (const auto& [w, m] : deg.residual) accounted += m;
        if (accounted != deg.total) {
            throw Error(Errc::InternalInconsistency, "factor dimensions do not add up");
        }
    }
    report.decomposed = true;
}

bool verify_duality(const LieAlgebraSpec& g, const Representation& module, unsigned threads) {
    CohomologyReport rm = cohomology(restrict_to_pXT(build_complex(g, module)), threads);
    CohomologyReport rd = cohomology(restrict_to_pXT(build_complex(g, dual_module(module))), threads);
    const std::size_t top = g.dim();
    for (std::size_t n = 0; n <= top; ++n) {
        const auto& dual_deg = rd.degrees[n];
        const auto& mod_deg = rm.degrees[top - n];
        if (dual_deg.total != mod_deg.total) return false;
        std::map<Weight, std::size_t> mirrored;
        for (const auto& [w, d] : mod_deg.weight_dims) mirrored[-w] = d;
        if (dual_deg.weight_dims != mirrored) return false;
    }
    return true;
}

CohomologyReport gl3_from_sl3(const CohomologyReport& sl3_report) {
    CohomologyReport out;
    out.p = sl3_report.p;
    out.algebra = "gl3";
    out.module_family = sl3_report.module_family;
    out.module_weight = sl3_report.module_weight;
    out.module_label = sl3_report.module_label;
    out.decomposed = sl3_report.decomposed;
    const std::size_t top = sl3_report.degrees.size() - 1;  // 8
    out.degrees.resize(top + 2);
    for (std::size_t n = 0; n <= top + 1; ++n) {
        auto& deg = out.degrees[n];
        std::map<std::pair<Weight, int>, std::size_t> fac;
        for (std::size_t src : {n, n - 1}) {
            if (src > top) continue;  // n-1 wraps for n=0
            const auto& sd = sl3_report.degrees[src];
            deg.total += sd.total;
            for (const auto& [w, d] : sd.weight_dims) deg.weight_dims[w] += d;
            for (const auto& f : sd.factors) fac[{f.weight, f.twist}] += f.mult;
            for (const auto& [w, m] : sd.residual) deg.residual[w] += m;
        }
        for (const auto& [key, m] : fac) deg.factors.push_back({key.first, key.second, m});
    }
    return out;
}

bool euler_check(const CohomologyReport& report) {
    std::int64_t total = 0;
    std::map<Weight, std::int64_t> per_weight;
    for (std::size_t n = 0; n < report.degrees.size(); ++n) {
        std::int64_t sign = (n % 2 == 0) ? 1 : -1;
        total += sign * static_cast<std::int64_t>(report.degrees[n].total);
        for (const auto& [w, d] : report.degrees[n].weight_dims) {
            per_weight[w] += sign * static_cast<std::int64_t>(d);
        }
    }
    if (total != 0) return false;
    return std::all_of(per_weight.begin(), per_weight.end(),
                       [](const auto& e) { return e.second == 0; });
}

bool ses_consistency(const Representation& a, const Representation& b, const Representation& c,
                     unsigned threads) {
    if (!(sum_character(character(a), character(c)) == character(b))) {
        throw Error(Errc::CharacterMismatch, "ch(middle) != ch(sub) + ch(quotient)");
    }
    const LieAlgebraSpec& g = a.algebra;
    CohomologyReport ra = cohomology(restrict_to_pXT(build_complex(g, a)), threads);
    CohomologyReport rb = cohomology(restrict_to_pXT(build_complex(g, b)), threads);
    CohomologyReport rc = cohomology(restrict_to_pXT(build_complex(g, c)), threads);
    // 0 -> H^0(A) -> H^0(B) -> H^0(C) -> H^1(A) -> ... -> H^top(C) -> 0
    std::vector<std::int64_t> dims;
    for (std::size_t n = 0; n < ra.degrees.size(); ++n) {
        dims.push_back(static_cast<std::int64_t>(ra.total_dim(n)));
        dims.push_back(static_cast<std::int64_t>(rb.total_dim(n)));
        dims.push_back(static_cast<std::int64_t>(rc.total_dim(n)));
    }
    std::int64_t carry = 0;  // rank of the incoming map
    for (std::int64_t d : dims) {
        carry = d - carry;
        if (carry < 0) return false;
    }
    return carry == 0;
}

std::string ModuleSelector::str() const {
    if (family == "trivial") return family;
    return family + ":" + std::to_string(r) + "," + std::to_string(s);
}

ModuleSelector parse_selector(const std::string& text) {
    if (text == "trivial") return {"trivial", 0, 0};
    auto colon = text.find(':');
    auto comma = text.find(',');
    if (colon == std::string::npos || comma == std::string::npos || comma < colon) {
        throw std::invalid_argument("module selector must be 'trivial' or 'family:r,s', got '" +
                                    text + "'");
    }
    ModuleSelector sel;
    sel.family = text.substr(0, colon);
    static const char* kFamilies[] = {"simple", "weyl", "induced", "verma"};
    if (std::find(std::begin(kFamilies), std::end(kFamilies), sel.family) == std::end(kFamilies)) {
        throw std::invalid_argument("unknown module family '" + sel.family + "'");
    }
    try {
        sel.r = std::stoll(text.substr(colon + 1, comma - colon - 1));
        sel.s = std::stoll(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad weight in module selector '" + text + "'");
    }
    return sel;
}

Representation build_module(PrimeField f, const ModuleSelector& sel) {
    if (sel.family == "trivial") return trivial_module(sl3_spec(), f);
    if (sel.family == "simple") return simple_module(f, sel.r, sel.s);
    if (sel.family == "weyl") return weyl_module(f, sel.r, sel.s);
    if (sel.family == "induced") return induced_module(f, sel.r, sel.s);
    if (sel.family == "verma") return verma_module(f, sel.r, sel.s);
    throw std::invalid_argument("unknown module family '" + sel.family + "'");
}

CohomologyReport compute_cohomology_report(PrimeField f, const std::string& algebra,
                                           const ModuleSelector& sel, unsigned threads,
                                           bool with_factors) {
    if (algebra != "sl3" && algebra != "gl3") {
        throw std::invalid_argument("algebra must be sl3 or gl3, got '" + algebra + "'");
    }
    Representation rep = build_module(f, sel);
    if (algebra == "gl3") rep = as_gl3_module(rep);
    const LieAlgebraSpec& g = algebra == "gl3" ? gl3_spec() : sl3_spec();
    CohomologyReport report = cohomology(restrict_to_pXT(build_complex(g, rep)), threads);
    report.module_family = sel.family;
    report.module_weight = {sel.r, sel.s};
    report.module_label = rep.label;
    if (with_factors) {
        CharacterTable table(f);
        decompose(report, table);
    }
    return report;
}

}  // namespace modcohom
