// Acceptance gate: every numbered criterion below runs exactly as stated and
// prints one PASS/FAIL line; the process exits with the number of failures.
// Expectation tables are pinned in code (suites.cpp); nothing is calibrated
// at run time. Failing rows print their diffs so a red line is actionable.

#include "modcohom/report_io.hpp"
#include "modcohom/suites.hpp"

#include "naive_gauss.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

using namespace modcohom;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail = "") {
    std::string line = "[" + std::to_string(idx) + "] " + name + " ";
    while (line.size() < 66) line += '.';
    std::printf("%s %s\n", line.c_str(), pass ? "PASS" : "FAIL");
    if (!pass) {
        ++failures;
        if (!detail.empty()) std::printf("%s", detail.c_str());
    }
}

std::string suite_diff(const SuiteResult& res) {
    std::ostringstream os;
    for (const auto& row : res.rows) {
        if (!row.pass) os << "      " << row.name << ":" << row.detail << "\n";
    }
    return os.str();
}

bool run_suite_criterion(int idx, const std::string& label, const std::string& suite,
                         std::uint32_t p, unsigned threads = 1) {
    SuiteResult res = run_suite(suite, p, threads);
    report(idx, label, res.all_pass(), suite_diff(res));
    return res.all_pass();
}

std::vector<std::size_t> dims_of(const CohomologyReport& r) {
    std::vector<std::size_t> out;
    for (const auto& d : r.degrees) out.push_back(d.total);
    return out;
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();

    // 1. classified simple-coefficient tables at p=5, exact factors
    run_suite_criterion(1, "simple-coefficient tables, p=5", "theorem1", 5);

    // 2. full scan of all 25 restricted simple modules at p=5
    {
        PrimeField f = make_prime_field(5);
        auto entries = scan_family(f, "sl3", "simple");
        std::set<Weight> got, want;
        bool all_ok = entries.size() == 25;
        std::ostringstream diff;
        for (const auto& e : entries) {
            if (!e.ok) {
                all_ok = false;
                diff << "      " << e.weight.str() << ": " << e.error << "\n";
            }
            if (e.peculiar()) got.insert(e.weight);
        }
        for (Weight w : peculiar_weights(5)) want.insert(w);
        if (got != want) {
            all_ok = false;
            diff << "      nonzero set has " << got.size() << " weights\n";
        }
        report(2, "scan of all restricted simple modules, p=5", all_ok, diff.str());
    }

    // 3. the same symbolic tables at p=7
    run_suite_criterion(3, "simple-coefficient tables, p=7", "theorem1", 7);

    // 4. cochain/cocycle block dimension fixtures at p=5
    run_suite_criterion(4, "cochain block fixtures, p=5", "lemma-blocks", 5);

    // 5. gl3 tables via degree shift and via the direct 9-dimensional complex
    run_suite_criterion(5, "gl3 tables via both routes, p=5", "corollary1", 5);

    // 6. induced-module and Weyl-module tables at p=5, including the
    //    asymmetric self-dual pair
    {
        SuiteResult c2 = run_suite("corollary2", 5);
        SuiteResult c3 = run_suite("corollary3", 5);
        bool pass = c2.all_pass() && c3.all_pass();
        std::string detail = suite_diff(c2) + suite_diff(c3);

        PrimeField f = make_prime_field(5);
        CohomologyReport rh = compute_cohomology_report(f, "sl3", {"induced", 3, 3});
        CohomologyReport rv = compute_cohomology_report(f, "sl3", {"weyl", 3, 3});
        std::vector<std::size_t> want_h{0, 0, 0, 8, 17, 9, 0, 1, 1};
        std::vector<std::size_t> want_v{1, 1, 0, 9, 17, 8, 0, 0, 0};
        if (dims_of(rh) != want_h || dims_of(rv) != want_v) {
            pass = false;
            detail += "      asymmetric pair dims mismatch\n";
        }
        for (std::size_t n = 0; n <= 8 && pass; ++n) {
            if (rh.degrees[n].total != rv.degrees[8 - n].total) {
                pass = false;
                detail += "      duality mirror violated\n";
            }
        }
        report(6, "induced and Weyl module tables, p=5", pass, detail);
    }

    // 7. low degrees of the induced module at the doubly-maximal weight,
    //    by direct complex computation
    {
        PrimeField f = make_prime_field(5);
        CohomologyReport r = compute_cohomology_report(f, "sl3", {"induced", 3, 3});
        bool pass = r.degrees[0].total == 0 && r.degrees[1].total == 0 && r.degrees[2].total == 0;
        pass = pass && r.degrees[3].factors == std::vector<CohomFactor>{{{1, 1}, 1, 1}};
        pass = pass && r.degrees[4].factors ==
                           std::vector<CohomFactor>{{{1, 1}, 1, 2}, {{0, 0}, 1, 1}};
        std::ostringstream diff;
        if (!pass) {
            diff << "      got degrees 0..4 dims:";
            for (std::size_t n = 0; n <= 4; ++n) diff << " " << r.degrees[n].total;
            diff << "\n";
        }
        report(7, "direct low-degree check for induced(p-2,p-2), p=5", pass, diff.str());
    }

    // 8. structural property suite at both primes
    {
        SuiteResult p5 = run_suite("properties", 5);
        SuiteResult p7 = run_suite("properties", 7);
        report(8, "property suite, p=5 and p=7", p5.all_pass() && p7.all_pass(),
               suite_diff(p5) + suite_diff(p7));
    }

    // 9. oracle equivalence: library elimination against naive dense
    //    elimination, and Weyl dimensions against the closed formula
    {
        bool pass = true;
        std::ostringstream diff;
        std::mt19937 rng(2718281);
        for (std::uint32_t p : {5u, 7u}) {
            PrimeField f = make_prime_field(p);
            std::uniform_int_distribution<std::size_t> size(1, 50);
            std::uniform_int_distribution<std::uint32_t> val(1, p - 1);
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            for (int trial = 0; trial < 210; ++trial) {
                std::size_t rows = size(rng), cols = size(rng);
                double fill = trial % 3 == 0 ? 0.5 : 0.1;
                std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> trips;
                for (std::size_t r = 0; r < rows; ++r) {
                    for (std::size_t c = 0; c < cols; ++c) {
                        if (coin(rng) < fill) trips.emplace_back(r, c, val(rng));
                    }
                }
                MatrixGFp m = MatrixGFp::from_triplets(f, rows, cols, trips);
                std::size_t want = naive::rank(m.to_dense(), p);
                RankKernel sp = rank_and_kernel(m, ElimMode::Sparse);
                RankKernel de = rank_and_kernel(m, ElimMode::Dense);
                if (sp.rank != want || de.rank != want || !(sp.kernel == de.kernel) ||
                    sp.rank + sp.kernel.dim() != cols) {
                    pass = false;
                    diff << "      rank/kernel mismatch at p=" << p << " trial " << trial << "\n";
                    break;
                }
            }
            for (std::int64_t r = 0; r <= p - 2; ++r) {
                for (std::int64_t s = 0; s <= p - 2; ++s) {
                    std::size_t got = weyl_module(f, r, s).dim;
                    std::size_t want = static_cast<std::size_t>((r + 1) * (s + 1) * (r + s + 2) / 2);
                    if (got != want) {
                        pass = false;
                        diff << "      finding: dim V(" << r << "," << s << ") = " << got
                             << ", closed formula gives " << want << " at p=" << p << "\n";
                    }
                }
            }
        }
        report(9, "elimination oracle and dimension formula equivalence", pass, diff.str());
    }

    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("%d of 9 criteria passed in %.1fs\n", 9 - failures,
                static_cast<double>(dt) / 1000.0);
    return failures;
}
