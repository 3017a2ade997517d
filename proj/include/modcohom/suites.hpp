#pragma once
// Named verification suites: expectation tables for the classified
// cohomology of sl3/gl3 with simple, induced and Weyl coefficients,
// cochain-block fixtures, and the structural property suite. These are the
// executable form of the project's acceptance checks; `modcohom verify`
// runs them and the acceptance binary drives the same code.

#include "modcohom/cohomology.hpp"

#include <string>
#include <vector>

namespace modcohom {

struct SuiteRow {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when passing
};

struct SuiteResult {
    std::string suite;
    std::uint32_t p = 0;
    std::vector<SuiteRow> rows;

    bool all_pass() const;
    std::size_t fail_count() const;
};

const std::vector<std::string>& suite_names();

// theorem1 | corollary1 | corollary2 | corollary3 | lemma-blocks | properties
SuiteResult run_suite(const std::string& name, std::uint32_t p, unsigned threads = 1);

// The six restricted weights whose simple modules have nonzero cohomology.
std::vector<Weight> peculiar_weights(std::uint32_t p);

struct ScanEntry {
    Weight weight;
    bool ok = true;
    std::string error;
    std::map<std::size_t, std::size_t> nonzero_degrees;  // degree -> dim

    bool peculiar() const { return ok && !nonzero_degrees.empty(); }
};

// Cohomology of every restricted (r,s) module of the family; failures are
// collected per entry and the scan continues.
std::vector<ScanEntry> scan_family(PrimeField f, const std::string& algebra,
                                   const std::string& family, unsigned threads = 1);

}  // namespace modcohom
