#pragma once
// Verification battery and named builders shared by the CLI and the bindings.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "qloop/qchar.hpp"
#include "qloop/rmatrix.hpp"
#include "qloop/stable.hpp"

namespace qloop {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::set<std::string>& known_suites();

struct SuiteConfig {
    int trunc = 8;
    int depth = 8;
    int u_order = 4;
    std::uint64_t seed = 1;
    // Exact or Specialized; spec_count points for the latter
    Strategy strategy = Strategy::Exact;
    int spec_count = 3;
    std::set<std::string> suites = known_suites();
    int jobs = 1;
};

void validate(const SuiteConfig& cfg);
// "exact" or "spec:N"
void parse_strategy(const std::string& s, SuiteConfig& cfg);

Report run_suite(const std::string& name, const SuiteConfig& cfg);
// validated, run up to cfg.jobs suites at once, sorted by check_id
Report run_suites(const SuiteConfig& cfg);

// every single-entry mutation of E0 in kr(k) must fail check_relations
Report mutation_suite(int k);

const std::set<std::string>& matrix_builders();
const std::set<std::string>& qchar_builders();

struct BuildParams {
    int k = 1, ell = 1, trunc = 8, u_order = 4, shift = 0, depth = 8;
};

Mat emit_matrix(const std::string& builder, const BuildParams& p);
QCharSeries emit_qchar(const std::string& builder, const BuildParams& p);

}  // namespace qloop
