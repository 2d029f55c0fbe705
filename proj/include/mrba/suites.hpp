#ifndef MRBA_SUITES_HPP
#define MRBA_SUITES_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mrba/generator.hpp"
#include "mrba/params.hpp"
#include "mrba/sampling.hpp"

namespace mrba {

struct SuiteConfig {
    Params params;
    std::shared_ptr<const GeneratorBialgebra> generator;
    std::string alphabet;  // symbols used to draw random letters
    std::uint64_t seed = 0;
    std::size_t cases = 100;
    WordShape shape{};
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;  // checks performed
    bool passed = true;
    std::string counterexample;  // first failure, empty when passed
};

// assoc, mrb, oracle, coassoc, counit, compat, cocycle, antipode, filtration
const std::vector<std::string>& suite_names();
// Everything except assoc, mrb, oracle and filtration needs kappa == -lambda^2.
bool suite_needs_hopf(const std::string& name);

// Throws std::invalid_argument for an unknown name or when a suite needing
// the Hopf structure is asked to run with kappa != -lambda^2.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);
// "all" expands to every suite.
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteConfig& config);

} // namespace mrba

#endif
