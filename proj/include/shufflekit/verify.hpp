#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

// Named invariant suites, each property checked exhaustively up to its bound
// against a brute-force computation.
namespace shufflekit::verify {

struct PropertyResult {
    std::string suite;
    std::string name;
    bool passed = false;
    /// Informational rows are reported but never counted as failures.
    bool informational = false;
    std::string detail;
};

using Reporter = std::function<void(const PropertyResult&)>;

struct VerifyOptions {
    /// Length bound for the bounded-language automata checks.
    std::size_t max_len = 8;
};

/// "words", "oracles", "automata", "enumeration" and "all".
std::vector<std::string> suite_names();

/// Runs a suite and returns the number of failed properties.
/// Throws ContractError for an unknown suite name.
std::size_t run_suite(std::string_view suite, const VerifyOptions& opts, const Reporter& report);

} // namespace shufflekit::verify
