#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Self-checks exposed through `arithspin verify`.
namespace arithspin::verify {

struct SuiteResult {
    std::string name;
    bool passed = false;
    int checks = 0;
    std::string detail;  // first failure, or a short summary
    double seconds = 0.0;
};

struct Options {
    std::uint64_t prime_bound = 10000;  // float suite
    int d_max = 12;                     // adelic suite
    std::uint64_t seed = 20240517;
};

/// Suite names accepted by run().
std::vector<std::string> suite_names();

/// Runs one suite, or all of them for "all". Throws std::invalid_argument
/// for an unknown name.
std::vector<SuiteResult> run(const std::string& suite, const Options& opts = {});

}  // namespace arithspin::verify
