#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supertrace/report.hpp"
#include "supertrace/spectral.hpp"

namespace stlab {

inline constexpr std::uint64_t kDefaultSeed = 0xD11A70;  // hex spelling of "dilaton"

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    double tolerance_scale = 1.0;
    SpectralConfig spectral;
    DilatonProfile phi{{1.0}};  // default dilaton for the smeared checks
    std::optional<std::string> geometry_spec;
    std::optional<std::string> tensor_file;
};

// suite names accepted by run_suite, excluding the aggregate "all"
const std::vector<std::string>& suite_names();

// Execute one named verification suite deterministically under the options'
// seed. "all" runs every suite (possibly concurrently, capped by the
// SUPERTRACE_LAB_THREADS environment variable); reports come back in
// canonical order either way. Unknown names raise std::invalid_argument.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace stlab
