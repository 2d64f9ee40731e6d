#pragma once

// JSON reading and writing for identity reports and suite specifications.
// Both documents share one object model: parameters are numbers, decimal
// strings ("0.3", "0.1-0.2i") or {"re": .., "im": ..} objects.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qaw/identities.hpp"

namespace qaw::cli {

/// Keys keep insertion order so reports read identity-first.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Parses "1.5", "-2e-3", "0.3+0.2i", "0.3-0.2i", "2i". Throws UsageError.
Complex parse_complex(std::string_view text);
/// Comma-separated list of parse_complex values.
std::vector<Complex> parse_complex_list(std::string_view text);
/// Real part only when the imaginary part is zero; 17 significant digits.
std::string format_complex(Complex z);

struct Summary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int diverged = 0;
};

Summary summarize(const std::vector<IdentityReport>& reports);

Json to_json(const IdentityReport& report);
Json report_document(const std::vector<IdentityReport>& reports, const CheckSettings& settings,
                               std::optional<std::uint64_t> seed, bool interrupted = false);

/// Parameter value in any of the accepted forms.
Complex complex_from_json(const Json& v);

/// Throws UsageError on structural problems (missing seed, bad draws, ...).
SuiteSpec parse_suite_spec(const Json& doc);

/// 17 significant digits for every double in `doc`, two-space indent.
std::string dump(const Json& doc);

}  // namespace qaw::cli
