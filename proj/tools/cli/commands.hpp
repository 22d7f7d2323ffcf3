#ifndef SPLINEQUAD_CLI_COMMANDS_HPP
#define SPLINEQUAD_CLI_COMMANDS_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/format.hpp"
#include "splinequad/splinecheck.hpp"

namespace splinequad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// User-facing rule selection; empty strings mean "not given".
struct RuleSelection {
    std::string continuity; // "c0" | "c1"
    int degree = 0;
    std::string variant;    // "endpoint" | "interior" (plot also accepts "both")
    std::string delta_sign; // "+" | "-"
};

struct ResolvedSelection {
    FamilyId family;
    int n = 0;
    DeltaSign sign = DeltaSign::Plus;
};

/// Maps (class, degree parity, variant, delta sign) onto a family and index; throws UsageError.
ResolvedSelection resolve_selection(const RuleSelection& selection);

RuleDocument make_document(const ResolvedSelection& resolved, Precision precision);

struct GenerateOptions {
    RuleSelection selection;
    Precision precision = Precision::Extended;
    OutputFormat format = OutputFormat::Json;
    std::string out; // empty: write to the output stream
};

enum class VerifyScope { Golden, Exactness, All };

struct VerifyOptions {
    VerifyScope scope = VerifyScope::All;
    int max_n = 12;
    double golden_tol = 1e-13;
    double exactness_tol = 1e-11;
    int copies = kDefaultCopies;
    std::string golden_file; // empty: built-in tables
};

struct PlotOptions {
    RuleSelection selection;
    std::string out; // SVG path; the CSV goes next to it
};

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_plot(const PlotOptions& options, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace splinequad::cli

#endif // SPLINEQUAD_CLI_COMMANDS_HPP
