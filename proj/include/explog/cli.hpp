#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace explog::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

enum class OutputFormat { Text, Json };

struct RunConfig {
    double tolerance = 1e-10;
    std::vector<double> mu_grid{0.5, 1.0, 2.0, 10.0};
    unsigned max_n = 4;
    OutputFormat output = OutputFormat::Text;
    int zeta_max = 12;
    bool paper_style = false;

    /// Numeric agreement a verification must reach to pass.
    double pass_threshold() const { return 10.0 * tolerance; }
    /// Throws std::invalid_argument when out of range.
    void validate() const;
};

int cmd_eval(const RunConfig& config, const std::string& integrand, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, const std::string& integrand, std::ostream& out, std::ostream& err);
int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_weight(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: `explog <eval|verify|catalog|weight> [flags]`.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace explog::cli
