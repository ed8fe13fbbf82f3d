#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fockasym/asymptotics.hpp"
#include "fockasym/characters.hpp"

namespace fockasym::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class ExperimentKind { Moments, Lln, Clt, Characters, Boundary };
enum class OutputFormat { Csv, Json };

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Lln;
    std::string family; // unitary | symmetric | quantum | custom
    std::optional<OmegaParams> omega;
    std::optional<ThomaParams> thoma;
    std::optional<NuSequence> nu;
    std::optional<Rational> q2;
    std::vector<IntegerPartition> partitions; // --mu or --rho
    std::vector<Rational> scalars;
    std::vector<std::int64_t> grid;
    Rational t{1};
    Normalization normalization = Normalization::ByPower;
    std::optional<std::size_t> m;
    std::size_t member = 0;
    std::size_t K = 5;
    OutputFormat out = OutputFormat::Csv;
    std::string output; // empty: standard output
    std::optional<Rational> tolerance;
    nlohmann::json echo; // merged raw settings, reproduced in JSON metadata
};

/// Parses "subcommand --flag value ..." (program name excluded). A --config JSON file is
/// read first and flags override its keys. Throws ParseError, InputError or ParameterError.
[[nodiscard]] ExperimentConfig parse_config(const std::vector<std::string>& args);

/// Builds the eigenvalue family named by the config.
[[nodiscard]] EigenvalueFamily make_family(const ExperimentConfig& config);

/// Computes the experiment and returns the rendered report.
[[nodiscard]] std::string run(const ExperimentConfig& config);

/// CSV with columns gridIndex,N,L,value_exact,value_decimal,limit_exact,abs_error_exact,
/// abs_error_decimal,rate_estimate.
[[nodiscard]] std::string render_csv(const ConvergenceReport& report);
[[nodiscard]] std::string render_json(const ConvergenceReport& report, const ExperimentConfig& config);

/// Full command-line behavior: exit 0 on success, 2 on usage errors, 3 on degenerate
/// data; failures write a one-line JSON error record to err.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fockasym::cli
