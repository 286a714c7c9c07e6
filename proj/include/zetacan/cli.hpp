#pragma once

#include "zetacan/zetareg.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetacan::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_numerical = 3;

enum class Format { Json, Csv };

struct RunConfig {
    int m = 0;
    int n_max = 20;
    int k_max = 50;
    double quad_tol = 1e-12;
    double root_tol = 1e-12;
    zetareg::Route route = zetareg::Route::ClosedForm;
    std::string output_path;  // empty: stdout
    Format format = Format::Json;
    std::string suite = "all";
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError on a bad config.
void validate(const RunConfig& config);

int cmd_spectrum(const RunConfig& config, std::ostream& os);
int cmd_zeta(const RunConfig& config, std::ostream& os);
int cmd_torsion(const RunConfig& config, std::ostream& os);

struct Check {
    std::string suite;
    std::string name;
    double error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// quadrature, special, spectral, zeta, torsion, asymptotics
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all"; throws ConfigError on an unknown name.
std::vector<Check> run_suite(const std::string& suite);

/// Prints one line per check; returns exit_ok when all pass.
int cmd_verify(const RunConfig& config, std::ostream& os);

/// Full command line: zetacan <spectrum|zeta|torsion|verify> [flags].
int run(int argc, char** argv);

}  // namespace zetacan::cli
