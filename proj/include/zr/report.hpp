#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zr/kernel.hpp"
#include "zr/numerics.hpp"
#include "zr/params.hpp"
#include "zr/trig_poly.hpp"

namespace zr {

enum class Command { constants, iterate, optimize_theta, verify };
enum class OutputFormat { text, csv, json };
enum class ScheduleMode { tabulated, automatic, list };

struct PolynomialChoice {
    enum class Kind { standard, rosser_schoenfeld, custom } kind = Kind::standard;
    double c = 0, cp = 0;  // custom roots

    TrigPolynomial build() const;
    std::string name() const;
};

struct RunConfig {
    Command command = Command::constants;
    double theta = kDefaultTheta;
    double T0 = kT0;
    double t0 = 1.0;
    double R_init = kRosserR;
    ScheduleMode schedule = ScheduleMode::tabulated;
    std::vector<double> r_list;  // for ScheduleMode::list
    PolynomialChoice polynomial{};
    OutputFormat format = OutputFormat::text;
    ToleranceConfig tol{};
    bool single_step = false;
    bool omega_ratio = false;
    // verify only: replace the solved (kappa, delta) in the pair test
    std::optional<double> kappa, delta;

    // Throws InvalidArgument (or the owning module's error) before any work.
    void validate() const;
};

// key is a long option name without the dashes; '-' and '_' are equivalent.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

// Flat key=value lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

Command parse_command(std::string_view s);
std::string_view command_name(Command c);

struct Report {
    std::string out;  // primary output in the requested format
    std::string err;  // diagnostics, one line per mismatch
    int exit_code = 0;
};

Report cmd_constants(const RunConfig& cfg);
Report cmd_iterate(const RunConfig& cfg);
Report cmd_optimize_theta(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);
Report run(const RunConfig& cfg);

// 12 significant digits, the form used by every output format.
double round12(double x);

}  // namespace zr
