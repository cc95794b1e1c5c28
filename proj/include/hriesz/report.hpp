#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hriesz {

// One verification-table row.  Recorded rows (no tolerance) always pass; they
// exist to pin values into fixtures.
struct CheckRow {
    std::string check;
    std::string params;
    double value = 0.0;
    std::optional<double> reference;
    std::optional<double> abs_defect;
    std::optional<double> rel_defect;
    std::optional<double> tolerance;
    // the quantity actually compared against tolerance (abs or rel)
    std::optional<double> checked_defect;
    bool pass = true;
};

// value must match reference within tol (relative when use_relative).
CheckRow row_target(std::string check, std::string params, double value, double reference,
                    double tol, bool use_relative);

// value must stay below bound + tol.
CheckRow row_bound(std::string check, std::string params, double value, double bound,
                   double tol);

// informational row; never fails.
CheckRow row_recorded(std::string check, std::string params, double value,
                      std::optional<double> reference = std::nullopt);

bool all_pass(const std::vector<CheckRow>& rows);

// CSV with a fixed header and 17-significant-digit floats; byte-stable for
// identical inputs.  JSON mirrors the same field names, one object per row.
std::string to_csv(const std::vector<CheckRow>& rows);
std::string to_json(const std::vector<CheckRow>& rows);

struct RunConfig {
    int quad_points = 64;
    int trunc = 20;
    std::uint64_t seed = 42;
    std::string format = "csv";  // csv | json
    std::map<std::string, double> tolerances;

    double tol(const std::string& check, double fallback) const;
};

// Applies a JSON config object ({"quad_points":..., "trunc":..., "seed":...,
// "format":..., "tolerances":{...}}) on top of cfg.  Tolerances must be > 0.
void apply_config_file(RunConfig& cfg, const std::string& path);

// Reads the file named by HRIESZ_CONFIG when the variable is set.
RunConfig config_from_env();

}  // namespace hriesz
