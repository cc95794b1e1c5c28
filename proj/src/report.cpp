#include "hriesz/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hriesz {

CheckRow row_target(std::string check, std::string params, double value, double reference,
                    double tol, bool use_relative) {
    CheckRow row;
    row.check = std::move(check);
    row.params = std::move(params);
    row.value = value;
    row.reference = reference;
    row.abs_defect = std::abs(value - reference);
    if (std::abs(reference) > 0.0)
        row.rel_defect = *row.abs_defect / std::abs(reference);
    row.tolerance = tol;
    row.checked_defect = use_relative && row.rel_defect ? *row.rel_defect : *row.abs_defect;
    row.pass = *row.checked_defect <= tol;
    return row;
}

CheckRow row_bound(std::string check, std::string params, double value, double bound,
                   double tol) {
    CheckRow row;
    row.check = std::move(check);
    row.params = std::move(params);
    row.value = value;
    row.reference = bound;
    row.abs_defect = std::max(0.0, value - bound);
    if (std::abs(bound) > 0.0) row.rel_defect = *row.abs_defect / std::abs(bound);
    row.tolerance = tol;
    row.checked_defect = *row.abs_defect;
    row.pass = value <= bound + tol;
    return row;
}

CheckRow row_recorded(std::string check, std::string params, double value,
                      std::optional<double> reference) {
    CheckRow row;
    row.check = std::move(check);
    row.params = std::move(params);
    row.value = value;
    row.reference = reference;
    if (reference) {
        row.abs_defect = std::abs(value - *reference);
        if (std::abs(*reference) > 0.0) row.rel_defect = *row.abs_defect / std::abs(*reference);
    }
    return row;
}

bool all_pass(const std::vector<CheckRow>& rows) {
    for (const CheckRow& row : rows)
        if (!row.pass) return false;
    return true;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

}  // namespace

std::string to_csv(const std::vector<CheckRow>& rows) {
    std::string out = "check,params,value,reference,abs_defect,rel_defect,tolerance,status\n";
    for (const CheckRow& row : rows) {
        out += row.check;
        out += ',';
        out += row.params;
        out += ',';
        out += fmt(row.value);
        out += ',';
        out += fmt_opt(row.reference);
        out += ',';
        out += fmt_opt(row.abs_defect);
        out += ',';
        out += fmt_opt(row.rel_defect);
        out += ',';
        out += fmt_opt(row.tolerance);
        out += ',';
        out += row.pass ? "pass" : "fail";
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<CheckRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckRow& row : rows) {
        nlohmann::ordered_json obj;
        obj["check"] = row.check;
        obj["params"] = row.params;
        obj["value"] = row.value;
        if (row.reference) obj["reference"] = *row.reference;
        if (row.abs_defect) obj["abs_defect"] = *row.abs_defect;
        if (row.rel_defect) obj["rel_defect"] = *row.rel_defect;
        if (row.tolerance) obj["tolerance"] = *row.tolerance;
        obj["status"] = row.pass ? "pass" : "fail";
        arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
}

double RunConfig::tol(const std::string& check, double fallback) const {
    const auto it = tolerances.find(check);
    return it == tolerances.end() ? fallback : it->second;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("quad_points")) cfg.quad_points = j.at("quad_points").get<int>();
    if (j.contains("trunc")) cfg.trunc = j.at("trunc").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
    if (cfg.format != "csv" && cfg.format != "json")
        throw std::runtime_error("config: format must be csv or json");
    if (j.contains("tolerances")) {
        for (const auto& [key, val] : j.at("tolerances").items()) {
            const double tol = val.get<double>();
            if (tol <= 0.0) throw std::runtime_error("config: tolerance for " + key + " must be > 0");
            cfg.tolerances[key] = tol;
        }
    }
}

RunConfig config_from_env() {
    RunConfig cfg;
    if (const char* path = std::getenv("HRIESZ_CONFIG")) apply_config_file(cfg, path);
    return cfg;
}

}  // namespace hriesz
