#include "magspec/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "magspec/errors.hpp"

namespace magspec {

namespace {
constexpr const char* kVersion = "0.1.0";
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string stamp_comment(const RunStamp& stamp) {
    std::ostringstream os;
    os << "# config_hash=" << stamp.config_hash << " seed=" << stamp.seed
       << " version="
       << (stamp.version.empty() ? kVersion : stamp.version) << "\n";
    return os.str();
}

nlohmann::json stamp_json(const RunStamp& stamp) {
    return {{"config_hash", stamp.config_hash},
            {"seed", stamp.seed},
            {"version", stamp.version.empty() ? kVersion : stamp.version}};
}

}  // namespace

std::string kernel_to_json(const KernelOperator& K) {
    nlohmann::json j;
    j["dim"] = K.grid().dim();
    j["L"] = K.grid().extent();
    j["h"] = K.grid().spacing();
    j["hermitian"] = K.hermitian();
    nlohmann::json entries = nlohmann::json::array();
    const int n = K.size();
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
            entries.push_back({K.entries()(i, jj).real(),
                               K.entries()(i, jj).imag()});
    j["entries"] = std::move(entries);
    return j.dump();
}

KernelOperator kernel_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad kernel JSON: ") + e.what());
    }
    const Grid grid(j.at("dim").get<int>(), j.at("L").get<double>(),
                    j.at("h").get<double>());
    const int n = grid.size();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != n * n)
        throw ConfigError("kernel JSON entry count does not match grid");
    Matrix K(n, n);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
            const auto& e = entries[static_cast<size_t>(i * n + jj)];
            K(i, jj) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    return KernelOperator(grid, std::move(K), j.at("hermitian").get<bool>());
}

std::string spectrum_to_json(const Spectrum& S, const RunStamp& stamp,
                             double b) {
    nlohmann::json j = stamp_json(stamp);
    j["model_hash"] = stamp.config_hash;
    j["b"] = b;
    j["n"] = S.size();
    nlohmann::json vals = nlohmann::json::array();
    for (double v : S.values) vals.push_back(v);
    j["values"] = std::move(vals);
    return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepTable& table, const RunStamp& stamp) {
    std::ostringstream os;
    os << stamp_comment(stamp);
    os << "b,value\n";
    for (size_t i = 0; i < table.b.size(); ++i)
        os << format_number(table.b[i]) << ","
           << format_number(table.value[i]) << "\n";
    return os.str();
}

std::string fit_to_json(const HolderFit& fit, const RunStamp& stamp) {
    nlohmann::json j = stamp_json(stamp);
    j["slope"] = fit.slope;
    j["constant"] = std::exp(fit.log_constant);
    j["r2"] = fit.r_squared;
    j["sup_ratio"] = fit.sup_ratio;
    j["ratio_stable"] = fit.ratio_stable;
    j["beta_ref"] = fit.beta_ref;
    return j.dump(2) + "\n";
}

std::string defect_reports_to_csv(const std::vector<DefectReport>& rows,
                                  const std::vector<std::string>& status,
                                  const RunStamp& stamp) {
    std::ostringstream os;
    os << stamp_comment(stamp);
    os << "b,re_z,im_z,norm_S,norm_S1,norm_S2,bound_value,certified,status\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const DefectReport& r = rows[i];
        os << format_number(r.b) << "," << format_number(r.z.real()) << ","
           << format_number(r.z.imag()) << "," << format_number(r.norm_S)
           << "," << format_number(r.norm_S1) << ","
           << format_number(r.norm_S2) << "," << format_number(r.bound_value)
           << "," << (r.certified ? "true" : "false") << ","
           << (i < status.size() ? status[i] : "ok") << "\n";
    }
    return os.str();
}

std::string alpha0_to_csv(const Alpha0Report& report, const RunStamp& stamp) {
    std::ostringstream os;
    os << stamp_comment(stamp);
    os << "b,M,u,dh_truncated,dh_full,chain_holds\n";
    for (const Alpha0Row& r : report.rows)
        os << format_number(r.b) << "," << format_number(r.M) << ","
           << format_number(r.u) << "," << format_number(r.dh_truncated)
           << "," << format_number(r.dh_full) << ","
           << (r.chain_holds ? "true" : "false") << "\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file " + path);
    out << content;
    if (!out) throw ConfigError("failed while writing " + path);
}

}  // namespace magspec
