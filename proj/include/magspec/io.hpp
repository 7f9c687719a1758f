#ifndef MAGSPEC_IO_HPP
#define MAGSPEC_IO_HPP

#include <string>
#include <vector>

#include "magspec/analysis.hpp"
#include "magspec/certificate.hpp"
#include "magspec/kernel.hpp"
#include "magspec/spectral.hpp"

namespace magspec {

// All numeric output is formatted with 17 significant digits and '\n' line
// endings so identical runs are byte-identical.
std::string format_number(double v);

struct RunStamp {
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string version;
};

std::string kernel_to_json(const KernelOperator& K);
KernelOperator kernel_from_json(const std::string& text);

std::string spectrum_to_json(const Spectrum& S, const RunStamp& stamp,
                             double b);

std::string sweep_to_csv(const SweepTable& table, const RunStamp& stamp);
std::string fit_to_json(const HolderFit& fit, const RunStamp& stamp);
std::string defect_reports_to_csv(const std::vector<DefectReport>& rows,
                                  const std::vector<std::string>& status,
                                  const RunStamp& stamp);
std::string alpha0_to_csv(const Alpha0Report& report, const RunStamp& stamp);

void write_file(const std::string& path, const std::string& content);

}  // namespace magspec

#endif
