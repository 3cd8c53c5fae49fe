#pragma once

#include "chiralq/grid.hpp"
#include "chiralq/maxwell_bridge.hpp"
#include "chiralq/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace chiralq::app {

inline constexpr const char* kFieldHeader = "t,x1,x2,x3,s_re,s_im,v1_re,v1_im,v2_re,v2_im,v3_re,v3_im";
inline constexpr const char* kEMHeader = "t,x1,x2,x3,E1,E2,E3,H1,H2,H3";
inline constexpr const char* kVerifyHeader = "suite,metric,value,lower,upper,pass";

/// Shortest round-trip form: 17 significant digits.
std::string format_double(double v);

/// Biquaternion field, one row per node in lexicographic (it, ix, iy, iz) order.
void emit_csv(const SampledField& field, std::ostream& os);
/// Throws IoError when the file cannot be written.
void emit_csv(const SampledField& field, const std::string& path);

void emit_em_csv(const EMField& em, std::ostream& os);
void emit_verify_csv(const std::vector<CheckResult>& results, std::ostream& os);

/// Numeric rows of a CSV with a header line; used to re-read output.
std::vector<std::vector<double>> parse_numeric_csv(std::istream& is, std::string* header = nullptr);

} // namespace chiralq::app
