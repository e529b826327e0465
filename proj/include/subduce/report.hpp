#pragma once

// JSON and CSV renderings of an SdcTable. Values are printed with 12
// significant digits; coefficients that are exactly zero are omitted.

#include "json.hpp"
#include <string>

#include "subduce/orthonorm.hpp"

namespace subduce {

struct ReportOptions {
  bool surds = true;
  int surd_b_max = 50;
  int surd_c_max = 50;
  bool tableau_index = true;
};

/// The value as it appears in the output: 12 significant digits, no -0.
double rounded(double x);

nlohmann::ordered_json to_json(const Grid& grid, const SdcTable& table, const ReportOptions& options = {});

/// Header "eta,m,m1,m2,value,surd" preceded by '#' metadata lines.
std::string to_csv(const SdcTable& table, const ReportOptions& options = {});

}  // namespace subduce
