#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arithspin/euler.hpp"
#include "arithspin/profinite.hpp"
#include "arithspin/qforms.hpp"

// JSON and CSV renderings used by the command-line tool and the bindings.
namespace arithspin::io {

using json = nlohmann::ordered_json;

/// {"m","n","d","dimX","delta","chi","chi_rational","sign","case","l2":{...}}
json chi_json(const euler::EulerResult& r);
json chi_json(int m, int n);
json l2_json(const euler::L2Profile& p);
json compare_json(const profinite::CommensurabilityReport& r);
json witt_json(const qforms::WittDecomposition& w);
json srank_json(int m, int n, const euler::SArithmeticReport& r);

/// Every (m, n) with m, n >= 1 and 3 <= m + n <= d_max, ordered by (d, m).
std::vector<euler::EulerResult> chi_table(int d_max);

std::string table_csv(const std::vector<euler::EulerResult>& rows);
json table_json(const std::vector<euler::EulerResult>& rows);

/// One row per checked pair of a class sweep.
std::string sweep_csv(const profinite::ClassSweep& sweep);
json sweep_json(const profinite::ClassSweep& sweep);

/// Escapes a CSV field only when it needs quoting.
std::string csv_field(const std::string& s);

}  // namespace arithspin::io
