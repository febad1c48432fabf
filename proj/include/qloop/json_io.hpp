#pragma once
// JSON, CSV and text forms of scalars, matrices, series and reports.

#include <string>

#include "json.hpp"
#include "qloop/matrix.hpp"
#include "qloop/module.hpp"
#include "qloop/qchar.hpp"
#include "qloop/report.hpp"

namespace qloop {

using json = nlohmann::ordered_json;

json poly_to_json(const QPoly& p);
QPoly poly_from_json(const json& j);

// {"num": [[coef, [qh, u, a, v]], ...], "den": [...], "text": ...}
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// sparse {"rows", "cols", "safe_columns", "entries": [[r, c, scalar], ...]}
json to_json(const Mat& m);
json to_json(const ModuleModel& m);
json to_json(const EllWeight& w);
json to_json(const QCharSeries& s);
json to_json(const CheckResult& c);
json to_json(const Report& r);

std::string to_csv(const Mat& m);
std::string to_csv(const QCharSeries& s);
std::string to_csv(const Report& r);
std::string pole_scan_csv(const std::vector<int>& exps);

std::string to_text(const Mat& m);
std::string to_text(const Report& r);

}  // namespace qloop
