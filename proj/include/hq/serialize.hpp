#pragma once

// JSON and CSV encodings. Rationals are "num/den" strings, field elements are
// coordinate lists together with the radicands of their tower, matrices are
// CSV with a label header row. Nothing is rounded.

#include <string>
#include <vector>

#include <json.hpp>

#include "hq/family.hpp"
#include "hq/kleinlines.hpp"
#include "hq/lattice.hpp"
#include "hq/mpoly.hpp"
#include "hq/projective.hpp"

namespace hq {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const FieldElement& x);
Json to_json(const MPoly& f);
Json to_json(const Point& p);
Json to_json(const LineCoords& x);
Json to_json(const ParamU& u);
Json to_json(const TowerPtr& tower);
Json to_json(const IntegerMatrix& m);

/// Inverse of to_json for field elements. Throws std::invalid_argument on
/// malformed input.
FieldElement field_element_from_json(const Json& j);

struct LabeledMatrix {
  std::vector<std::string> labels;
  IntegerMatrix matrix;
};

/// Header "label,<labels...>", then one row per label.
std::string to_csv(const IntegerMatrix& m, const std::vector<std::string>& labels);
/// Accepts the format above or a bare integer matrix without labels. Throws
/// std::invalid_argument on ragged rows or non-integer entries.
LabeledMatrix parse_csv_matrix(const std::string& text);

}  // namespace hq
