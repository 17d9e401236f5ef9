#include "hq/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace hq {

Json to_json(const Rational& q) { return rational_string(q); }

Json to_json(const TowerPtr& tower) {
  Json chain = Json::array();
  for (const auto& radicand : tower->radicand_chain()) {
    Json r = Json::array();
    for (const auto& c : radicand) r.push_back(to_json(c));
    chain.push_back(r);
  }
  return chain;
}

Json to_json(const FieldElement& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords()) coords.push_back(to_json(c));
  return Json{{"tower", to_json(x.tower())}, {"coords", coords}};
}

Json to_json(const MPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exps", Json(std::vector<int>(e.begin(), e.end()))}, {"coeff", to_json(c)}});
  return Json{{"nvars", f.nvars()}, {"text", f.to_string()}, {"terms", terms}};
}

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_json(c));
  return out;
}

Json to_json(const LineCoords& x) {
  Json out = Json::array();
  for (const auto& c : x) out.push_back(to_json(c));
  return out;
}

Json to_json(const ParamU& u) {
  Json out = Json::array();
  for (const auto& c : u.values()) out.push_back(to_json(c));
  return out;
}

Json to_json(const IntegerMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    out.push_back(row);
  }
  return out;
}

FieldElement field_element_from_json(const Json& j) {
  try {
    TowerPtr tower = Tower::rationals();
    for (const auto& radicand : j.at("tower")) {
      std::vector<Rational> coords;
      for (const auto& c : radicand) coords.push_back(parse_rational(c.get<std::string>()));
      tower = tower->extend(FieldElement(tower, coords));
    }
    std::vector<Rational> coords;
    for (const auto& c : j.at("coords")) coords.push_back(parse_rational(c.get<std::string>()));
    return FieldElement(tower, coords);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed field element: ") + e.what());
  }
}

std::string to_csv(const IntegerMatrix& m, const std::vector<std::string>& labels) {
  if (labels.size() != m.rows() || m.rows() != m.cols()) throw std::invalid_argument("labels do not match the matrix");
  std::ostringstream os;
  os << "label";
  for (const auto& l : labels) os << ',' << l;
  os << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << labels[r];
    for (std::size_t c = 0; c < m.cols(); ++c) os << ',' << m(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
  }
  return out;
}

bool is_integer_text(const std::string& s) {
  Integer z;
  return !s.empty() && z.set_str(s, 10) == 0;
}

}  // namespace

LabeledMatrix parse_csv_matrix(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split_fields(line));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  LabeledMatrix out;
  const bool labeled = !is_integer_text(rows.front().front());
  if (labeled) {
    out.labels.assign(rows.front().begin() + 1, rows.front().end());
    rows.erase(rows.begin());
  }
  const std::size_t n = rows.size();
  out.matrix = IntegerMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t offset = labeled ? 1 : 0;
    if (rows[r].size() != n + offset) throw std::invalid_argument("matrix is not square");
    for (std::size_t c = 0; c < n; ++c) {
      const std::string& s = rows[r][c + offset];
      if (!is_integer_text(s)) throw std::invalid_argument("non-integer entry '" + s + "'");
      out.matrix(r, c) = Integer(s);
    }
  }
  if (labeled && out.labels.size() != n) throw std::invalid_argument("header does not match the matrix");
  if (!labeled)
    for (std::size_t k = 0; k < n; ++k) out.labels.push_back("e" + std::to_string(k + 1));
  return out;
}

}  // namespace hq
