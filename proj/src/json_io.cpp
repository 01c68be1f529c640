#include "thetapos/json_io.hpp"

#include "thetapos/error.hpp"

namespace thetapos::io {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  fail(ErrorKind::Parse, field + ": " + why);
}

std::size_t positive_size(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 1) bad(field, "expected a positive integer");
  return j.get<std::size_t>();
}

}  // namespace

Rational scalar_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(field, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    bad(field, e.what());
  }
}

json scalar_to_json(const Rational& r) { return r.to_string(); }

Vector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of scalars");
  Vector v;
  v.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    v.push_back(scalar_from_json(j[k], field + "[" + std::to_string(k) + "]"));
  }
  return v;
}

json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

Matrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) bad(field, "expected an object with rows, cols, entries");
  if (!j.contains("rows")) bad(field + ".rows", "missing");
  if (!j.contains("cols")) bad(field + ".cols", "missing");
  if (!j.contains("entries")) bad(field + ".entries", "missing");
  const std::size_t rows = positive_size(j["rows"], field + ".rows");
  const std::size_t cols = positive_size(j["cols"], field + ".cols");
  const json& e = j["entries"];
  if (!e.is_array() || e.size() != rows) {
    bad(field + ".entries", "expected " + std::to_string(rows) + " rows");
  }
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rf = field + ".entries[" + std::to_string(i) + "]";
    if (!e[i].is_array() || e[i].size() != cols) {
      bad(rf, "expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      entries.push_back(scalar_from_json(e[i][c], rf + "[" + std::to_string(c) + "]"));
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(vector_to_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

std::vector<int> word_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of 1-based generator indices");
  std::vector<int> w;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) bad(field + "[" + std::to_string(k) + "]", "expected an integer");
    w.push_back(j[k].get<int>());
  }
  return w;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("document: ") + e.what());
  }
}

PositiveParams positive_params_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) bad(field, "expected an object with word, values");
  if (!j.contains("word")) bad(field + ".word", "missing");
  if (!j.contains("values")) bad(field + ".values", "missing");
  PositiveParams p{word_from_json(j["word"], field + ".word"),
                   vector_from_json(j["values"], field + ".values")};
  if (p.values.size() != p.word.size())
    bad(field + ".values", "expected " + std::to_string(p.word.size()) + " values");
  return p;
}

json positive_params_to_json(const PositiveParams& p) {
  return {{"word", p.word}, {"values", vector_to_json(p.values)}};
}

B2Params b2_params_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) bad(field, "expected an object with word, slots");
  if (!j.contains("word")) bad(field + ".word", "missing");
  if (!j.contains("slots")) bad(field + ".slots", "missing");
  B2Params p{word_from_json(j["word"], field + ".word"), {}};
  const json& s = j["slots"];
  if (!s.is_array() || s.size() != p.word.size())
    bad(field + ".slots", "expected " + std::to_string(p.word.size()) + " slots");
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::string sf = field + ".slots[" + std::to_string(k) + "]";
    if (s[k].is_object() && s[k].contains("scalar") && s[k].size() == 1)
      p.slots.emplace_back(scalar_from_json(s[k]["scalar"], sf + ".scalar"));
    else if (s[k].is_object() && s[k].contains("vector") && s[k].size() == 1)
      p.slots.emplace_back(vector_from_json(s[k]["vector"], sf + ".vector"));
    else
      bad(sf, "expected {\"scalar\": ...} or {\"vector\": [...]}");
  }
  return p;
}

json b2_params_to_json(const B2Params& p) {
  json slots = json::array();
  for (const B2Slot& s : p.slots) {
    if (const auto* x = std::get_if<Rational>(&s))
      slots.push_back({{"scalar", scalar_to_json(*x)}});
    else
      slots.push_back({{"vector", vector_to_json(std::get<Vector>(s))}});
  }
  return {{"word", p.word}, {"slots", slots}};
}

}  // namespace thetapos::io
