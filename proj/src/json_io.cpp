#include "ncs/json_io.hpp"

#include <charconv>

#include "ncs/error.hpp"

namespace ncs::json {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

json row_json(const QMatrix& m) {
  json out = json::array();
  for (const auto& v : m.data()) out.push_back(to_json(v));
  return out;
}

QMatrix vector_from_json(const json& j, std::size_t n, bool row, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  if (j.size() != n)
    throw ValidationError(std::string(what) + " has " + std::to_string(j.size()) + " entries, rank is " +
                          std::to_string(n));
  QMatrix m = row ? QMatrix(1, n) : QMatrix(n, 1);
  for (std::size_t i = 0; i < n; ++i) (row ? m(0, i) : m(i, 0)) = rational_from_json(j[i]);
  return m;
}

}  // namespace

json to_json(const Rational& r) { return ncs::to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw ValidationError("rational must be a \"p/q\" string or an integer");
}

json to_json(const NCPoly& p) {
  json out = json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"word", w.str()}, {"coeff", to_json(c)}});
  return out;
}

NCPoly poly_from_json(const Alphabet& a, const json& j) {
  if (!j.is_array()) throw ValidationError("polynomial must be an array of {word, coeff}");
  NCPoly p(a);
  for (const auto& t : j) p.add(Word::parse(a, as_string(field(t, "word"), "word")), rational_from_json(field(t, "coeff")));
  return p;
}

json to_json(const TensorPoly& t) {
  json out = json::array();
  for (const auto& [k, c] : t.terms())
    out.push_back({{"left", k.first.str()}, {"right", k.second.str()}, {"coeff", to_json(c)}});
  return out;
}

TensorPoly tensor_from_json(const Alphabet& a, const json& j) {
  if (!j.is_array()) throw ValidationError("tensor must be an array of {left, right, coeff}");
  TensorPoly t(a);
  for (const auto& e : j)
    t.add(Word::parse(a, as_string(field(e, "left"), "left")), Word::parse(a, as_string(field(e, "right"), "right")),
          rational_from_json(field(e, "coeff")));
  return t;
}

json to_json(const LinRep& r) {
  json mu = json::object();
  for (const auto& [l, m] : r.mu()) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(row_json(m.row(i)));
    mu[r.alphabet().letter_name(l)] = rows;
  }
  return {{"alphabet", r.alphabet().spec()}, {"rank", r.rank()}, {"nu", row_json(r.nu())}, {"mu", mu},
          {"eta", row_json(r.eta().transpose())}};
}

LinRep rep_from_json(const json& j, const std::optional<Alphabet>& fallback) {
  if (!j.is_object()) throw ValidationError("representation must be a JSON object");
  Alphabet a = j.contains("alphabet") ? Alphabet::parse(as_string(j.at("alphabet"), "alphabet"))
               : fallback           ? *fallback
                                    : throw ValidationError("representation lacks \"alphabet\"");
  const json& rk = field(j, "rank");
  if (!rk.is_number_integer() || rk.get<long long>() < 0) throw ValidationError("rank must be a nonnegative integer");
  auto n = static_cast<std::size_t>(rk.get<long long>());
  QMatrix nu = vector_from_json(field(j, "nu"), n, true, "nu");
  QMatrix eta = vector_from_json(field(j, "eta"), n, false, "eta");
  const json& mj = field(j, "mu");
  if (!mj.is_object()) throw ValidationError("mu must be an object keyed by letter");
  std::map<Letter, QMatrix> mu;
  for (const auto& [name, rows] : mj.items()) {
    Letter l = a.parse_letter(name);
    if (!rows.is_array() || rows.size() != n)
      throw ValidationError("mu(" + name + ") must have " + std::to_string(n) + " rows");
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      QMatrix row = vector_from_json(rows[i], n, true, "mu row");
      for (std::size_t k = 0; k < n; ++k) m(i, k) = row(0, k);
    }
    if (!mu.emplace(l, std::move(m)).second) throw ValidationError("letter " + name + " given twice in mu");
  }
  return LinRep(a, std::move(nu), std::move(mu), std::move(eta));
}

PhiTable gamma_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("gamma table must be a JSON object {\"i,j\": \"p/q\"}");
  std::map<std::pair<int, int>, Rational> entries;
  for (const auto& [key, val] : j.items()) {
    auto comma = key.find(',');
    int i = 0, k = 0;
    auto bad = [&] { return ValidationError("gamma key \"" + key + "\" is not of the form \"i,j\""); };
    if (comma == std::string::npos) throw bad();
    auto r1 = std::from_chars(key.data(), key.data() + comma, i);
    auto r2 = std::from_chars(key.data() + comma + 1, key.data() + key.size(), k);
    if (r1.ec != std::errc() || r1.ptr != key.data() + comma || r2.ec != std::errc() ||
        r2.ptr != key.data() + key.size() || i < 1 || k < 1)
      throw bad();
    Rational v = rational_from_json(val);
    if (auto [it, fresh] = entries.emplace(std::pair{i, k}, v); !fresh && it->second != v)
      throw ValidationError("gamma key \"" + key + "\" given twice");
  }
  return PhiTable::from_entries(entries);
}

json to_json(const TruncSeries& s) {
  json out = json::array();
  for (const auto& [w, c] : s.coeffs())
    if (sgn(c) != 0) out.push_back({{"word", w.str()}, {"coeff", to_json(c)}});
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace ncs::json
