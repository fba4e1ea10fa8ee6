#include "rla/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rla {

namespace {

using nlohmann::json;

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<std::int64_t>();
}

Vector as_vector(const json& j, std::size_t n, const PrimeField& f, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw InputError(what + " must be an array of " + std::to_string(n) + " integers");
  Vector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = f.reduce(as_int(j[k], what));
  return v;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw InputError("unknown key \"" + key + "\" in " + where);
}

}  // namespace

RestrictedLieAlgebra parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("algebra document must be a JSON object");
  reject_unknown(doc, {"p", "dim", "labels", "brackets", "pmap"}, "algebra document");
  for (const char* key : {"p", "dim", "brackets", "pmap"})
    if (!doc.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  const auto p = as_int(doc["p"], "p");
  if (p < 2 || p > std::int64_t(kMaxPrime) || !is_prime(std::uint32_t(p)))
    throw InputError("p must be a prime <= 251");
  const auto dim = as_int(doc["dim"], "dim");
  if (dim < 0 || dim > 64) throw InputError("dim must lie in [0, 64]");
  const std::size_t n = std::size_t(dim);
  const PrimeField f{std::uint32_t(p)};

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() || doc["labels"].size() != n) throw InputError("labels must list dim strings");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw InputError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  std::vector<RestrictedLieAlgebra::BracketEntry> upper;
  if (!doc["brackets"].is_array()) throw InputError("brackets must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : doc["brackets"]) {
    if (!b.is_object()) throw InputError("bracket entries must be objects");
    reject_unknown(b, {"i", "j", "v"}, "bracket entry");
    if (!b.contains("i") || !b.contains("j") || !b.contains("v")) throw InputError("bracket entry needs i, j and v");
    const auto i = as_int(b["i"], "bracket i");
    const auto j = as_int(b["j"], "bracket j");
    if (i < 0 || j < 0 || i >= j || j >= dim) throw InputError("bracket entries need 0 <= i < j < dim");
    if (!seen.emplace(std::size_t(i), std::size_t(j)).second) throw InputError("duplicate bracket entry");
    upper.push_back({std::size_t(i), std::size_t(j), as_vector(b["v"], n, f, "bracket v")});
  }

  if (!doc["pmap"].is_array() || doc["pmap"].size() != n) throw InputError("pmap must have dim rows");
  std::vector<Vector> pmap;
  for (const auto& row : doc["pmap"]) pmap.push_back(as_vector(row, n, f, "pmap row"));

  return RestrictedLieAlgebra::from_upper(std::uint32_t(p), n, upper, std::move(pmap), std::move(labels));
}

RestrictedLieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_algebra(os.str());
}

std::string algebra_to_json(const RestrictedLieAlgebra& L, int indent) {
  json doc;
  doc["p"] = L.p();
  doc["dim"] = L.dim();
  if (!L.labels().empty()) doc["labels"] = L.labels();
  doc["brackets"] = json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector& v = L.bracket_basis(i, j);
      if (is_zero(v)) continue;
      json e;
      e["i"] = i;
      e["j"] = j;
      e["v"] = std::vector<int>(v.begin(), v.end());
      doc["brackets"].push_back(std::move(e));
    }
  doc["pmap"] = json::array();
  for (const auto& row : L.pmap_table()) doc["pmap"].push_back(std::vector<int>(row.begin(), row.end()));
  return doc.dump(indent);
}

}  // namespace rla
