#include "projcalc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace projcalc::io {

namespace {

int read_dim(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError("missing integer field \"dim\"");
  const int m = j["dim"].get<int>();
  if (m < 1 || m > 9) throw InputError("dim must be between 1 and 9 (got " + std::to_string(m) + ")");
  return m;
}

Poly read_poly(const nlohmann::json& v, const RingPtr& ring, const std::string& where) {
  if (v.is_number_integer()) return Poly(ring, Rational(v.get<long>()));
  if (!v.is_string()) throw InputError(where + ": expected a polynomial string");
  try {
    return parse_poly(v.get<std::string>(), ring);
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Rational read_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw InputError(where + ": expected a rational");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

MultiIndex parse_indices(const std::string& text, int dim, const std::string& where) {
  MultiIndex out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InputError(where + ": malformed index '" + text + "'");
    if (v < 1 || v > dim) throw InputError(where + ": index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
    out.push_back(v - 1);
  }
  return out;
}

std::string join(const MultiIndex& idx, std::size_t from, std::size_t to) {
  std::string s;
  for (std::size_t i = from; i < to; ++i) s += (i > from ? "," : "") + std::to_string(idx[i] + 1);
  return s;
}

}  // namespace

nlohmann::json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

nlohmann::json to_json(const TensorField& t) {
  nlohmann::json comps = nlohmann::json::object();
  const auto p = static_cast<std::size_t>(t.up());
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t.flat(f).is_zero()) continue;
    const MultiIndex idx = t.unflatten(f);
    comps[join(idx, 0, p) + ";" + join(idx, p, idx.size())] = t.flat(f).to_string();
  }
  return {{"dim", t.dim()}, {"up", t.up()}, {"down", t.down()}, {"weight", t.weight().to_string()},
          {"components", comps}};
}

TensorField tensor_from_json(const nlohmann::json& j) {
  const int m = read_dim(j);
  for (const char* key : {"up", "down"})
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<int>() < 0)
      throw InputError(std::string("missing non-negative integer field \"") + key + "\"");
  const int p = j["up"].get<int>();
  const int q = j["down"].get<int>();
  if (p + q > 12) throw InputError("tensor order above 12 is not supported");
  const RingPtr ring = chart_ring(m);
  Poly weight(ring);
  if (j.contains("weight")) weight = read_poly(j["weight"], ring, "weight");
  TensorField t = [&] {
    try {
      return TensorField(ring, m, p, q, weight);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  if (!j.contains("components")) return t;
  if (!j["components"].is_object()) throw InputError("\"components\" must be an object");
  for (const auto& [key, value] : j["components"].items()) {
    const auto semi = key.find(';');
    if (semi == std::string::npos) throw InputError("component key '" + key + "' lacks ';'");
    MultiIndex idx = parse_indices(key.substr(0, semi), m, "component '" + key + "'");
    const MultiIndex low = parse_indices(key.substr(semi + 1), m, "component '" + key + "'");
    if (static_cast<int>(idx.size()) != p || static_cast<int>(low.size()) != q)
      throw InputError("component '" + key + "' has the wrong number of indices");
    idx.insert(idx.end(), low.begin(), low.end());
    t[idx] = read_poly(value, ring, "component '" + key + "'");
  }
  return t;
}

nlohmann::json to_json(const Connection& c) {
  nlohmann::json g = nlohmann::json::object();
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j)
      for (int k = j; k < c.dim(); ++k)
        if (!c.gamma(i, j, k).is_zero())
          g[std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1)] =
              c.gamma(i, j, k).to_string();
  return {{"dim", c.dim()}, {"gamma", g}};
}

Connection connection_from_json(const nlohmann::json& j) {
  const int m = read_dim(j);
  const RingPtr ring = chart_ring(m);
  Connection c(ring, m);
  if (!j.contains("gamma")) return c;
  if (!j["gamma"].is_object()) throw InputError("\"gamma\" must be an object");
  std::vector<bool> seen(static_cast<std::size_t>(m * m * m), false);
  for (const auto& [key, value] : j["gamma"].items()) {
    const MultiIndex idx = parse_indices(key, m, "gamma '" + key + "'");
    if (idx.size() != 3) throw InputError("gamma key '" + key + "' needs three indices");
    const Poly v = read_poly(value, ring, "gamma '" + key + "'");
    const auto [i, a, b] = std::tuple{idx[0], idx[1], idx[2]};
    const auto mirror = static_cast<std::size_t>((i * m + b) * m + a);
    if (seen[mirror] && !(c.gamma(i, b, a) == v))
      throw InputError("gamma '" + key + "' disagrees with its symmetric partner: connection must be torsion-free");
    seen[static_cast<std::size_t>((i * m + a) * m + b)] = true;
    c.set_gamma(i, a, b, v);
  }
  return c;
}

OneForm one_form_from_json(const nlohmann::json& j, int dim) {
  if (read_dim(j) != dim) throw InputError("one-form dimension differs from the connection");
  if (!j.contains("alpha") || !j["alpha"].is_array() || static_cast<int>(j["alpha"].size()) != dim)
    throw InputError("\"alpha\" must be an array of " + std::to_string(dim) + " polynomials");
  OneForm a;
  const RingPtr ring = chart_ring(dim);
  for (std::size_t k = 0; k < j["alpha"].size(); ++k)
    a.components.push_back(read_poly(j["alpha"][k], ring, "alpha[" + std::to_string(k + 1) + "]"));
  return a;
}

AffineMap affine_from_json(const nlohmann::json& j, int dim) {
  if (read_dim(j) != dim) throw InputError("affine map dimension differs from the connection");
  if (!j.contains("A") || !j["A"].is_array() || static_cast<int>(j["A"].size()) != dim)
    throw InputError("\"A\" must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  std::vector<std::vector<Rational>> a;
  for (std::size_t r = 0; r < j["A"].size(); ++r) {
    const auto& row = j["A"][r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) throw InputError("\"A\" row has the wrong length");
    std::vector<Rational> out;
    for (std::size_t c = 0; c < row.size(); ++c)
      out.push_back(read_rational(row[c], "A[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]"));
    a.push_back(std::move(out));
  }
  std::vector<Rational> b(static_cast<std::size_t>(dim));
  if (j.contains("b")) {
    if (!j["b"].is_array() || static_cast<int>(j["b"].size()) != dim) throw InputError("\"b\" has the wrong length");
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = read_rational(j["b"][i], "b[" + std::to_string(i + 1) + "]");
  }
  try {
    return AffineMap(std::move(a), std::move(b));
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
}

}  // namespace projcalc::io
