#include "boolcum/serialize.hpp"

#include <charconv>

#include "boolcum/errors.hpp"

namespace boolcum::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return v;
}

std::vector<Scalar> scalar_array(const json& j, std::size_t expected, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  if (j.size() != expected) {
    throw ParseError(std::string(what) + " has " + std::to_string(j.size()) +
                     " entries but order is " + std::to_string(expected));
  }
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(scalar_from_json(v));
  return out;
}

std::size_t parse_index(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("malformed basis index '" + std::string(text) + "'");
  }
  return value;
}

std::vector<MultilinearMap> maps_from_json(const json& list, std::size_t dim, std::size_t order) {
  if (list.size() != order) throw ParseError("component count does not match order");
  std::vector<MultilinearMap> maps;
  maps.reserve(order);
  for (std::size_t k = 0; k < order; ++k) {
    MultilinearMap f = multilinear_from_json(list[k], dim);
    if (f.arity() != k) {
      throw ParseError("entry " + std::to_string(k) + " must have arity " + std::to_string(k));
    }
    maps.push_back(std::move(f));
  }
  return maps;
}

json maps_to_json(const std::vector<MultilinearMap>& maps) {
  json list = json::array();
  for (const auto& f : maps) list.push_back(to_json(f));
  return list;
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalar must be a \"p/q\" string, got " + j.dump());
}

json to_json(const MatrixB& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixB matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const std::size_t d = j.size();
  std::vector<Scalar> entries;
  entries.reserve(d * d);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != d) throw ParseError("matrix must be square");
    for (const auto& v : row) entries.push_back(scalar_from_json(v));
  }
  return MatrixB(d, std::move(entries));
}

json to_json(const TruncatedSeries& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  return {{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json& j) {
  const std::size_t order = size_field(j, "order");
  if (order == 0) throw ParseError("series order must be positive");
  return TruncatedSeries(scalar_array(field(j, "coeffs"), order, "coeffs"));
}

json to_json(const IntervalPartition& gamma) { return gamma.block_sizes(); }

IntervalPartition partition_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("partition must be a nonempty array");
  std::vector<std::size_t> sizes;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
      throw ParseError("block sizes must be positive integers");
    }
    sizes.push_back(v.get<std::size_t>());
  }
  return IntervalPartition(std::move(sizes));
}

json to_json(const MomentSeq& m) {
  json values = json::array();
  for (const auto& v : m.values()) values.push_back(to_json(v));
  return {{"order", m.order()}, {"moments", std::move(values)}};
}

MomentSeq moments_from_json(const json& j) {
  const std::size_t order = size_field(j, "order");
  if (order == 0) throw ParseError("order must be at least 1");
  return MomentSeq(scalar_array(field(j, "moments"), order, "moments"));
}

json to_json(const CumulantSeq& b) {
  json values = json::array();
  for (const auto& v : b.values()) values.push_back(to_json(v));
  return {{"order", b.order()}, {"cumulants", std::move(values)}};
}

CumulantSeq cumulants_from_json(const json& j) {
  const std::size_t order = size_field(j, "order");
  if (order == 0) throw ParseError("order must be at least 1");
  return CumulantSeq(scalar_array(field(j, "cumulants"), order, "cumulants"));
}

json to_json(const AlgElement& a) {
  json terms = json::object();
  for (const auto& [w, c] : a.terms()) terms[w] = to_json(c);
  return {{"terms", std::move(terms)}};
}

AlgElement alg_element_from_json(const json& j) {
  const json& terms = field(j, "terms");
  if (!terms.is_object()) throw ParseError("'terms' must be an object");
  AlgElement out;
  for (const auto& [word, coeff] : terms.items()) {
    out += AlgElement::word(word, scalar_from_json(coeff));
  }
  return out;
}

json to_json(const JointState& s) { return {{"X", to_json(s.x())}, {"Y", to_json(s.y())}}; }

JointState joint_state_from_json(const json& j) {
  return JointState(moments_from_json(field(j, "X")), moments_from_json(field(j, "Y")));
}

std::string basis_key(const MultilinearMap& f, std::size_t flat) {
  std::string key;
  const auto indices = f.basis_indices(flat);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) key += ';';
    key += std::to_string(indices[k] / f.dim()) + "," + std::to_string(indices[k] % f.dim());
  }
  return key;
}

json to_json(const MultilinearMap& f) {
  json table = json::object();
  for (std::size_t flat = 0; flat < f.table_size(); ++flat) {
    table[basis_key(f, flat)] = to_json(f.at(flat));
  }
  return {{"arity", f.arity()}, {"table", std::move(table)}};
}

MultilinearMap multilinear_from_json(const json& j, std::size_t dim) {
  const std::size_t arity = size_field(j, "arity");
  const json& table = field(j, "table");
  if (!table.is_object()) throw ParseError("'table' must be an object");
  MultilinearMap f(arity, dim);
  for (const auto& [key, value] : table.items()) {
    std::vector<std::size_t> basis;
    std::string_view rest(key);
    while (!rest.empty()) {
      const auto semi = rest.find(';');
      const std::string_view slot = rest.substr(0, semi);
      const auto comma = slot.find(',');
      if (comma == std::string_view::npos) throw ParseError("malformed basis key '" + key + "'");
      const std::size_t i = parse_index(slot.substr(0, comma));
      const std::size_t k = parse_index(slot.substr(comma + 1));
      if (i >= dim || k >= dim) throw ParseError("basis key '" + key + "' out of range");
      basis.push_back(i * dim + k);
      if (semi == std::string_view::npos) break;
      rest.remove_prefix(semi + 1);
      if (rest.empty()) throw ParseError("malformed basis key '" + key + "'");
    }
    if (basis.size() != arity) throw ParseError("basis key '" + key + "' has the wrong arity");
    MatrixB m = matrix_from_json(value);
    if (m.dim() != dim) throw ParseError("table entry '" + key + "' has the wrong dimension");
    f.at(f.flat_index(basis)) = std::move(m);
  }
  return f;
}

json to_json(const OVDistribution& d) {
  return {{"dim", d.dim()}, {"order", d.order()}, {"moments", maps_to_json(d.moments())}};
}

OVDistribution ov_distribution_from_json(const json& j) {
  const std::size_t dim = size_field(j, "dim");
  const std::size_t order = size_field(j, "order");
  if (dim == 0 || order == 0) throw ParseError("dim and order must be positive");
  return OVDistribution(maps_from_json(array_field(j, "moments"), dim, order));
}

json to_json(const MulSeries& f) {
  return {{"dim", f.dim()}, {"order", f.order()}, {"components", maps_to_json(f.components())}};
}

MulSeries mulseries_from_json(const json& j) {
  const std::size_t dim = size_field(j, "dim");
  const std::size_t order = size_field(j, "order");
  if (dim == 0 || order == 0) throw ParseError("dim and order must be positive");
  return MulSeries(maps_from_json(array_field(j, "components"), dim, order));
}

json to_json(const OVJointState& s) { return {{"X", to_json(s.x())}, {"Y", to_json(s.y())}}; }

OVJointState ov_joint_state_from_json(const json& j) {
  return OVJointState(ov_distribution_from_json(field(j, "X")),
                      ov_distribution_from_json(field(j, "Y")));
}

}  // namespace boolcum::io
