#include "subrank/cli/serialize.hpp"

#include <fstream>
#include <sstream>

#include "subrank/errors.hpp"

namespace subrank::cli {

using exactnum::EpsRational;
using exactnum::Poly;
using exactnum::Rat;

namespace {

Rat rat_from(const json& num, const json& den) {
  if (!num.is_string() || !den.is_string()) throw InputError("rational parts must be strings");
  return Rat::from_strings(num.get<std::string>(), den.get<std::string>());
}

json poly_to_json(const Poly& p) {
  json out = json::array();
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) out.push_back(json::array({i, c[i].num().get_str(), c[i].den().get_str()}));
  return out;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw InputError("polynomial must be a list of [deg, num, den]");
  std::vector<Rat> c;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_unsigned())
      throw InputError("polynomial term must be [deg, num, den]");
    auto deg = term[0].get<std::size_t>();
    if (deg > 100000) throw InputError("polynomial degree too large");
    if (c.size() <= deg) c.resize(deg + 1);
    c[deg] += rat_from(term[1], term[2]);
  }
  return Poly(std::move(c));
}

std::size_t get_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) throw InputError(std::string("missing or bad '") + key + "'");
  return j[key].get<std::size_t>();
}

}  // namespace

json tensor_to_json(const tensor::RatTensor& t) {
  json entries = json::array();
  for (const auto& [lin, v] : t.entries())
    entries.push_back({{"idx", t.index_of(lin)}, {"num", v.num().get_str()}, {"den", v.den().get_str()}});
  return {{"shape", t.shape().dims()}, {"entries", entries}};
}

tensor::RatTensor tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("entries")) throw InputError("tensor needs shape and entries");
  std::vector<std::size_t> dims;
  for (const auto& d : j["shape"]) {
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) throw InputError("shape entries must be positive");
    dims.push_back(d.get<std::size_t>());
  }
  if (dims.empty()) throw InputError("tensor order must be at least 1");
  tensor::RatTensor t{tensor::Shape(dims)};
  for (const auto& e : j["entries"]) {
    if (!e.contains("idx") || !e.contains("num") || !e.contains("den")) throw InputError("entry needs idx, num, den");
    std::vector<std::size_t> idx;
    for (const auto& i : e["idx"]) {
      if (!i.is_number_unsigned()) throw InputError("indices must be non-negative integers");
      idx.push_back(i.get<std::size_t>());
    }
    if (idx.size() != dims.size()) throw InputError("index arity does not match the shape");
    for (std::size_t m = 0; m < dims.size(); ++m)
      if (idx[m] >= dims[m]) throw InputError("index out of range");
    t.add(idx, rat_from(e["num"], e["den"]));
  }
  return t;
}

json certificate_to_json(const degeneration::Certificate& c) {
  json maps = json::array();
  for (const auto& mm : c.mode_maps) {
    json rows = json::array();
    for (std::size_t i = 0; i < mm.matrix.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < mm.matrix.cols(); ++k) {
        const EpsRational& f = mm.matrix(i, k);
        row.push_back({{"num_poly", poly_to_json(f.num())}, {"den_poly", poly_to_json(f.den())}});
      }
      rows.push_back(row);
    }
    maps.push_back({{"mode", mm.mode}, {"rows", mm.matrix.rows()}, {"cols", mm.matrix.cols()}, {"matrix", rows}});
  }
  return {{"family_tag", c.family_tag}, {"params", c.params}, {"claimed_unit", c.claimed_unit}, {"mode_maps", maps}};
}

degeneration::Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw InputError("certificate must be an object");
  degeneration::Certificate c;
  try {
    c.family_tag = j.at("family_tag").get<std::string>();
    c.params = j.at("params").get<degeneration::Params>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad certificate header: ") + e.what());
  }
  c.claimed_unit = get_size(j, "claimed_unit");
  if (!j.contains("mode_maps") || !j["mode_maps"].is_array()) throw InputError("certificate needs mode_maps");
  for (const auto& mj : j["mode_maps"]) {
    std::size_t rows = get_size(mj, "rows"), cols = get_size(mj, "cols");
    tensor::ModeMap<EpsRational> mm{get_size(mj, "mode"), degeneration::EpsMatrix(rows, cols)};
    const json& mat = mj.at("matrix");
    if (!mat.is_array() || mat.size() != rows) throw InputError("matrix row count mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!mat[i].is_array() || mat[i].size() != cols) throw InputError("matrix column count mismatch");
      for (std::size_t k = 0; k < cols; ++k) {
        const json& e = mat[i][k];
        if (!e.contains("num_poly") || !e.contains("den_poly")) throw InputError("entry needs num_poly and den_poly");
        Poly den = poly_from_json(e["den_poly"]);
        if (den.is_zero()) throw InputError("zero denominator polynomial");
        mm.matrix(i, k) = EpsRational(poly_from_json(e["num_poly"]), den);
      }
    }
    c.mode_maps.push_back(std::move(mm));
  }
  return c;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

}  // namespace subrank::cli
