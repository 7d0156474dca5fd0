#include "ncx/json_io.hpp"

#include <utility>

namespace ncx::json_io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw FormatError(path + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(path + "." + name, "missing field");
  return *it;
}

std::string sub(const std::string& path, const char* name) { return path + "." + name; }
std::string at(const std::string& path, std::size_t k) {
  return path + "[" + std::to_string(k) + "]";
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::size_t as_size(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                 j.get<long long>() < 0))
    fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar as_scalar(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    fail(path, "integer out of range");
  return j.get<Scalar>();
}

std::vector<std::size_t> size_list(const Json& j, const std::string& path) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < array(j, path).size(); ++k) out.push_back(as_size(j[k], at(path, k)));
  return out;
}

group::Table table(const Json& j, const std::string& path) {
  group::Table t;
  for (std::size_t k = 0; k < array(j, path).size(); ++k) t.push_back(size_list(j[k], at(path, k)));
  return t;
}

std::vector<std::string> strings(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < array(j, path).size(); ++k) {
    if (!j[k].is_string()) fail(at(path, k), "expected a string");
    out.push_back(j[k].get<std::string>());
  }
  return out;
}

// Kernel constructors report shape problems; attach the path.
template <class Fn>
auto build(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

std::vector<Matrix> matrices(const Json& j, const Ring& ring, const std::string& path) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < array(j, path).size(); ++k)
    out.push_back(decode_matrix(j[k], ring, at(path, k)));
  return out;
}

Json encode_all(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(encode(m));
  return out;
}

} // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " +
                      e.what());
  }
}

Json encode(const Ring& r) {
  if (r.is_field()) return Json{{"kind", "fp"}, {"p", r.p()}};
  return Json{{"kind", "z"}};
}

Json encode(const Matrix& m) {
  Json entries = Json::array();
  for (Scalar v : m.entries()) entries.push_back(v);
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json encode(const PeriodicComplex& x) {
  return Json{{"ring", encode(x.ring())},
              {"period", x.period()},
              {"dims", x.dims()},
              {"diffs", encode_all(x.diffs())}};
}

Json encode(const ChainMap& f) {
  return Json{{"source", encode(f.source())},
              {"target", encode(f.target())},
              {"comps", encode_all(f.comps())}};
}

Json encode(const Homotopy& h) {
  return Json{{"source", encode(h.source())},
              {"target", encode(h.target())},
              {"comps", encode_all(h.comps())}};
}

Json encode(const HomotopyWitness& w) {
  return Json{{"source", encode(w.h.source())},
              {"target", encode(w.h.target())},
              {"from", encode(w.from)},
              {"to", encode(w.to)},
              {"comps", encode_all(w.h.comps())}};
}

Json encode(const LNChain& c) {
  Json cx = Json::array();
  for (const auto& x : c.complexes) cx.push_back(encode(x));
  Json maps = Json::array();
  for (const auto& f : c.maps) maps.push_back(encode(f));
  return Json{{"complexes", std::move(cx)}, {"maps", std::move(maps)}};
}

Json encode(const LArrMorphism& f) {
  return Json{{"f0", encode(f.f0)}, {"f1", encode(f.f1)}, {"fhat", encode(f.fhat)}};
}

Json encode(const PairCX& p) { return Json{{"C", encode(p.c)}, {"x", encode(p.x)}}; }

Json encode(const PairMorphism& m) { return Json{{"a", encode(m.a)}, {"f", encode(m.f)}}; }

Json encode(const group::FiniteGroup& g) {
  return Json{{"elements", g.elements}, {"div", g.div}, {"e", g.e}};
}

Json encode(const group::MulGroup& g) {
  return Json{{"elements", g.elements}, {"mul", g.mul}, {"e", g.e}};
}

Json encode(const group::TruncatedSimplicialSet& s) {
  return Json{{"K", s.K}, {"sizes", s.sizes}, {"faces", s.faces}, {"degeneracies", s.degeneracies}};
}

Json encode(const CheckResult& r) {
  Json j{{"identity", r.identity},
         {"level", r.level},
         {"indices", r.indices},
         {"seed", r.seed},
         {"pass", r.pass},
         {"trials", r.trials}};
  if (!r.pass) j["detail"] = r.detail;
  return j;
}

Json encode(const ValidationReport& r) {
  Json j{{"pass", r.pass}};
  if (r.index) j["index"] = *r.index;
  if (!r.pass) j["detail"] = r.detail;
  return j;
}

Ring decode_ring(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (kind == "z") return Ring::integers();
  if (kind == "fp") {
    const Scalar p = as_scalar(field(j, "p", path), sub(path, "p"));
    return build(sub(path, "p"), [&] { return Ring::prime_field(p); });
  }
  fail(sub(path, "kind"), "expected \"fp\" or \"z\"");
}

Matrix decode_matrix(const Json& j, const Ring& ring, const std::string& path) {
  const std::size_t rows = as_size(field(j, "rows", path), sub(path, "rows"));
  const std::size_t cols = as_size(field(j, "cols", path), sub(path, "cols"));
  const std::string epath = sub(path, "entries");
  const Json& e = array(field(j, "entries", path), epath);
  if (e.size() != rows * cols)
    fail(epath, "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(e.size()));
  std::vector<Scalar> entries;
  entries.reserve(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) entries.push_back(as_scalar(e[k], at(epath, k)));
  return Matrix(ring, rows, cols, std::move(entries));
}

PeriodicComplex decode_complex(const Json& j, const std::string& path) {
  const Ring ring = decode_ring(field(j, "ring", path), sub(path, "ring"));
  const std::size_t period = as_size(field(j, "period", path), sub(path, "period"));
  auto dims = size_list(field(j, "dims", path), sub(path, "dims"));
  auto diffs = matrices(field(j, "diffs", path), ring, sub(path, "diffs"));
  if (dims.size() != period) fail(sub(path, "dims"), "length differs from period");
  if (diffs.size() != period) fail(sub(path, "diffs"), "length differs from period");
  return build(path, [&] { return PeriodicComplex(ring, std::move(dims), std::move(diffs)); });
}

ChainMap decode_chain_map(const Json& j, const std::string& path) {
  auto src = decode_complex(field(j, "source", path), sub(path, "source"));
  auto dst = decode_complex(field(j, "target", path), sub(path, "target"));
  auto comps = matrices(field(j, "comps", path), src.ring(), sub(path, "comps"));
  return build(path, [&] { return ChainMap(std::move(src), std::move(dst), std::move(comps)); });
}

Homotopy decode_homotopy(const Json& j, const std::string& path) {
  auto src = decode_complex(field(j, "source", path), sub(path, "source"));
  auto dst = decode_complex(field(j, "target", path), sub(path, "target"));
  auto comps = matrices(field(j, "comps", path), src.ring(), sub(path, "comps"));
  return build(path, [&] { return Homotopy(std::move(src), std::move(dst), std::move(comps)); });
}

HomotopyWitness decode_homotopy_witness(const Json& j, const std::string& path) {
  auto from = decode_chain_map(field(j, "from", path), sub(path, "from"));
  auto to = decode_chain_map(field(j, "to", path), sub(path, "to"));
  auto h = decode_homotopy(j, path);
  return {std::move(from), std::move(to), std::move(h)};
}

LNChain decode_chain(const Json& j, const std::string& path) {
  LNChain c;
  const std::string cpath = sub(path, "complexes");
  const Json& cx = array(field(j, "complexes", path), cpath);
  for (std::size_t k = 0; k < cx.size(); ++k) c.complexes.push_back(decode_complex(cx[k], at(cpath, k)));
  const std::string mpath = sub(path, "maps");
  const Json& maps = array(field(j, "maps", path), mpath);
  for (std::size_t k = 0; k < maps.size(); ++k) c.maps.push_back(decode_chain_map(maps[k], at(mpath, k)));
  if (c.complexes.size() != c.maps.size() + 1)
    fail(mpath, "expected one map fewer than complexes");
  return c;
}

LArrMorphism decode_larr_morphism(const Json& j, const std::string& path) {
  return {decode_chain_map(field(j, "f0", path), sub(path, "f0")),
          decode_chain_map(field(j, "f1", path), sub(path, "f1")),
          decode_homotopy(field(j, "fhat", path), sub(path, "fhat"))};
}

PairCX decode_pair(const Json& j, const std::string& path) {
  return {decode_complex(field(j, "C", path), sub(path, "C")),
          decode_chain_map(field(j, "x", path), sub(path, "x"))};
}

PairMorphism decode_pair_morphism(const Json& j, const std::string& path) {
  return {decode_chain_map(field(j, "a", path), sub(path, "a")),
          decode_larr_morphism(field(j, "f", path), sub(path, "f"))};
}

group::FiniteGroup decode_group(const Json& j, const std::string& path) {
  group::FiniteGroup g;
  g.elements = strings(field(j, "elements", path), sub(path, "elements"));
  g.div = table(field(j, "div", path), sub(path, "div"));
  g.e = as_size(field(j, "e", path), sub(path, "e"));
  const std::size_t m = g.elements.size();
  if (g.div.size() != m) fail(sub(path, "div"), "expected " + std::to_string(m) + " rows");
  for (std::size_t r = 0; r < m; ++r) {
    if (g.div[r].size() != m) fail(at(sub(path, "div"), r), "expected " + std::to_string(m) + " entries");
    for (std::size_t c = 0; c < m; ++c)
      if (g.div[r][c] >= m) fail(at(at(sub(path, "div"), r), c), "element index out of range");
  }
  if (g.e >= m) fail(sub(path, "e"), "element index out of range");
  return g;
}

group::MulGroup decode_mul_group(const Json& j, const std::string& path) {
  group::MulGroup g;
  g.elements = strings(field(j, "elements", path), sub(path, "elements"));
  g.mul = table(field(j, "mul", path), sub(path, "mul"));
  g.e = as_size(field(j, "e", path), sub(path, "e"));
  const std::size_t m = g.elements.size();
  if (g.mul.size() != m) fail(sub(path, "mul"), "expected " + std::to_string(m) + " rows");
  for (std::size_t r = 0; r < m; ++r) {
    if (g.mul[r].size() != m) fail(at(sub(path, "mul"), r), "expected " + std::to_string(m) + " entries");
    for (std::size_t c = 0; c < m; ++c)
      if (g.mul[r][c] >= m) fail(at(at(sub(path, "mul"), r), c), "element index out of range");
  }
  if (g.e >= m) fail(sub(path, "e"), "element index out of range");
  return g;
}

group::TruncatedSimplicialSet decode_simplicial_set(const Json& j, const std::string& path) {
  group::TruncatedSimplicialSet s;
  s.K = as_size(field(j, "K", path), sub(path, "K"));
  s.sizes = size_list(field(j, "sizes", path), sub(path, "sizes"));
  const std::string fpath = sub(path, "faces");
  const std::string dpath = sub(path, "degeneracies");
  const Json& faces = array(field(j, "faces", path), fpath);
  const Json& degens = array(field(j, "degeneracies", path), dpath);
  if (s.sizes.size() != s.K + 1) fail(sub(path, "sizes"), "expected K+1 levels");
  if (faces.size() != s.K + 1) fail(fpath, "expected K+1 levels");
  if (degens.size() != s.K + 1) fail(dpath, "expected K+1 levels");
  for (std::size_t n = 0; n <= s.K; ++n) {
    s.faces.push_back(table(faces[n], at(fpath, n)));
    s.degeneracies.push_back(table(degens[n], at(dpath, n)));
    const std::size_t nf = n == 0 ? 0 : n + 1;
    const std::size_t nd = n == s.K ? 0 : n + 1;
    if (s.faces[n].size() != nf)
      fail(at(fpath, n), "expected " + std::to_string(nf) + " face tables");
    if (s.degeneracies[n].size() != nd)
      fail(at(dpath, n), "expected " + std::to_string(nd) + " degeneracy tables");
    for (std::size_t i = 0; i < nf; ++i) {
      if (s.faces[n][i].size() != s.sizes[n]) fail(at(at(fpath, n), i), "table size differs from level size");
      for (std::size_t x = 0; x < s.sizes[n]; ++x)
        if (s.faces[n][i][x] >= s.sizes[n - 1]) fail(at(at(at(fpath, n), i), x), "simplex index out of range");
    }
    for (std::size_t i = 0; i < nd; ++i) {
      if (s.degeneracies[n][i].size() != s.sizes[n]) fail(at(at(dpath, n), i), "table size differs from level size");
      for (std::size_t x = 0; x < s.sizes[n]; ++x)
        if (s.degeneracies[n][i][x] >= s.sizes[n + 1]) fail(at(at(at(dpath, n), i), x), "simplex index out of range");
    }
  }
  return s;
}

CheckResult decode_check_result(const Json& j, const std::string& path) {
  CheckResult r;
  const Json& id = field(j, "identity", path);
  if (!id.is_string()) fail(sub(path, "identity"), "expected a string");
  r.identity = id.get<std::string>();
  r.level = as_size(field(j, "level", path), sub(path, "level"));
  const std::string ipath = sub(path, "indices");
  const Json& idx = array(field(j, "indices", path), ipath);
  for (std::size_t k = 0; k < idx.size(); ++k) r.indices.push_back(as_scalar(idx[k], at(ipath, k)));
  const Json& seed = field(j, "seed", path);
  if (!seed.is_number_unsigned()) fail(sub(path, "seed"), "expected an unsigned integer");
  r.seed = seed.get<std::uint64_t>();
  const Json& pass = field(j, "pass", path);
  if (!pass.is_boolean()) fail(sub(path, "pass"), "expected a boolean");
  r.pass = pass.get<bool>();
  if (j.contains("trials")) r.trials = as_size(j["trials"], sub(path, "trials"));
  if (j.contains("detail") && j["detail"].is_string()) r.detail = j["detail"].get<std::string>();
  return r;
}

} // namespace ncx::json_io
