#include "ncx/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "ncx/error.hpp"

namespace ncx::group {

namespace {

std::size_t ipow(std::size_t m, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < n; ++k) r *= m;
  return r;
}

void require_table(const Table& t, std::size_t m, const char* what) {
  if (t.size() != m) throw FormatError(std::string(what) + " table has wrong row count");
  for (const auto& row : t) {
    if (row.size() != m) throw FormatError(std::string(what) + " table has wrong row length");
    for (auto v : row)
      if (v >= m) throw FormatError(std::string(what) + " table entry out of range");
  }
}

void fail(AxiomReport& r, const std::string& axiom, const std::string& detail) {
  if (std::find(r.failed.begin(), r.failed.end(), axiom) == r.failed.end())
    r.failed.push_back(axiom);
  if (r.pass) r.detail = detail;
  r.pass = false;
}

std::string triple(const std::vector<std::string>& el, std::size_t x, std::size_t y,
                   std::size_t z) {
  return "x=" + el[x] + ", y=" + el[y] + ", z=" + el[z];
}

// Applies a face or degeneracy to coordinates.
std::vector<std::size_t> apply_face(const FiniteGroup& g, std::size_t i,
                                    const std::vector<std::size_t>& x) {
  std::vector<std::size_t> out;
  if (i == 0) {
    for (std::size_t k = 1; k < x.size(); ++k) out.push_back(g.div[x[k]][x[0]]);
  } else {
    out = x;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1));
  }
  return out;
}

std::vector<std::size_t> apply_degeneracy(const FiniteGroup& g, std::size_t i,
                                          const std::vector<std::size_t>& x) {
  std::vector<std::size_t> out = x;
  if (i == 0)
    out.insert(out.begin(), g.e);
  else
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), x[i - 1]);
  return out;
}

} // namespace

AxiomReport check_div_axioms(const FiniteGroup& g) {
  const std::size_t m = g.order();
  AxiomReport r;
  if (m == 0 || g.e >= m) {
    fail(r, "shape", "empty group or unit out of range");
    return r;
  }
  require_table(g.div, m, "div");
  const auto& el = g.elements;
  for (std::size_t x = 0; x < m; ++x) {
    if (g.div[x][x] != g.e) fail(r, "L1", "x/x != e for x=" + el[x]);
    if (g.div[x][g.e] != x) fail(r, "L2", "x/e != x for x=" + el[x]);
  }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (g.div[g.div[z][x]][g.div[y][x]] != g.div[z][y])
          fail(r, "L3", "(z/x)/(y/x) != z/y for " + triple(el, x, y, z));
  return r;
}

AxiomReport check_L4(const FiniteGroup& g) {
  AxiomReport r;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (g.div[g.e][g.div[y][x]] != g.div[x][y])
        fail(r, "L4", "e/(y/x) != x/y for x=" + g.elements[x] + ", y=" + g.elements[y]);
  return r;
}

AxiomReport check_mul_axioms(const MulGroup& g) {
  const std::size_t m = g.order();
  AxiomReport r;
  if (m == 0 || g.e >= m) {
    fail(r, "shape", "empty group or unit out of range");
    return r;
  }
  require_table(g.mul, m, "mul");
  const auto& el = g.elements;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (g.mul[g.mul[x][y]][z] != g.mul[x][g.mul[y][z]])
          fail(r, "G1", "(xy)z != x(yz) for " + triple(el, x, y, z));
  for (std::size_t x = 0; x < m; ++x) {
    if (g.mul[x][g.e] != x || g.mul[g.e][x] != x) fail(r, "G2", "e is not a unit at x=" + el[x]);
    bool has_inverse = false;
    for (std::size_t y = 0; y < m; ++y)
      if (g.mul[x][y] == g.e && g.mul[y][x] == g.e) has_inverse = true;
    if (!has_inverse) fail(r, "G3", "no two-sided inverse for x=" + el[x]);
  }
  return r;
}

std::size_t inverse(const FiniteGroup& g, std::size_t x) { return g.div[g.e][x]; }

MulGroup to_mul(const FiniteGroup& g) {
  if (auto r = check_div_axioms(g); !r.pass)
    throw PreconditionError("division table fails axioms: " + r.detail);
  const std::size_t m = g.order();
  Table mul(m, std::vector<std::size_t>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) mul[x][y] = g.div[x][inverse(g, y)];
  return {g.elements, std::move(mul), g.e};
}

FiniteGroup to_div(const MulGroup& g) {
  if (auto r = check_mul_axioms(g); !r.pass)
    throw PreconditionError("multiplication table fails axioms: " + r.detail);
  const std::size_t m = g.order();
  std::vector<std::size_t> inv(m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (g.mul[x][y] == g.e) inv[x] = y;
  Table div(m, std::vector<std::size_t>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) div[x][y] = g.mul[x][inv[y]];
  return {g.elements, std::move(div), g.e};
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"trivial", "z2", "z3", "z4", "z2xz2", "s3"};
  return names;
}

MulGroup builtin_mul_group(const std::string& name) {
  auto cyclic = [](std::size_t n) {
    MulGroup g;
    g.mul.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      g.elements.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    }
    return g;
  };
  if (name == "trivial") {
    MulGroup g = cyclic(1);
    g.elements = {"e"};
    return g;
  }
  if (name == "z2") return cyclic(2);
  if (name == "z3") return cyclic(3);
  if (name == "z4") return cyclic(4);
  if (name == "z2xz2") {
    MulGroup g;
    g.elements = {"00", "01", "10", "11"};
    g.mul.assign(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) g.mul[a][b] = a ^ b;
    return g;
  }
  if (name == "s3") {
    std::vector<std::array<std::size_t, 3>> perms;
    std::array<std::size_t, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    MulGroup g;
    g.mul.assign(6, std::vector<std::size_t>(6));
    for (const auto& q : perms)
      g.elements.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<std::size_t, 3> c{};
        for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        g.mul[a][b] = static_cast<std::size_t>(
            std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    return g;
  }
  throw PreconditionError("unknown group '" + name + "'");
}

FiniteGroup builtin_group(const std::string& name) { return to_div(builtin_mul_group(name)); }

std::size_t encode(const std::vector<std::size_t>& coords, std::size_t m) {
  std::size_t idx = 0;
  for (auto c : coords) idx = idx * m + c;
  return idx;
}

std::vector<std::size_t> decode(std::size_t index, std::size_t n, std::size_t m) {
  std::vector<std::size_t> out(n);
  for (std::size_t k = n; k > 0; --k) {
    out[k - 1] = index % m;
    index /= m;
  }
  return out;
}

TruncatedSimplicialSet recalage_from_group(const FiniteGroup& g, std::size_t K) {
  if (auto r = check_div_axioms(g); !r.pass)
    throw PreconditionError("group fails axioms: " + r.detail);
  const std::size_t m = g.order();
  TruncatedSimplicialSet s;
  s.K = K;
  for (std::size_t n = 0; n <= K; ++n) s.sizes.push_back(ipow(m, n));
  s.faces.resize(K + 1);
  s.degeneracies.resize(K + 1);
  for (std::size_t n = 0; n <= K; ++n) {
    for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
      std::vector<std::size_t> table(s.sizes[n]);
      for (std::size_t x = 0; x < s.sizes[n]; ++x)
        table[x] = encode(apply_face(g, i, decode(x, n, m)), m);
      s.faces[n].push_back(std::move(table));
    }
    for (std::size_t i = 0; n < K && i <= n; ++i) {
      std::vector<std::size_t> table(s.sizes[n]);
      for (std::size_t x = 0; x < s.sizes[n]; ++x)
        table[x] = encode(apply_degeneracy(g, i, decode(x, n, m)), m);
      s.degeneracies[n].push_back(std::move(table));
    }
  }
  return s;
}

std::optional<IdentityFailure> check_simplicial_set(const TruncatedSimplicialSet& s) {
  const std::size_t K = s.K;
  auto d = [&](std::size_t n, std::size_t i, std::size_t x) { return s.faces[n][i][x]; };
  auto sg = [&](std::size_t n, std::size_t i, std::size_t x) { return s.degeneracies[n][i][x]; };
  for (std::size_t n = 2; n <= K; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        for (std::size_t x = 0; x < s.sizes[n]; ++x)
          if (d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)))
            return IdentityFailure{"d_i d_j = d_{j-1} d_i", n, {i, j}, x};
  for (std::size_t n = 0; n + 2 <= K; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        for (std::size_t x = 0; x < s.sizes[n]; ++x)
          if (sg(n + 1, i, sg(n, j, x)) != sg(n + 1, j + 1, sg(n, i, x)))
            return IdentityFailure{"s_i s_j = s_{j+1} s_i", n, {i, j}, x};
  for (std::size_t n = 0; n + 1 <= K; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i)
        for (std::size_t x = 0; x < s.sizes[n]; ++x) {
          const std::size_t lhs = d(n + 1, i, sg(n, j, x));
          if (i == j || i == j + 1) {
            if (lhs != x) return IdentityFailure{"d_j s_j = id = d_{j+1} s_j", n, {i, j}, x};
          } else if (i < j) {
            if (lhs != sg(n - 1, j - 1, d(n, i, x)))
              return IdentityFailure{"d_i s_j = s_{j-1} d_i", n, {i, j}, x};
          } else if (lhs != sg(n - 1, j, d(n, i - 1, x))) {
            return IdentityFailure{"d_i s_j = s_j d_{i-1}", n, {i, j}, x};
          }
        }
  return std::nullopt;
}

FiniteGroup group_from_recalage(const TruncatedSimplicialSet& s) {
  if (s.K < 3) throw PreconditionError("group_from_recalage needs K >= 3");
  const std::size_t m = s.sizes.at(1);
  if (s.sizes[0] != 1) throw PreconditionError("level 0 must be a single point");
  // coordinates of level 2 and 3 simplices through the deletion faces
  std::map<std::vector<std::size_t>, std::size_t> level2;
  for (std::size_t x = 0; x < s.sizes[2]; ++x)
    level2[{s.faces[2][2][x], s.faces[2][1][x]}] = x;
  if (s.sizes[2] != m * m || level2.size() != m * m)
    throw PreconditionError("level 2 is not M x M under the deletion faces");
  std::map<std::vector<std::size_t>, std::size_t> level3;
  for (std::size_t x = 0; x < s.sizes[3]; ++x) {
    const std::size_t c1 = s.faces[2][2][s.faces[3][3][x]];
    const std::size_t c2 = s.faces[2][1][s.faces[3][3][x]];
    const std::size_t c3 = s.faces[2][1][s.faces[3][2][x]];
    level3[{c1, c2, c3}] = x;
  }
  if (s.sizes[3] != m * m * m || level3.size() != m * m * m)
    throw PreconditionError("level 3 is not M x M x M under the deletion faces");

  FiniteGroup g;
  for (std::size_t a = 0; a < m; ++a) g.elements.push_back(std::to_string(a));
  g.e = s.degeneracies[0][0][0];
  g.div.assign(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) g.div[a][b] = s.faces[2][0][level2.at({b, a})];
  if (auto r = check_div_axioms(g); !r.pass) {
    std::string names;
    for (const auto& f : r.failed) names += (names.empty() ? "" : ",") + f;
    throw PreconditionError("extracted division fails " + names + ": " + r.detail);
  }
  return g;
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                     const std::vector<std::size_t>& map) {
  if (map.size() != g.order()) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (map[g.div[x][y]] != h.div[map[x]][map[y]]) return false;
  return true;
}

ChopReport verify_chop_functoriality(const FiniteGroup& g, const FiniteGroup& h,
                                     const std::vector<std::size_t>& map, std::size_t K) {
  if (map.size() != g.order()) throw PreconditionError("map size differs from group order");
  for (auto v : map)
    if (v >= h.order()) throw PreconditionError("map value out of range");
  const auto sg = recalage_from_group(g, K);
  const auto sh = recalage_from_group(h, K);
  const std::size_t mg = g.order(), mh = h.order();
  auto lift = [&](std::size_t n, std::size_t x) {
    auto c = decode(x, n, mg);
    for (auto& v : c) v = map[v];
    return encode(c, mh);
  };
  for (std::size_t n = 1; n <= K; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t x = 0; x < sg.sizes[n]; ++x)
        if (sh.faces[n][i][lift(n, x)] != lift(n - 1, sg.faces[n][i][x]))
          return {false, "d_" + std::to_string(i), n, i, x};
  for (std::size_t n = 0; n < K; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t x = 0; x < sg.sizes[n]; ++x)
        if (sh.degeneracies[n][i][lift(n, x)] != lift(n + 1, sg.degeneracies[n][i][x]))
          return {false, "s_" + std::to_string(i), n, i, x};
  return {};
}

} // namespace ncx::group
