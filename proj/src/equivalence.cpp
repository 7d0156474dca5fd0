#include "ncx/equivalence.hpp"

#include <utility>

#include "ncx/linear_system.hpp"
#include "ncx/random.hpp"

namespace ncx {

namespace {

Matrix Z(const Ring& r, std::size_t rows, std::size_t cols) { return Matrix::zero(r, rows, cols); }
Matrix I(const Ring& r, std::size_t n) { return Matrix::identity(r, n); }

std::size_t level_of(const PeriodicComplex& c) {
  if (c.period() < 2) throw PreconditionError("pair complex needs period at least 2");
  return c.period() - 2;
}

void require_valid_pair(const PairCX& p) {
  if (auto r = validate_pair(p); !r.pass) throw PreconditionError("invalid pair: " + r.detail);
}

// eps''_1 : v_{n+1} G(C, x) -> X.
ChainMap eps2_second(const PairCX& p, const PeriodicComplex& g) {
  const Ring& ring = p.c.ring();
  const auto& x = p.x;
  const auto& xt = x.target();
  const std::size_t c0 = p.c.dim(0);
  return {vertex(level_of(p.c) + 1, g), xt,
          {hcat(x.at(0), I(ring, xt.dim(0))), hcat(Z(ring, xt.dim(1), c0), I(ring, xt.dim(1)))}};
}

PairMorphism induced_pair_morphism(const PairCX& p, const PairCX& q, const GHomotopyInput& in) {
  const std::size_t n = p.level();
  ChainMap a = boundary_map(in.hprime);
  Homotopy h0 = vertex_homotopy(in.hprime);
  ChainMap f0 = vertex_map(n, a);
  ChainMap f1 = boundary_map(in.h1);
  Homotopy fhat = sub(whisker(in.h1, p.x), whisker(q.x, h0));
  return {std::move(a), {std::move(f0), std::move(f1), std::move(fhat)}};
}

} // namespace

ValidationReport validate_pair(const PairCX& p) {
  if (p.c.period() < 2) return {false, std::nullopt, "pair complex needs period at least 2"};
  if (auto r = validate_complex(p.c); !r.pass) {
    r.detail = "C: " + r.detail;
    return r;
  }
  if (p.x.source() != vertex(p.level(), p.c))
    return {false, std::nullopt, "dom x is not v_n C"};
  if (p.x.period() != 2) return {false, std::nullopt, "x must be a map of period 2 complexes"};
  if (auto r = validate_complex(p.x.target()); !r.pass) {
    r.detail = "X: " + r.detail;
    return r;
  }
  if (auto r = validate_chain_map(p.x); !r.pass) {
    r.detail = "x: " + r.detail;
    return r;
  }
  return {};
}

ValidationReport validate_pair_morphism(const PairCX& p, const PairCX& q, const PairMorphism& m) {
  if (m.a.source() != p.c || m.a.target() != q.c)
    return {false, std::nullopt, "a is not a map C -> D"};
  if (auto r = validate_chain_map(m.a); !r.pass) {
    r.detail = "a: " + r.detail;
    return r;
  }
  if (m.f.f0 != vertex_map(p.level(), m.a)) return {false, std::nullopt, "f0 differs from v_n a"};
  return validate_larr_morphism(p.x, q.x, m.f);
}

PairMorphism pair_identity(const PairCX& p) { return {identity_map(p.c), larr_identity(p.x)}; }

PairMorphism compose_pair(const PairMorphism& m, const PairMorphism& k) {
  return {compose(m.a, k.a), compose_larr(m.f, k.f)};
}

Homotopy vertex_homotopy(const Homotopy& h) {
  const auto& c = h.source();
  const auto& d = h.target();
  const std::size_t n = level_of(c);
  const auto ln = static_cast<long long>(n);
  Matrix top = Z(c.ring(), d.dim(ln + 1), c.dim(0));
  for (long long j = 0; j <= ln; ++j)
    top = top + d.d_pow(ln + 1 - j, static_cast<std::size_t>(j)) * h.at(ln + 1 - j) *
                    c.d_pow(0, static_cast<std::size_t>(ln - j));
  return {vertex(n, c), vertex(n, d), {h.at(0), std::move(top)}};
}

PairCX apply_F(const PeriodicComplex& c) {
  if (c.period() < 3) throw PreconditionError("apply_F needs period at least 3");
  const std::size_t n = c.period() - 3;
  return {shifted_face(n + 1, c), vertex_tau(n, c)};
}

PairMorphism apply_F_map(const ChainMap& a) {
  if (a.period() < 3) throw PreconditionError("apply_F_map needs period at least 3");
  const std::size_t n = a.period() - 3;
  ChainMap first = shifted_face_map(n + 1, a);
  ChainMap f0 = vertex_map(n, first);
  ChainMap f1 = vertex_map(n + 1, a);
  Homotopy zero = Homotopy::zero(f0.source(), f1.target());
  return {std::move(first), {std::move(f0), std::move(f1), std::move(zero)}};
}

PeriodicComplex apply_G(const PairCX& p) {
  require_valid_pair(p);
  const Ring& ring = p.c.ring();
  const auto& c = p.c;
  const auto& xt = p.x.target();
  const auto n = static_cast<long long>(p.level());
  const std::size_t x0 = xt.dim(0), x1 = xt.dim(1);
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (long long r = 0; r <= n + 1; ++r) dims.push_back(c.dim(r) + x0);
  dims.push_back(c.dim(0) + x1);
  for (long long r = 0; r <= n; ++r)
    diffs.push_back(block(c.d(r), Z(ring, c.dim(r + 1), x0), Z(ring, x0, c.dim(r)), I(ring, x0)));
  diffs.push_back(block(-c.d(n + 1), Z(ring, c.dim(0), x0), p.x.at(1), xt.d(0)));
  diffs.push_back(block(-I(ring, c.dim(0)), Z(ring, c.dim(0), x1), p.x.at(0), xt.d(1)));
  return {ring, std::move(dims), std::move(diffs)};
}

ChainMap apply_G_map(const PairCX& p, const PairCX& q, const PairMorphism& m) {
  if (auto r = validate_pair_morphism(p, q, m); !r.pass)
    throw PreconditionError("invalid pair morphism: " + r.detail);
  const Ring& ring = p.c.ring();
  const auto& c = p.c;
  const auto& d = q.c;
  const auto n = static_cast<long long>(p.level());
  const auto& fhat = m.f.fhat;
  const auto& f1 = m.f.f1;
  const std::size_t x0 = p.x.target().dim(0), x1 = p.x.target().dim(1);
  std::vector<Matrix> comps;
  for (long long r = 0; r <= n + 1; ++r)
    comps.push_back(block(m.a.at(r), Z(ring, d.dim(r), x0),
                          fhat.at(0) * c.d_pow(r, static_cast<std::size_t>(n + 1 - r)), f1.at(0)));
  comps.push_back(block(m.a.at(0), Z(ring, d.dim(0), x1), fhat.at(1), f1.at(1)));
  return {apply_G(p), apply_G(q), std::move(comps)};
}

GHomotopyResult apply_G_homotopy(const PairCX& p, const PairCX& q, const GHomotopyInput& in) {
  if (in.hprime.source() != p.c || in.hprime.target() != q.c)
    throw DimensionError("apply_G_homotopy: hprime is not a homotopy C -> D");
  if (in.h1.source() != p.x.target() || in.h1.target() != q.x.target())
    throw DimensionError("apply_G_homotopy: h1 is not a homotopy X -> Y");
  PairMorphism m = induced_pair_morphism(p, q, in);
  const Ring& ring = p.c.ring();
  const auto& c = p.c;
  const auto& d = q.c;
  const auto n = static_cast<long long>(p.level());
  const auto& hp = in.hprime;
  const auto& h1 = in.h1;
  const std::size_t x0 = p.x.target().dim(0), x1 = p.x.target().dim(1);
  const std::size_t y0 = q.x.target().dim(0), y1 = q.x.target().dim(1);
  std::vector<Matrix> comps;
  comps.push_back(block(Z(ring, d.dim(0), c.dim(0)), Z(ring, d.dim(0), x1), Z(ring, y0, c.dim(0)),
                        h1.at(0)));
  for (long long k = 1; k <= n + 1; ++k)
    comps.push_back(block(hp.at(k), Z(ring, d.dim(k), x0), Z(ring, y0, c.dim(k - 1)),
                          Z(ring, y0, x0)));
  comps.push_back(block(-hp.at(0), Z(ring, d.dim(0), x0), Z(ring, y1, c.dim(n + 1)), h1.at(1)));
  Homotopy h(apply_G(p), apply_G(q), std::move(comps));
  return {std::move(m), std::move(h)};
}

UnitWitness unit_witnesses(const PeriodicComplex& c) {
  if (c.period() < 3) throw PreconditionError("unit_witnesses needs period at least 3");
  if (auto r = validate_complex(c); !r.pass) throw PreconditionError("invalid complex: " + r.detail);
  const Ring& ring = c.ring();
  const auto n = static_cast<long long>(c.period() - 3);
  const PeriodicComplex gfc = apply_G(apply_F(c));
  const std::size_t c0 = c.dim(0), top = c.dim(n + 2);
  std::vector<Matrix> theta, eta, h;
  for (long long r = 0; r <= n + 1; ++r) {
    theta.push_back(hcat(I(ring, c.dim(r)), c.d_pow(0, static_cast<std::size_t>(r))));
    eta.push_back(vcat(I(ring, c.dim(r)), Z(ring, c0, c.dim(r))));
  }
  theta.push_back(hcat(Z(ring, top, c0), I(ring, top)));
  eta.push_back(vcat(-c.d(n + 2), I(ring, top)));
  for (long long k = 0; k <= n + 1; ++k) h.push_back(Z(ring, gfc.dim(k), gfc.dim(k - 1)));
  h.push_back(block(Z(ring, c0, c.dim(n + 1)), I(ring, c0), Z(ring, top, c.dim(n + 1)),
                    Z(ring, top, c0)));
  return {ChainMap(gfc, c, std::move(theta)), ChainMap(c, gfc, std::move(eta)),
          Homotopy(gfc, gfc, std::move(h))};
}

CounitWitness counit_witnesses(const PairCX& p) {
  require_valid_pair(p);
  const Ring& ring = p.c.ring();
  const auto& c = p.c;
  const auto& xt = p.x.target();
  const auto n = static_cast<long long>(p.level());
  const std::size_t x0 = xt.dim(0), x1 = xt.dim(1), c0 = c.dim(0);
  const PeriodicComplex g = apply_G(p);
  PairCX fg = apply_F(g);
  const PeriodicComplex& dg = fg.c;

  std::vector<Matrix> e1, z1, k;
  for (long long r = 0; r <= n + 1; ++r) {
    e1.push_back(hcat(I(ring, c.dim(r)), Z(ring, c.dim(r), x0)));
    z1.push_back(vcat(I(ring, c.dim(r)), Z(ring, x0, c.dim(r))));
    k.push_back(Z(ring, dg.dim(r), dg.dim(r - 1)));
  }
  k[0] = block(Z(ring, c0, c.dim(n + 1)), Z(ring, c0, x0), Z(ring, x0, c.dim(n + 1)), I(ring, x0));
  ChainMap eps1(dg, c, std::move(e1));
  ChainMap zeta1(c, dg, std::move(z1));
  Homotopy kh(dg, dg, std::move(k));

  const PeriodicComplex& vn = fg.x.source();
  const PeriodicComplex& vn1 = fg.x.target();
  LArrMorphism eps2{vertex_map(p.level(), eps1), eps2_second(p, g),
                    Homotopy(vn, xt, {hcat(Z(ring, x0, c.dim(n + 1)), I(ring, x0)),
                                      Z(ring, x1, c0 + x0)})};
  LArrMorphism zeta2{vertex_map(p.level(), zeta1),
                     ChainMap(xt, vn1,
                              {vcat(Z(ring, c0, x0), I(ring, x0)), vcat(Z(ring, c0, x1), I(ring, x1))}),
                     Homotopy(p.x.source(), vn1,
                              {Z(ring, c0 + x0, c.dim(n + 1)), vcat(I(ring, c0), Z(ring, x1, c0))})};
  LArr2Morphism alpha{vertex_homotopy(kh),
                      Homotopy(vn1, vn1,
                               {Z(ring, c0 + x0, c0 + x1),
                                block(-I(ring, c0), Z(ring, c0, x0), Z(ring, x1, c0),
                                      Z(ring, x1, x0))})};
  return {std::move(fg),    std::move(eps1),  std::move(zeta1), std::move(eps2),
          std::move(zeta2), std::move(kh),    std::move(alpha)};
}

PairMorphism counit(const CounitWitness& w) { return {w.eps1, w.eps2}; }
PairMorphism counit_inverse(const CounitWitness& w) { return {w.zeta1, w.zeta2}; }

CounitNaturality counit_naturality(const PairCX& p, const PairCX& q, const PairMorphism& m) {
  const Ring& ring = p.c.ring();
  const auto& c = p.c;
  const auto& d = q.c;
  const auto n = static_cast<long long>(p.level());
  const auto& fhat = m.f.fhat;
  const std::size_t x0 = p.x.target().dim(0);
  const std::size_t y0 = q.x.target().dim(0), y1 = q.x.target().dim(1);
  const PairCX fgp = apply_F(apply_G(p));
  const PairCX fgq = apply_F(apply_G(q));

  std::vector<Matrix> z;
  for (long long k = 0; k <= n + 1; ++k) z.push_back(Z(ring, fgq.c.dim(k), c.dim(k - 1)));
  z[0] = vcat(Z(ring, d.dim(0), c.dim(n + 1)), fhat.at(0));
  Homotopy zeta1_hat(c, fgq.c, std::move(z));

  const PeriodicComplex& vn_p = fgp.x.source();
  const PeriodicComplex& vn1_p = fgp.x.target();
  LArr2Morphism eps2_hat{
      Homotopy::zero(vn_p, q.x.source()),
      Homotopy(vn1_p, q.x.target(),
               {Z(ring, y0, vn1_p.dim(1)), hcat(fhat.at(1), Z(ring, y1, x0))})};
  LArr2Morphism zeta2_hat{vertex_homotopy(zeta1_hat),
                          Homotopy::zero(p.x.target(), fgq.x.target())};
  return {std::move(zeta1_hat), std::move(eps2_hat), std::move(zeta2_hat)};
}

PeriodicComplex filler(const LNChain& chain) {
  if (auto r = validate_chain(chain); !r.pass) throw PreconditionError("invalid chain: " + r.detail);
  PeriodicComplex c = chain.complexes.at(0);
  if (chain.length() == 0) return c;
  ChainMap x = chain.maps[0];
  for (std::size_t i = 0; i < chain.length(); ++i) {
    const PairCX p{c, x};
    PeriodicComplex g = apply_G(p);
    if (i + 1 < chain.length()) x = compose(chain.maps[i + 1], eps2_second(p, g));
    c = std::move(g);
  }
  return c;
}

PeriodicComplex augmented_filler(const Ring& ring) { return PeriodicComplex::zero(ring, 1); }

Homotopy contraction_to_zero(const PeriodicComplex& x) {
  if (x.period() != 1) throw PreconditionError("contraction_to_zero needs period 1");
  return {x, x, {I(x.ring(), x.dim(0))}};
}

PeriodicComplex cone(const ChainMap& x) {
  if (x.period() != 2) throw PreconditionError("cone needs a map of period 2 complexes");
  const Ring& ring = x.source().ring();
  const auto& c = x.source();
  const auto& t = x.target();
  return {ring,
          {c.dim(1) + t.dim(0), c.dim(0) + t.dim(1)},
          {block(-c.d(1), Z(ring, c.dim(0), t.dim(0)), x.at(1), t.d(0)),
           block(-c.d(0), Z(ring, c.dim(1), t.dim(1)), x.at(0), t.d(1))}};
}

PeriodicComplex cone_via_filler(const ChainMap& x) {
  return face(0, filler(LNChain{{x.source(), x.target()}, {x}}));
}

ChainMap cone_map(const ChainMap& x, const ChainMap& y, const LArrMorphism& f) {
  if (auto r = validate_larr_morphism(x, y, f); !r.pass)
    throw PreconditionError("cone_map: " + r.detail);
  const Ring& ring = x.source().ring();
  const auto& d = y.source();
  const auto& xt = x.target();
  return {cone(x), cone(y),
          {block(f.f0.at(1), Z(ring, d.dim(1), xt.dim(0)), f.fhat.at(0), f.f1.at(0)),
           block(f.f0.at(0), Z(ring, d.dim(0), xt.dim(1)), f.fhat.at(1), f.f1.at(1))}};
}

ChainMap tau_d(const ChainMap& x) {
  if (x.period() != 2) throw PreconditionError("tau_d needs a map of period 2 complexes");
  const Ring& ring = x.source().ring();
  const auto& c = x.source();
  const auto& t = x.target();
  return {t, cone(x),
          {vcat(Z(ring, c.dim(1), t.dim(0)), I(ring, t.dim(0))),
           vcat(Z(ring, c.dim(0), t.dim(1)), I(ring, t.dim(1)))}};
}

std::pair<ChainMap, ChainMap> boundary_triangle(const PeriodicComplex& y) {
  if (y.period() != 3) throw PreconditionError("boundary_triangle needs period 3");
  return {tau_face(2, y), tau_face(1, y)};
}

bool check_R1(const ChainMap& f, const ChainMap& g) {
  if (f.target() != g.source()) throw PreconditionError("check_R1: maps not composable");
  if (!f.source().ring().is_field()) throw PreconditionError("check_R1 needs a prime field");
  const ChainMap gf = compose(g, f);
  const LArrMorphism m{identity_map(f.source()), g, Homotopy::zero(f.source(), g.target())};
  return homology_dims_2(cone(cone_map(f, gf, m))) == homology_dims_2(cone(g));
}

PairCX random_pair(const Ring& ring, std::size_t n, std::size_t max_strings, std::size_t max_dim,
                   std::uint64_t seed) {
  PeriodicComplex c = random_complex(ring, n + 2, max_strings, max_dim, derive_seed(seed, 1));
  PeriodicComplex x = random_complex(ring, 2, max_strings, max_dim, derive_seed(seed, 2));
  ChainMap m = random_chain_map(vertex(n, c), x, derive_seed(seed, 3));
  return {std::move(c), std::move(m)};
}

PairMorphism random_pair_morphism(const PairCX& p, const PairCX& q, std::uint64_t seed) {
  const Ring& ring = p.c.ring();
  if (!ring.is_field()) return induced_pair_morphism(p, q, random_g_homotopy_input(p, q, seed));
  Rng rng(seed);
  const auto n = static_cast<long long>(p.level());
  const auto& xs = p.x.source();
  const auto& xt = p.x.target();
  const auto& yt = q.x.target();
  LinearSystem sys(ring);
  const auto ua = add_chain_map_unknowns(sys, p.c, q.c);
  add_chain_map_unknowns(sys, xt, yt);
  const auto uh = add_homotopy_unknowns(sys, xs, yt);
  const std::size_t f1_base = ua.size();
  for (long long i = 0; i < 2; ++i) {
    const std::size_t e = sys.add_equation(yt.dim(i), xs.dim(i));
    sys.add_term(e, I(ring, yt.dim(i)), f1_base + static_cast<std::size_t>(i), p.x.at(i));
    sys.add_term(e, -q.x.at(i), ua[static_cast<std::size_t>(i == 0 ? 0 : n + 1)],
                 I(ring, xs.dim(i)));
    add_boundary_terms(sys, e, xs, yt, uh, i, -1);
  }
  auto sol = sys.random_solution(rng);
  const auto na = static_cast<std::ptrdiff_t>(ua.size());
  ChainMap a(p.c, q.c, std::vector<Matrix>(sol.begin(), sol.begin() + na));
  ChainMap f1(xt, yt, {sol[ua.size()], sol[ua.size() + 1]});
  Homotopy fhat(xs, yt, {sol[ua.size() + 2], sol[ua.size() + 3]});
  ChainMap f0 = vertex_map(p.level(), a);
  return {std::move(a), {std::move(f0), std::move(f1), std::move(fhat)}};
}

GHomotopyInput random_g_homotopy_input(const PairCX& p, const PairCX& q, std::uint64_t seed) {
  Rng rng(seed);
  Homotopy hprime = random_homotopy(rng, p.c, q.c);
  Homotopy h1 = random_homotopy(rng, p.x.target(), q.x.target());
  return {std::move(hprime), std::move(h1)};
}

} // namespace ncx
