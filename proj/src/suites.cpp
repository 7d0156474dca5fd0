#include "ncx/suites.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>
#include <tuple>
#include <utility>

#include "ncx/equivalence.hpp"
#include "ncx/group.hpp"
#include "ncx/random.hpp"
#include "ncx/simplicial.hpp"

namespace ncx {

namespace {

using Indices = std::vector<long long>;

class Recorder {
public:
  void check(std::string identity, std::size_t level, Indices indices, std::uint64_t seed, bool ok,
             std::string detail = {}) {
    items.push_back({std::move(identity), level, std::move(indices), seed, ok, 1,
                     ok ? std::string{} : std::move(detail)});
  }

  /// Runs fn, recording a thrown exception as a failure.
  template <class Fn>
  void expect(const std::string& identity, std::size_t level, Indices indices, std::uint64_t seed,
              Fn&& fn) {
    try {
      const bool ok = fn();
      check(identity, level, std::move(indices), seed, ok, ok ? "" : "equation does not hold");
    } catch (const std::exception& e) {
      check(identity, level, std::move(indices), seed, false, e.what());
    }
  }

  std::vector<CheckResult> items;
};

using TrialBody = std::function<void(std::size_t level, std::uint64_t seed, Recorder&)>;

SuiteReport aggregate(const std::vector<Recorder>& recorders, std::uint64_t suite_seed) {
  SuiteReport report;
  std::map<std::tuple<std::string, std::size_t, Indices>, std::size_t> index;
  for (const auto& rec : recorders)
    for (const auto& item : rec.items) {
      auto key = std::make_tuple(item.identity, item.level, item.indices);
      auto it = index.find(key);
      if (it == index.end()) {
        it = index.emplace(key, report.results.size()).first;
        report.results.push_back({item.identity, item.level, item.indices, suite_seed, true, 0, {}});
      }
      CheckResult& agg = report.results[it->second];
      ++agg.trials;
      if (!item.pass && agg.pass) {
        agg.pass = false;
        agg.seed = item.seed;
        agg.detail = item.detail;
      }
    }
  return report;
}

// Runs body for every (level, trial) pair, in parallel, aggregated in job order.
SuiteReport run_trials(const std::string& suite, std::size_t level_lo, std::size_t level_hi,
                       std::size_t trials, std::uint64_t seed, const TrialBody& body) {
  struct Job {
    std::size_t level;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t level = level_lo; level <= level_hi; ++level)
    for (std::size_t t = 0; t < trials; ++t)
      jobs.push_back({level, derive_seed(seed, std::hash<std::string>{}(suite), level, t)});
  std::vector<Recorder> recorders(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        body(jobs[j].level, jobs[j].seed, recorders[j]);
      } catch (const std::exception& e) {
        recorders[j].check(suite + ": trial completes", jobs[j].level, {}, jobs[j].seed, false,
                           e.what());
      }
    }
  };
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(jobs.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return aggregate(recorders, seed);
}

// Operation table; faults replace single entries.
struct Ops {
  std::function<PeriodicComplex(std::size_t, const PeriodicComplex&)> face =
      [](std::size_t i, const PeriodicComplex& x) { return ncx::face(i, x); };
  std::function<ChainMap(std::size_t, const ChainMap&)> face_map =
      [](std::size_t i, const ChainMap& f) { return ncx::face_map(i, f); };
  std::function<PeriodicComplex(std::size_t, const PeriodicComplex&)> degeneracy =
      [](std::size_t j, const PeriodicComplex& x) { return ncx::degeneracy(j, x); };
  std::function<ChainMap(std::size_t, const ChainMap&)> degeneracy_map =
      [](std::size_t j, const ChainMap& f) { return ncx::degeneracy_map(j, f); };
  std::function<ChainMap(std::size_t, const PeriodicComplex&)> tau_face =
      [](std::size_t i, const PeriodicComplex& x) { return ncx::tau_face(i, x); };
  std::function<ChainMap(std::size_t, const PeriodicComplex&)> tau_degeneracy =
      [](std::size_t j, const PeriodicComplex& x) { return ncx::tau_degeneracy(j, x); };
  std::function<PeriodicComplex(const PairCX&)> apply_G = [](const PairCX& p) {
    return ncx::apply_G(p);
  };
  std::function<UnitWitness(const PeriodicComplex&)> unit_witnesses =
      [](const PeriodicComplex& c) { return ncx::unit_witnesses(c); };
  std::function<group::TruncatedSimplicialSet(const group::FiniteGroup&, std::size_t)> recalage =
      [](const group::FiniteGroup& g, std::size_t k) { return group::recalage_from_group(g, k); };
};

// The differential of the tau map one residue late.
ChainMap late_tau(const PeriodicComplex& src, const PeriodicComplex& dst, const PeriodicComplex& x,
                  std::size_t residue, std::size_t old_residue) {
  std::vector<Matrix> comps;
  for (std::size_t k = 0; k < src.period(); ++k) {
    if (k == residue % src.period())
      comps.push_back(x.d(static_cast<long long>(old_residue)));
    else
      comps.push_back(Matrix::identity(x.ring(), src.dims()[k]));
  }
  return {src, dst, std::move(comps)};
}

Ops make_ops(Fault fault) {
  Ops ops;
  switch (fault) {
  case Fault::None:
    break;
  case Fault::FaceOffByOne:
    ops.face = [](std::size_t i, const PeriodicComplex& x) {
      return ncx::face((i + 1) % x.period(), x);
    };
    ops.face_map = [](std::size_t i, const ChainMap& f) {
      return ncx::face_map((i + 1) % f.period(), f);
    };
    break;
  case Fault::TauResidue:
    ops.tau_face = [](std::size_t i, const PeriodicComplex& x) {
      return late_tau(ncx::face(i, x), ncx::face(i - 1, x), x, i, face_index(i, i % (x.period() - 1)));
    };
    ops.tau_degeneracy = [](std::size_t j, const PeriodicComplex& x) {
      return late_tau(ncx::degeneracy(j, x), ncx::degeneracy(j + 1, x), x, j + 2,
                      degeneracy_index(j, (j + 2) % (x.period() + 1)));
    };
    break;
  case Fault::GSignFlip:
    ops.apply_G = [](const PairCX& p) {
      PeriodicComplex g = ncx::apply_G(p);
      const auto n = static_cast<long long>(p.level());
      std::vector<Matrix> diffs = g.diffs();
      const auto& xt = p.x.target();
      diffs[static_cast<std::size_t>(n + 1)] =
          block(p.c.d(n + 1), Matrix::zero(p.c.ring(), p.c.dim(0), xt.dim(0)), p.x.at(1), xt.d(0));
      return PeriodicComplex(g.ring(), g.dims(), std::move(diffs));
    };
    break;
  case Fault::HomotopyComponent:
    ops.unit_witnesses = [](const PeriodicComplex& c) {
      UnitWitness w = ncx::unit_witnesses(c);
      std::vector<Matrix> comps = w.h.comps();
      comps.back() = -comps.back();
      w.h = Homotopy(w.h.source(), w.h.target(), std::move(comps));
      return w;
    };
    break;
  case Fault::GroupD0:
    ops.recalage = [](const group::FiniteGroup& g, std::size_t k) {
      auto s = group::recalage_from_group(g, k);
      const std::size_t m = g.order();
      for (std::size_t n = 2; n <= k; ++n)
        for (std::size_t x = 0; x < s.sizes[n]; ++x) {
          auto c = group::decode(x, n, m);
          std::vector<std::size_t> out;
          for (std::size_t j = 1; j < n; ++j) out.push_back(g.div[c[0]][c[j]]);
          s.faces[n][0][x] = group::encode(out, m);
        }
      return s;
    };
    break;
  }
  return ops;
}

constexpr std::size_t kStrings = 4;
constexpr std::size_t kDim = 3;

} // namespace

const std::vector<std::string>& fault_names() {
  static const std::vector<std::string> names{"none",          "g-sign-flip",
                                              "tau-residue",   "group-d0",
                                              "homotopy-component", "face-off-by-one"};
  return names;
}

Fault parse_fault(const std::string& name) {
  const auto& names = fault_names();
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return static_cast<Fault>(k);
  throw PreconditionError("unknown fault '" + name + "'");
}

std::string fault_name(Fault f) { return fault_names().at(static_cast<std::size_t>(f)); }

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results)
    if (!r.pass) ++n;
  return n;
}

void SuiteReport::append(const SuiteReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

std::size_t worker_count() {
  if (const char* env = std::getenv("NCX_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SuiteReport verify_generator(const SuiteConfig& cfg) {
  const Ring ring = cfg.ring;
  return run_trials("generator", 1, cfg.n_max, cfg.trials, cfg.seed,
                    [ring](std::size_t period, std::uint64_t seed, Recorder& rec) {
                      const auto x = random_complex(ring, period, 6, 4, seed);
                      rec.check("generator: d^N = 0", period, {}, seed, validate_complex(x).pass,
                                validate_complex(x).detail);
                      bool dims_ok = true;
                      for (auto d : x.dims()) dims_ok = dims_ok && d <= 4;
                      rec.check("generator: dims <= 4", period, {}, seed, dims_ok);
                      rec.check("generator: deterministic", period, {}, seed,
                                random_complex(ring, period, 6, 4, seed) == x);
                    });
}

SuiteReport verify_simplicial(const SuiteConfig& cfg) {
  const Ring ring = cfg.ring;
  const Ops ops = make_ops(cfg.fault);
  return run_trials("simplicial", 0, cfg.n_max, cfg.trials, cfg.seed, [ring, ops](std::size_t n,
                                                                                std::uint64_t seed,
                                                                                Recorder& rec) {
    const std::size_t period = n + 1;
    const auto x = random_complex(ring, period, kStrings, kDim, derive_seed(seed, 1));
    const auto y = random_complex(ring, period, kStrings, kDim, derive_seed(seed, 2));
    const auto w = random_complex(ring, period, kStrings, kDim, derive_seed(seed, 3));
    const auto f = random_chain_map(x, y, derive_seed(seed, 4));
    const auto g = random_chain_map(y, w, derive_seed(seed, 5));
    const auto gf = compose(g, f);
    const auto ln = [](std::size_t v) { return static_cast<long long>(v); };

    if (n == 0) {
      rec.expect("face rejects period 1", n, {}, seed, [&] {
        try {
          ops.face(0, x);
        } catch (const PreconditionError&) {
          return true;
        }
        return false;
      });
    }
    for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
      rec.expect("face output is a complex", n, {ln(i)}, seed,
                 [&] { return validate_complex(ops.face(i, x)).pass; });
      rec.expect("face_map output is a chain map", n, {ln(i)}, seed,
                 [&] { return validate_chain_map(ops.face_map(i, f)).pass; });
      rec.expect("face_map preserves identities", n, {ln(i)}, seed, [&] {
        return ops.face_map(i, identity_map(x)) == identity_map(ops.face(i, x));
      });
      rec.expect("face_map preserves composition", n, {ln(i)}, seed, [&] {
        return ops.face_map(i, gf) == compose(ops.face_map(i, g), ops.face_map(i, f));
      });
    }
    for (std::size_t j = 1; n >= 2 && j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        rec.expect("d_i d_j = d_{j-1} d_i", n, {ln(i), ln(j)}, seed, [&] {
          return ops.face(i, ops.face(j, x)) == ops.face(j - 1, ops.face(i, x)) &&
                 ops.face_map(i, ops.face_map(j, f)) == ops.face_map(j - 1, ops.face_map(i, f));
        });
    for (std::size_t i = 1; i <= n; ++i) {
      rec.expect("tau_face is a chain map", n, {ln(i)}, seed,
                 [&] { return validate_chain_map(ops.tau_face(i, x)).pass; });
      rec.expect("tau_face naturality", n, {ln(i)}, seed, [&] {
        return compose(ops.tau_face(i, y), ops.face_map(i, f)) ==
               compose(ops.face_map(i - 1, f), ops.tau_face(i, x));
      });
    }
    for (std::size_t j = 0; j <= n; ++j) {
      rec.expect("degeneracy output is a complex", n, {ln(j)}, seed,
                 [&] { return validate_complex(ops.degeneracy(j, x)).pass; });
      rec.expect("degeneracy_map output is a chain map", n, {ln(j)}, seed,
                 [&] { return validate_chain_map(ops.degeneracy_map(j, f)).pass; });
      rec.expect("degeneracy_map preserves identities", n, {ln(j)}, seed, [&] {
        return ops.degeneracy_map(j, identity_map(x)) == identity_map(ops.degeneracy(j, x));
      });
      rec.expect("degeneracy_map preserves composition", n, {ln(j)}, seed, [&] {
        return ops.degeneracy_map(j, gf) ==
               compose(ops.degeneracy_map(j, g), ops.degeneracy_map(j, f));
      });
      for (std::size_t i = 0; i <= j; ++i)
        rec.expect("s_i s_j = s_{j+1} s_i", n, {ln(i), ln(j)}, seed, [&] {
          return ops.degeneracy(i, ops.degeneracy(j, x)) ==
                     ops.degeneracy(j + 1, ops.degeneracy(i, x)) &&
                 ops.degeneracy_map(i, ops.degeneracy_map(j, f)) ==
                     ops.degeneracy_map(j + 1, ops.degeneracy_map(i, f));
        });
      for (std::size_t i = 0; i <= n + 1; ++i) {
        const auto sx = ops.degeneracy(j, x);
        const auto sf = ops.degeneracy_map(j, f);
        if (i < j) {
          rec.expect("d_i s_j = s_{j-1} d_i", n, {ln(i), ln(j)}, seed, [&] {
            return ops.face(i, sx) == ops.degeneracy(j - 1, ops.face(i, x)) &&
                   ops.face_map(i, sf) == ops.degeneracy_map(j - 1, ops.face_map(i, f));
          });
        } else if (i == j || i == j + 1) {
          rec.expect("d_j s_j = id = d_{j+1} s_j", n, {ln(i), ln(j)}, seed,
                     [&] { return ops.face(i, sx) == x && ops.face_map(i, sf) == f; });
        } else {
          rec.expect("d_i s_j = s_j d_{i-1}", n, {ln(i), ln(j)}, seed, [&] {
            return ops.face(i, sx) == ops.degeneracy(j, ops.face(i - 1, x)) &&
                   ops.face_map(i, sf) == ops.degeneracy_map(j, ops.face_map(i - 1, f));
          });
        }
      }
    }
    for (std::size_t j = 0; j + 1 <= n; ++j) {
      rec.expect("tau_degeneracy is a chain map", n, {ln(j)}, seed,
                 [&] { return validate_chain_map(ops.tau_degeneracy(j, x)).pass; });
      rec.expect("tau_degeneracy naturality", n, {ln(j)}, seed, [&] {
        return compose(ops.tau_degeneracy(j, y), ops.degeneracy_map(j, f)) ==
               compose(ops.degeneracy_map(j + 1, f), ops.tau_degeneracy(j, x));
      });
    }

    const auto c = random_complex(ring, n + 2, kStrings, kDim, derive_seed(seed, 6));
    for (std::size_t i = 0; i <= n; ++i)
      rec.expect("vertex matches closed form", n, {ln(i)}, seed, [&] {
        const auto li = static_cast<long long>(i);
        const PeriodicComplex closed(
            ring, {c.dim(0), c.dim(li + 1)},
            {c.d_pow(0, i + 1), c.d_pow(li + 1, n + 1 - i)});
        return vertex(i, c) == closed;
      });
    rec.expect("spine maps are chain maps", n, {}, seed, [&] {
      const auto s = spine(c);
      return validate_chain(s).pass && s.length() == n;
    });
  });
}

SuiteReport verify_g_nilpotency(const SuiteConfig& cfg) {
  const Ring ring = cfg.ring;
  const Ops ops = make_ops(cfg.fault);
  return run_trials("g-nilpotency", 0, cfg.n_max, cfg.trials, cfg.seed,
                    [ring, ops](std::size_t n, std::uint64_t seed, Recorder& rec) {
                      const auto p = random_pair(ring, n, kStrings, kDim, seed);
                      rec.expect("G output satisfies d^{n+3} = 0", n, {}, seed, [&] {
                        const auto g = ops.apply_G(p);
                        return g.period() == n + 3 && validate_complex(g).pass;
                      });
                    });
}

SuiteReport verify_unit(const SuiteConfig& cfg) {
  const Ring ring = cfg.ring;
  const Ops ops = make_ops(cfg.fault);
  return run_trials("unit", 0, cfg.n_max, cfg.trials, cfg.seed,
                    [ring, ops](std::size_t n, std::uint64_t seed, Recorder& rec) {
                      const auto c = random_complex(ring, n + 3, kStrings + 1, kDim, seed);
                      const auto fc = apply_F(c);
                      rec.check("F C is a pair", n, {}, seed, validate_pair(fc).pass);
                      const auto gfc = ops.apply_G(fc);
                      const auto u = ops.unit_witnesses(c);
                      const ChainMap theta(gfc, c, u.theta.comps());
                      const ChainMap eta(c, gfc, u.eta.comps());
                      const Homotopy h(gfc, gfc, u.h.comps());
                      rec.check("theta is a chain map", n, {}, seed,
                                validate_chain_map(theta).pass);
                      rec.check("eta is a chain map", n, {}, seed, validate_chain_map(eta).pass);
                      rec.check("theta eta = id", n, {}, seed,
                                compose(theta, eta) == identity_map(c));
                      rec.check("id - eta theta = boundary(h)", n, {}, seed,
                                is_homotopy(compose(eta, theta), identity_map(gfc), h));
                    });
}

SuiteReport verify_counit(const SuiteConfig& cfg) {
  const Ring ring = cfg.ring;
  return run_trials("counit", 0, cfg.n_max, cfg.trials, cfg.seed, [ring](std::size_t n,
                                                                        std::uint64_t seed,
                                                                        Recorder& rec) {
    const auto p = random_pair(ring, n, kStrings, kDim, derive_seed(seed, 1));
    const auto q = random_pair(ring, n, kStrings, kDim, derive_seed(seed, 2));
    const auto m = random_pair_morphism(p, q, derive_seed(seed, 3));
    const auto w = counit_witnesses(p);
    const auto wq = counit_witnesses(q);
    const auto& dg = w.fg.c;

    rec.check("F G p is a pair", n, {}, seed, validate_pair(w.fg).pass);
    rec.check("eps' is a chain map", n, {}, seed, validate_chain_map(w.eps1).pass);
    rec.check("zeta' is a chain map", n, {}, seed, validate_chain_map(w.zeta1).pass);
    rec.check("eps' zeta' = id", n, {}, seed, compose(w.eps1, w.zeta1) == identity_map(p.c));
    rec.check("zeta' eps' homotopic to id", n, {}, seed,
              is_homotopy(compose(w.zeta1, w.eps1), identity_map(dg), w.k));
    rec.check("eps'' is an LArr morphism", n, {}, seed,
              validate_larr_morphism(w.fg.x, p.x, w.eps2).pass);
    rec.check("zeta'' is an LArr morphism", n, {}, seed,
              validate_larr_morphism(p.x, w.fg.x, w.zeta2).pass);
    rec.check("eps'' zeta'' = id", n, {}, seed,
              compose_larr(w.eps2, w.zeta2) == larr_identity(p.x));
    rec.check("zeta'' eps'' homotopic to id", n, {}, seed,
              validate_larr_2morphism(w.fg.x, w.fg.x, w.alpha, compose_larr(w.zeta2, w.eps2),
                                      larr_identity(w.fg.x)));
    rec.check("counit is a pair morphism", n, {}, seed,
              validate_pair_morphism(w.fg, p, counit(w)).pass);
    rec.check("counit inverse is a pair morphism", n, {}, seed,
              validate_pair_morphism(p, w.fg, counit_inverse(w)).pass);
    rec.expect("eps''_1 source is the v_{n+1} G display", n, {}, seed, [&] {
      const Ring& r = p.c.ring();
      const auto& x = p.x;
      const auto& xt = x.target();
      const auto ln = static_cast<long long>(n);
      const std::size_t c0 = p.c.dim(0);
      const PeriodicComplex display(
          r, {c0 + xt.dim(0), c0 + xt.dim(1)},
          {block(Matrix::zero(r, c0, c0), Matrix::zero(r, c0, xt.dim(0)),
                 x.at(1) * p.c.d_pow(0, n + 1), xt.d(0)),
           block(-Matrix::identity(r, c0), Matrix::zero(r, c0, xt.dim(1)), x.at(0), xt.d(1))});
      (void)ln;
      return w.eps2.f1.source() == display && w.eps2.f1.target() == xt;
    });

    const auto fgm = apply_F_map(apply_G_map(p, q, m));
    const auto nat = counit_naturality(p, q, m);
    rec.check("eps' is natural", n, {}, seed,
              compose(wq.eps1, fgm.a) == compose(m.a, w.eps1));
    rec.check("zeta'-hat is a homotopy", n, {}, seed,
              is_homotopy(compose(wq.zeta1, m.a), compose(fgm.a, w.zeta1), nat.zeta1_hat));
    rec.check("eps''-hat is an LArr 2-morphism", n, {}, seed,
              validate_larr_2morphism(w.fg.x, q.x, nat.eps2_hat, compose_larr(wq.eps2, fgm.f),
                                      compose_larr(m.f, w.eps2)));
    rec.check("zeta''-hat is an LArr 2-morphism", n, {}, seed,
              validate_larr_2morphism(p.x, wq.fg.x, nat.zeta2_hat, compose_larr(wq.zeta2, m.f),
                                      compose_larr(fgm.f, w.zeta2)));
  });
}

SuiteReport verify_triangles(const SuiteConfig& cfg) {
  const Ring ring = cfg.ring;
  const Ops ops = make_ops(cfg.fault);
  return run_trials("triangles", 0, cfg.n_max, cfg.trials, cfg.seed,
                    [ring, ops](std::size_t n, std::uint64_t seed, Recorder& rec) {
                      const auto c = random_complex(ring, n + 3, kStrings + 1, kDim,
                                                    derive_seed(seed, 1));
                      const auto p = random_pair(ring, n, kStrings, kDim, derive_seed(seed, 2));
                      const auto fc = apply_F(c);
                      const auto eta = ops.unit_witnesses(c).eta;
                      const auto feta = apply_F_map(eta);
                      const auto wfc = counit_witnesses(fc);
                      const auto composite = compose_pair(counit(wfc), feta);
                      rec.check("eps_F o F(eta) = id", n, {}, seed,
                                composite == pair_identity(fc));
                      rec.check("eps''-hat v_n eta = 0", n, {}, seed,
                                whisker(wfc.eps2.fhat, feta.f.f0) ==
                                    Homotopy::zero(fc.x.source(), fc.x.target()));
                      const auto g = ops.apply_G(p);
                      const auto wp = counit_witnesses(p);
                      const auto eta_g = ops.unit_witnesses(g).eta;
                      rec.check("G(eps) o eta_G = id", n, {}, seed,
                                compose(apply_G_map(wp.fg, p, counit(wp)), eta_g) ==
                                    identity_map(g));
                    });
}

SuiteReport verify_functors(const SuiteConfig& cfg) {
  const Ring ring = cfg.ring;
  return run_trials("functors", 0, cfg.n_max, cfg.trials, cfg.seed, [ring](std::size_t n,
                                                                         std::uint64_t seed,
                                                                         Recorder& rec) {
    const auto p = random_pair(ring, n, kStrings, kDim, derive_seed(seed, 1));
    const auto q = random_pair(ring, n, kStrings, kDim, derive_seed(seed, 2));
    const auto r = random_pair(ring, n, kStrings, kDim, derive_seed(seed, 3));
    const auto m = random_pair_morphism(p, q, derive_seed(seed, 4));
    const auto k = random_pair_morphism(q, r, derive_seed(seed, 5));
    rec.check("G preserves identities", n, {}, seed,
              apply_G_map(p, p, pair_identity(p)) == identity_map(apply_G(p)));
    const auto gm = apply_G_map(p, q, m);
    rec.check("G map is a chain map", n, {}, seed, validate_chain_map(gm).pass);
    rec.check("G preserves composition", n, {}, seed,
              apply_G_map(p, r, compose_pair(k, m)) == compose(apply_G_map(q, r, k), gm));
    const auto gh = apply_G_homotopy(p, q, random_g_homotopy_input(p, q, derive_seed(seed, 6)));
    rec.check("G homotopy input is a pair morphism", n, {}, seed,
              validate_pair_morphism(p, q, gh.m).pass);
    rec.check("G homotopy satisfies the homotopy equation", n, {}, seed,
              is_homotopy(zero_map(apply_G(p), apply_G(q)), apply_G_map(p, q, gh.m), gh.h));

    const auto c = random_complex(ring, n + 3, kStrings, kDim, derive_seed(seed, 7));
    const auto d = random_complex(ring, n + 3, kStrings, kDim, derive_seed(seed, 8));
    const auto e = random_complex(ring, n + 3, kStrings, kDim, derive_seed(seed, 9));
    const auto a = random_chain_map(c, d, derive_seed(seed, 10));
    const auto b = random_chain_map(d, e, derive_seed(seed, 11));
    rec.check("F map is a pair morphism", n, {}, seed,
              validate_pair_morphism(apply_F(c), apply_F(d), apply_F_map(a)).pass);
    rec.check("F preserves identities", n, {}, seed,
              apply_F_map(identity_map(c)) == pair_identity(apply_F(c)));
    rec.check("F preserves composition", n, {}, seed,
              apply_F_map(compose(b, a)) == compose_pair(apply_F_map(b), apply_F_map(a)));
  });
}

SuiteReport verify_spine_filler(const SuiteConfig& cfg) {
  const Ring ring = cfg.ring;
  return run_trials("spine-filler", 0, cfg.n_max, cfg.trials, cfg.seed, [ring](std::size_t n,
                                                                             std::uint64_t seed,
                                                                             Recorder& rec) {
    const auto ln = [](std::size_t v) { return static_cast<long long>(v); };
    const auto chain = random_chain(ring, 2, n, kStrings, kDim, derive_seed(seed, 1));
    const auto fl = filler(chain);
    rec.check("filler output is a complex", n, {}, seed,
              fl.period() == n + 2 && validate_complex(fl).pass);

    // stagewise counit data used by the filler
    bool stages_ok = true;
    PeriodicComplex c = chain.complexes[0];
    if (n > 0) {
      ChainMap x = chain.maps[0];
      for (std::size_t i = 0; i < n; ++i) {
        const PairCX p{c, x};
        const auto w = counit_witnesses(p);
        stages_ok = stages_ok && validate_larr_morphism(w.fg.x, p.x, w.eps2).pass;
        if (i + 1 < n) x = compose(chain.maps[i + 1], w.eps2.f1);
        c = apply_G(p);
      }
    }
    rec.check("eps'' is an LArr morphism at every filler stage", n, {}, seed,
              stages_ok && c == fl);
    if (n == 1)
      rec.check("filler of one map is G_0", n, {}, seed,
                fl == apply_G({chain.complexes[0], chain.maps[0]}));

    const auto sp = spine(fl);
    rec.check("spine of filler is a chain", n, {}, seed, validate_chain(sp).pass);
    const auto cc = random_complex(ring, n + 2, kStrings, kDim, derive_seed(seed, 2));
    const auto back = filler(spine(cc));
    rec.check("filler of spine has the same period", n, {}, seed, back.period() == cc.period());
    if (!ring.is_field()) return;
    for (std::size_t i = 0; i <= n; ++i)
      rec.check("spine(filler) vertex homology matches chain", n, {ln(i)}, seed,
                homology_dims_2(sp.complexes[i]) == homology_dims_2(chain.complexes[i]));
    for (std::size_t pp = 1; pp < n + 2; ++pp)
      for (std::size_t i = 0; i < n + 2; ++i)
        rec.check("filler(spine) p-homology matches", n, {ln(pp), ln(i)}, seed,
                  p_homology_dim(back, pp, ln(i)) == p_homology_dim(cc, pp, ln(i)));
  });
}

SuiteReport verify_augmented(const SuiteConfig& cfg) {
  const Ring ring = cfg.ring;
  return run_trials("augmented", 0, 0, cfg.trials, cfg.seed,
                    [ring](std::size_t, std::uint64_t seed, Recorder& rec) {
                      const auto x = random_complex(ring, 1, kStrings, kDim, seed);
                      rec.check("period-1 identity is null-homotopic", 0, {-1}, seed,
                                is_homotopy(zero_map(x, x), identity_map(x),
                                            contraction_to_zero(x)));
                      rec.check("augmented filler is the zero 1-complex", 0, {-1}, seed,
                                augmented_filler(ring) == PeriodicComplex::zero(ring, 1));
                    });
}

SuiteReport verify_equivalence(const SuiteConfig& cfg) {
  SuiteReport report = verify_g_nilpotency(cfg);
  report.append(verify_unit(cfg));
  report.append(verify_counit(cfg));
  report.append(verify_triangles(cfg));
  report.append(verify_functors(cfg));
  report.append(verify_spine_filler(cfg));
  report.append(verify_augmented(cfg));
  return report;
}

SuiteReport verify_cone(const SuiteConfig& cfg) {
  const Ring ring = cfg.ring;
  return run_trials("cone", 0, 0, cfg.trials, cfg.seed, [ring](std::size_t, std::uint64_t seed,
                                                               Recorder& rec) {
    const auto c = random_complex(ring, 2, kStrings, kDim, derive_seed(seed, 1));
    const auto xt = random_complex(ring, 2, kStrings, kDim, derive_seed(seed, 2));
    const auto d = random_complex(ring, 2, kStrings, kDim, derive_seed(seed, 3));
    const auto yt = random_complex(ring, 2, kStrings, kDim, derive_seed(seed, 4));
    const auto x = random_chain_map(c, xt, derive_seed(seed, 5));
    const auto y = random_chain_map(d, yt, derive_seed(seed, 6));
    const auto f = random_larr_morphism(x, y, derive_seed(seed, 7));

    rec.check("cone = cone via filler", 0, {}, seed, cone(x) == cone_via_filler(x));
    rec.check("cone is a complex", 0, {}, seed, validate_complex(cone(x)).pass);
    const auto tx = tau_d(x);
    rec.check("tau_d is a chain map", 0, {}, seed, validate_chain_map(tx).pass);
    const auto cf = cone_map(x, y, f);
    rec.check("cone of an LArr morphism is a chain map", 0, {}, seed, validate_chain_map(cf).pass);
    rec.check("tau_d naturality", 0, {}, seed, compose(cf, tx) == compose(tau_d(y), f.f1));

    const auto big = filler(LNChain{{c, xt}, {x}});
    const auto [t21, t10] = boundary_triangle(big);
    rec.check("boundary triangle maps are chain maps", 0, {}, seed,
              validate_chain_map(t21).pass && validate_chain_map(t10).pass);
    rec.check("boundary triangle faces are complexes", 0, {}, seed,
              validate_complex(face(0, big)).pass && validate_complex(face(1, big)).pass &&
                  validate_complex(face(2, big)).pass);
    if (!ring.is_field()) return;
    rec.check("cone(id) homology is (0,0)", 0, {}, seed,
              homology_dims_2(cone(identity_map(xt))) == std::vector<std::size_t>{0, 0});
    rec.check("boundary triangle homology is (dom x, cod x, cone x)", 0, {}, seed,
              homology_dims_2(face(2, big)) == homology_dims_2(c) &&
                  homology_dims_2(face(1, big)) == homology_dims_2(xt) &&
                  homology_dims_2(face(0, big)) == homology_dims_2(cone(x)));
  });
}

SuiteReport verify_octahedron(const SuiteConfig& cfg) {
  if (!cfg.ring.is_field()) throw PreconditionError("the octahedron suite needs a prime field");
  const Ring ring = cfg.ring;
  return run_trials("octahedron", 0, 0, cfg.trials, cfg.seed,
                    [ring](std::size_t, std::uint64_t seed, Recorder& rec) {
                      const auto a = random_complex(ring, 2, kStrings, kDim, derive_seed(seed, 1));
                      const auto b = random_complex(ring, 2, kStrings, kDim, derive_seed(seed, 2));
                      const auto c = random_complex(ring, 2, kStrings, kDim, derive_seed(seed, 3));
                      const auto f = random_chain_map(a, b, derive_seed(seed, 4));
                      const auto g = random_chain_map(b, c, derive_seed(seed, 5));
                      rec.check("R1 at homology level", 0, {}, seed, check_R1(f, g));
                    });
}

SuiteReport verify_full_strings(const SuiteConfig& cfg) {
  if (!cfg.ring.is_field()) throw PreconditionError("the full string suite needs a prime field");
  const Ring ring = cfg.ring;
  return run_trials("full-strings", 2, std::max<std::size_t>(cfg.n_max, 2), cfg.trials, cfg.seed,
                    [ring](std::size_t period, std::uint64_t seed, Recorder& rec) {
                      Rng rng(seed);
                      PeriodicComplex x = PeriodicComplex::zero(ring, period);
                      const std::size_t count = rng.uniform(1, 4);
                      for (std::size_t s = 0; s < count; ++s)
                        x = direct_sum(x, string_complex(ring, period, rng.uniform(0, period - 1),
                                                         period));
                      std::vector<InvertiblePair> base;
                      for (auto dim : x.dims()) base.push_back(random_invertible(rng, ring, dim));
                      std::vector<Matrix> diffs;
                      for (std::size_t i = 0; i < period; ++i)
                        diffs.push_back(base[(i + 1) % period].m * x.diffs()[i] *
                                        base[i].inverse);
                      const PeriodicComplex y(ring, x.dims(), std::move(diffs));
                      for (std::size_t p = 1; p < period; ++p)
                        for (std::size_t i = 0; i < period; ++i)
                          rec.check("full strings are exact", period,
                                    {static_cast<long long>(p), static_cast<long long>(i)}, seed,
                                    p_homology_dim(y, p, static_cast<long long>(i)) == 0);
                    });
}

SuiteReport verify_group(const SuiteConfig& cfg) {
  const Ops ops = make_ops(cfg.fault);
  const std::size_t K = cfg.n_max;
  std::vector<Recorder> recs(1);
  Recorder& rec = recs[0];
  const std::uint64_t seed = cfg.seed;
  for (const auto& name : group::builtin_names()) {
    const std::string tag = "group " + name + ": ";
    const auto mg = group::builtin_mul_group(name);
    const auto g = group::to_div(mg);
    rec.expect(tag + "L axioms", K, {}, seed, [&] { return group::check_div_axioms(g).pass; });
    rec.expect(tag + "L4 holds", K, {}, seed, [&] { return group::check_L4(g).pass; });
    rec.expect(tag + "recalage simplicial identities", K, {}, seed, [&] {
      const auto failure = group::check_simplicial_set(ops.recalage(g, K));
      if (failure) throw Error(failure->identity + " fails at level " +
                               std::to_string(failure->level) + " on simplex " +
                               std::to_string(failure->simplex));
      return true;
    });
    rec.expect(tag + "recalage round trip", K, {}, seed, [&] {
      const auto back = group::group_from_recalage(ops.recalage(g, K));
      return back.div == g.div && back.e == g.e;
    });
    rec.expect(tag + "mul -> div -> mul round trip", K, {}, seed,
               [&] { return group::to_mul(g) == mg; });
    rec.expect(tag + "div -> mul -> div round trip", K, {}, seed,
               [&] { return group::to_div(group::to_mul(g)) == g; });
    rec.expect(tag + "converted multiplication satisfies G1-G3", K, {}, seed,
               [&] { return group::check_mul_axioms(group::to_mul(g)).pass; });
    rec.expect(tag + "chop of identity is functorial", K, {}, seed, [&] {
      std::vector<std::size_t> id(g.order());
      for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
      return group::verify_chop_functoriality(g, g, id, K).pass;
    });
  }
  rec.expect("chop of z4 -> z2 is functorial", K, {}, seed, [&] {
    return group::verify_chop_functoriality(group::builtin_group("z4"), group::builtin_group("z2"),
                                            {0, 1, 0, 1}, K)
        .pass;
  });
  return aggregate(recs, seed);
}

} // namespace ncx
