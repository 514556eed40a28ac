#include "dgolod/suites.hpp"

#include <chrono>
#include <algorithm>
#include <map>
#include <optional>

#include "dgolod/d_calculus.hpp"
#include "dgolod/error.hpp"
#include "dgolod/golod.hpp"
#include "dgolod/koszul.hpp"
#include "dgolod/poincare.hpp"
#include "dgolod/random.hpp"
#include "dgolod/resolution.hpp"

namespace dgolod {

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  passed = false;
  if (failures.size() < 5) failures.push_back(what);
}

namespace {

std::string str(const MonomialIdeal& a) { return a.to_string(); }

const PolyRing& ring_of(std::size_t n) {
  static const std::vector<PolyRing> rings = [] {
    std::vector<PolyRing> v;
    for (std::size_t k = 1; k <= 6; ++k) v.push_back(PolyRing::standard(k));
    return v;
  }();
  return rings.at(n - 1);
}

/// n in {3, 4}, two to four generators of degree 2 to 4.
std::vector<MonomialIdeal> cycle_instances(std::uint64_t seed, std::size_t count) {
  RandomSource rng(seed);
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    const std::size_t n = rng.coin() ? 3 : 4;
    std::vector<Monomial> g;
    const int k = rng.uniform(2, 4);
    for (int t = 0; t < k; ++t) g.push_back(rng.monomial(n, 2, 4));
    out.emplace_back(ring_of(n), std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1-3: the d-operator

SuiteResult paper_d_example(std::uint64_t) {
  SuiteResult r;
  const PolyRing& s = ring_of(4);
  const Polynomial f = s.term(Monomial{2, 0, 1, 0}) + s.term(Monomial{1, 3, 0, 0}) +
                       s.term(Monomial{0, 2, 3, 0}) + s.term(Monomial{0, 0, 2, 1});
  const std::vector<Polynomial> expect{s.term(Monomial{1, 0, 1, 0}) + s.term(Monomial{0, 3, 0, 0}),
                                       s.term(Monomial{0, 1, 3, 0}), s.term(Monomial{0, 0, 1, 1}),
                                       s.zero()};
  r.instances = 1;
  for (std::size_t k = 0; k < 4; ++k) {
    const Polynomial got = d_op(f, k);
    r.expect(got == expect[k], "d^" + std::to_string(k + 1) + "(f) = " + s.format(got) +
                                   ", expected " + s.format(expect[k]));
  }
  return r;
}

SuiteResult product_rule(std::uint64_t seed) {
  SuiteResult r;
  RandomSource rng(seed);
  for (const Field& field : {Field::rationals(), Field::prime(kDefaultPrime)}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = rng.uniform(1, 5);
      const PolyRing ring = ring_of(n).with_field(field);
      const Polynomial f = rng.element_of_max_ideal(ring, 4, 4);
      const Polynomial g = rng.element_of_max_ideal(ring, 4, 4);
      const std::size_t rv = rng.uniform(0, static_cast<int>(n) - 1);
      ++r.instances;
      const Polynomial drf = d_op(f, rv), drg = d_op(g, rv);
      Polynomial rhs = drf * drg * ring.var(rv);
      for (std::size_t i = rv + 1; i < n; ++i) {
        rhs += (drf * d_op(g, i) + drg * d_op(f, i)) * ring.var(i);
      }
      const std::string tag = " for f = " + ring.format(f) + ", g = " + ring.format(g) + " over " +
                              field.name();
      r.expect(d_op(f * g, rv) == rhs, "product rule at r = " + std::to_string(rv + 1) + tag);
      Polynomial rebuilt = ring.zero();
      for (std::size_t i = 0; i < n; ++i) rebuilt += d_op(f, i) * ring.var(i);
      r.expect(rebuilt == f, "reconstruction" + tag);
    }
  }
  return r;
}

SuiteResult paper_ideal(std::uint64_t) {
  SuiteResult r;
  const PolyRing& s = ring_of(2);
  const Permutation id = Permutation::identity(2), swap = Permutation::parse("2,1", 2);
  const MonomialIdeal i(s, {Monomial{1, 1}, Monomial{0, 2}});
  const MonomialIdeal p(s, {Monomial{1, 1}});
  r.instances = 2;
  r.expect(d_ideal(i, id) == MonomialIdeal(s, {Monomial{0, 1}}), "d(I) = (x2)");
  r.expect(d_ideal(i, swap) == MonomialIdeal::maximal(s), "d_sigma(I) = (x1, x2)");
  r.expect(check_d_sigma_golod(i, id).holds, "I is d-Golod");
  r.expect(!check_d_sigma_golod(i, swap).holds, "I is not d_sigma-Golod for the transposition");
  r.expect(!check_d_sigma_golod(p, id).holds, "(x1x2) is not d-Golod");
  r.expect(!check_d_sigma_golod(p, swap).holds, "(x1x2) is not d_sigma-Golod");
  return r;
}

// ---------------------------------------------------------------------------
// 4-6: cycles

constexpr std::size_t kCycleInstances = 100;

SuiteResult cycle_basis(std::uint64_t seed) {
  SuiteResult r;
  for (const auto& a : cycle_instances(seed, kCycleInstances)) {
    ++r.instances;
    const BasisReport rep = verify_basis(a);
    r.expect(rep.passed(), str(a) + ": " + rep.failure);
    const HomologyReport h = koszul_homology(a);
    std::vector<std::size_t> dims = h.dims;
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    r.expect(dims == betti_numbers(a), str(a) + ": homology dimensions differ from Betti numbers");
    r.expect(h.bound_confirmed, str(a) + ": homology beyond the degree bound");
  }
  return r;
}

SuiteResult cycle_form(std::uint64_t seed) {
  SuiteResult r;
  for (const auto& a : cycle_instances(seed, kCycleInstances)) {
    ++r.instances;
    const FreeComplex c = minimal_resolution(a);
    for (std::size_t i = 1; i <= c.length(); ++i) {
      for (std::size_t j = 0; j < c.ranks[i]; ++j) {
        std::string err;
        try {
          build_chain(c, i, j);
        } catch (const Error& e) {
          err = e.what();
        }
        r.expect(err.empty(), str(a) + ": " + err);
      }
    }
  }
  return r;
}

SuiteResult zero_map(std::uint64_t seed) {
  SuiteResult r;
  RandomSource rng(seed ^ 0x5eedu);
  for (const auto& a : cycle_instances(seed, kCycleInstances)) {
    ++r.instances;
    const std::size_t n = a.nvars();
    std::vector<Permutation> sigmas{Permutation::identity(n)};
    while (sigmas.size() < 5) {
      Permutation s = rng.permutation(n);
      if (std::find(sigmas.begin(), sigmas.end(), s) == sigmas.end()) sigmas.push_back(std::move(s));
    }
    for (const auto& s : sigmas) {
      const ZeroMapReport rep = verify_zero_map(a, s);
      r.expect(rep.passed(), str(a) + " sigma " + s.to_string() + ": " + rep.failure);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// 7: closure properties

constexpr std::size_t kClosureTarget = 100;
constexpr std::size_t kClosureAttempts = 20000;

struct Closure {
  RandomSource rng;
  SuiteResult& r;
  std::map<std::string, std::size_t> hits;

  MonomialIdeal random_ideal(std::size_t n, int gens = 5, int deg = 4) {
    while (true) {
      MonomialIdeal a = rng.monomial_ideal(ring_of(n), gens, deg);
      if (a.is_proper()) return a;
    }
  }

  /// A d_sigma-Golod ideal, or nothing after a few tries.
  std::optional<MonomialIdeal> golod_ideal(std::size_t n, const Permutation& s) {
    for (int t = 0; t < 20; ++t) {
      MonomialIdeal a = rng.coin() ? mi_power(random_ideal(n, 3, 2), 2) : random_ideal(n);
      if (check_d_sigma_golod(a, s).holds) return a;
    }
    return std::nullopt;
  }

  void hit(const std::string& key, bool ok, const std::string& what) {
    ++hits[key];
    r.expect(ok, key + ": " + what);
  }

  bool done() const {
    for (const char* k : {"a", "b", "c", "d", "e", "f", "equivalence"}) {
      auto it = hits.find(k);
      if (it == hits.end() || it->second < kClosureTarget) return false;
    }
    return true;
  }

  void round() {
    const std::size_t n = rng.uniform(2, 4);
    const Permutation s = rng.permutation(n);
    const std::string tag = " sigma " + s.to_string();
    auto a = golod_ideal(n, s);
    auto b = golod_ideal(n, s);
    if (a && b) {
      const std::string ab = str(*a) + ", " + str(*b) + tag;
      hit("a", check_d_sigma_golod(mi_intersect(*a, *b), s).holds &&
                   check_d_sigma_golod(mi_product(*a, *b), s).holds,
          ab);
      const MonomialIdeal sum = mi_sum(*a, *b);
      if (sum.contains(mi_product(d_ideal(*a, s), d_ideal(*b, s)))) {
        hit("b", check_d_sigma_golod(sum, s).holds, ab);
      }
    }
    if (a) {
      const MonomialIdeal bigger = mi_sum(*a, random_ideal(n, 2, 3));
      if (bigger.is_proper()) {
        hit("e", check_d_sigma_golod(mi_product(*a, bigger), s).holds, str(*a) + " in " + str(bigger) + tag);
      }
      const MonomialIdeal closure = integral_closure(*a);
      bool ok = check_d_sigma_golod(closure, s).holds;
      const int k = rng.uniform(2, 3);
      ok = ok && check_strongly_d_golod(integral_closure(mi_power(random_ideal(n, 3, 2), k))).holds;
      hit("f", ok, str(*a) + tag);
    }
    {
      const MonomialIdeal base = random_ideal(n, 3, 2);
      const MonomialIdeal strong = mi_power(base, rng.uniform(2, 3));
      const MonomialIdeal bb = random_ideal(n, 2, 2);
      const MonomialIdeal colon = mi_colon(strong, bb);
      if (check_strongly_d_golod(strong).holds && colon.is_proper() &&
          colon == mi_colon(strong, mi_power(bb, 2))) {
        hit("c", check_strongly_d_golod(colon).holds, str(strong) + " : " + str(bb));
      }
    }
    {
      const MonomialIdeal base = random_ideal(n, 4, 3);
      const int k = rng.uniform(2, 3);
      const MonomialIdeal pw = mi_power(base, k);
      bool ok = check_strongly_d_golod(pw).holds && check_strongly_d_golod(symbolic_power(base, k)).holds;
      const MonomialIdeal sat = mi_saturate(pw, MonomialIdeal::maximal(ring_of(n))).ideal;
      if (sat.is_proper()) ok = ok && check_strongly_d_golod(sat).holds;
      hit("d", ok, str(base) + " k = " + std::to_string(k));
    }
    {
      const MonomialIdeal x = random_ideal(n, 4, 3);
      bool all = true;
      for (const auto& p : Permutation::all(n)) all = all && check_d_sigma_golod(x, p).holds;
      hit("equivalence", check_strongly_d_golod(x).holds == all, str(x));
    }
  }
};

SuiteResult closure(std::uint64_t seed) {
  SuiteResult r;
  Closure c{RandomSource(seed), r, {}};
  std::size_t rounds = 0;
  while (!c.done() && rounds < kClosureAttempts) {
    ++rounds;
    try {
      c.round();
    } catch (const Error& e) {
      r.expect(false, std::string("error: ") + e.what());
    }
  }
  r.instances = rounds;
  for (const auto& [key, count] : c.hits) {
    r.notes.push_back("(" + key + ") " + std::to_string(count) + " instances");
  }
  r.expect(c.done(), "fewer than 100 instances for some property after " +
                         std::to_string(rounds) + " rounds");
  return r;
}

// ---------------------------------------------------------------------------
// 8-11

SuiteResult serre(std::uint64_t seed) {
  SuiteResult r;
  const PolyRing& s2 = ring_of(2);
  const MonomialIdeal sq = mi_power(MonomialIdeal::maximal(s2), 2);
  const GolodEquality g = golod_equality(sq, 8);
  TruncatedSeries pow2(8);
  {
    std::vector<long> c;
    for (int k = 0; k <= 8; ++k) c.push_back(1L << k);
    pow2 = TruncatedSeries(8, c);
  }
  r.expect(g.computed.series == pow2 && g.serre == pow2, "n^2 in two variables: " +
                                                            to_string(g.computed.series) + " vs " +
                                                            to_string(g.serre));
  const MonomialIdeal hyp(ring_of(1), {Monomial{2}});
  const GolodEquality h = golod_equality(hyp, 8);
  const TruncatedSeries ones(8, std::vector<long>(9, 1));
  r.expect(h.computed.series == ones && h.serre == ones, "(x1^2): " + to_string(h.computed.series));
  r.instances = 2;
  RandomSource rng(seed);
  for (int trial = 0; trial < 30; ++trial) {
    const MonomialIdeal a = rng.monomial_ideal(ring_of(rng.uniform(2, 3)), 4, 3);
    if (!a.is_proper()) continue;
    ++r.instances;
    const GolodEquality e = golod_equality(a, 6);
    r.expect(e.leq_everywhere, str(a) + ": " + to_string(e.computed.series) + " exceeds " +
                                   to_string(e.serre));
    r.expect(e.computed.achieved == 6, str(a) + ": stopped at degree " +
                                           std::to_string(e.computed.achieved));
  }
  return r;
}

SuiteResult stretched(std::uint64_t) {
  SuiteResult r;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int s = 1; s <= 3; ++s) {
      for (bool art : {true, false}) {
        ++r.instances;
        const IdealGens gens = stretched_ideal(n, s, art);
        const MonomialIdeal a = MonomialIdeal::from_gens(gens);
        const std::string tag = "n = " + std::to_string(n) + ", s = " + std::to_string(s) +
                                (art ? ", Artinian" : ", not Artinian");
        r.expect(check_d_sigma_golod(a, stretched_order(n)).holds, tag + ": not d_sigma-Golod");
        const RingProfile p = ring_profile(a);
        r.expect(p.artinian == art, tag + ": Artinian flag");
        r.expect(p.stretched, tag + ": not stretched");
        r.expect(p.tau == (art ? n : n - 1), tag + ": tau = " + std::to_string(p.tau));
        if (art) {
          r.expect(p.s == s, tag + ": s = " + std::to_string(p.s.value_or(-1)));
          const TruncatedSeries got = poincare_k(a, 6, 6).series;
          r.expect(got == sally_series(n, n, 6), tag + ": " + to_string(got));
        }
      }
    }
  }
  return r;
}

SuiteResult sum_family(std::uint64_t seed) {
  SuiteResult r;
  RandomSource rng(seed);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.uniform(2, 4);
    const PolyRing& ring = ring_of(n);
    std::vector<MonomialIdeal> fam;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Monomial> g;
      const int k = rng.uniform(0, 2);
      for (int t = 0; t < k; ++t) {
        Monomial m;
        const int d = rng.uniform(0, 2);
        for (int e = 0; e < d; ++e) {
          const std::size_t v = rng.uniform(static_cast<int>(i), static_cast<int>(n) - 1);
          m.set(v, m[v] + 1);
        }
        g.push_back(m);
      }
      any = any || !g.empty();
      fam.emplace_back(ring, std::move(g));
    }
    if (!any) fam[0] = MonomialIdeal::unit(ring);
    ++r.instances;
    for (int k : {2, 3}) {
      const SumFamily sf = sum_family_ideal(fam, k);
      r.expect(sf.cert.holds && recheck(sf.cert),
               "J = " + MonomialIdeal::from_gens(sf.j).to_string() + ", k = " + std::to_string(k));
    }
  }
  return r;
}

SuiteResult negative_controls(std::uint64_t) {
  SuiteResult r;
  const PolyRing& s3 = ring_of(3);
  const MonomialIdeal path(s3, {Monomial{1, 1, 0}, Monomial{0, 1, 1}});
  const FreeComplex good = minimal_resolution(path);
  r.expect(validate_complex(good, path.to_gens()).passed(), "the uncorrupted resolution fails");

  FreeComplex flipped = good;
  flipped.diffs[1].set(0, 0, -good.diff(2).at(0, 0));
  FreeComplex wrong_entry = good;
  // delta^2 stays zero but the cokernel becomes S/(x1x2, x2x3^2).
  wrong_entry.diffs[0].set(0, 1, s3.term(Monomial{0, 1, 2}));
  wrong_entry.diffs[1].set(0, 0, s3.term(Monomial{0, 0, 2}));
  FreeComplex truncated = good;
  truncated.diffs.pop_back();
  truncated.ranks.pop_back();
  for (auto* c : {&flipped, &wrong_entry, &truncated}) infer_gradings(*c);
  r.expect(!validate_complex(flipped, path.to_gens()).passed(), "sign-flipped delta_2 passes");
  r.expect(!validate_complex(wrong_entry, path.to_gens()).passed(), "altered delta_1 passes");
  r.expect(!validate_complex(truncated, path.to_gens()).passed(), "truncated resolution passes");

  const MonomialIdeal triangle(s3, {Monomial{1, 1, 0}, Monomial{1, 0, 1}, Monomial{0, 1, 1}});

  bool thrown = false;
  try {
    build_cycle(taylor_complex(triangle), 3, 0);
  } catch (const NonMinimalResolution&) {
    thrown = true;
  }
  r.expect(thrown, "non-minimal Taylor input accepted by build_cycle");

  const PolyRing& s2 = ring_of(2);
  const MonomialIdeal i(s2, {Monomial{1, 1}, Monomial{0, 2}});
  const GolodCertificate c = check_strongly_d_golod(i);
  r.expect(!c.holds, "(x1x2, x2^2) passes the strong check");
  r.expect(c.violation && c.violation->product == s2.term(Monomial{2, 0}),
           "witness is not x1^2");
  r.instances = 4;
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& all_suites() {
  static const std::vector<SuiteInfo> suites{
      {1, "paper-d-example", "d-operator values of the worked example", paper_d_example},
      {2, "product-rule", "product rule and reconstruction over Q and F_p", product_rule},
      {3, "paper-ideal", "d(I), d_sigma(I) and Golod checks for (x1x2, x2^2) and (x1x2)", paper_ideal},
      {4, "cycle-basis", "cycles z_ij give a basis of Koszul homology", cycle_basis},
      {5, "cycle-form", "lifting identities hold exactly over S", cycle_form},
      {6, "zero-map", "cycle coefficients lie in d_sigma(I)", zero_map},
      {7, "closure", "closure properties and the strong criterion", closure},
      {8, "serre", "Poincare series against the Serre bound", serre},
      {9, "stretched", "stretched fixtures: certificates, profiles, Sally series", stretched},
      {10, "sum-family", "d-Golodness of J^k for sum families", sum_family},
      {11, "negative-controls", "corrupted and non-minimal inputs are rejected", negative_controls},
  };
  return suites;
}

const SuiteInfo& find_suite(const std::string& id) {
  for (const auto& s : all_suites()) {
    if (s.id == id || std::to_string(s.criterion) == id) return s;
  }
  throw PreconditionError("unknown suite '" + id + "'");
}

SuiteResult run_suite(const SuiteInfo& info, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  try {
    r = info.run(seed);
  } catch (const Error& e) {
    r.expect(false, std::string("error: ") + e.what());
  }
  r.id = info.id;
  r.title = info.title;
  r.seed = seed;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace dgolod
