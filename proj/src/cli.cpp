#include "dgolod/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgolod/error.hpp"
#include "dgolod/golod.hpp"
#include "dgolod/koszul.hpp"
#include "dgolod/parse.hpp"
#include "dgolod/poincare.hpp"
#include "dgolod/resolution.hpp"
#include "dgolod/suites.hpp"

namespace dgolod {

namespace {

using json = nlohmann::json;

/// A failed command-line request (bad option combination, unreadable file).
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  std::string field;
  std::string file;
  std::string perm;
  std::string mode;
  std::string what;
  std::string op;
  std::string with;
  std::string complex;
  std::string name;
  int i = 0;
  int k = 2;
  int trunc = kDefaultTrunc;
  int hmax = -1;
  int degree_bound = -1;
  bool serre = false;
  bool golod_eq = false;
  bool profile = false;
  bool print_complex = false;
};

struct Context {
  Options opt;
  std::ostream& out;
  std::ostream& err;
  json report;
  std::ostringstream text;

  void check(const std::string& name, bool passed, const std::string& details = "") {
    report["checks"].push_back({{"name", name}, {"passed", passed}, {"details", details}});
  }
  void progress(const std::string& msg) const { err << "[dgolod] " << msg << "\n"; }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::optional<Field> field_option(const Options& opt) {
  if (!opt.field.empty()) return Field::parse(opt.field);
  return std::nullopt;
}

/// Field for rings the tool creates itself: --field, then DGOLOD_FIELD, then Q.
Field default_field(const Options& opt) {
  if (!opt.field.empty()) return Field::parse(opt.field);
  if (const char* env = std::getenv("DGOLOD_FIELD"); env && *env) return Field::parse(env);
  return Field::rationals();
}

std::size_t thread_count() {
  if (const char* env = std::getenv("DGOLOD_THREADS"); env && *env) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError("DGOLOD_THREADS must be a positive integer");
    }
  }
  return 1;
}

IdealFile load(Context& ctx, const std::string& path) {
  IdealFile f = parse_ideal_file(read_file(path), field_option(ctx.opt));
  ctx.report["inputs"]["file"] = path;
  ctx.report["inputs"]["ideal_file"] = format_ideal_file(f);
  return f;
}

std::vector<std::string> poly_strings(const PolyRing& ring, const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(ring.format(p));
  return out;
}

std::vector<std::string> ideal_strings(const MonomialIdeal& a) {
  std::vector<std::string> out;
  for (const auto& g : a.gens()) out.push_back(a.ring().format(g));
  return out;
}

json series_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (const auto& c : s.coeffs()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

Permutation pick_perm(const Context& ctx, const IdealFile& f, bool required) {
  const std::size_t n = f.ring.nvars();
  if (!ctx.opt.perm.empty()) return Permutation::parse(ctx.opt.perm, n);
  if (f.perm) return *f.perm;
  if (required) throw UsageError("this mode needs --perm or a 'perm' header");
  return Permutation::identity(n);
}

MonomialIdeal require_monomial(const IdealFile& f, const std::string& what) {
  if (!f.ideal.is_monomial()) {
    throw Unsupported(what + " needs a monomial ideal; supply a resolution with --complex where supported");
  }
  return MonomialIdeal::from_gens(f.ideal);
}

FreeComplex resolution_for(Context& ctx, const IdealFile& f) {
  if (!ctx.opt.complex.empty()) {
    ctx.report["inputs"]["complex_file"] = ctx.opt.complex;
    return parse_complex(read_file(ctx.opt.complex), f.ring);
  }
  return minimal_resolution(require_monomial(f, "computing a resolution"));
}

std::string wedge_text(const PolyRing& ring, std::uint32_t mask) {
  std::string s;
  for (std::size_t r = 0; r < ring.nvars(); ++r) {
    if (mask & (1u << r)) s += "d" + ring.names()[r];
  }
  return s;
}

json wedge_json(std::uint32_t mask) {
  json arr = json::array();
  for (std::size_t r = 0; r < 32; ++r) {
    if (mask & (1u << r)) arr.push_back(r + 1);
  }
  return arr;
}

json violation_json(const PolyRing& ring, const std::optional<Violation>& v) {
  if (!v) return nullptr;
  json j{{"left", ring.format(v->left)},
         {"right", ring.format(v->right)},
         {"product", ring.format(v->product)},
         {"normal_form", ring.format(v->normal_form)}};
  if (v->divided_vars) {
    j["divided_vars"] = {v->divided_vars->first + 1, v->divided_vars->second + 1};
  } else {
    j["divided_vars"] = nullptr;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_d_ideal(Context& ctx) {
  const IdealFile f = load(ctx, ctx.opt.file);
  const Permutation s = pick_perm(ctx, f, false);
  std::vector<std::string> gens;
  bool unit;
  if (f.ideal.is_monomial()) {
    const MonomialIdeal d = d_ideal(MonomialIdeal::from_gens(f.ideal), s);
    gens = ideal_strings(d);
    unit = d.is_unit();
  } else {
    const IdealGens d = d_ideal(f.ideal, s);
    gens = poly_strings(f.ring, d.gens());
    unit = d.has_unit_generator();
  }
  ctx.report["results"] = {{"perm", s.to_string()}, {"generators", gens}, {"unit", unit}};
  ctx.text << "d_sigma(I) for sigma = " << s.to_string() << ":\n";
  for (const auto& g : gens) ctx.text << g << "\n";
  return kExitOk;
}

int cmd_check(Context& ctx) {
  const IdealFile f = load(ctx, ctx.opt.file);
  const std::string& mode = ctx.opt.mode;
  GolodCertificate cert = [&] {
    if (mode == "d") return check_d_sigma_golod(f.ideal, Permutation::identity(f.ring.nvars()));
    if (mode == "d-sigma") return check_d_sigma_golod(f.ideal, pick_perm(ctx, f, true));
    if (mode == "strong") {
      ctx.progress("checking all permutations");
      return check_strongly_d_golod(f.ideal);
    }
    throw UsageError("--mode must be d, d-sigma or strong");
  }();
  const bool confirmed = recheck(cert);
  const PolyRing& ring = f.ring;
  json res{{"mode", mode},
           {"perm", cert.sigma ? json(cert.sigma->to_string()) : json("all")},
           {"holds", cert.holds},
           {"method", cert.method},
           {"d_sigma_generators", poly_strings(ring, cert.d_sigma_gens)},
           {"violation", violation_json(ring, cert.violation)},
           {"failing_perm", cert.failing_sigma ? json(cert.failing_sigma->to_string()) : json(nullptr)},
           {"notes", cert.notes}};
  ctx.report["results"] = res;
  ctx.check("certificate re-checked from scratch", confirmed);
  const std::string label = mode == "d" ? "d-Golod" : mode == "d-sigma" ? "d_sigma-Golod" : "strongly d-Golod";
  ctx.text << label << ": " << (cert.holds ? "yes" : "no") << " (" << cert.method << ")\n";
  if (cert.sigma) ctx.text << "sigma: " << cert.sigma->to_string() << "\n";
  ctx.text << "d_sigma(I) generators: ";
  for (std::size_t a = 0; a < cert.d_sigma_gens.size(); ++a) {
    ctx.text << (a ? ", " : "") << ring.format(cert.d_sigma_gens[a]);
  }
  ctx.text << "\n";
  if (cert.failing_sigma) ctx.text << "failing permutation: " << cert.failing_sigma->to_string() << "\n";
  if (cert.violation) {
    const Violation& v = *cert.violation;
    ctx.text << "witness: " << ring.format(v.product) << " not in I";
    if (v.divided_vars) {
      ctx.text << " (" << ring.format(v.left) << " * " << ring.format(v.right) << " / ("
               << ring.names()[v.divided_vars->first] << "*" << ring.names()[v.divided_vars->second]
               << "))";
    } else {
      ctx.text << " (" << ring.format(v.left) << " * " << ring.format(v.right) << ")";
    }
    ctx.text << ", normal form " << ring.format(v.normal_form) << "\n";
  }
  for (const auto& note : cert.notes) ctx.text << "note: " << note << "\n";
  if (!confirmed) throw InvariantViolation("certificate failed its independent re-check");
  return cert.holds ? kExitOk : kExitCheckFailed;
}

int cmd_betti(Context& ctx) {
  const IdealFile f = load(ctx, ctx.opt.file);
  const MonomialIdeal a = require_monomial(f, "betti");
  if (!a.is_proper()) throw PreconditionError("betti needs a proper nonzero ideal");
  const FreeComplex taylor = taylor_complex(a);
  const FreeComplex c = minimalize(taylor);
  const ValidationReport v = validate_complex(c, f.ideal);
  ctx.report["results"] = {{"betti", c.ranks},
                           {"taylor_ranks", taylor.ranks},
                           {"exactness_scope", v.exactness_scope}};
  if (ctx.opt.print_complex) ctx.report["results"]["complex"] = format_complex(c);
  ctx.check("delta^2 = 0", v.delta_squared_zero);
  ctx.check("cokernel of delta_1 is S/I", v.cokernel_ok);
  ctx.check("exact (" + v.exactness_scope + ")", v.exact);
  ctx.check("minimal", v.minimality.minimal);
  ctx.text << "betti:";
  for (auto b : c.ranks) ctx.text << " " << b;
  ctx.text << "\n";
  if (ctx.opt.print_complex) ctx.text << format_complex(c);
  if (!v.passed()) throw InvariantViolation("resolution failed validation: " + v.failure);
  return kExitOk;
}

std::optional<Permutation> optional_perm(const Context& ctx, const IdealFile& f) {
  if (ctx.opt.perm.empty() && !f.perm) return std::nullopt;
  return pick_perm(ctx, f, false);
}

int cmd_koszul_cycles(Context& ctx) {
  const IdealFile f = load(ctx, ctx.opt.file);
  const FreeComplex c = resolution_for(ctx, f);
  const auto sigma = optional_perm(ctx, f);
  json cycles = json::array();
  std::size_t lo = 1, hi = c.length();
  if (ctx.opt.i > 0) {
    if (static_cast<std::size_t>(ctx.opt.i) > c.length()) {
      throw UsageError("--i exceeds the length " + std::to_string(c.length()) + " of the resolution");
    }
    lo = hi = ctx.opt.i;
  }
  for (std::size_t i = lo; i <= hi; ++i) {
    for (std::size_t j = 0; j < c.ranks[i]; ++j) {
      const KoszulChain chain = build_chain(c, i, j, sigma);
      json terms = json::array();
      for (const auto& [mask, coef] : chain.cycle().coeffs()) {
        terms.push_back({{"wedge", wedge_json(mask)}, {"coefficient", f.ring.format(coef)}});
      }
      cycles.push_back({{"i", i}, {"j", j + 1}, {"text", format_cycle(chain)}, {"terms", terms}});
      ctx.text << format_cycle(chain) << "\n";
    }
  }
  ctx.report["results"] = {{"perm", sigma ? json(sigma->to_string()) : json(nullptr)},
                           {"betti", c.ranks},
                           {"cycles", cycles}};
  return kExitOk;
}

int cmd_verify(Context& ctx) {
  const IdealFile f = load(ctx, ctx.opt.file);
  const FreeComplex c = resolution_for(ctx, f);
  const std::string& what = ctx.opt.what;
  bool ok = true;
  if (what == "chain") {
    const auto sigma = optional_perm(ctx, f);
    json entries = json::array();
    for (std::size_t i = 1; i <= c.length(); ++i) {
      for (std::size_t j = 0; j < c.ranks[i]; ++j) {
        std::string failure;
        try {
          build_chain(c, i, j, sigma);
        } catch (const InvariantViolation& e) {
          failure = e.what();
        }
        const std::string name = "z[" + std::to_string(i) + "][" + std::to_string(j + 1) + "]";
        ctx.check(name + " lifting identities and cycle condition", failure.empty(), failure);
        entries.push_back({{"i", i}, {"j", j + 1}, {"passed", failure.empty()}});
        ctx.text << name << ": " << (failure.empty() ? "identities hold" : failure) << "\n";
        ok = ok && failure.empty();
      }
    }
    ctx.report["results"] = {{"what", what},
                             {"perm", sigma ? json(sigma->to_string()) : json(nullptr)},
                             {"passed", ok},
                             {"chains", entries}};
  } else if (what == "basis") {
    const BasisReport rep = verify_basis(c, f.ideal);
    ok = rep.passed();
    ctx.report["results"] = {{"what", what},
                             {"passed", ok},
                             {"betti", rep.betti},
                             {"homology_dims", rep.homology_dims},
                             {"failure", rep.failure}};
    ctx.check("cycles, independence and counts", ok, rep.failure);
    ctx.text << "betti:";
    for (auto b : rep.betti) ctx.text << " " << b;
    ctx.text << "\nhomology:";
    for (auto b : rep.homology_dims) ctx.text << " " << b;
    ctx.text << "\n" << (ok ? "basis verified" : "FAILED: " + rep.failure) << "\n";
  } else if (what == "zero-map") {
    const Permutation s = pick_perm(ctx, f, false);
    const ZeroMapReport rep = verify_zero_map(c, f.ideal, s);
    ok = rep.passed();
    json entries = json::array();
    for (const auto& e : rep.entries) {
      entries.push_back({{"i", e.i},
                         {"j", e.j + 1},
                         {"wedge", wedge_json(e.mask)},
                         {"coefficient", f.ring.format(e.coefficient)},
                         {"member", e.member},
                         {"witness", e.witness}});
      ctx.text << "z[" << e.i << "][" << e.j + 1 << "] " << wedge_text(f.ring, e.mask) << ": "
               << f.ring.format(e.coefficient) << (e.member ? " in" : " NOT in") << " d_sigma(I) ["
               << e.witness << "]\n";
    }
    ctx.report["results"] = {{"what", what},
                             {"perm", s.to_string()},
                             {"passed", ok},
                             {"entries", entries},
                             {"failure", rep.failure}};
    ctx.check("every cycle coefficient lies in d_sigma(I)", ok, rep.failure);
    ctx.text << (ok ? "zero map verified" : "FAILED: " + rep.failure) << "\n";
  } else {
    throw UsageError("--what must be chain, basis or zero-map");
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_poincare(Context& ctx) {
  const IdealFile f = load(ctx, ctx.opt.file);
  const QuotientRing r(f.ideal);
  const int n = ctx.opt.trunc;
  const int hmax = ctx.opt.hmax >= 0 ? ctx.opt.hmax : n;
  std::optional<int> bound;
  if (ctx.opt.degree_bound >= 0) bound = ctx.opt.degree_bound;
  ctx.progress("resolving K over R up to homological degree " + std::to_string(std::min(n, hmax)));
  const PoincareResult p = poincare_k(r, n, hmax, bound);
  json res{{"series", series_json(p.series)},
           {"text", to_string(p.series)},
           {"requested", p.requested},
           {"achieved", p.achieved},
           {"artinian", p.artinian},
           {"degree_bound", p.degree_bound ? json(*p.degree_bound) : json(nullptr)},
           {"note", p.note}};
  ctx.text << "P_K(t) = " << to_string(p.series) << "\n";
  if (p.degree_bound) ctx.text << "internal degrees <= " << *p.degree_bound << " (R is not Artinian)\n";
  if (!p.note.empty()) ctx.text << "note: " << p.note << "\n";
  int code = kExitOk;
  if (ctx.opt.serre || ctx.opt.golod_eq) {
    const GolodEquality g = golod_equality(r, n);
    res["betti"] = g.betti;
    res["serre"] = series_json(g.serre);
    ctx.text << "Serre bound = " << to_string(g.serre) << "\n";
    ctx.check("coefficientwise P_K <= Serre bound", g.leq_everywhere);
    if (!g.leq_everywhere) code = kExitCheckFailed;
    if (ctx.opt.golod_eq) {
      res["golod_equality"] = {{"equal", g.equal},
                               {"equal_up_to", g.equal_up_to},
                               {"leq_everywhere", g.leq_everywhere},
                               {"summary", g.summary}};
      ctx.text << g.summary << "\n";
      if (!g.equal) code = kExitCheckFailed;
    }
  }
  if (ctx.opt.profile) {
    const RingProfile pr = ring_profile(r);
    res["profile"] = {{"n", pr.n},
                      {"artinian", pr.artinian},
                      {"tau", pr.tau},
                      {"s", pr.s ? json(*pr.s) : json(nullptr)},
                      {"stretched", pr.stretched},
                      {"degenerate", pr.degenerate},
                      {"tau_degree_bound", pr.tau_degree_bound ? json(*pr.tau_degree_bound) : json(nullptr)},
                      {"socle_by_degree", pr.socle_by_degree},
                      {"hilbert", series_json(hilbert_series(r, n))}};
    ctx.text << "n = " << pr.n << ", artinian = " << (pr.artinian ? "yes" : "no") << ", tau = " << pr.tau;
    if (pr.s) ctx.text << ", s = " << *pr.s;
    ctx.text << ", stretched = " << (pr.stretched ? "yes" : "no") << (pr.degenerate ? " (m^2 = 0)" : "")
             << "\nH_R(t) = " << to_string(hilbert_series(r, n)) << "\n";
  }
  ctx.report["results"] = res;
  return code;
}

void print_ideal(Context& ctx, const MonomialIdeal& a) {
  if (a.is_zero()) {
    ctx.text << "zero ideal\n";
    return;
  }
  if (a.is_unit()) {
    ctx.text << "unit ideal\n";
    return;
  }
  ctx.text << format_ideal_file(IdealFile{a.ring(), a.to_gens(), std::nullopt, std::nullopt});
}

int cmd_ops(Context& ctx) {
  const IdealFile f = load(ctx, ctx.opt.file);
  const MonomialIdeal a = require_monomial(f, "ops");
  const std::string& op = ctx.opt.op;
  const int k = ctx.opt.k;
  auto other = [&]() -> MonomialIdeal {
    if (ctx.opt.with.empty()) throw UsageError("--op " + op + " needs --with FILE2");
    IdealFile g = parse_ideal_file(read_file(ctx.opt.with), field_option(ctx.opt));
    ctx.report["inputs"]["with_file"] = ctx.opt.with;
    if (!(g.ring == f.ring)) throw UsageError("--with file declares a different ring");
    return require_monomial(g, "ops");
  };
  json res{{"op", op}};
  std::optional<MonomialIdeal> result;
  if (op == "power") {
    if (k < 1) throw UsageError("--k must be at least 1");
    result = mi_power(a, k);
    res["k"] = k;
  } else if (op == "symbolic") {
    if (k < 1) throw UsageError("--k must be at least 1");
    result = symbolic_power(a, k);
    res["k"] = k;
  } else if (op == "saturate") {
    const MonomialIdeal b = ctx.opt.with.empty() ? MonomialIdeal::maximal(f.ring) : other();
    const Saturation s = mi_saturate(a, b);
    result = s.ideal;
    res["stabilization"] = s.stabilization;
  } else if (op == "colon") {
    result = mi_colon(a, other());
  } else if (op == "intersect") {
    result = mi_intersect(a, other());
  } else if (op == "sum") {
    result = mi_sum(a, other());
  } else if (op == "product") {
    result = mi_product(a, other());
  } else if (op == "closure") {
    result = integral_closure(a);
  } else if (op == "decompose") {
    json comps = json::array();
    for (const auto& q : irreducible_decomposition(a)) {
      comps.push_back(ideal_strings(q));
      ctx.text << q.to_string() << "\n";
    }
    res["components"] = comps;
  } else if (op == "primes") {
    json primes = json::array();
    for (const auto& p : associated_primes(a)) {
      json vars = json::array();
      std::string text;
      for (std::size_t v = 0; v < f.ring.nvars(); ++v) {
        if (p.vars & (1u << v)) {
          vars.push_back(f.ring.names()[v]);
          text += (text.empty() ? "" : ", ") + f.ring.names()[v];
        }
      }
      primes.push_back({{"vars", vars}, {"minimal", p.minimal}});
      ctx.text << "(" << text << ")" << (p.minimal ? "" : " embedded") << "\n";
    }
    res["primes"] = primes;
  } else {
    throw UsageError("unknown --op '" + op + "'");
  }
  if (result) {
    res["result"] = result->is_unit() ? std::vector<std::string>{"1"} : ideal_strings(*result);
    res["unit"] = result->is_unit();
    print_ideal(ctx, *result);
  }
  ctx.report["results"] = res;
  return kExitOk;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("expected an integer for " + what + ", got '" + s + "'");
  }
}

int cmd_fixtures(Context& ctx) {
  const std::string& name = ctx.opt.name;
  const Field field = default_field(ctx.opt);
  json res{{"name", name}};
  if (name == "paper-d-example") {
    const PolyRing r = PolyRing::standard(4, field);
    const Polynomial f = parse_polynomial("x1^2*x3 + x1*x2^3 + x2^2*x3^3 + x3^2*x4", r);
    json ds = json::array();
    ctx.text << "f = " << r.format(f) << "\n";
    for (std::size_t k = 0; k < 4; ++k) {
      const Polynomial d = d_op(f, k);
      ds.push_back(r.format(d));
      ctx.text << "d^" << k + 1 << "(f) = " << r.format(d) << "\n";
    }
    res["f"] = r.format(f);
    res["d"] = ds;
  } else if (name == "paper-ideal") {
    const PolyRing r = PolyRing::standard(2, field);
    const IdealFile file{r, IdealGens(r, {parse_polynomial("x1*x2", r), parse_polynomial("x2^2", r)}),
                         std::nullopt, std::nullopt};
    res["ideal_file"] = format_ideal_file(file);
    res["generators"] = poly_strings(r, file.ideal.gens());
    ctx.text << format_ideal_file(file);
  } else if (name.rfind("stretched:", 0) == 0) {
    const auto parts = split(name.substr(10), ',');
    if (parts.size() != 3 || (parts[2] != "art" && parts[2] != "open")) {
      throw UsageError("expected stretched:N,S,art or stretched:N,S,open");
    }
    const int n = parse_int(parts[0], "N"), s = parse_int(parts[1], "S");
    if (n < 2 || s < 1) throw UsageError("stretched fixtures need N >= 2 and S >= 1");
    const IdealGens g = stretched_ideal(n, s, parts[2] == "art");
    const PolyRing r = g.ring().with_field(field);
    std::vector<Polynomial> gens;
    for (const auto& p : g.gens()) gens.push_back(parse_polynomial(g.ring().format(p), r));
    const IdealFile file{r, IdealGens(r, gens), std::nullopt, stretched_order(n)};
    res["ideal_file"] = format_ideal_file(file);
    res["generators"] = poly_strings(r, gens);
    res["perm"] = stretched_order(n).to_string();
    ctx.text << format_ideal_file(file);
  } else if (name.rfind("sum-family:", 0) == 0) {
    const auto head_body = split(name.substr(11), ':');
    if (head_body.size() != 2) throw UsageError("expected sum-family:N,K:G1|G2|...|GN");
    const auto head = split(head_body[0], ',');
    if (head.size() != 2) throw UsageError("expected sum-family:N,K:...");
    const int n = parse_int(head[0], "N"), k = parse_int(head[1], "K");
    if (n < 1 || n > static_cast<int>(kMaxVars)) throw UsageError("N out of range");
    const PolyRing r = PolyRing::standard(n, field);
    const auto groups = split(head_body[1], '|');
    if (groups.size() != static_cast<std::size_t>(n)) {
      throw UsageError("sum-family needs exactly N '|'-separated families");
    }
    std::vector<std::vector<Polynomial>> fams;
    for (const auto& grp : groups) {
      std::vector<Polynomial> fam;
      if (!grp.empty()) {
        for (const auto& g : split(grp, ',')) fam.push_back(parse_polynomial(g, r));
      }
      fams.push_back(std::move(fam));
    }
    const SumFamily sf = sum_family_ideal(r, fams, k);
    const IdealFile file{r, sf.power, std::nullopt, Permutation::identity(n)};
    res["j"] = poly_strings(r, sf.j.gens());
    res["k"] = k;
    res["generators"] = poly_strings(r, sf.power.gens());
    res["ideal_file"] = format_ideal_file(file);
    res["d_golod"] = sf.cert.holds;
    ctx.check("J^k is d-Golod", sf.cert.holds);
    ctx.text << "# J = (";
    for (std::size_t a = 0; a < sf.j.gens().size(); ++a) ctx.text << (a ? ", " : "") << r.format(sf.j.gens()[a]);
    ctx.text << "), J^" << k << " is " << (sf.cert.holds ? "" : "NOT ") << "d-Golod\n"
             << format_ideal_file(file);
    ctx.report["results"] = res;
    return sf.cert.holds ? kExitOk : kExitCheckFailed;
  } else {
    throw UsageError("unknown fixture '" + name + "'");
  }
  ctx.report["results"] = res;
  return kExitOk;
}

int cmd_suite(Context& ctx) {
  std::vector<const SuiteInfo*> chosen;
  if (ctx.opt.name.empty() || ctx.opt.name == "all") {
    for (const auto& s : all_suites()) chosen.push_back(&s);
  } else {
    chosen.push_back(&find_suite(ctx.opt.name));
  }
  json suites = json::array();
  bool ok = true;
  for (const SuiteInfo* info : chosen) {
    ctx.progress("suite " + info->id);
    const SuiteResult r = run_suite(*info, ctx.opt.seed);
    suites.push_back({{"criterion", info->criterion},
                      {"id", r.id},
                      {"title", r.title},
                      {"passed", r.passed},
                      {"instances", r.instances},
                      {"checks", r.checks},
                      {"failures", r.failures},
                      {"notes", r.notes}});
    ctx.report["timings"]["suites"][r.id] = r.seconds;
    ctx.check(r.id, r.passed, r.failures.empty() ? "" : r.failures.front());
    ctx.text << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.instances << " instances, "
             << r.checks << " checks\n";
    for (const auto& note : r.notes) ctx.text << "  " << note << "\n";
    for (const auto& fl : r.failures) ctx.text << "  failed: " << fl << "\n";
    ok = ok && r.passed;
  }
  ctx.report["results"] = {{"suites", suites}, {"passed", ok}};
  return ok ? kExitOk : kExitCheckFailed;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx{{}, out, err, json::object(), {}};
  Options& o = ctx.opt;

  CLI::App app{"Exact d-operator calculus, Koszul cycles and Golod checks for polynomial ideals",
               "dgolod"};
  app.set_version_flag("--version", std::string("dgolod ") + kToolVersion);
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.add_option("--seed", o.seed, "Seed for randomized suites");
  app.add_option("--field", o.field, "Override the field (Q or F<p>)");

  auto* d_ideal_cmd = app.add_subcommand("d-ideal", "Generators of d_sigma(I)");
  d_ideal_cmd->add_option("FILE", o.file, "Ideal file ('-' for stdin)")->required();
  d_ideal_cmd->add_option("--perm", o.perm, "Permutation images, e.g. 2,1,3, or 'reverse'");

  auto* check_cmd = app.add_subcommand("check", "d-Golod, d_sigma-Golod or strongly d-Golod");
  check_cmd->add_option("FILE", o.file)->required();
  check_cmd->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"d", "d-sigma", "strong"}));
  check_cmd->add_option("--perm", o.perm);

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers from the minimalized Taylor complex");
  betti_cmd->add_option("FILE", o.file)->required();
  betti_cmd->add_flag("--print-complex", o.print_complex, "Also print the minimal resolution");

  auto* cycles_cmd = app.add_subcommand("koszul-cycles", "The cycles z_ij");
  cycles_cmd->add_option("FILE", o.file)->required();
  cycles_cmd->add_option("--i", o.i, "Only this homological degree")->check(CLI::PositiveNumber);
  cycles_cmd->add_option("--perm", o.perm, "Use d_sigma coefficients");
  cycles_cmd->add_option("--complex", o.complex, "Minimal resolution file (non-monomial ideals)");

  auto* verify_cmd = app.add_subcommand("verify", "Chain identities, homology basis or zero map");
  verify_cmd->add_option("FILE", o.file)->required();
  verify_cmd->add_option("--what", o.what)->required()->check(CLI::IsMember({"chain", "basis", "zero-map"}));
  verify_cmd->add_option("--perm", o.perm);
  verify_cmd->add_option("--complex", o.complex);

  auto* poincare_cmd = app.add_subcommand("poincare", "Truncated Poincare series of K over R");
  poincare_cmd->add_option("FILE", o.file)->required();
  poincare_cmd->add_option("--trunc", o.trunc, "Truncation degree N")->check(CLI::NonNegativeNumber);
  poincare_cmd->add_option("--hmax", o.hmax, "Largest homological degree (default N)")
      ->check(CLI::NonNegativeNumber);
  poincare_cmd->add_option("--degree-bound", o.degree_bound, "Internal degree bound (non-Artinian R)")
      ->check(CLI::NonNegativeNumber);
  poincare_cmd->add_flag("--serre", o.serre, "Also print the Serre bound");
  poincare_cmd->add_flag("--golod-eq", o.golod_eq, "Compare with the Serre bound");
  poincare_cmd->add_flag("--profile", o.profile, "Socle dimension, top degree, stretchedness");

  auto* ops_cmd = app.add_subcommand("ops", "Monomial ideal operations");
  ops_cmd->add_option("FILE", o.file)->required();
  ops_cmd->add_option("--op", o.op)->required()->check(CLI::IsMember(
      {"power", "symbolic", "saturate", "colon", "intersect", "closure", "sum", "product", "decompose", "primes"}));
  ops_cmd->add_option("--k", o.k, "Exponent for power and symbolic");
  ops_cmd->add_option("--with", o.with, "Second ideal file");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in examples");
  fixtures_cmd->add_option("--name", o.name, "paper-d-example | paper-ideal | stretched:N,S,art|open | "
                                              "sum-family:N,K:G1|...|GN")
      ->required();

  auto* suite_cmd = app.add_subcommand("suite", "Run the seeded property suites");
  suite_cmd->add_option("--name", o.name, "Suite id or criterion number (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dgolod: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  json& rep = ctx.report;
  rep["schema"] = "dgolod-report";
  rep["schema_version"] = kReportSchemaVersion;
  rep["tool_version"] = kToolVersion;
  rep["command"] = sub->get_name();
  rep["seed"] = o.seed;
  rep["inputs"] = json::object();
  rep["results"] = json::object();
  rep["checks"] = json::array();
  rep["timings"] = json::object();

  int code = kExitOk;
  try {
    rep["threads"] = thread_count();
    if (!o.field.empty()) rep["inputs"]["field"] = o.field;
    for (const auto* opt : sub->get_options()) {
      if (opt->get_name() == "--help" || opt->count() == 0) continue;
      std::string key = opt->get_name();
      if (key.rfind("--", 0) == 0) key = key.substr(2);
      rep["inputs"]["options"][key] = opt->as<std::string>();
    }
    const std::string name = sub->get_name();
    if (name == "d-ideal") code = cmd_d_ideal(ctx);
    else if (name == "check") code = cmd_check(ctx);
    else if (name == "betti") code = cmd_betti(ctx);
    else if (name == "koszul-cycles") code = cmd_koszul_cycles(ctx);
    else if (name == "verify") code = cmd_verify(ctx);
    else if (name == "poincare") code = cmd_poincare(ctx);
    else if (name == "ops") code = cmd_ops(ctx);
    else if (name == "fixtures") code = cmd_fixtures(ctx);
    else code = cmd_suite(ctx);
  } catch (const ParseError& e) {
    code = kExitUsage;
    rep["error"] = error_json("parse", e.what());
    rep["error"]["line"] = e.line();
    rep["error"]["column"] = e.column();
  } catch (const UsageError& e) {
    code = kExitUsage;
    rep["error"] = error_json("usage", e.what());
  } catch (const PreconditionError& e) {
    code = kExitUsage;
    rep["error"] = error_json("precondition", e.what());
  } catch (const RingMismatch& e) {
    code = kExitUsage;
    rep["error"] = error_json("ring-mismatch", e.what());
  } catch (const Unsupported& e) {
    code = kExitUnsupported;
    rep["error"] = error_json("unsupported", e.what());
  } catch (const NonMinimalResolution& e) {
    code = kExitUnsupported;
    rep["error"] = error_json("non-minimal-resolution", e.what());
  } catch (const NonProperElement& e) {
    code = kExitUnsupported;
    rep["error"] = error_json("non-proper-element", e.what());
  } catch (const ResourceLimit& e) {
    code = kExitResourceLimit;
    rep["error"] = error_json("resource-limit", e.what());
  } catch (const Error& e) {
    code = kExitCheckFailed;
    rep["error"] = error_json("internal-check", e.what());
  }
  rep["exit_code"] = code;
  rep["timings"]["total_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (o.json) {
    out << rep.dump(2) << "\n";
  } else {
    out << ctx.text.str();
    for (const auto& c : rep["checks"]) {
      if (!c["passed"].get<bool>()) {
        out << "check failed: " << c["name"].get<std::string>();
        if (!c["details"].get<std::string>().empty()) out << " (" << c["details"].get<std::string>() << ")";
        out << "\n";
      }
    }
  }
  if (rep.contains("error")) err << "dgolod: " << rep["error"]["message"].get<std::string>() << "\n";
  return code;
}

}  // namespace dgolod
