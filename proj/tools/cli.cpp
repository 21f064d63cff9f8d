#include "cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pellsurf/classmap.hpp"
#include "pellsurf/error.hpp"
#include "pellsurf/json_io.hpp"
#include "pellsurf/point_io.hpp"

namespace pellsurf::cli {

namespace {

using nlohmann::json;
namespace pj = pellsurf::json;

struct Options {
  bool json = false;
  std::string delta;
  unsigned n = 0;
  std::vector<std::string> points;
  std::string k = "2";
  unsigned to_level = 0;
  std::string yam_to;
  std::string yam_from;
  unsigned prime_p = 0;
  std::string bound = "1000";
  std::string cache;
  std::string max_a = "1";
  std::string box = "1";
  bool positive = false;
  std::string out_file;
  std::string points_file;
  std::string suite;
  std::size_t triples = kDefaultAssociativityTriples;
  std::uint64_t seed = kDefaultSeed;
  bool trace = false;
};

// "NotOnSurface" -> "not on surface".
std::string phrase(Errc code) {
  std::string out;
  for (char ch : errc_name(code)) {
    if (std::isupper(static_cast<unsigned char>(ch)) && !out.empty()) out += ' ';
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

unsigned env_threads() {
  char const* v = std::getenv("PELLSURF_THREADS");
  if (v == nullptr || *v == '\0') return resolve_threads(0);
  char* end = nullptr;
  unsigned long parsed = std::strtoul(v, &end, 10);
  if (*end != '\0') return resolve_threads(0);
  return resolve_threads(static_cast<unsigned>(parsed));
}

std::string show(QuadraticForm const& q) {
  return "(" + to_string(q.a) + "," + to_string(q.b) + "," + to_string(q.c) + ")";
}

std::string show(IntegralIdeal const& i) {
  return "[" + to_string(i.a) + ", " + to_string(i.b) + "+" + to_string(i.c) + "w]";
}

class Runner {
 public:
  Runner(Options const& o, std::ostream& out) : o_(o), out_(out) {}

  int ctx_cmd() {
    FieldContext ctx = context();
    if (o_.json) {
      emit(pj::to_json(ctx));
    } else {
      out_ << "delta=" << ctx.delta() << " m=" << ctx.m() << " sigma=" << ctx.sigma() << ' '
           << (ctx.is_imaginary() ? "imaginary" : "real") << '\n';
    }
    return kExitOk;
  }

  int check_cmd() {
    FieldContext ctx = context();
    for (auto const& p : points(ctx)) {
      if (o_.json) {
        json j = pj::to_json(p, ctx);
        j["valid"] = true;
        emit(j);
      } else {
        out_ << "ok " << format_point(p) << '\n';
      }
    }
    return kExitOk;
  }

  int add_cmd() {
    FieldContext ctx = context();
    auto pts = points(ctx);
    if (pts.empty()) throw CLI::ValidationError("add", "needs at least one point");
    SurfacePoint acc = pts.front();
    for (std::size_t i = 1; i < pts.size(); ++i) {
      AddTrace t = add_traced(ctx, acc, pts[i]);
      if (o_.trace && !o_.json) {
        out_ << "# u=" << t.u << " v=" << t.v << " d=" << t.d << " e=" << t.e << '\n';
      }
      acc = t.sum;
    }
    print_point(acc, ctx);
    return kExitOk;
  }

  int neg_cmd() {
    FieldContext ctx = context();
    for (auto const& p : points(ctx)) print_point(negate(ctx, p), ctx);
    return kExitOk;
  }

  int mul_cmd() {
    FieldContext ctx = context();
    BigInt k = parse_bigint(o_.k);
    for (auto const& p : points(ctx)) print_point(scalar_mul(ctx, p, k), ctx);
    return kExitOk;
  }

  int lift_cmd() {
    FieldContext ctx = context();
    for (auto const& p : points(ctx)) print_point(lift(ctx, p, o_.to_level), ctx);
    return kExitOk;
  }

  int yamamoto_cmd() {
    FieldContext ctx = context();
    if (o_.yam_to.empty() == o_.yam_from.empty()) {
      throw CLI::ValidationError("yamamoto", "give exactly one of --to A,B,C or --from X,Y,Z");
    }
    if (!o_.yam_to.empty()) {
      RawPoint r = parse_point_arg(o_.yam_to);
      YamamotoPoint y = to_yamamoto(ctx, point_check(ctx, o_.n, r.a, r.b, r.c));
      if (o_.json) {
        emit(pj::to_json(y));
      } else {
        out_ << y.x << ',' << y.y << ',' << y.z << '\n';
      }
    } else {
      RawPoint r = parse_point_arg(o_.yam_from);
      print_point(from_yamamoto(ctx, o_.n, {r.a, r.b, r.c}), ctx);
    }
    return kExitOk;
  }

  int newpoint_cmd() {
    FieldContext ctx = context();
    for (auto const& p : points(ctx)) {
      NewpointResult r = newpoint_test(ctx, p, o_.prime_p);
      std::string verdict = r.verdict == NewpointVerdict::ProvenNew ? "ProvenNew" : "Inconclusive";
      if (o_.json) {
        json primes = json::array();
        for (auto const& q : r.primes) primes.push_back(pj::from_bigint(q));
        json j = pj::to_json(p, ctx);
        j["p"] = o_.prime_p;
        j["verdict"] = verdict;
        j["primes"] = primes;
        j["witness_prime"] = r.witness_prime ? pj::from_bigint(*r.witness_prime) : json(nullptr);
        emit(j);
      } else {
        out_ << format_point(p) << ' ' << verdict;
        if (r.witness_prime) out_ << " q=" << *r.witness_prime;
        out_ << '\n';
      }
    }
    return kExitOk;
  }

  int toform_cmd() {
    FieldContext ctx = context();
    for (auto const& p : points(ctx)) {
      QuadraticForm tilde = tilde_form(ctx, p);
      QuadraticForm qp = point_to_form(ctx, p);
      QuadraticForm red = reduce(qp).form;
      IntegralIdeal id = point_ideal(ctx, p);
      if (o_.json) {
        json j = pj::to_json(p, ctx);
        j["tilde"] = pj::to_json(tilde);
        j["beta"] = pj::from_bigint(underive_beta(p));
        j["form"] = pj::to_json(qp);
        j["reduced"] = pj::to_json(red);
        j["ideal"] = pj::to_json(id);
        emit(j);
      } else {
        out_ << format_point(p) << " tilde=" << show(tilde) << " beta=" << underive_beta(p)
             << " form=" << show(qp) << " reduced=" << show(red) << " ideal=" << show(id)
             << '\n';
      }
    }
    return kExitOk;
  }

  int classof_cmd() {
    FieldContext ctx = context();
    FormClassGroup g = group(ctx);
    for (auto const& p : points(ctx)) {
      std::size_t k = class_of_point(g, ctx, p);
      if (o_.json) {
        json j = pj::to_json(p, ctx);
        j["class"] = k;
        j["rep"] = pj::to_json(g.reps()[k]);
        j["identity"] = k == g.identity_index();
        emit(j);
      } else {
        out_ << format_point(p) << " class=" << k << " rep=" << show(g.reps()[k])
             << (k == g.identity_index() ? " identity" : "") << '\n';
      }
    }
    return kExitOk;
  }

  int kernel_cmd() {
    FieldContext ctx = context();
    FormClassGroup g = group(ctx);
    BigInt bound = parse_bigint(o_.bound);
    for (auto const& p : points(ctx)) {
      bool in_kernel = kernel_test(g, ctx, p);
      KernelWitnessSearch s = kernel_witness_search(ctx, p, bound);
      if (o_.json) {
        json j = pj::to_json(p, ctx);
        j["kernel"] = in_kernel;
        j["witness"] = s.witness ? json::array({pj::from_bigint(s.witness->first),
                                                pj::from_bigint(s.witness->second)})
                                 : json(nullptr);
        j["conclusive"] = s.conclusive;
        emit(j);
      } else {
        out_ << format_point(p) << " kernel=" << (in_kernel ? "true" : "false") << " witness=";
        if (s.witness) {
          out_ << s.witness->first << ',' << s.witness->second;
        } else {
          out_ << "none";
        }
        out_ << " conclusive=" << (s.conclusive ? "true" : "false") << '\n';
      }
    }
    return kExitOk;
  }

  int classgroup_cmd() {
    FieldContext ctx = context();
    FormClassGroup g = group(ctx);
    if (o_.json) {
      emit(pj::to_json(g));
      return kExitOk;
    }
    out_ << "delta=" << g.delta() << " order=" << g.order() << " identity=" << g.identity_index()
         << '\n';
    for (std::size_t i = 0; i < g.order(); ++i) out_ << i << ' ' << show(g.reps()[i]) << '\n';
    out_ << "table:\n";
    for (auto const& row : g.table()) {
      for (std::size_t j = 0; j < row.size(); ++j) out_ << (j ? " " : "") << row[j];
      out_ << '\n';
    }
    return kExitOk;
  }

  int torsion_cmd() {
    FieldContext ctx = context();
    FormClassGroup g = group(ctx);
    auto t = torsion_subgroup(g, o_.n);
    if (o_.json) {
      json reps = json::array();
      for (auto i : t) reps.push_back(pj::to_json(g.reps()[i]));
      emit({{"delta", pj::from_bigint(ctx.delta())}, {"n", o_.n}, {"torsion", t}, {"reps", reps}});
    } else {
      out_ << "n=" << o_.n << " size=" << t.size() << '\n';
      for (auto i : t) out_ << i << ' ' << show(g.reps()[i]) << '\n';
    }
    return kExitOk;
  }

  int enumerate_cmd() {
    FieldContext ctx = context();
    EnumerationReport r = enumerate(ctx);
    if (!o_.out_file.empty()) {
      std::ofstream f(o_.out_file);
      if (!f) throw Error(Errc::InvalidArgument, "cannot write " + o_.out_file);
      write_point_file(f, ctx.delta(), o_.n, r.points);
    }
    if (o_.json) {
      emit(pj::to_json(r));
    } else if (o_.out_file.empty()) {
      write_point_file(out_, ctx.delta(), o_.n, r.points);
    } else {
      out_ << "wrote " << r.points.size() << " points to " << o_.out_file
           << (r.complete ? "" : " (complete only within the box)") << '\n';
    }
    return kExitOk;
  }

  int scan_cmd() {
    FieldContext ctx = context();
    FormClassGroup g = group(ctx);
    CoverageReport r = image_scan(g, ctx, o_.n, parse_bigint(o_.max_a), parse_bigint(o_.box),
                                  env_threads());
    if (o_.json) {
      emit(pj::to_json(r));
    } else {
      auto list = [](std::vector<std::size_t> const& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
      };
      out_ << "points=" << r.points << " hit=" << list(r.hit_classes)
           << " torsion=" << list(r.torsion) << " surjective=" << (r.surjective ? "true" : "false")
           << '\n';
    }
    return kExitOk;
  }

  int verify_cmd() {
    FieldContext ctx = context();
    std::vector<SurfacePoint> pts;
    std::vector<RawPoint> raws;
    if (!o_.points_file.empty()) {
      std::ifstream f(o_.points_file);
      if (!f) throw Error(Errc::InvalidArgument, "cannot read " + o_.points_file);
      PointFile pf = read_point_file(f);
      if (pf.delta && *pf.delta != ctx.delta()) {
        throw Error(Errc::DiscMismatch, "point file is for delta=" + to_string(*pf.delta));
      }
      if (pf.n && *pf.n != o_.n) {
        throw Error(Errc::MixedLevels, "point file is for n=" + std::to_string(*pf.n));
      }
      raws = pf.points;
      if (o_.suite != "axioms") {
        for (auto const& r : raws) pts.push_back(point_check(ctx, o_.n, r.a, r.b, r.c));
      }
    } else {
      pts = enumerate(ctx).points;
      for (auto const& p : pts) raws.push_back(raw(p));
    }

    SuiteReport report;
    if (o_.suite == "axioms") {
      report = axiom_suite(ctx, o_.n, raws, {o_.triples, o_.seed, env_threads()});
    } else if (o_.suite == "gcdpower") {
      report = gcd_power_check(ctx, o_.n, pts);
    } else if (o_.suite == "homomorphism") {
      report = homomorphism_suite(group(ctx), ctx, o_.n, pts);
    } else {
      report = oracle_suite(ctx, o_.n, pts);
    }
    if (o_.json) {
      emit(pj::to_json(report));
    } else {
      out_ << report.name << ": " << (report.passed() ? "PASS" : "FAIL")
           << " checks=" << report.checks << " failures=" << report.failure_count << '\n';
      for (auto const& f : report.failures) out_ << "  " << f << '\n';
    }
    return report.passed() ? kExitOk : kExitDomainError;
  }

 private:
  FieldContext context() const { return make_context(parse_bigint(o_.delta)); }

  std::vector<SurfacePoint> points(FieldContext const& ctx) const {
    std::vector<SurfacePoint> out;
    for (auto const& text : o_.points) {
      RawPoint r = parse_point_arg(text);
      out.push_back(point_check(ctx, o_.n, r.a, r.b, r.c));
    }
    return out;
  }

  FormClassGroup group(FieldContext const& ctx) const {
    std::optional<std::filesystem::path> cache;
    if (!o_.cache.empty()) cache = o_.cache;
    return pj::cached_class_group(ctx, cache);
  }

  EnumerationReport enumerate(FieldContext const& ctx) const {
    EnumerationOptions opts{parse_bigint(o_.max_a), parse_bigint(o_.box), o_.positive,
                            env_threads()};
    return enumerate_points(ctx, o_.n, opts);
  }

  void print_point(SurfacePoint const& p, FieldContext const& ctx) {
    if (o_.json) {
      emit(pj::to_json(p, ctx));
    } else {
      out_ << format_point(p) << '\n';
    }
  }

  void emit(json const& j) { out_ << j.dump() << '\n'; }

  Options const& o_;
  std::ostream& out_;
};

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Points on Q0(B,C) = A^n, their group law and class map", "pellsurf"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit one JSON object per result line");

  auto surface_opts = [&](CLI::App* sub, bool needs_n) {
    sub->add_option("--delta", o.delta, "Fundamental discriminant")->required();
    if (needs_n) {
      sub->add_option("--n", o.n, "Surface level n >= 1")->required()->check(CLI::Range(1U, 1000000U));
    }
  };
  auto point_args = [&](CLI::App* sub) {
    sub->add_option("points", o.points, "Points as A,B,C")->required();
  };
  auto cache_opt = [&](CLI::App* sub) {
    sub->add_option("--cache", o.cache, "Class group cache file (JSON)");
  };
  auto region_opts = [&](CLI::App* sub) {
    sub->add_option("--max-a", o.max_a, "Enumerate 1 <= |A| <= max-a");
    sub->add_option("--box", o.box, "Bound on |B|, |C| (delta > 0)");
    sub->add_flag("--positive", o.positive, "Only A > 0");
  };

  std::map<CLI::App*, int (Runner::*)()> dispatch;

  auto* ctx = app.add_subcommand("ctx", "Validate a discriminant");
  surface_opts(ctx, false);
  dispatch[ctx] = &Runner::ctx_cmd;

  auto* check = app.add_subcommand("check", "Validate points on S_n");
  surface_opts(check, true);
  point_args(check);
  dispatch[check] = &Runner::check_cmd;

  auto* addc = app.add_subcommand("add", "Sum points with the group law");
  surface_opts(addc, true);
  point_args(addc);
  addc->add_flag("--trace", o.trace, "Print u, v, d, e for each addition");
  dispatch[addc] = &Runner::add_cmd;

  auto* neg = app.add_subcommand("neg", "Inverse points");
  surface_opts(neg, true);
  point_args(neg);
  dispatch[neg] = &Runner::neg_cmd;

  auto* mul = app.add_subcommand("mul", "Scalar multiple k*P");
  surface_opts(mul, true);
  point_args(mul);
  mul->add_option("--k", o.k, "Multiplier")->required();
  dispatch[mul] = &Runner::mul_cmd;

  auto* liftc = app.add_subcommand("lift", "Map S_n points to S_N for n | N");
  surface_opts(liftc, true);
  point_args(liftc);
  liftc->add_option("--to", o.to_level, "Target level N")->required()->check(CLI::Range(1U, 1000000U));
  dispatch[liftc] = &Runner::lift_cmd;

  auto* yam = app.add_subcommand("yamamoto", "Convert to/from X^2 - delta Y^2 = 4 Z^n");
  surface_opts(yam, true);
  yam->add_option("--to", o.yam_to, "Surface point A,B,C");
  yam->add_option("--from", o.yam_from, "Yamamoto point X,Y,Z");
  dispatch[yam] = &Runner::yamamoto_cmd;

  auto* np = app.add_subcommand("newpoint", "Power-residue newpoint criterion");
  surface_opts(np, true);
  point_args(np);
  np->add_option("--p", o.prime_p, "Odd prime p dividing n")->required();
  dispatch[np] = &Runner::newpoint_cmd;

  auto* toform = app.add_subcommand("toform", "Tilde form, Q_P and ideal of points");
  surface_opts(toform, true);
  point_args(toform);
  dispatch[toform] = &Runner::toform_cmd;

  auto* classof = app.add_subcommand("classof", "Narrow class of points");
  surface_opts(classof, true);
  point_args(classof);
  cache_opt(classof);
  dispatch[classof] = &Runner::classof_cmd;

  auto* kernel = app.add_subcommand("kernel", "Kernel membership and representation witness");
  surface_opts(kernel, true);
  point_args(kernel);
  cache_opt(kernel);
  kernel->add_option("--bound", o.bound, "Witness search bound on |T|, |U|");
  dispatch[kernel] = &Runner::kernel_cmd;

  auto* cg = app.add_subcommand("classgroup", "Narrow class group of forms");
  surface_opts(cg, false);
  cache_opt(cg);
  dispatch[cg] = &Runner::classgroup_cmd;

  auto* tors = app.add_subcommand("torsion", "n-torsion of the class group");
  surface_opts(tors, true);
  cache_opt(tors);
  dispatch[tors] = &Runner::torsion_cmd;

  auto* en = app.add_subcommand("enumerate", "Enumerate points");
  surface_opts(en, true);
  region_opts(en);
  en->add_option("--out", o.out_file, "Write the point file here");
  dispatch[en] = &Runner::enumerate_cmd;

  auto* scan = app.add_subcommand("scan", "Image of enumerated points in Cl+[n]");
  surface_opts(scan, true);
  scan->add_option("--max-a", o.max_a, "Enumerate 1 <= |A| <= max-a");
  scan->add_option("--box", o.box, "Bound on |B|, |C| (delta > 0)");
  cache_opt(scan);
  dispatch[scan] = &Runner::scan_cmd;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  surface_opts(verify, true);
  region_opts(verify);
  cache_opt(verify);
  verify->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"axioms", "gcdpower", "homomorphism", "oracle"}));
  verify->add_option("--points", o.points_file, "Point file instead of enumeration");
  verify->add_option("--triples", o.triples, "Associativity triples");
  verify->add_option("--seed", o.seed, "Associativity seed");
  dispatch[verify] = &Runner::verify_cmd;

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "pellsurf: " << e.what() << '\n';
    return kExitUsage;
  }

  Runner runner(o, out);
  try {
    for (auto const& [sub, fn] : dispatch) {
      if (sub->parsed()) return (runner.*fn)();
    }
    err << "pellsurf: no subcommand\n";
    return kExitUsage;
  } catch (CLI::Error const& e) {
    err << "pellsurf: " << e.what() << '\n';
    return kExitUsage;
  } catch (Error const& e) {
    err << "pellsurf: " << phrase(e.code()) << ": " << e.what() << '\n';
    return e.code() == Errc::InvalidArgument ? kExitUsage : kExitDomainError;
  }
}

}  // namespace pellsurf::cli
