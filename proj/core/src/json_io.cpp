#include "pellsurf/json_io.hpp"

#include <fstream>

#include "pellsurf/error.hpp"

namespace pellsurf::json {

json from_bigint(BigInt const& x) {
  if (auto v = to_int64(x)) return *v;
  return to_string(x);
}

BigInt to_bigint(json const& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw Error(Errc::InvalidArgument, "expected an integer, got " + j.dump());
}

json to_json(FieldContext const& ctx) {
  return {{"delta", from_bigint(ctx.delta())},
          {"m", from_bigint(ctx.m())},
          {"sigma", ctx.sigma()},
          {"imaginary", ctx.is_imaginary()}};
}

json to_json(QuadraticForm const& q) {
  return json::array({from_bigint(q.a), from_bigint(q.b), from_bigint(q.c)});
}

json to_json(IntegralIdeal const& i) {
  return {{"a", from_bigint(i.a)},
          {"b", from_bigint(i.b)},
          {"c", from_bigint(i.c)},
          {"norm", from_bigint(ideal_norm(i))}};
}

json to_json(SurfacePoint const& p, FieldContext const& ctx) {
  return {{"delta", from_bigint(ctx.delta())},
          {"n", p.n},
          {"A", from_bigint(p.a)},
          {"B", from_bigint(p.b)},
          {"C", from_bigint(p.c)}};
}

json to_json(YamamotoPoint const& y) {
  return {{"X", from_bigint(y.x)}, {"Y", from_bigint(y.y)}, {"Z", from_bigint(y.z)}};
}

json to_json(EnumerationReport const& r) {
  json pts = json::array();
  for (auto const& p : r.points) {
    pts.push_back(json::array({from_bigint(p.a), from_bigint(p.b), from_bigint(p.c)}));
  }
  json stats = json::object();
  for (auto const& [a, count] : r.count_by_abs_a) stats[to_string(a)] = count;
  return {{"delta", from_bigint(r.delta)}, {"n", r.n},
          {"max_a", from_bigint(r.max_a)}, {"box", from_bigint(r.box)},
          {"complete", r.complete},        {"points", pts},
          {"stats", stats}};
}

json to_json(CoverageReport const& r) {
  return {{"delta", from_bigint(r.delta)},
          {"n", r.n},
          {"max_a", from_bigint(r.max_a)},
          {"box", from_bigint(r.box)},
          {"points", r.points},
          {"hit_classes", r.hit_classes},
          {"torsion", r.torsion},
          {"surjective", r.surjective}};
}

json to_json(SuiteReport const& r) {
  return {{"suite", r.name},
          {"passed", r.passed()},
          {"checks", r.checks},
          {"failures", r.failure_count},
          {"counterexamples", r.failures}};
}

json to_json(FormClassGroup const& g) {
  json reps = json::array();
  for (auto const& q : g.reps()) reps.push_back(to_json(q));
  return {{"delta", from_bigint(g.delta())},
          {"reps", reps},
          {"table", g.table()},
          {"identity", g.identity_index()}};
}

FormClassGroup class_group_from_json(json const& j) {
  try {
    BigInt delta = to_bigint(j.at("delta"));
    std::vector<QuadraticForm> reps;
    for (auto const& r : j.at("reps")) {
      if (!r.is_array() || r.size() != 3) {
        throw Error(Errc::InvalidArgument, "class representative must be [a, b, c]");
      }
      reps.push_back({to_bigint(r[0]), to_bigint(r[1]), to_bigint(r[2])});
    }
    auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    auto identity = j.at("identity").get<std::size_t>();
    return FormClassGroup(std::move(delta), std::move(reps), std::move(table), identity);
  } catch (nlohmann::json::exception const& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed class group JSON: ") + e.what());
  }
}

std::optional<FormClassGroup> load_cached_group(std::filesystem::path const& path,
                                                BigInt const& delta) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json doc;
  try {
    doc = json::parse(in);
  } catch (nlohmann::json::exception const& e) {
    throw Error(Errc::InvalidArgument,
                "class group cache " + path.string() + " is not valid JSON: " + e.what());
  }
  auto it = doc.find(to_string(delta));
  if (it == doc.end()) return std::nullopt;
  FormClassGroup g = class_group_from_json(*it);
  if (g.delta() != delta) {
    throw Error(Errc::DiscMismatch, "class group cache entry " + to_string(delta) +
                                        " holds delta=" + to_string(g.delta()));
  }
  return g;
}

void store_cached_group(std::filesystem::path const& path, FormClassGroup const& g) {
  json doc = json::object();
  {
    std::ifstream in(path);
    if (in) {
      try {
        doc = json::parse(in);
      } catch (nlohmann::json::exception const&) {
        doc = json::object();
      }
    }
  }
  doc[to_string(g.delta())] = to_json(g);
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::InvalidArgument, "cannot write class group cache " + path.string());
  }
  out << doc.dump() << '\n';
}

FormClassGroup cached_class_group(FieldContext const& ctx,
                                  std::optional<std::filesystem::path> const& cache) {
  if (cache) {
    if (auto hit = load_cached_group(*cache, ctx.delta())) return *hit;
  }
  FormClassGroup g = class_group(ctx);
  if (cache) store_cached_group(*cache, g);
  return g;
}

}  // namespace pellsurf::json
