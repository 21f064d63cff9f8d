#pragma once

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "pellsurf/classmap.hpp"
#include "pellsurf/forms.hpp"
#include "pellsurf/ideals.hpp"
#include "pellsurf/search.hpp"
#include "pellsurf/surface.hpp"

// JSON shapes; see docs/json.md. Integers that fit in int64 are written as
// JSON numbers, larger ones as decimal strings. Readers accept both.
namespace pellsurf::json {

using nlohmann::json;

json from_bigint(BigInt const& x);
BigInt to_bigint(json const& j);

json to_json(FieldContext const& ctx);
json to_json(QuadraticForm const& q);  // [a, b, c]
json to_json(IntegralIdeal const& i);  // {a, b, c, norm}
json to_json(SurfacePoint const& p, FieldContext const& ctx);
json to_json(YamamotoPoint const& y);
json to_json(EnumerationReport const& r);
json to_json(CoverageReport const& r);
json to_json(SuiteReport const& r);

// {delta, reps: [[a,b,c]...], table: [[...]...], identity}
json to_json(FormClassGroup const& g);
FormClassGroup class_group_from_json(json const& j);

// Cache file: a JSON object mapping decimal delta -> class group.
std::optional<FormClassGroup> load_cached_group(std::filesystem::path const& path,
                                                BigInt const& delta);
void store_cached_group(std::filesystem::path const& path, FormClassGroup const& g);

// Loads from the cache when present, otherwise computes and stores.
FormClassGroup cached_class_group(FieldContext const& ctx,
                                  std::optional<std::filesystem::path> const& cache);

}  // namespace pellsurf::json
