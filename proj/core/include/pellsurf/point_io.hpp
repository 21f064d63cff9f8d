#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pellsurf/search.hpp"

namespace pellsurf {

// Point text format: one `A B C` per line; `#` starts a comment. An optional
// header comment `# delta=<D> n=<n>` carries the surface.
struct PointFile {
  std::optional<BigInt> delta;
  std::optional<unsigned> n;
  std::vector<RawPoint> points;
};

PointFile read_point_file(std::istream& in);
void write_point_file(std::ostream& out, BigInt const& delta, unsigned n,
                      std::span<SurfacePoint const> points);

// "A,B,C" as used on the command line.
RawPoint parse_point_arg(std::string_view text);

}  // namespace pellsurf
