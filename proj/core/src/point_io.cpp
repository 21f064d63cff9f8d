#include "pellsurf/point_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pellsurf/error.hpp"

namespace pellsurf {

namespace {

void parse_header(std::string_view comment, PointFile& file) {
  std::istringstream words{std::string(comment)};
  std::string word;
  while (words >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) continue;
    std::string key = word.substr(0, eq);
    std::string value = word.substr(eq + 1);
    if (key == "delta") {
      file.delta = parse_bigint(value);
    } else if (key == "n") {
      BigInt n = parse_bigint(value);
      if (n < 1 || n > 1'000'000) throw Error(Errc::InvalidArgument, "bad level n=" + value);
      file.n = n.convert_to<unsigned>();
    }
  }
}

}  // namespace

PointFile read_point_file(std::istream& in) {
  PointFile file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      parse_header(std::string_view(line).substr(hash + 1), file);
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw Error(Errc::InvalidArgument,
                  "line " + std::to_string(lineno) + ": expected `A B C`");
    }
    file.points.push_back(
        {parse_bigint(tokens[0]), parse_bigint(tokens[1]), parse_bigint(tokens[2])});
  }
  return file;
}

void write_point_file(std::ostream& out, BigInt const& delta, unsigned n,
                      std::span<SurfacePoint const> points) {
  out << "# delta=" << delta << " n=" << n << '\n';
  for (auto const& p : points) out << p.a << ' ' << p.b << ' ' << p.c << '\n';
}

RawPoint parse_point_arg(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw Error(Errc::InvalidArgument, "point must be `A,B,C`, got '" + std::string(text) + "'");
  }
  return {parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2])};
}

}  // namespace pellsurf
