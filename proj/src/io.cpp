#include "hvss/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hvss::io {

namespace {

[[noreturn]] void parse_fail(const std::filesystem::path& path,
                             std::size_t line, const std::string& what) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                           what);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

PointTable read_points_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  PointTable table;
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) {
    parse_fail(path, 1, "missing header row");
  }
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_fields(line);
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (header[j] != "f" + std::to_string(j + 1)) {
      parse_fail(path, 1, "expected header field f" + std::to_string(j + 1) +
                              ", got '" + header[j] + "'");
    }
  }
  if (header.size() < 2) {
    parse_fail(path, 1, "need at least 2 objective columns");
  }
  table.dim = header.size();

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != table.dim) {
      parse_fail(path, lineno,
                 "expected " + std::to_string(table.dim) + " fields, got " +
                     std::to_string(fields.size()));
    }
    for (const std::string& f : fields) {
      double v = 0.0;
      const auto* first = f.data();
      const auto* last = f.data() + f.size();
      const auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last) {
        parse_fail(path, lineno, "bad number '" + f + "'");
      }
      if (!std::isfinite(v)) {
        parse_fail(path, lineno, "non-finite value '" + f + "'");
      }
      table.rows.push_back(v);
    }
    ++table.count;
  }
  return table;
}

void write_points_csv(const std::filesystem::path& path, PointsView pts) {
  std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  for (std::size_t j = 0; j < pts.dim; ++j) {
    if (j > 0) out << ',';
    out << 'f' << (j + 1);
  }
  out << '\n';
  char buf[32];
  for (std::size_t i = 0; i < pts.count; ++i) {
    for (std::size_t j = 0; j < pts.dim; ++j) {
      if (j > 0) out << ',';
      std::snprintf(buf, sizeof buf, "%.17g", pts.data[i * pts.dim + j]);
      out << buf;
    }
    out << '\n';
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

void write_front_metadata(const std::filesystem::path& path,
                          const FrontMetadata& meta) {
  nlohmann::json j{{"shape", shape_id(meta.shape)},
                   {"dim", meta.dim},
                   {"count", meta.count},
                   {"seed", meta.seed},
                   {"normalized", meta.normalized}};
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

void write_selection_stats(const std::filesystem::path& path,
                           const SelectionStats& stats) {
  nlohmann::json j{{"hv", stats.hv},
                   {"hv_trajectory", stats.hv_trajectory},
                   {"hvc_evaluations", stats.hvc_evaluations},
                   {"seconds", stats.seconds}};
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace hvss::io
