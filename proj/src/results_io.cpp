#include "uarnc/results_io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uarnc/errors.hpp"

namespace uarnc {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

// The value a reader of the 12-digit text would see.
double rounded(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double to_real(std::string_view s, std::size_t line) {
  std::string tmp(s);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size())
    throw ValidationError("results CSV line " + std::to_string(line) + ": bad number '" + tmp + "'");
  return v;
}

template <class Int>
Int to_int(std::string_view s, std::size_t line) {
  Int v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ValidationError("results CSV line " + std::to_string(line) + ": bad integer '" +
                          std::string(s) + "'");
  return v;
}

ordered_json placement_object(const SwarmResult& r) {
  ordered_json trace = ordered_json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"iter", t.iter},
                     {"gbest_fit", rounded(t.gbest_fit)},
                     {"qx", rounded(t.q.x)},
                     {"qy", rounded(t.q.y)}});
  const int iterations = r.trace.empty() ? 0 : r.trace.back().iter + 1;
  return {{"q", {rounded(r.q_star.x), rounded(r.q_star.y)}},
          {"fitness", rounded(r.fitness)},
          {"iterations", iterations},
          {"evaluations", r.evaluations},
          {"trace", trace}};
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string results_csv(const ResultsTable& table) {
  std::string out(kResultsHeader);
  out += '\n';
  for (const auto& r : table) {
    out += r.scheme + ',' + std::to_string(r.layers) + ',' + std::to_string(r.slots) + ',' +
           std::to_string(r.users) + ',' + format_real(r.q.x) + ',' + format_real(r.q.y) + ',' +
           format_real(r.mean_throughput) + ',' + format_real(r.ci95_lo) + ',' +
           format_real(r.ci95_hi) + ',' + std::to_string(r.runs) + ',' + std::to_string(r.seed) +
           ',' + (r.feasible ? "true" : "false") + '\n';
  }
  return out;
}

ResultsTable parse_results_csv(std::string_view text) {
  ResultsTable table;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kResultsHeader)
        throw ValidationError("results CSV: unexpected header '" + std::string(line) + "'");
      header_seen = true;
      continue;
    }
    const auto f = split(line);
    if (f.size() != 12)
      throw ValidationError("results CSV line " + std::to_string(line_no) + ": expected 12 fields");
    ResultRow r;
    r.scheme = std::string(f[0]);
    r.layers = to_int<int>(f[1], line_no);
    r.slots = to_int<int>(f[2], line_no);
    r.users = to_int<int>(f[3], line_no);
    r.q = {to_real(f[4], line_no), to_real(f[5], line_no)};
    r.mean_throughput = to_real(f[6], line_no);
    r.ci95_lo = to_real(f[7], line_no);
    r.ci95_hi = to_real(f[8], line_no);
    r.runs = to_int<int>(f[9], line_no);
    r.seed = to_int<std::uint64_t>(f[10], line_no);
    if (f[11] != "true" && f[11] != "false")
      throw ValidationError("results CSV line " + std::to_string(line_no) + ": bad feasible flag");
    r.feasible = f[11] == "true";
    table.push_back(std::move(r));
  }
  if (!header_seen) throw ValidationError("results CSV: missing header");
  return table;
}

std::string results_json(const ResultsTable& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : table)
    rows.push_back({{"scheme", r.scheme},
                    {"L", r.layers},
                    {"T", r.slots},
                    {"K", r.users},
                    {"qx", rounded(r.q.x)},
                    {"qy", rounded(r.q.y)},
                    {"mean_throughput", rounded(r.mean_throughput)},
                    {"ci95_lo", rounded(r.ci95_lo)},
                    {"ci95_hi", rounded(r.ci95_hi)},
                    {"runs", r.runs},
                    {"seed", r.seed},
                    {"feasible", r.feasible}});
  return ordered_json{{"rows", rows}}.dump(2) + "\n";
}

std::string placement_json(const SwarmResult& result) {
  return placement_object(result).dump(2) + "\n";
}

std::string placements_json(std::span<const PlacementRecord> placements) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : placements)
    arr.push_back(
        {{"value", p.value}, {"method", p.method}, {"placement", placement_object(p.result)}});
  return arr.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace uarnc
