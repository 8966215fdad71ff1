#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "rxd/cli/config.hpp"
#include "rxd/cli/output.hpp"

namespace rxd::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string csv_header() {
  std::string h = "t,H,D,D_tilde,m13,m14,m23";
  for (const char* group : {"linf_u", "lq_u", "linf_dist_u", "l1_dist_u"}) {
    for (int k = 1; k <= kSpecies; ++k) h += "," + std::string(group) + std::to_string(k);
  }
  return h + ",sqrt_var_u4";
}

std::string csv_row(const DiagnosticsRecord& r) {
  std::string row = format_double(r.t);
  auto put = [&row](double v) {
    row += ',';
    row += format_double(v);
  };
  put(r.H);
  put(r.D);
  put(r.D_tilde);
  put(r.masses.m13);
  put(r.masses.m14);
  put(r.masses.m23);
  for (const auto* group : {&r.linf, &r.lq, &r.linf_dist, &r.l1_dist}) {
    for (double v : *group) put(v);
  }
  put(r.sqrt_var_u4);
  return row;
}

void write_trajectory_csv(std::ostream& out, std::span<const DiagnosticsRecord> records) {
  out << kCsvSchema << '\n' << csv_header() << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
}

void write_trajectory_csv(const std::string& path, std::span<const DiagnosticsRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("output.csv: cannot open " + path + " for writing");
  write_trajectory_csv(out, records);
  if (!out) throw Error("write failed: " + path);
}

}  // namespace rxd::cli
