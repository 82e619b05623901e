#include "kbill/app/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kbill/error.hpp"

namespace kbill::app {

namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T>
T parse_field(const std::string& text, std::size_t lineno) {
  T v{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw std::runtime_error("CSV line " + std::to_string(lineno) + ": bad field '" + text + "'");
  return v;
}

}  // namespace

void write_csv(const std::vector<OrbitRecord>& orbits, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (std::size_t id = 0; id < orbits.size(); ++id) {
    const auto tag = to_string(orbits[id].termination);
    const auto& states = orbits[id].states;
    for (std::size_t k = 0; k < states.size(); ++k)
      out << id << ',' << k << ',' << format17(states[k].xi) << ',' << format17(states[k].alpha) << ',' << tag
          << '\n';
  }
}

void write_csv(const PortraitDataset& data, std::ostream& out) { write_csv(data.orbits, out); }

void write_csv(const PortraitDataset& data, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write CSV file '" + path.string() + "'");
  write_csv(data, out);
  if (!out) throw std::runtime_error("error while writing '" + path.string() + "'");
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("CSV header must be '" +
                                                                               std::string(kCsvHeader) + "'");
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 5)
      throw std::runtime_error("CSV line " + std::to_string(lineno) + ": expected 5 fields");
    rows.push_back({parse_field<std::size_t>(fields[0], lineno), parse_field<std::size_t>(fields[1], lineno),
                    parse_field<double>(fields[2], lineno), parse_field<double>(fields[3], lineno), fields[4]});
  }
  return rows;
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open CSV file '" + path.string() + "'");
  return read_csv(in);
}

}  // namespace kbill::app
