#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kbill/portrait.hpp"

namespace kbill::app {

inline constexpr const char* kCsvHeader = "orbit_id,iter,xi,alpha,termination";

struct CsvRow {
  std::size_t orbit_id = 0;
  std::size_t iter = 0;
  double xi = 0.0;
  double alpha = 0.0;
  std::string termination;
};

/// One row per recorded state; each row carries its orbit's termination tag.
/// Decimal fields use 17 significant digits, lines end in '\n'.
void write_csv(const PortraitDataset& data, std::ostream& out);
void write_csv(const PortraitDataset& data, const std::filesystem::path& path);
void write_csv(const std::vector<OrbitRecord>& orbits, std::ostream& out);

std::vector<CsvRow> read_csv(std::istream& in);
std::vector<CsvRow> read_csv(const std::filesystem::path& path);

}  // namespace kbill::app
