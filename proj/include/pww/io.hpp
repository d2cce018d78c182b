#pragma once

#include <complex>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace pww {

// Doubles are printed with 17 significant digits so the CSV round-trips to
// the exact same bit pattern.
std::string format_double(double v);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  CsvWriter& field(std::int64_t v);
  CsvWriter& field(double v);
  CsvWriter& field(const std::string& v);
  void end_row();

 private:
  std::ofstream out_;
  std::size_t columns_;
  std::size_t in_row_ = 0;
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace pww
