#include "ncergo/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ncergo {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string format_rows_csv(const std::vector<AverageRow>& rows) {
  std::string out = "size,re_value,im_value,re_limit,im_limit,abs_error\n";
  for (const AverageRow& row : rows) {
    out += format_double(row.size) + "," + format_double(row.value.real()) + "," +
           format_double(row.value.imag()) + "," + format_double(row.limit.real()) + "," +
           format_double(row.limit.imag()) + "," + format_double(row.abs_error) + "\n";
  }
  return out;
}

void write_rows_csv(const std::string& path, const std::vector<AverageRow>& rows) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + tmp);
    out << format_rows_csv(rows);
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot move " + tmp + " to " + path);
  }
}

}  // namespace ncergo
