#ifndef NCERGO_CSV_HPP
#define NCERGO_CSV_HPP

#include <string>
#include <vector>

#include "ncergo/coupling.hpp"

namespace ncergo {

// Writes `size,re_value,im_value,re_limit,im_limit,abs_error` rows with 17
// significant digits. The file appears atomically (temporary + rename), so a
// partially written table is never observed.
void write_rows_csv(const std::string& path, const std::vector<AverageRow>& rows);

std::string format_rows_csv(const std::vector<AverageRow>& rows);

}  // namespace ncergo

#endif  // NCERGO_CSV_HPP
