#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twodir/mask.hpp"
#include "twodir/moments.hpp"
#include "twodir/pointvals.hpp"
#include "twodir/table.hpp"

namespace twodir {

/// "%.17g" (round-trips exactly); negative zero prints as 0.
std::string format_double(double v);

/// Header `x,f_1,...,f_r`, then one row per grid point in increasing x.
void write_csv(std::ostream& os, const PointValueTable& table);

/// A CSV as written by write_csv, read back.
struct CsvTable {
  std::vector<double> x;
  Matrix values;  // r x rows, same layout as PointValueTable::values()
};

/// Throws InputError on a malformed header, ragged rows or unparsable numbers.
CsvTable read_csv(std::istream& is);

/// Extra fields for the JSON form of a table.
struct TableJsonExtras {
  const SpectralReport* report = nullptr;  // spectrum, constant, residual
  std::optional<int> iterations;           // cascade runs
  std::optional<double> delta;
};

/// {"kind", "level", "grid", "values", "spectrum", "normalizing_constant", ...}.
/// values[i] is the r-vector at grid[i].
void write_table_json(std::ostream& os, const PointValueTable& table, const TableJsonExtras& extras = {});

/// {"dilation", "multiplicity", "order", "m": [[...], ...], "warnings": [...]}.
void write_moments_json(std::ostream& os, const MomentTable& moments, int dilation);

/// Human-readable Condition E verdict: one "satisfied=..." line, then the eigenvalues.
void write_condition_e(std::ostream& os, const ConditionEReport& report);

}  // namespace twodir
