#include "twodir/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "twodir/errors.hpp"

namespace twodir {

namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// JSON has no NaN or infinity; emit null for them.
std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_cell(const std::string& cell, std::size_t row) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw InputError("csv row " + std::to_string(row) + ": cannot parse '" + cell + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const PointValueTable& table) {
  const int r = table.multiplicity();
  os << "x";
  for (int c = 1; c <= r; ++c) os << ",f_" << c;
  os << '\n';
  for (std::int64_t i = 0; i < table.size(); ++i) {
    os << format_double(table.x(i));
    for (int c = 0; c < r; ++c) os << ',' << format_double(table.values()(c, i));
    os << '\n';
  }
}

CsvTable read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InputError("csv: empty input");
  const auto header = split(line, ',');
  if (header.size() < 2 || header[0] != "x") throw InputError("csv: header must be x,f_1,...");
  const std::size_t r = header.size() - 1;
  for (std::size_t c = 1; c <= r; ++c)
    if (header[c] != "f_" + std::to_string(c)) throw InputError("csv: unexpected column '" + header[c] + "'");

  std::vector<double> x;
  std::vector<double> flat;
  std::size_t row = 0;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != r + 1) throw InputError("csv row " + std::to_string(row) + ": wrong number of columns");
    x.push_back(parse_cell(cells[0], row));
    for (std::size_t c = 1; c <= r; ++c) flat.push_back(parse_cell(cells[c], row));
  }
  CsvTable out;
  out.x = std::move(x);
  out.values = Eigen::Map<const Matrix>(flat.data(), static_cast<Eigen::Index>(r),
                                        static_cast<Eigen::Index>(out.x.size()));
  return out;
}

void write_table_json(std::ostream& os, const PointValueTable& table, const TableJsonExtras& extras) {
  const int r = table.multiplicity();
  os << "{\n  \"kind\": " << json_string(table.label()) << ",\n";
  os << "  \"level\": " << table.level() << ",\n";
  os << "  \"grid\": [";
  for (std::int64_t i = 0; i < table.size(); ++i) os << (i ? ", " : "") << json_number(table.x(i));
  os << "],\n  \"values\": [";
  for (std::int64_t i = 0; i < table.size(); ++i) {
    os << (i ? ", " : "") << '[';
    for (int c = 0; c < r; ++c) os << (c ? ", " : "") << json_number(table.values()(c, i));
    os << ']';
  }
  os << "],\n  \"spectrum\": [";
  if (extras.report) {
    const auto& ev = extras.report->eigenvalues;
    for (std::size_t i = 0; i < ev.size(); ++i)
      os << (i ? ", " : "") << "{\"re\": " << json_number(ev[i].real()) << ", \"im\": " << json_number(ev[i].imag())
         << '}';
  }
  os << "],\n  \"normalizing_constant\": "
     << (extras.report ? json_number(extras.report->normalizing_constant) : std::string("null"));
  if (extras.report) {
    os << ",\n  \"target\": " << json_number(extras.report->target);
    os << ",\n  \"residual\": " << json_number(extras.report->residual);
    os << ",\n  \"warnings\": [";
    for (std::size_t i = 0; i < extras.report->warnings.size(); ++i)
      os << (i ? ", " : "") << json_string(extras.report->warnings[i]);
    os << ']';
  }
  if (extras.iterations) os << ",\n  \"iterations\": " << *extras.iterations;
  if (extras.delta) os << ",\n  \"delta\": " << json_number(*extras.delta);
  os << "\n}\n";
}

void write_moments_json(std::ostream& os, const MomentTable& moments, int dilation) {
  os << "{\n  \"dilation\": " << dilation << ",\n";
  os << "  \"multiplicity\": " << (moments.m.empty() ? 0 : moments.m.front().size()) << ",\n";
  os << "  \"order\": " << moments.order() << ",\n";
  os << "  \"m\": [";
  for (std::size_t j = 0; j < moments.m.size(); ++j) {
    os << (j ? ",\n        " : "") << '[';
    for (Eigen::Index c = 0; c < moments.m[j].size(); ++c) os << (c ? ", " : "") << json_number(moments.m[j](c));
    os << ']';
  }
  os << "],\n  \"warnings\": [";
  for (std::size_t i = 0; i < moments.warnings.size(); ++i)
    os << (i ? ", " : "") << json_string(moments.warnings[i]);
  os << "]\n}\n";
}

void write_condition_e(std::ostream& os, const ConditionEReport& report) {
  os << "satisfied=" << (report.satisfied ? "true" : "false") << '\n';
  os << "gap=" << format_double(report.gap) << '\n';
  for (const auto& ev : report.eigenvalues)
    os << "eigenvalue " << format_double(ev.real()) << ' ' << format_double(ev.imag()) << '\n';
}

}  // namespace twodir
