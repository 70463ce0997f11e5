#include "ginient/sample.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ginient/errors.hpp"

namespace ginient {

Sample::Sample(std::vector<double> values, std::string name, Source source)
    : values_(std::move(values)), name_(std::move(name)), source_(std::move(source)) {
  if (values_.empty()) throw DataError("sample '" + name_ + "' is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DataError("sample '" + name_ + "' has a non-finite value at index " + std::to_string(i));
    }
  }
}

double Sample::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double Sample::mean() const { return sum() / static_cast<double>(values_.size()); }

bool Sample::all_non_negative() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v >= 0.0; });
}

std::vector<double> Sample::sorted() const {
  std::vector<double> out = values_;
  std::sort(out.begin(), out.end());
  return out;
}

Sample builtin_dataset() {
  // Loss ratios in percent, as listed in Jaffee and Russell (1997).
  std::vector<double> ratios = {17.4, 0.0,  0.6,  3.4,  0.0,  0.0,   0.7,  1.5,
                                2.2,  9.2,  0.9,  0.0,  2.9,  5.0,   1.3,  9.3,
                                22.8, 11.5, 129.8, 47.0, 17.2, 12.8, 3.2, 2272.7};
  return Sample(std::move(ratios), "ca-earthquake-1971-1994", BuiltinSource{});
}

std::optional<double> parse_number(std::string_view text) {
  auto is_blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!text.empty() && is_blank(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_blank(text.back())) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string> split_csv_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

namespace {

bool is_blank_line(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

std::string trimmed(std::string s) {
  auto blank = [](char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && blank(s.back())) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && blank(s[start])) ++start;
  return s.substr(start);
}

}  // namespace

Sample load_csv(const std::filesystem::path& path, const std::optional<std::string>& column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file '" + path.string() + "'");

  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (is_blank_line(line)) continue;
    rows.emplace_back(line_no, split_csv_record(line));
  }
  if (rows.empty()) throw DataError("data file '" + path.string() + "' has no rows");

  const auto& first = rows.front().second;
  const bool has_header = std::any_of(first.begin(), first.end(),
                                      [](const std::string& cell) { return !trimmed(cell).empty() && !parse_number(cell); });

  std::size_t col = 0;
  if (column) {
    if (!has_header) {
      throw DataError("column '" + *column + "' requested but '" + path.string() + "' has no header row");
    }
    auto it = std::find_if(first.begin(), first.end(),
                           [&](const std::string& h) { return trimmed(h) == *column; });
    if (it == first.end()) throw DataError("column '" + *column + "' not found in '" + path.string() + "'");
    col = static_cast<std::size_t>(it - first.begin());
  } else if (has_header) {
    if (rows.size() < 2) throw DataError("data file '" + path.string() + "' has a header but no data");
    const auto& data0 = rows[1].second;
    std::size_t j = 0;
    while (j < data0.size() && !parse_number(data0[j])) ++j;
    if (j == data0.size()) {
      throw DataError("line " + std::to_string(rows[1].first) + ": no numeric column in '" + path.string() + "'");
    }
    col = j;
  }

  std::vector<double> values;
  for (std::size_t r = has_header ? 1 : 0; r < rows.size(); ++r) {
    const auto& [number, cells] = rows[r];
    if (col >= cells.size()) {
      throw DataError("line " + std::to_string(number) + ": missing column " + std::to_string(col + 1));
    }
    auto value = parse_number(cells[col]);
    if (!value) {
      throw DataError("line " + std::to_string(number) + ": cannot parse '" + cells[col] + "' as a number");
    }
    values.push_back(*value);
  }
  if (values.empty()) throw DataError("data file '" + path.string() + "' has no values");
  return Sample(std::move(values), path.filename().string(), path);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw DataError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw DataError("cannot move output into place at '" + path.string() + "': " + ec.message());
  }
}

void write_csv(const Sample& sample, const std::filesystem::path& path) {
  std::ostringstream os;
  os.precision(17);
  os << "value\n";
  for (double v : sample.values()) os << v << '\n';
  write_file_atomic(path, os.str());
}

}  // namespace ginient
