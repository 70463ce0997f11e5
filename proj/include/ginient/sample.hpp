#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ginient {

struct BuiltinSource {};

/// A non-empty, ordered batch of observations with provenance. Sign checks
/// are left to the operations that need them (GMD admits negative values).
class Sample {
 public:
  using Source = std::variant<BuiltinSource, std::filesystem::path>;

  /// Throws DataError on an empty or non-finite input.
  Sample(std::vector<double> values, std::string name, Source source);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const std::string& name() const { return name_; }
  const Source& source() const { return source_; }
  bool is_builtin() const { return std::holds_alternative<BuiltinSource>(source_); }

  double sum() const;
  double mean() const;
  bool all_non_negative() const;
  std::vector<double> sorted() const;

 private:
  std::vector<double> values_;
  std::string name_;
  Source source_;
};

/// Yearly loss ratios for California earthquake insurance, 1971 through 1994
/// (Jaffee and Russell, 1997), in calendar order.
Sample builtin_dataset();

/// Reads one numeric column of a comma-separated file. A first row that does
/// not parse as numbers is taken as a header. Without `column`, the first
/// column whose first data cell is numeric is used. Blank lines are skipped.
/// Throws DataError naming the line of any unparsable cell.
Sample load_csv(const std::filesystem::path& path, const std::optional<std::string>& column = {});

/// Writes a single-column CSV (header "value") at full precision, atomically.
void write_csv(const Sample& sample, const std::filesystem::path& path);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Splits one CSV record, honouring double-quoted fields with "" escapes.
std::vector<std::string> split_csv_record(const std::string& line);

/// Parses a whole cell as a finite double (surrounding blanks allowed).
std::optional<double> parse_number(std::string_view text);

}  // namespace ginient
