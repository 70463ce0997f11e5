#include "ginient/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ginient {

namespace {

nlohmann::ordered_json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::ordered_json to_json_object(const FitReport& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["mle"] = number_or_null(r.mle);
  j["loglik"] = number_or_null(r.loglik);
  j["ks"] = number_or_null(r.ks);
  j["pvalue"] = number_or_null(r.pvalue);
  j["aic"] = number_or_null(r.aic);
  j["bic"] = number_or_null(r.bic);
  j["n"] = r.n;
  if (r.warning) j["warning"] = *r.warning;
  if (r.error) j["error"] = *r.error;
  return j;
}

}  // namespace

std::string format_full(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_7g(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

std::string reports_to_text(const std::vector<FitReport>& rows) {
  const std::vector<std::string> header = {"family", "mle", "loglik", "ks", "pvalue", "aic", "bic", "n"};
  std::vector<std::vector<std::string>> cells;
  for (const FitReport& r : rows) {
    if (!r.ok()) {
      cells.push_back({r.family, "error: " + *r.error});
      continue;
    }
    cells.push_back({r.family, format_7g(r.mle), format_7g(r.loglik), format_7g(r.ks), format_7g(r.pvalue),
                     format_7g(r.aic), format_7g(r.bic), std::to_string(r.n)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : cells) {
    width[0] = std::max(width[0], row[0].size());
    if (row.size() != header.size()) continue;
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << "  ";
      if (c == 0) {
        os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        os << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    os << '\n';
  };
  emit(header);
  for (const auto& row : cells) {
    if (row.size() == header.size()) {
      emit(row);
    } else {
      os << std::left << std::setw(static_cast<int>(width[0])) << row[0] << "  " << row[1] << '\n';
    }
  }
  for (const FitReport& r : rows) {
    if (r.warning) os << "warning (" << r.family << "): " << *r.warning << '\n';
  }
  return os.str();
}

std::string reports_to_csv(const std::vector<FitReport>& rows) {
  std::ostringstream os;
  os << "family,mle,loglik,ks,pvalue,aic,bic,n\n";
  auto cell = [](double v) { return std::isfinite(v) ? format_full(v) : std::string(); };
  for (const FitReport& r : rows) {
    os << r.family << ',' << cell(r.mle) << ',' << cell(r.loglik) << ',' << cell(r.ks) << ','
       << cell(r.pvalue) << ',' << cell(r.aic) << ',' << cell(r.bic) << ',' << r.n << '\n';
  }
  return os.str();
}

std::string report_to_json(const FitReport& row) { return to_json_object(row).dump(2) + "\n"; }

std::string comparison_to_json(const std::string& dataset, double nu, std::size_t n,
                               const std::vector<FitReport>& rows) {
  nlohmann::ordered_json j;
  j["dataset"] = dataset;
  j["nu"] = nu;
  j["n"] = n;
  j["reports"] = nlohmann::ordered_json::array();
  for (const FitReport& r : rows) j["reports"].push_back(to_json_object(r));
  return j.dump(2) + "\n";
}

}  // namespace ginient
