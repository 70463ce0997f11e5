#pragma once

#include <string>
#include <vector>

#include "ginient/fitgof.hpp"

namespace ginient {

/// Shortest decimal string that round-trips to the same double.
std::string format_full(double v);

/// Seven significant digits, the precision of the published comparison table.
std::string format_7g(double v);

/// Aligned text table, numbers to seven significant digits.
std::string reports_to_text(const std::vector<FitReport>& rows);

/// Header "family,mle,loglik,ks,pvalue,aic,bic,n"; full precision; failed rows
/// leave the numeric cells empty.
std::string reports_to_csv(const std::vector<FitReport>& rows);

/// One FitReport as a JSON object with fields family, mle, loglik, ks, pvalue,
/// aic, bic, n (plus warning / error when present; NaN becomes null).
std::string report_to_json(const FitReport& row);

/// {"dataset": ..., "nu": ..., "n": ..., "reports": [...]}.
std::string comparison_to_json(const std::string& dataset, double nu, std::size_t n,
                               const std::vector<FitReport>& rows);

}  // namespace ginient
