#pragma once

// Text formats: rationals as "p/q", polynomials as JSON arrays of such strings
// (index = power), and JSON/CSV renderings of the library's report types.

#include <string>
#include <string_view>
#include <vector>

#include "chebsqrt/closed_form.hpp"
#include "chebsqrt/iterates.hpp"
#include "chebsqrt/verify.hpp"

namespace chebsqrt {

std::string polynomial_to_json(const Polynomial& p);
/// Inverse of polynomial_to_json. Throws Error{ParseError}.
Polynomial polynomial_from_json(std::string_view text);

/// {"scheme":..,"p":..,"k":..,"num":[..],"den":[..]}
std::string iterate_to_json(const IterationScheme& scheme, unsigned k, const RationalFunction& f);

/// {"n":..,"scale":..,"terms":[{"weight":..,"pole_param":..}],"precision_bits":..}
std::string partial_fraction_to_json(const PartialFractionForm& pf);

/// JSON array of decimal strings.
std::string nodes_to_json(const std::vector<BigFloat>& nodes);

/// Header "n,m,value,source,sign" and one row per coefficient.
std::string coeff_report_to_csv(const CoeffReport& report);

/// One line, no trailing newline.
std::string check_result_to_json(const CheckResult& r);

std::string guo_report_to_json(const GuoReport& r);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace chebsqrt
