#pragma once

#include "adc/cells.hpp"
#include "adc/colimits.hpp"
#include "adc/complex.hpp"
#include "adc/verify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace adc {

using Json = nlohmann::ordered_json;

/// Fields in the order name, basis, d, aug, marks. Chain terms are sorted
/// by id; coefficients beyond 64 bits are written as decimal strings.
Json adc_to_json(const Complex& k);
/// Throws SchemaError naming the offending field.
Complex adc_from_json(const Json& j);

/// indent < 0 gives a single line.
std::string encode_adc(const Complex& k, int indent = -1);
/// Throws ParseError (with line and column) or SchemaError.
Complex decode_adc(std::string_view text);

Json chain_to_json(const Chain& c);

/// {"dim": n, "rows": [[minus, plus], ...]} with chains as [[coef, id], ...].
Json cell_to_json(const Cell& c);
/// Chain degrees are read off the complex. Throws SchemaError.
Cell cell_from_json(const Json& j, const Complex& k);
Cell decode_cell(std::string_view text, const Complex& k);

Json step_to_json(const AttachStep& s);
Json js_generator_to_json(const JsGenerator& g);

Json check_report_to_json(const CheckReport& r);
/// Timings are omitted when include_timings is false, making the output
/// byte-identical across runs.
Json suite_report_to_json(const SuiteReport& s, bool include_timings = true);

/// Parses JSON text, converting syntax errors into ParseError.
Json parse_json(std::string_view text);

} // namespace adc
