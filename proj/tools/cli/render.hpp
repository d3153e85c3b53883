#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <utcochar/closedform.hpp>
#include <utcochar/cochar.hpp>
#include <utcochar/partitions.hpp>
#include <utcochar/schur.hpp>
#include <utcochar/series.hpp>

namespace utcochar::cli
{

enum class Format { text, json, csv };

// Coefficients go out as JSON integers when they fit in int64, otherwise as
// decimal strings. integer_from_json accepts both.
nlohmann::json integer_to_json(const Integer &value);
Integer integer_from_json(const nlohmann::json &value);

// [7,6,5,3]; the empty partition is [].
nlohmann::json partition_to_json(const Partition &lambda);
Partition partition_from_json(const nlohmann::json &value);

// {"d", "degree_bound", "effective_bound", "terms": [{"partition", "coeff"}]}.
nlohmann::json multiplicity_series_to_json(const MultiplicitySeries &series);
MultiplicitySeries multiplicity_series_from_json(const nlohmann::json &value);

// Space-separated parts, "" for the empty partition.
std::string partition_to_csv(const Partition &lambda);

// Rendered multiplicity table. The closed-form column is present when a
// closed form exists for k (k ≤ 3).
std::string render_multiplicities(const MultiplicityTable &table, const MultiplicitySeries &series, Format format,
                                  bool v_form);

// cl_0..cl_N with optional closed-form values (empty when unavailable).
std::string render_colength(int k, std::size_t d, const TruncatedSeries &colength, const TruncatedSeries *closed,
                            Format format);

std::string render_hilbert(int k, const TruncatedSeries &hilbert, bool forms_identical, Format format);

} // namespace utcochar::cli
