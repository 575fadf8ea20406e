#pragma once

#include <string>

#include "trgr/fibers.hpp"
#include "trgr/matrix.hpp"
#include "trgr/plucker.hpp"

namespace trgr {

/// Matrices serialize as JSON arrays of rows of "p/q" strings.
std::string to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const std::string& text);

/// Object keyed by the comma-joined element list of each index set, in the
/// canonical enumeration order.
std::string to_json(const PluckerVector& v);

/// Probe reports: inputs, seed, per-curve valuations, span data, pass/fail.
std::string to_json(const ExceptionalProbe& probe);
std::string to_json(const SmoothnessReport& report);

}  // namespace trgr
