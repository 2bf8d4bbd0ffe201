#pragma once

#include <string>

#include "osclab/step_function.hpp"

namespace osclab {

/// Parse {"domain":[a,b],"segments":[{"len":L,"val":V},...]} from JSON text.
/// "domain" defaults to [0,1] when absent. Segment lengths must sum to the
/// domain length within 1e-9; they are then rescaled proportionally to meet
/// the internal 1e-12 invariant. Malformed input → argument_error.
StepFunction step_function_from_json(const std::string& text);

/// Serialize in the same format (floats carry full precision).
std::string step_function_to_json(const StepFunction& f);

/// File variants; I/O failures raise osclab::error naming the path.
StepFunction load_step_function(const std::string& path);
void save_step_function(const StepFunction& f, const std::string& path);

} // namespace osclab
