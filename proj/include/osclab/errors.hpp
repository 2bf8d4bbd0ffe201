#pragma once

#include <stdexcept>
#include <string>

namespace osclab {

/// Base class for all osclab errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An interval fell outside the domain of a function.
struct domain_error : error {
    using error::error;
};

/// An argument violated a documented precondition (bad range, bad sign, ...).
struct argument_error : error {
    using error::error;
};

/// A weight evaluation produced a non-finite value.
struct eval_error : error {
    double offending_value;
    eval_error(const std::string& msg, double t) : error(msg), offending_value(t) {}
};

/// A lemma-level contract (hypothesis) was not satisfied by the inputs.
struct contract_error : error {
    using error::error;
};

} // namespace osclab
