#pragma once

#include <functional>
#include <memory>
#include <string>

#include "osclab/errors.hpp"

namespace osclab {

/// Structural shortcut available when minimizing over the shift constant.
enum class FastPath { Mean, Median, None };

/// Even, nonnegative, convex weight with Q(0) as its minimum.
///
/// Built-in families: |t|^p (p >= 1), exp|t|, cosh t, a regularized
/// variant Q(t) + t^2/n, and user-supplied callables. Evaluation throws
/// eval_error if the result is not finite.
class ConvexWeight {
public:
    static ConvexWeight power(double p);
    static ConvexWeight exponential();
    static ConvexWeight hyperbolic_cosine();
    /// base(t) + t^2 / n, strictly convex for any convex base. n >= 1.
    static ConvexWeight regularized(ConvexWeight base, int n);
    /// Caller promises `f` is even, nonnegative and convex; `strictly_convex`
    /// tells the optimizer whether the minimizing constant is unique.
    static ConvexWeight custom(std::string name, std::function<double(double)> f,
                               bool strictly_convex);

    double operator()(double t) const { return eval(t); }
    double eval(double t) const;

    bool strictly_convex() const { return strictly_convex_; }
    FastPath fast_path() const { return fast_path_; }
    /// Parsable textual form, e.g. "power:2", "exp", "reg:cosh:10".
    const std::string& descriptor() const { return descriptor_; }
    /// Exponent for the power family, 0 otherwise.
    double power_exponent() const { return p_; }

private:
    enum class Kind { Power, Exp, Cosh, Regularized, Custom };

    ConvexWeight() = default;

    Kind kind_ = Kind::Power;
    double p_ = 2.0;
    int reg_n_ = 0;
    std::shared_ptr<const ConvexWeight> base_;
    std::function<double(double)> custom_;
    bool strictly_convex_ = true;
    FastPath fast_path_ = FastPath::None;
    std::string descriptor_;

    double eval_raw(double t) const;
};

/// Parse a weight descriptor: "power:P" (P >= 1), "exp", "cosh",
/// "reg:<base descriptor>:N" (N >= 1). Throws argument_error on bad input.
ConvexWeight parse_weight(const std::string& descriptor);

} // namespace osclab
