#include "osclab/weight.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace osclab {

namespace {

std::string format_exponent(double p) {
    std::ostringstream os;
    os << p; // default precision gives "2", "1.5", ...
    return os.str();
}

} // namespace

ConvexWeight ConvexWeight::power(double p) {
    if (!std::isfinite(p) || p < 1.0)
        throw argument_error("power weight requires a finite exponent >= 1");
    ConvexWeight w;
    w.kind_ = Kind::Power;
    w.p_ = p;
    w.strictly_convex_ = p > 1.0;
    w.fast_path_ = (p == 2.0) ? FastPath::Mean : (p == 1.0 ? FastPath::Median : FastPath::None);
    w.descriptor_ = "power:" + format_exponent(p);
    return w;
}

ConvexWeight ConvexWeight::exponential() {
    ConvexWeight w;
    w.kind_ = Kind::Exp;
    w.strictly_convex_ = true;
    w.fast_path_ = FastPath::None;
    w.descriptor_ = "exp";
    return w;
}

ConvexWeight ConvexWeight::hyperbolic_cosine() {
    ConvexWeight w;
    w.kind_ = Kind::Cosh;
    w.strictly_convex_ = true;
    w.fast_path_ = FastPath::None;
    w.descriptor_ = "cosh";
    return w;
}

ConvexWeight ConvexWeight::regularized(ConvexWeight base, int n) {
    if (n < 1)
        throw argument_error("regularized weight requires n >= 1");
    ConvexWeight w;
    w.kind_ = Kind::Regularized;
    w.reg_n_ = n;
    w.base_ = std::make_shared<const ConvexWeight>(std::move(base));
    w.strictly_convex_ = true; // the t^2/n term is strictly convex
    w.fast_path_ = FastPath::None;
    w.descriptor_ = "reg:" + w.base_->descriptor() + ":" + std::to_string(n);
    return w;
}

ConvexWeight ConvexWeight::custom(std::string name, std::function<double(double)> f,
                                  bool strictly_convex) {
    if (!f)
        throw argument_error("custom weight requires a callable");
    ConvexWeight w;
    w.kind_ = Kind::Custom;
    w.custom_ = std::move(f);
    w.strictly_convex_ = strictly_convex;
    w.fast_path_ = FastPath::None;
    w.descriptor_ = "custom:" + name;
    return w;
}

double ConvexWeight::eval_raw(double t) const {
    switch (kind_) {
        case Kind::Power: {
            const double a = std::fabs(t);
            if (p_ == 2.0) return a * a;
            if (p_ == 1.0) return a;
            if (p_ == 3.0) return a * a * a;
            if (p_ == 1.5) return a * std::sqrt(a);
            if (p_ == 4.0) { const double s = a * a; return s * s; }
            return std::pow(a, p_);
        }
        case Kind::Exp:
            return std::exp(std::fabs(t));
        case Kind::Cosh:
            return std::cosh(t);
        case Kind::Regularized:
            return base_->eval(t) + t * t / static_cast<double>(reg_n_);
        case Kind::Custom:
            return custom_(t);
    }
    return 0.0; // unreachable
}

double ConvexWeight::eval(double t) const {
    if (!std::isfinite(t))
        throw eval_error("weight evaluated at a non-finite point", t);
    const double y = eval_raw(t);
    if (!std::isfinite(y))
        throw eval_error("weight '" + descriptor_ + "' overflowed at t = " + std::to_string(t), t);
    return y;
}

ConvexWeight parse_weight(const std::string& descriptor) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = descriptor.find(':', start);
        if (pos == std::string::npos) {
            parts.push_back(descriptor.substr(start));
            break;
        }
        parts.push_back(descriptor.substr(start, pos - start));
        start = pos + 1;
    }

    if (parts.empty() || parts[0].empty())
        throw argument_error("empty weight descriptor");

    const std::string& head = parts[0];
    if (head == "exp") {
        if (parts.size() != 1) throw argument_error("'exp' takes no parameters");
        return ConvexWeight::exponential();
    }
    if (head == "cosh") {
        if (parts.size() != 1) throw argument_error("'cosh' takes no parameters");
        return ConvexWeight::hyperbolic_cosine();
    }
    if (head == "power") {
        if (parts.size() != 2)
            throw argument_error("expected 'power:P' in weight descriptor '" + descriptor + "'");
        try {
            std::size_t used = 0;
            double p = std::stod(parts[1], &used);
            if (used != parts[1].size()) throw argument_error("trailing junk");
            return ConvexWeight::power(p);
        } catch (const argument_error&) {
            throw;
        } catch (const std::exception&) {
            throw argument_error("bad power exponent in weight descriptor '" + descriptor + "'");
        }
    }
    if (head == "reg") {
        // reg:<base descriptor>:N — the base may itself contain ':'.
        if (parts.size() < 3)
            throw argument_error("expected 'reg:<base>:N' in weight descriptor '" + descriptor + "'");
        const std::string& tail = parts.back();
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(tail, &used);
            if (used != tail.size()) throw argument_error("trailing junk");
        } catch (const std::exception&) {
            throw argument_error("bad regularization parameter in '" + descriptor + "'");
        }
        const std::size_t base_len = descriptor.size() - tail.size() - 1 - 4; // strip "reg:" and ":N"
        return ConvexWeight::regularized(parse_weight(descriptor.substr(4, base_len)), n);
    }
    throw argument_error("unknown weight family '" + head + "'");
}

} // namespace osclab
