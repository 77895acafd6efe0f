#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qvar {

using index_t = std::int64_t;

/// Thrown when a request would require more memory/index range than the
/// desk-scale layout supports.
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by kernel/quadrature code when a computation produces or would
/// produce non-finite values.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed integer interval [lo, hi].
struct interval {
    index_t lo = 0;
    index_t hi = -1;

    interval() = default;
    interval(index_t l, index_t h) : lo(l), hi(h) {}

    bool empty() const { return hi < lo; }
    index_t length() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(index_t n) const { return n >= lo && n <= hi; }
    bool contains(const interval& other) const {
        return other.empty() || (other.lo >= lo && other.hi <= hi);
    }
    friend bool operator==(const interval& a, const interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Finitely supported real function on the integers, stored densely over a
/// window. Evaluation outside the stored window is exactly zero.
class sequence {
public:
    sequence(index_t offset, std::vector<double> values)
        : offset_(offset), values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("sequence: values must be non-empty");
    }

    static sequence zero(const interval& w) {
        return sequence(w.lo, std::vector<double>(static_cast<std::size_t>(w.length()), 0.0));
    }

    static sequence delta(index_t n, double v = 1.0) {
        return sequence(n, std::vector<double>{v});
    }

    index_t offset() const { return offset_; }
    index_t size() const { return static_cast<index_t>(values_.size()); }
    interval window() const { return {offset_, offset_ + size() - 1}; }
    const std::vector<double>& values() const { return values_; }

    double at(index_t n) const {
        if (n < offset_ || n >= offset_ + size()) return 0.0;
        return values_[static_cast<std::size_t>(n - offset_)];
    }

    /// Smallest window containing all nonzero entries; empty optional when
    /// the sequence is identically zero.
    std::optional<interval> nonzero_window() const {
        index_t lo = offset_, hi = offset_ + size() - 1;
        while (lo <= hi && at(lo) == 0.0) ++lo;
        while (hi >= lo && at(hi) == 0.0) --hi;
        if (lo > hi) return std::nullopt;
        return interval{lo, hi};
    }

    double l1_norm() const {
        double s = 0.0;
        for (double v : values_) s += std::fabs(v);
        return s;
    }

    double linf_norm() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::fabs(v));
        return m;
    }

    sequence shifted(index_t d) const { return sequence(offset_ + d, values_); }

    sequence reflected() const {
        std::vector<double> v(values_.rbegin(), values_.rend());
        return sequence(-(offset_ + size() - 1), std::move(v));
    }

    sequence scaled(double c) const {
        std::vector<double> v = values_;
        for (double& x : v) x *= c;
        return sequence(offset_, std::move(v));
    }

    friend sequence operator+(const sequence& a, const sequence& b) {
        index_t lo = std::min(a.offset(), b.offset());
        index_t hi = std::max(a.window().hi, b.window().hi);
        std::vector<double> v(static_cast<std::size_t>(hi - lo + 1), 0.0);
        for (index_t n = lo; n <= hi; ++n)
            v[static_cast<std::size_t>(n - lo)] = a.at(n) + b.at(n);
        return sequence(lo, std::move(v));
    }

private:
    index_t offset_;
    std::vector<double> values_;
};

/// Strictly positive function over an integer window. Construction rejects
/// nonpositive (and non-finite) entries; evaluation outside the stored
/// window is an error, never an extrapolation.
class weight {
public:
    weight(index_t offset, std::vector<double> values)
        : offset_(offset), values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("weight: values must be non-empty");
        for (double v : values_)
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::invalid_argument("weight: all values must be strictly positive and finite");
    }

    index_t offset() const { return offset_; }
    index_t size() const { return static_cast<index_t>(values_.size()); }
    interval window() const { return {offset_, offset_ + size() - 1}; }
    const std::vector<double>& values() const { return values_; }

    bool contains(index_t n) const { return n >= offset_ && n < offset_ + size(); }
    bool contains(const interval& w) const { return window().contains(w); }

    double at(index_t n) const {
        if (!contains(n))
            throw std::out_of_range("weight: index " + std::to_string(n) + " outside stored window");
        return values_[static_cast<std::size_t>(n - offset_)];
    }

    weight scaled(double c) const {
        if (!(c > 0.0)) throw std::invalid_argument("weight: scale factor must be positive");
        std::vector<double> v = values_;
        for (double& x : v) x *= c;
        return weight(offset_, std::move(v));
    }

    weight reflected() const {
        std::vector<double> v(values_.rbegin(), values_.rend());
        return weight(-(offset_ + size() - 1), std::move(v));
    }

private:
    index_t offset_;
    std::vector<double> values_;
};

/// Uniformly sampled function on the real line: values at x0 + k*step.
/// Outside the sampled domain the function is treated as zero.
template <class T = double>
class sampled_function {
public:
    sampled_function(double x0, double step, std::vector<T> values)
        : x0_(x0), step_(step), values_(std::move(values)) {
        if (!(step_ > 0.0))
            throw std::invalid_argument("sampled_function: step must be positive");
        if (values_.empty())
            throw std::invalid_argument("sampled_function: values must be non-empty");
    }

    double x0() const { return x0_; }
    double step() const { return step_; }
    double x_end() const { return x0_ + step_ * static_cast<double>(values_.size() - 1); }
    std::size_t size() const { return values_.size(); }
    double x(std::size_t i) const { return x0_ + step_ * static_cast<double>(i); }
    const std::vector<T>& values() const { return values_; }
    T value(std::size_t i) const { return values_[i]; }

    /// Piecewise-linear interpolation inside the domain, zero outside.
    T interpolate(double x) const {
        if (x < x0_ || x > x_end()) return T{};
        double u = (x - x0_) / step_;
        auto i = static_cast<std::size_t>(std::floor(u));
        if (i + 1 >= values_.size()) return values_.back();
        double frac = u - static_cast<double>(i);
        return values_[i] * (1.0 - frac) + values_[i + 1] * frac;
    }

private:
    double x0_;
    double step_;
    std::vector<T> values_;
};

/// Finite increasing parameter grid (truncation radii t or average lengths N).
class param_grid {
public:
    explicit param_grid(std::vector<double> points) : points_(std::move(points)) {
        if (points_.empty())
            throw std::invalid_argument("param_grid: at least one point required");
        for (std::size_t i = 0; i + 1 < points_.size(); ++i)
            if (!(points_[i] < points_[i + 1]))
                throw std::invalid_argument("param_grid: points must be strictly increasing");
    }

    /// Geometric grid base^lo_exp .. base^hi_exp with `per_octave` points per
    /// factor of base.
    static param_grid dyadic(int lo_exp, int hi_exp, int per_octave = 1, double base = 2.0) {
        if (hi_exp < lo_exp || per_octave < 1)
            throw std::invalid_argument("param_grid::dyadic: bad exponent range");
        std::vector<double> pts;
        int total = (hi_exp - lo_exp) * per_octave;
        pts.reserve(static_cast<std::size_t>(total) + 1);
        for (int k = 0; k <= total; ++k)
            pts.push_back(std::pow(base, lo_exp + static_cast<double>(k) / per_octave));
        return param_grid(std::move(pts));
    }

    /// 0,1,...,n_max as a discrete averaging grid.
    static param_grid integers(index_t n_max) {
        if (n_max < 0) throw std::invalid_argument("param_grid::integers: n_max must be >= 0");
        std::vector<double> pts(static_cast<std::size_t>(n_max) + 1);
        for (index_t i = 0; i <= n_max; ++i) pts[static_cast<std::size_t>(i)] = static_cast<double>(i);
        return param_grid(std::move(pts));
    }

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }

    bool all_positive() const { return points_.front() > 0.0; }
    bool all_nonnegative_integers() const {
        for (double p : points_)
            if (p < 0.0 || p != std::floor(p)) return false;
        return true;
    }

private:
    std::vector<double> points_;
};

/// Ordered family {a_t} over an increasing parameter grid; the object whose
/// q-variation is taken. T is double or std::complex<double>.
template <class T = double>
struct family_trace {
    std::vector<double> params;
    std::vector<T> values;

    family_trace() = default;
    family_trace(std::vector<double> p, std::vector<T> v)
        : params(std::move(p)), values(std::move(v)) {
        if (params.size() != values.size())
            throw std::invalid_argument("family_trace: params/values size mismatch");
    }

    /// Trace with implicit parameters 0,1,...,n-1.
    static family_trace from_values(std::vector<T> v) {
        std::vector<double> p(v.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<double>(i);
        return family_trace(std::move(p), std::move(v));
    }

    std::size_t size() const { return values.size(); }
};

}  // namespace qvar
