#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spacecurve {

/// Arc-length interval, possibly unbounded, with open or closed endpoints.
class Interval {
public:
    Interval() = default;

    static Interval closed(double lo, double hi) { return Interval(lo, hi, false, false); }
    static Interval open(double lo, double hi) { return Interval(lo, hi, true, true); }
    static Interval all() {
        return Interval(-std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity(), true, true);
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool open_lo() const { return open_lo_; }
    bool open_hi() const { return open_hi_; }

    bool empty() const { return lo_ > hi_ || (lo_ == hi_ && (open_lo_ || open_hi_)); }
    double length() const { return hi_ - lo_; }

    bool contains(double s) const {
        if (open_lo_ ? !(s > lo_) : !(s >= lo_)) return false;
        if (open_hi_ ? !(s < hi_) : !(s <= hi_)) return false;
        return true;
    }

    /// Membership in the closure [lo, hi]; antiderivatives extend there.
    bool contains_closure(double s) const { return s >= lo_ && s <= hi_; }

    bool contains(const Interval& o) const {
        return contains_closure(o.lo_) && contains_closure(o.hi_);
    }

    Interval intersect(const Interval& o) const {
        Interval r;
        if (lo_ > o.lo_) { r.lo_ = lo_; r.open_lo_ = open_lo_; }
        else if (lo_ < o.lo_) { r.lo_ = o.lo_; r.open_lo_ = o.open_lo_; }
        else { r.lo_ = lo_; r.open_lo_ = open_lo_ || o.open_lo_; }
        if (hi_ < o.hi_) { r.hi_ = hi_; r.open_hi_ = open_hi_; }
        else if (hi_ > o.hi_) { r.hi_ = o.hi_; r.open_hi_ = o.open_hi_; }
        else { r.hi_ = hi_; r.open_hi_ = open_hi_ || o.open_hi_; }
        return r;
    }

    /// Reference point for antiderivative normalization: 0 when the closure
    /// contains it, otherwise the nearest finite endpoint.
    double anchor() const {
        if (contains_closure(0.0)) return 0.0;
        if (std::isfinite(lo_)) return lo_;
        if (std::isfinite(hi_)) return hi_;
        return 0.0;
    }

    std::string str() const {
        return std::string(open_lo_ ? "(" : "[") + std::to_string(lo_) + ", " +
               std::to_string(hi_) + (open_hi_ ? ")" : "]");
    }

private:
    Interval(double lo, double hi, bool olo, bool ohi)
        : lo_(lo), hi_(hi), open_lo_(olo), open_hi_(ohi) {}

    double lo_ = 1.0;
    double hi_ = -1.0;  // default-constructed interval is empty
    bool open_lo_ = false;
    bool open_hi_ = false;
};

}  // namespace spacecurve
