#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kflag {

using Rational = mpq_class;

/// Parses an exact rational: "3", "-3/8", "+1/2".  Throws InvalidInput.
Rational parse_rational(std::string_view text);
/// "p/q" or "p" in lowest terms.
std::string format_rational(const Rational& q);

/// Rational n-vector with zero coordinate sum (a point of t^*).
class WeightVector {
public:
    /// Throws InvalidInput when empty or when the entries do not sum to zero.
    explicit WeightVector(std::vector<Rational> entries);

    /// Comma separated rationals, "1/4,1/8,-3/8".
    static WeightVector parse(std::string_view text);

    int rank() const noexcept { return static_cast<int>(entries_.size()); }
    /// 1-based coordinate.
    const Rational& operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
    std::span<const Rational> entries() const noexcept { return entries_; }

    /// Strictly decreasing entries.
    bool is_generic() const;

    WeightVector scaled(const Rational& factor) const;

    std::string to_string() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<Rational> entries_;
};

} // namespace kflag
