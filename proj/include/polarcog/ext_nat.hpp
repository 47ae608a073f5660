#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace polarcog {

/// Natural number extended with a distinguished infinity. Addition saturates.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint32_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtNat infinity() {
        ExtNat r;
        r.inf_ = true;
        return r;
    }

    constexpr bool is_finite() const { return !inf_; }
    constexpr bool is_infinite() const { return inf_; }
    /// Precondition: is_finite().
    constexpr std::uint32_t value() const { return value_; }

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.inf_ || b.inf_) return infinity();
        // Finite values are bounded by vertex counts, far below the 32-bit range.
        return ExtNat(a.value_ + b.value_);
    }
    ExtNat& operator+=(ExtNat o) { return *this = *this + o; }

    friend constexpr bool operator==(ExtNat a, ExtNat b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
        if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return inf_ ? "inf" : std::to_string(value_); }
    friend std::ostream& operator<<(std::ostream& os, ExtNat v) { return os << v.to_string(); }

private:
    std::uint32_t value_ = 0;
    bool inf_ = false;
};

constexpr ExtNat min(ExtNat a, ExtNat b) { return b < a ? b : a; }

}  // namespace polarcog
