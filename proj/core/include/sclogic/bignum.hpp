#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scl {

// Minimal arbitrary-precision unsigned integer: little-endian limbs in base
// 10^9. Supports exactly what the counting formulas need.
class BigNat {
public:
    BigNat() : limbs_{0} {}
    BigNat(std::uint64_t value);  // NOLINT(google-explicit-constructor)

    BigNat operator+(const BigNat& other) const;
    BigNat operator*(const BigNat& other) const;
    BigNat& operator+=(const BigNat& other) { return *this = *this + other; }
    BigNat& operator*=(const BigNat& other) { return *this = *this * other; }

    bool operator==(const BigNat& other) const { return limbs_ == other.limbs_; }
    bool operator!=(const BigNat& other) const { return limbs_ != other.limbs_; }

    std::string to_string() const;

    // Fits in uint64? Then its value.
    bool fits_u64() const;
    std::uint64_t as_u64() const;

private:
    static constexpr std::uint32_t kBase = 1'000'000'000;
    void trim();
    std::vector<std::uint32_t> limbs_;
};

}  // namespace scl
