#include "sclogic/bignum.hpp"

#include <algorithm>

namespace scl {

BigNat::BigNat(std::uint64_t value) {
    limbs_.clear();
    do {
        limbs_.push_back(std::uint32_t(value % kBase));
        value /= kBase;
    } while (value != 0);
}

void BigNat::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::operator+(const BigNat& other) const {
    BigNat out;
    out.limbs_.assign(std::max(limbs_.size(), other.limbs_.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
        std::uint64_t sum = carry;
        if (i < limbs_.size()) sum += limbs_[i];
        if (i < other.limbs_.size()) sum += other.limbs_[i];
        out.limbs_[i] = std::uint32_t(sum % kBase);
        carry = sum / kBase;
    }
    out.trim();
    return out;
}

BigNat BigNat::operator*(const BigNat& other) const {
    BigNat out;
    out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] == 0) continue;
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                std::uint64_t(limbs_[i]) * other.limbs_[j] + carry;
            out.limbs_[i + j] = std::uint32_t(cur % kBase);
            carry = cur / kBase;
        }
        std::size_t k = i + other.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = std::uint32_t(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    out.trim();
    return out;
}

std::string BigNat::to_string() const {
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

bool BigNat::fits_u64() const {
    if (limbs_.size() > 3) return false;
    if (limbs_.size() < 3) return true;
    // 2^64 - 1 = 18446744073709551615 = {709551615, 446744073, 18}.
    if (limbs_[2] != 18) return limbs_[2] < 18;
    if (limbs_[1] != 446744073) return limbs_[1] < 446744073;
    return limbs_[0] <= 709551615;
}

std::uint64_t BigNat::as_u64() const {
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return v;
}

}  // namespace scl
