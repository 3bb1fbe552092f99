#include "attnsim/bigcount.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace attnsim {

BigCount::BigCount(uint64_t v) {
    do {
        limbs_.push_back(static_cast<uint32_t>(v % kBase));
        v /= kBase;
    } while (v != 0);
}

void BigCount::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigCount BigCount::pow2(unsigned exponent) {
    BigCount r(1);
    for (unsigned i = 0; i < exponent; ++i) r.mul_small(2);
    return r;
}

BigCount& BigCount::operator+=(const BigCount& o) {
    size_t n = std::max(limbs_.size(), o.limbs_.size());
    limbs_.resize(n, 0);
    uint32_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(limbs_[i]) + carry +
                     (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<uint32_t>(s % kBase);
        carry = static_cast<uint32_t>(s / kBase);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigCount& BigCount::mul_small(uint32_t m) {
    uint64_t carry = 0;
    for (uint32_t& limb : limbs_) {
        uint64_t p = static_cast<uint64_t>(limb) * m + carry;
        limb = static_cast<uint32_t>(p % kBase);
        carry = p / kBase;
    }
    while (carry) {
        limbs_.push_back(static_cast<uint32_t>(carry % kBase));
        carry /= kBase;
    }
    trim();
    return *this;
}

BigCount& BigCount::operator*=(const BigCount& o) {
    std::vector<uint64_t> acc(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] == 0) continue;
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            // limb products fit: (1e9-1)^2 + carries < 2^63
            uint64_t cur = acc[i + j] + static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
            acc[i + j] = cur % kBase;
            carry = cur / kBase;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = acc[k] + carry;
            acc[k] = cur % kBase;
            carry = cur / kBase;
            ++k;
        }
    }
    limbs_.assign(acc.begin(), acc.end());
    trim();
    return *this;
}

BigCount& BigCount::divexact_small(uint32_t d) {
    if (d == 0) throw std::invalid_argument("BigCount: division by zero");
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = rem * kBase + limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    if (rem != 0) throw std::logic_error("BigCount: division left a remainder");
    trim();
    return *this;
}

int BigCount::compare(const BigCount& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

bool BigCount::fits_u64() const {
    return compare(BigCount(UINT64_MAX)) <= 0;
}

uint64_t BigCount::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigCount: value exceeds u64");
    uint64_t v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return v;
}

std::string BigCount::to_string() const {
    std::string s = std::to_string(limbs_.back());
    char buf[10];
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
        s += buf;
    }
    return s;
}

std::string BigCount::to_sci3() const {
    std::string digits = to_string();
    int exponent = static_cast<int>(digits.size()) - 1;
    // Round the leading three significant digits on the fourth.
    unsigned lead = 0;
    for (size_t i = 0; i < 3; ++i)
        lead = lead * 10 + (i < digits.size() ? digits[i] - '0' : 0);
    if (digits.size() > 3 && digits[3] >= '5') ++lead;
    if (lead >= 1000) {
        lead /= 10;
        ++exponent;
    }
    std::string m = std::to_string(lead);
    while (m.size() < 3) m += '0';
    return m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(exponent);
}

size_t BigCount::digits10() const {
    return to_string().size();
}

double BigCount::log10_approx() const {
    std::string digits = to_string();
    double mant = 0.0;
    for (size_t i = 0; i < std::min<size_t>(15, digits.size()); ++i)
        mant = mant * 10 + (digits[i] - '0');
    double scale = static_cast<double>(digits.size()) -
                   static_cast<double>(std::min<size_t>(15, digits.size()));
    return std::log10(mant) + scale;
}

}  // namespace attnsim
