#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace attnsim {

// Exact non-negative integer of unbounded magnitude. All arithmetic is
// integer-exact; the only float involvement is the optional scientific
// rendering of an already-exact decimal expansion.
class BigCount {
  public:
    BigCount() : limbs_{0} {}
    BigCount(uint64_t v);  // NOLINT: implicit by design

    static BigCount pow2(unsigned exponent);

    BigCount& operator+=(const BigCount& o);
    BigCount& operator*=(const BigCount& o);
    BigCount& mul_small(uint32_t m);
    // Exact division by a small divisor; throws if a remainder is left.
    BigCount& divexact_small(uint32_t d);

    friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
    friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

    int compare(const BigCount& o) const;
    bool operator==(const BigCount& o) const { return compare(o) == 0; }
    bool operator<(const BigCount& o) const { return compare(o) < 0; }
    bool operator<=(const BigCount& o) const { return compare(o) <= 0; }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    bool fits_u64() const;
    uint64_t to_u64() const;  // throws when it does not fit

    std::string to_string() const;   // exact decimal
    std::string to_sci3() const;     // 3 significant digits, e.g. "1.07e301"
    size_t digits10() const;
    double log10_approx() const;

  private:
    // Base 1e9, little-endian.
    static constexpr uint32_t kBase = 1000000000u;
    std::vector<uint32_t> limbs_;
    void trim();
};

}  // namespace attnsim
