// Exact binned accumulator for doubles (small-superaccumulator scheme).
//
// Every added value is split along fixed 32-bit exponent bins and added to
// signed 64-bit limbs; integer addition is associative, so the accumulated
// state is independent of summation order and of how terms were partitioned
// across chunks. This is what makes chunked moment sums bit-identical to the
// single-threaded sum. finalize() is a deterministic function of the limb
// state.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "zmom/dd.hpp"

namespace zmom {

class ExactAcc {
public:
    static constexpr int kLimbBits = 32;
    // Bit positions cover 2^-1126 .. 2^1122 (all finite doubles).
    static constexpr int kBias = 1126;
    static constexpr int kLimbs = 70;

    // Adds x exactly: x = m * 2^(e-53) with integer m, and m << off is laid
    // across three 32-bit limb pieces (low two unsigned, top arithmetic).
    void add(double x) {
        if (x == 0.0) return;
        int e = 0;
        double f = std::frexp(x, &e);
        auto m = static_cast<std::int64_t>(std::ldexp(f, 53)); // |m| in [2^52, 2^53)
        int pos = e - 53 + kBias;
        int limb = pos >> 5;
        int off = pos & 31;
        std::uint64_t low64 = static_cast<std::uint64_t>(m) << off;
        std::int64_t piece0 = static_cast<std::int64_t>(low64 & 0xffffffffull);
        std::int64_t piece1 = (m >> (32 - off)) & 0xffffffffll;
        std::int64_t piece2 = (off == 0) ? (m < 0 ? -1 : 0) : (m >> (64 - off));
        limbs_[limb] += piece0;
        limbs_[limb + 1] += piece1;
        limbs_[limb + 2] += piece2;
        if (++count_ >= kNormalizeEvery) normalize();
    }

    void merge(const ExactAcc& other) {
        for (int i = 0; i < kLimbs; ++i) limbs_[i] += other.limbs_[i];
        count_ += other.count_;
        if (count_ >= kNormalizeEvery) normalize();
    }

    // Deterministic rounding of the exact limb state to a double.
    double finalize() const {
        ExactAcc tmp = *this;
        tmp.normalize();
        // bring a negative total into sign-magnitude form so no limb weight
        // overflows the double range during conversion
        double sign = 1.0;
        if (tmp.limbs_[kLimbs - 1] < 0) {
            sign = -1.0;
            for (auto& l : tmp.limbs_) l = -l;
            tmp.normalize();
        }
        Dd acc{0.0, 0.0};
        for (int i = kLimbs - 1; i >= 0; --i) {
            if (tmp.limbs_[i] == 0) continue;
            double w = std::ldexp(double(tmp.limbs_[i]), i * kLimbBits - kBias);
            acc = dd_add(acc, w);
        }
        return sign * dd_to_double(acc);
    }

private:
    static constexpr std::int64_t kNormalizeEvery = 1ll << 30;

    void normalize() {
        std::int64_t carry = 0;
        for (int i = 0; i < kLimbs; ++i) {
            std::int64_t v = limbs_[i] + carry;
            carry = v >> kLimbBits; // floor division by 2^32
            limbs_[i] = v - (carry << kLimbBits);
        }
        // Remaining carry is 0 or -1 (sign word); fold into the top limb so
        // finalize sees the two's-complement value.
        limbs_[kLimbs - 1] += carry << kLimbBits;
        count_ = 0;
    }

    std::array<std::int64_t, kLimbs> limbs_{};
    std::int64_t count_ = 0;
};

} // namespace zmom
