#pragma once

#include <cstdint>

namespace dqdyn {

/// Tally of scalar multiplications and additions performed by the algebra
/// kernels. Passed explicitly to the kernel that should be counted; there is
/// no global counter. Subtractions count as additions, sign flips as
/// multiplications by -1.
struct OpCounter {
    std::int64_t mults = 0;
    std::int64_t adds  = 0;

    void tally(std::int64_t m, std::int64_t a) noexcept {
        mults += m;
        adds += a;
    }
    void reset() noexcept { mults = 0; adds = 0; }

    OpCounter& operator+=(const OpCounter& other) noexcept {
        mults += other.mults;
        adds += other.adds;
        return *this;
    }
};

inline void tally(OpCounter* c, std::int64_t m, std::int64_t a) noexcept {
    if (c != nullptr) c->tally(m, a);
}

}  // namespace dqdyn
