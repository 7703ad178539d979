#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cardlogic {

// A cardinal number from the fragment these models need: the natural numbers
// together with the alephs.  Every finite cardinal is below every aleph, and
// aleph_i < aleph_j iff i < j.  Addition is ordinary addition on finite
// values and maximum as soon as one side is infinite.
class Cardinal {
public:
    constexpr Cardinal() = default;

    static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(false, n); }
    static constexpr Cardinal aleph(std::uint64_t index) { return Cardinal(true, index); }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }
    constexpr bool is_zero() const { return !infinite_ && value_ == 0; }

    // Precondition: is_finite() / is_infinite() respectively.
    constexpr std::uint64_t finite_value() const { return value_; }
    constexpr std::uint64_t aleph_index() const { return value_; }

    // The smallest aleph strictly above this cardinal: aleph_0 for every
    // finite value, aleph_{k+1} for aleph_k.  This is the successor used by
    // the size ladder, which only ever steps from one infinite level (or a
    // finite floor) to the next.
    constexpr Cardinal next_aleph() const {
        return infinite_ ? aleph(value_ + 1) : aleph(0);
    }

    friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;
    // (finite, n) < (finite, m) iff n < m; finite < aleph; alephs by index.
    friend constexpr std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
        if (a.infinite_ != b.infinite_)
            return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    friend constexpr Cardinal operator+(const Cardinal& a, const Cardinal& b) {
        if (a.infinite_ || b.infinite_) return (a < b) ? b : a;
        return finite(a.value_ + b.value_);
    }
    Cardinal& operator+=(const Cardinal& other) { return *this = *this + other; }

    std::string to_string() const;  // "17" or "aleph_2"

private:
    constexpr Cardinal(bool infinite, std::uint64_t value)
        : infinite_(infinite), value_(value) {}

    bool infinite_ = false;
    std::uint64_t value_ = 0;
};

}  // namespace cardlogic
