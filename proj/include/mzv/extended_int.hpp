#pragma once

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace mzv {

/// An integer or +infinity. Infinity compares above every integer and
/// absorbs addition.
class extended_int {
public:
    constexpr extended_int(long long v) noexcept : value_(v) {}

    static constexpr extended_int infinity() noexcept
    {
        extended_int r(0);
        r.infinite_ = true;
        return r;
    }

    constexpr bool is_infinite() const noexcept { return infinite_; }

    long long value() const
    {
        if (infinite_) {
            throw std::domain_error("extended_int: value() of infinity");
        }
        return value_;
    }

    friend constexpr bool operator==(const extended_int& a, const extended_int& b) noexcept
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(const extended_int& a, const extended_int& b) noexcept
    {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ <=> b.infinite_;
        }
        return a.value_ <=> b.value_;
    }

    friend constexpr extended_int operator+(const extended_int& a, const extended_int& b) noexcept
    {
        if (a.infinite_ || b.infinite_) {
            return infinity();
        }
        return extended_int(a.value_ + b.value_);
    }

    friend std::string to_string(const extended_int& x)
    {
        return x.infinite_ ? std::string("inf") : std::to_string(x.value_);
    }

private:
    long long value_ = 0;
    bool infinite_ = false;
};

} // namespace mzv
