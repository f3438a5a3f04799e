#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace swarmgrid {

/// Currency amount held as integer euro-cents so budget arithmetic and
/// comparisons stay exact no matter how many purchases are summed.
class Money {
public:
    constexpr Money() = default;

    static constexpr Money from_cents(std::int64_t cents) {
        Money m;
        m.cents_ = cents;
        return m;
    }

    static Money from_eur(double eur) { return from_cents(std::llround(eur * 100.0)); }

    [[nodiscard]] constexpr std::int64_t cents() const { return cents_; }
    [[nodiscard]] constexpr double eur() const { return static_cast<double>(cents_) / 100.0; }

    constexpr Money operator+(Money o) const { return from_cents(cents_ + o.cents_); }
    constexpr Money operator-(Money o) const { return from_cents(cents_ - o.cents_); }
    constexpr Money operator*(std::int64_t n) const { return from_cents(cents_ * n); }
    constexpr Money& operator+=(Money o) {
        cents_ += o.cents_;
        return *this;
    }
    constexpr auto operator<=>(const Money&) const = default;

private:
    std::int64_t cents_ = 0;
};

constexpr Money operator*(std::int64_t n, Money m) { return m * n; }

} // namespace swarmgrid
