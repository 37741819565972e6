#pragma once

#include <cstdint>
#include <ostream>

namespace orhyp {

// An incidence orientation or adjacency sign: either +1 or -1.
class Sign {
public:
    constexpr Sign() noexcept = default;

    static constexpr Sign plus() noexcept { return Sign(1); }
    static constexpr Sign minus() noexcept { return Sign(-1); }

    // Throws domain_error unless value is +1 or -1.
    static Sign from_int(int value);

    constexpr int value() const noexcept { return value_; }
    constexpr bool positive() const noexcept { return value_ > 0; }

    constexpr Sign operator-() const noexcept { return Sign(static_cast<std::int8_t>(-value_)); }
    friend constexpr Sign operator*(Sign a, Sign b) noexcept {
        return Sign(static_cast<std::int8_t>(a.value_ * b.value_));
    }
    friend constexpr bool operator==(Sign, Sign) noexcept = default;

    // '+' or '-'
    constexpr char symbol() const noexcept { return positive() ? '+' : '-'; }

private:
    constexpr explicit Sign(std::int8_t v) noexcept : value_(v) {}
    std::int8_t value_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, Sign s) { return os << (s.positive() ? "+1" : "-1"); }

} // namespace orhyp
