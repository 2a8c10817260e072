#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rrsgp {

using Int = std::int64_t;

enum class errc {
    empty_generators,
    gcd_not_one,
    overflow,
    not_closed,
    not_member,
    ambient_mismatch,
    not_integral,
    no_stabilization,
    indivisible_apery,
    range_error,
    window_too_small,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_generators: return "empty_generators";
        case errc::gcd_not_one:      return "gcd_not_one";
        case errc::overflow:         return "overflow";
        case errc::not_closed:       return "not_closed";
        case errc::not_member:       return "not_member";
        case errc::ambient_mismatch: return "ambient_mismatch";
        case errc::not_integral:     return "not_integral";
        case errc::no_stabilization: return "no_stabilization";
        case errc::indivisible_apery:return "indivisible_apery";
        case errc::range_error:      return "range_error";
        case errc::window_too_small: return "window_too_small";
        case errc::parse_error:      return "parse_error";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Global bound on every integer the library will materialize or scan past.
// Exceeding it is a hard error, never silent truncation.
inline std::atomic<Int>& scan_limit_ref() {
    static std::atomic<Int> limit{1'000'000};
    return limit;
}

inline Int scan_limit() { return scan_limit_ref().load(std::memory_order_relaxed); }

inline void set_scan_limit(Int n) {
    if (n < 64) throw error(errc::range_error, "scan limit must be at least 64");
    scan_limit_ref().store(n, std::memory_order_relaxed);
}

inline Int checked(Int v) {
    const Int lim = scan_limit();
    if (v > lim || v < -lim)
        throw error(errc::overflow, "value " + std::to_string(v) + " exceeds bound " + std::to_string(lim));
    return v;
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw error(errc::overflow, "integer overflow in addition");
    return checked(r);
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw error(errc::overflow, "integer overflow in multiplication");
    return checked(r);
}

} // namespace rrsgp
