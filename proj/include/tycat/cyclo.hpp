#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tycat {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("cyclotomic coefficient overflow (add)");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("cyclotomic coefficient overflow (sub)");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("cyclotomic coefficient overflow (mul)");
    }
    return r;
}

} // namespace detail

/// Exact element of the ring Z[zeta, 1/2] with zeta = exp(i*pi/8), the
/// primitive 16th root of unity.  A value is
///
///     (c[0] + c[1]*zeta + ... + c[7]*zeta^7) * 2^(-e/2)
///
/// using the reduction zeta^8 = -1.  All arithmetic is exact; there is no
/// floating point anywhere except the clearly marked display helpers.
///
/// The canonical form absorbs every factor of sqrt(2) = zeta^2 - zeta^6
/// into the coefficients, so e == 0 or the coefficient vector is not
/// divisible by sqrt(2).  Canonical representatives are unique, which makes
/// equality a plain field comparison.
class CycloNumber {
  public:
    CycloNumber() : c_{}, e_(0) {}

    CycloNumber(const std::array<std::int64_t, 8>& coeffs, int half_log_denom)
        : c_(coeffs), e_(half_log_denom) {
        if (half_log_denom < 0) {
            throw std::invalid_argument("half_log_denominator must be non-negative");
        }
        normalize();
    }

    static CycloNumber zero() { return CycloNumber(); }

    static CycloNumber from_int(std::int64_t n) {
        CycloNumber x;
        x.c_[0] = n;
        return x;
    }

    static CycloNumber one() { return from_int(1); }

    /// zeta^m for any integer m (reduced mod 16).
    static CycloNumber zeta_pow(int m) {
        m %= 16;
        if (m < 0) m += 16;
        CycloNumber x;
        if (m < 8) {
            x.c_[m] = 1;
        } else {
            x.c_[m - 8] = -1;
        }
        return x;
    }

    /// i = zeta^4.
    static CycloNumber i() { return zeta_pow(4); }

    /// sqrt(2) = zeta^2 - zeta^6, an honest ring element.
    static CycloNumber sqrt2() {
        CycloNumber x;
        x.c_[2] = 1;
        x.c_[6] = -1;
        return x;
    }

    /// 2^(s/2) for any integer s, e.g. s = -k gives 1/sqrt(2^k).
    static CycloNumber two_pow_half(int s) {
        if (s > 125) throw std::overflow_error("two_pow_half exponent too large");
        if (s >= 0) {
            CycloNumber x = from_int(std::int64_t(1) << (s / 2));
            if (s % 2 != 0) x = x * sqrt2();
            return x;
        }
        CycloNumber x;
        x.c_[0] = 1;
        x.e_ = -s;
        x.normalize();
        return x;
    }

    const std::array<std::int64_t, 8>& coeffs() const { return c_; }
    int half_log_denominator() const { return e_; }

    bool is_zero() const {
        for (std::int64_t v : c_) {
            if (v != 0) return false;
        }
        return true;
    }

    CycloNumber operator+(const CycloNumber& o) const {
        CycloNumber a = *this, b = o;
        match_denominators(a, b);
        for (int m = 0; m < 8; ++m) a.c_[m] = detail::checked_add(a.c_[m], b.c_[m]);
        a.normalize();
        return a;
    }

    CycloNumber operator-(const CycloNumber& o) const {
        CycloNumber a = *this, b = o;
        match_denominators(a, b);
        for (int m = 0; m < 8; ++m) a.c_[m] = detail::checked_sub(a.c_[m], b.c_[m]);
        a.normalize();
        return a;
    }

    CycloNumber operator-() const {
        CycloNumber a = *this;
        for (auto& v : a.c_) v = detail::checked_sub(0, v);
        return a;
    }

    CycloNumber operator*(const CycloNumber& o) const {
        CycloNumber r;
        for (int m = 0; m < 8; ++m) {
            if (c_[m] == 0) continue;
            for (int n = 0; n < 8; ++n) {
                if (o.c_[n] == 0) continue;
                std::int64_t p = detail::checked_mul(c_[m], o.c_[n]);
                int idx = m + n;
                if (idx >= 8) {
                    r.c_[idx - 8] = detail::checked_sub(r.c_[idx - 8], p);
                } else {
                    r.c_[idx] = detail::checked_add(r.c_[idx], p);
                }
            }
        }
        r.e_ = e_ + o.e_;
        r.normalize();
        return r;
    }

    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
    CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

    /// Complex conjugate: zeta^m -> zeta^(16-m) = -zeta^(8-m).
    CycloNumber conj() const {
        CycloNumber r;
        r.c_[0] = c_[0];
        for (int m = 1; m < 8; ++m) r.c_[8 - m] = detail::checked_sub(0, c_[m]);
        r.e_ = e_;
        r.normalize();
        return r;
    }

    /// |x|^2 = x * conj(x), a real element of the ring.
    CycloNumber modulus_squared() const { return *this * conj(); }

    bool is_real() const { return *this == conj(); }

    /// Unit modulus, exactly: x * conj(x) == 1.
    bool is_unit() const { return modulus_squared() == one(); }

    /// True iff the value is zeta^m for some m; reports m when asked.
    bool is_root_of_unity(int* power = nullptr) const {
        if (e_ != 0) return false;
        int found = -1;
        for (int m = 0; m < 8; ++m) {
            if (c_[m] == 0) continue;
            if (found >= 0 || (c_[m] != 1 && c_[m] != -1)) return false;
            found = (c_[m] == 1) ? m : m + 8;
        }
        if (found < 0) return false;
        if (power) *power = found;
        return true;
    }

    /// Exact equality of values.  Works on arbitrary (even non-canonical)
    /// inputs by cross-multiplying the dyadic denominators.
    bool operator==(const CycloNumber& o) const {
        if (e_ == o.e_) return c_ == o.c_;
        CycloNumber a = *this, b = o;
        match_denominators(a, b);
        return a.c_ == b.c_;
    }

    bool operator!=(const CycloNumber& o) const { return !(*this == o); }

    /// Total order on canonical representations (for deterministic sorting
    /// only; this is not an order on complex values).
    bool operator<(const CycloNumber& o) const {
        if (e_ != o.e_) return e_ < o.e_;
        return c_ < o.c_;
    }

    /// Display-only decimal rendering.  Never used in any computation or
    /// comparison; the exact coefficients are authoritative.
    std::complex<double> to_complex_approx() const {
        constexpr double pi = 3.14159265358979323846;
        std::complex<double> z = 0.0;
        for (int m = 0; m < 8; ++m) {
            if (c_[m] == 0) continue;
            z += double(c_[m]) * std::polar(1.0, pi * m / 8.0);
        }
        return z * std::pow(2.0, -e_ / 2.0);
    }

    std::string to_string() const {
        std::string s = "(";
        bool first = true;
        for (int m = 0; m < 8; ++m) {
            if (c_[m] == 0) continue;
            if (!first && c_[m] > 0) s += "+";
            s += std::to_string(c_[m]);
            if (m > 0) s += "*z^" + std::to_string(m);
            first = false;
        }
        if (first) s += "0";
        s += ")";
        if (e_ != 0) s += "/2^(" + std::to_string(e_) + "/2)";
        return s;
    }

  private:
    // Coefficient vector after multiplying by sqrt(2); the value is
    // divisible by sqrt(2) iff this is even everywhere.
    static std::array<std::int64_t, 8> times_sqrt2(const std::array<std::int64_t, 8>& c) {
        std::array<std::int64_t, 8> r{};
        for (int m = 0; m < 8; ++m) {
            if (c[m] == 0) continue;
            int p2 = m + 2, p6 = m + 6;
            if (p2 >= 8) {
                r[p2 - 8] = detail::checked_sub(r[p2 - 8], c[m]);
            } else {
                r[p2] = detail::checked_add(r[p2], c[m]);
            }
            if (p6 >= 8) {
                r[p6 - 8] = detail::checked_add(r[p6 - 8], c[m]);
            } else {
                r[p6] = detail::checked_sub(r[p6], c[m]);
            }
        }
        return r;
    }

    void normalize() {
        if (is_zero()) {
            e_ = 0;
            return;
        }
        while (e_ >= 1) {
            std::array<std::int64_t, 8> t = times_sqrt2(c_);
            bool all_even = true;
            for (std::int64_t v : t) {
                if (v % 2 != 0) {
                    all_even = false;
                    break;
                }
            }
            if (!all_even) break;
            for (int m = 0; m < 8; ++m) c_[m] = t[m] / 2;
            --e_;
        }
    }

    // Rescale both arguments onto the larger denominator.
    static void match_denominators(CycloNumber& a, CycloNumber& b) {
        while (a.e_ < b.e_) {
            a.c_ = times_sqrt2(a.c_);
            ++a.e_;
        }
        while (b.e_ < a.e_) {
            b.c_ = times_sqrt2(b.c_);
            ++b.e_;
        }
    }

    std::array<std::int64_t, 8> c_;
    int e_;
};

} // namespace tycat
