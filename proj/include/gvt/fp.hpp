#pragma once

#include "gvt/errors.hpp"
#include "gvt/numeric.hpp"

namespace gvt {

/// Prime-field element with a runtime modulus. A default-constructed value
/// is the "plain integer" 0 that adopts the other operand's modulus. Used
/// for fast fuzzing; the rationals remain the arbiter.
class Fp {
  public:
    Fp() = default;
    Fp(Int v, Int p) : p_(p) {
        if (p < 2) throw ValidationError("modulus must be >= 2");
        if (p > (1 << 30)) throw ValidationError("modulus too large for 64-bit products");
        v_ = ((v % p) + p) % p;
    }

    Int value() const { return v_; }
    Int modulus() const { return p_; }

    friend Fp operator*(const Fp& a, const Fp& b) {
        Int p = merged(a, b);
        return Fp(a.v_ * b.v_ % p, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        Int p = merged(a, b);
        if (b.v_ % p == 0) throw ValidationError("division by zero in F_p");
        return Fp(a.v_ % p * inverse(b.v_ % p, p) % p, p);
    }
    friend Fp operator+(const Fp& a, const Fp& b) {
        Int p = merged(a, b);
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        Int p = merged(a, b);
        return Fp(a.v_ - b.v_, p);
    }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    friend bool operator==(const Fp& a, const Fp& b) {
        Int p = merged(a, b);
        return ((a.v_ - b.v_) % p + p) % p == 0;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    static bool is_prime(Int p) {
        if (p < 2) return false;
        for (Int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

  private:
    static Int merged(const Fp& a, const Fp& b) {
        if (a.p_ == 0 && b.p_ == 0)
            throw std::logic_error("F_p operation without a modulus");
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw ValidationError("mixed moduli in F_p arithmetic");
        return a.p_ != 0 ? a.p_ : b.p_;
    }
    static Int inverse(Int a, Int p) {
        // extended Euclid
        Int t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
        while (nr != 0) {
            Int q = r / nr;
            Int tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1) throw ValidationError("element is not invertible");
        return ((t % p) + p) % p;
    }

    Int v_ = 0;
    Int p_ = 0;
};

/// field_is_zero / field pretty-printers used by the templated layers.
inline bool field_is_zero(const Rat& x) { return x == 0; }
inline bool field_is_zero(const Fp& x) { return x.value() == 0; }

inline std::string field_str(const Rat& x) { return rat_str(x); }
inline std::string field_str(const Fp& x) { return std::to_string(x.value()); }

/// base^e for a unit base (e may be negative).
template <class K>
K field_pow(const K& base, Int e) {
    K one = base / base;
    K b = e < 0 ? one / base : base;
    Int k = e < 0 ? -e : e;
    K acc = one;
    while (k > 0) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

}  // namespace gvt
