/*
 * Copyright 2026 the rdlin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Arithmetic in GF(2^m), 2 <= m <= 16.  An element is the integer whose
// bit i is the coefficient of x^i of its polynomial representative; addition
// is XOR.  Multiplication uses log/antilog tables (built eagerly for m <= 12)
// or shift-and-reduce above that.

#pragma once

#include <cassert>
#include <charconv>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rdlin/error.hpp"

namespace rdlin {

using Elem = std::uint16_t;

// Polynomials over GF(2) packed into integers, used for modulus validation
// and as the multiplication fallback.
namespace gf2x {

inline int degree(std::uint32_t p) {
    int d = -1;
    while (p) { ++d; p >>= 1; }
    return d;
}

inline std::uint32_t mod(std::uint32_t a, std::uint32_t p) {
    const int dp = degree(p);
    for (int da = degree(a); da >= dp; --da)
        if (a >> da & 1u) a ^= p << (da - dp);
    return a;
}

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    const int dp = degree(p);
    a = mod(a, p);
    std::uint32_t r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> dp & 1u) a ^= p;
    }
    return r;
}

// Trial division: p (degree m) is irreducible iff no polynomial of degree
// 1..m/2 divides it.
inline bool irreducible(std::uint32_t p) {
    const int m = degree(p);
    if (m < 1) return false;
    if (m == 1) return true;
    const std::uint32_t lim = 1u << (m / 2 + 1);
    for (std::uint32_t d = 2; d < lim; ++d)
        if (mod(p, d) == 0) return false;
    return true;
}

} // namespace gf2x

class Field {
public:
    Field(int m, std::uint32_t modulus) : m_(m), mod_(modulus), q_(1 << m) {
        if (m < 2 || m > 16)
            throw Error(Errc::DegreeMismatch, "field degree must be in [2,16], got " + std::to_string(m));
        if (gf2x::degree(modulus) != m)
            throw Error(Errc::DegreeMismatch, "modulus " + to_hex(modulus) + " does not have degree " + std::to_string(m));
        if (!gf2x::irreducible(modulus))
            throw Error(Errc::ReducibleModulus, "modulus " + to_hex(modulus) + " is reducible");
        if (m <= 12) build_tables();
    }

    int degree() const { return m_; }
    std::uint32_t modulus() const { return mod_; }
    int size() const { return q_; }
    bool has_tables() const { return !log_.empty(); }
    Elem primitive_element() const { return gen_; }

    bool same_as(const Field& o) const { return m_ == o.m_ && mod_ == o.mod_; }

    Elem add(Elem a, Elem b) const {
        assert(a < q_ && b < q_);
        return a ^ b;
    }

    Elem mul(Elem a, Elem b) const {
        assert(a < q_ && b < q_);
        if (!log_.empty())
            return (a && b) ? alog_[log_[a] + log_[b]] : 0;
        return static_cast<Elem>(gf2x::mulmod(a, b, mod_));
    }

    // Shift-and-reduce product, kept callable regardless of tables so the
    // two paths can be cross-checked.
    Elem mul_nolut(Elem a, Elem b) const {
        assert(a < q_ && b < q_);
        return static_cast<Elem>(gf2x::mulmod(a, b, mod_));
    }

    Elem inv(Elem a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
        assert(a < q_);
        if (!log_.empty()) return alog_[(q_ - 1) - log_[a]];
        return pow(a, q_ - 2);
    }

    Elem pow(Elem a, long long k) const {
        assert(a < q_);
        if (a == 0) {
            if (k == 0) return 1;
            if (k < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
            return 0;
        }
        unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
        e %= static_cast<unsigned long long>(q_ - 1); // a^(q-1) = 1
        Elem base = k < 0 ? inv(a) : a;
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // Default modulus per degree: the conventional low-weight irreducible
    // (for m = 8 the polynomial x^8+x^4+x^3+x+1).
    static std::uint32_t default_modulus(int m) {
        static const std::uint32_t tab[17] = {
            0, 0,
            0x7,     // x^2+x+1
            0xB,     // x^3+x+1
            0x13,    // x^4+x+1
            0x25,    // x^5+x^2+1
            0x43,    // x^6+x+1
            0x83,    // x^7+x+1
            0x11B,   // x^8+x^4+x^3+x+1
            0x211,   // x^9+x^4+1
            0x409,   // x^10+x^3+1
            0x805,   // x^11+x^2+1
            0x1053,  // x^12+x^6+x^4+x+1
            0x201B,  // x^13+x^4+x^3+x+1
            0x4443,  // x^14+x^10+x^6+x+1
            0x8003,  // x^15+x+1
            0x1002D, // x^16+x^5+x^3+x^2+1
        };
        if (m < 2 || m > 16)
            throw Error(Errc::DegreeMismatch, "no default modulus for degree " + std::to_string(m));
        return tab[m];
    }

    static std::string to_hex(std::uint32_t v) {
        char buf[16];
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
        (void)ec;
        return "0x" + std::string(buf, p);
    }

    static std::uint32_t parse_hex(std::string_view s) {
        if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X'))
            throw Error(Errc::ParseError, "expected 0x-prefixed hex value, got '" + std::string(s) + "'");
        std::uint32_t v = 0;
        auto [p, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), v, 16);
        if (ec != std::errc() || p != s.data() + s.size())
            throw Error(Errc::ParseError, "bad hex value '" + std::string(s) + "'");
        return v;
    }

private:
    void build_tables() {
        const int n = q_ - 1;
        log_.assign(q_, 0);
        alog_.assign(2 * n, 0);
        for (Elem g = 2; g < q_; ++g) {
            int period = 0;
            Elem x = 1;
            do {
                x = mul_nolut(x, g);
                ++period;
            } while (x != 1);
            if (period == n) { gen_ = g; break; }
        }
        // A generator always exists; gen_ stays 0 only if the loop above is
        // broken, which the irreducibility check rules out.
        Elem x = 1;
        for (int i = 0; i < n; ++i) {
            alog_[i] = x;
            alog_[i + n] = x;
            log_[x] = static_cast<Elem>(i);
            x = mul_nolut(x, gen_);
        }
    }

    int m_;
    std::uint32_t mod_;
    int q_;
    Elem gen_ = 0;
    std::vector<Elem> log_, alog_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr field_new(int m, std::uint32_t modulus) {
    return std::make_shared<const Field>(m, modulus);
}

inline FieldPtr field_default(int m) {
    return field_new(m, Field::default_modulus(m));
}

inline std::string to_hex(std::uint32_t v) { return Field::to_hex(v); }
inline std::uint32_t parse_hex(std::string_view s) { return Field::parse_hex(s); }

} // namespace rdlin
