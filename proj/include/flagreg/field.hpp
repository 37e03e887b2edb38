#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagreg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Runtime description of a coefficient field: GF(2), GF(p) for an odd prime
 * p < 2^16, or the rationals.
 */
struct FieldSpec {
    enum class Kind { gf2, gfp, rational };

    Kind kind = Kind::gf2;
    std::uint32_t p = 2;  // meaningful for gfp only

    static FieldSpec gf2() { return {Kind::gf2, 2}; }

    static FieldSpec gfp(std::uint32_t p)
    {
        if (p == 2)
            return gf2();
        if (p < 3 || p >= (1u << 16) || !is_prime(p))
            throw std::invalid_argument("FieldSpec: p must be a prime < 2^16");
        return {Kind::gfp, p};
    }

    static FieldSpec rational() { return {Kind::rational, 0}; }

    // Accepts "gf2", "gf<p>" and "q" (case-insensitive).
    static FieldSpec parse(std::string s)
    {
        for (char& c : s)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (s == "q" || s == "rational")
            return rational();
        if (s.rfind("gf", 0) == 0) {
            const std::string digits = s.substr(2);
            if (!digits.empty() &&
                digits.find_first_not_of("0123456789") == std::string::npos)
                return gfp(static_cast<std::uint32_t>(std::stoul(digits)));
        }
        throw std::invalid_argument("FieldSpec: cannot parse '" + s + "'");
    }

    std::uint32_t characteristic() const
    {
        switch (kind) {
            case Kind::gf2: return 2;
            case Kind::gfp: return p;
            case Kind::rational: return 0;
        }
        return 0;
    }

    std::string name() const
    {
        switch (kind) {
            case Kind::gf2: return "gf2";
            case Kind::gfp: return "gf" + std::to_string(p);
            case Kind::rational: return "q";
        }
        return "?";
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b)
    {
        return a.kind == b.kind && (a.kind != Kind::gfp || a.p == b.p);
    }

  private:
    static bool is_prime(std::uint32_t n)
    {
        if (n < 2)
            return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Field arithmetic contexts.  Each provides the same interface so templated
// linear algebra can be instantiated per field; with_field() dispatches a
// FieldSpec onto the right instantiation.

struct Gf2Field {
    using Element = std::uint8_t;

    static Element zero() { return 0; }
    static Element one() { return 1; }
    Element from_int(long long v) const { return static_cast<Element>(((v % 2) + 2) % 2); }
    Element add(Element a, Element b) const { return a ^ b; }
    Element sub(Element a, Element b) const { return a ^ b; }
    Element mul(Element a, Element b) const { return a & b; }
    Element neg(Element a) const { return a; }
    Element inv(Element a) const
    {
        if (!a)
            throw std::domain_error("Gf2Field: inverse of zero");
        return 1;
    }
    bool is_zero(Element a) const { return a == 0; }
};

struct GfpField {
    using Element = std::uint32_t;

    std::uint32_t p;

    explicit GfpField(std::uint32_t p_) : p(p_) {}

    Element zero() const { return 0; }
    Element one() const { return 1 % p; }
    Element from_int(long long v) const
    {
        long long m = v % static_cast<long long>(p);
        if (m < 0)
            m += p;
        return static_cast<Element>(m);
    }
    Element add(Element a, Element b) const
    {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Element>(s >= p ? s - p : s);
    }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element mul(Element a, Element b) const
    {
        return static_cast<Element>(std::uint64_t{a} * b % p);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p - a; }
    Element inv(Element a) const
    {
        if (a == 0)
            throw std::domain_error("GfpField: inverse of zero");
        // Fermat: a^(p-2) mod p.
        std::uint64_t base = a, result = 1;
        for (std::uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
        }
        return static_cast<Element>(result);
    }
    bool is_zero(Element a) const { return a == 0; }
};

struct RationalField {
    using Element = Rational;

    static Element zero() { return Rational(0); }
    static Element one() { return Rational(1); }
    Element from_int(long long v) const { return Rational(v); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const
    {
        if (a == 0)
            throw std::domain_error("RationalField: inverse of zero");
        return Rational(1) / a;
    }
    bool is_zero(const Element& a) const { return a == 0; }
};

/// Calls fn with the arithmetic context matching spec; fn must accept any of
/// the three context types (generic lambda) and return a common type.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    switch (spec.kind) {
        case FieldSpec::Kind::gf2: return fn(Gf2Field{});
        case FieldSpec::Kind::gfp: return fn(GfpField{spec.p});
        case FieldSpec::Kind::rational: return fn(RationalField{});
    }
    throw std::logic_error("with_field: bad kind");
}

}  // namespace flagreg
