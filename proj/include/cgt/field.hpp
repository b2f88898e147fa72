#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cgt/caps.hpp"
#include "cgt/numutil.hpp"

namespace cgt {

/// Exact arithmetic in GF(p^k).
///
/// The defining polynomial is canonical: the lexicographically smallest monic
/// irreducible polynomial of degree k over Z_p, coefficients compared constant
/// term first. Elements are encoded as base-p integers, little-endian in the
/// coefficient vector, so 0 is zero, 1 is one and p encodes the class of x.
/// All operations take and return these integer encodings.
class FieldSpec {
  public:
    // Cached canonical construction; the returned reference lives for the
    // process lifetime. Throws std::invalid_argument for non-prime p or
    // CapExceeded when p^k exceeds caps.max_field.
    static const FieldSpec& get(u64 p, u32 k, const Caps& caps = Caps{});

    u64 characteristic() const { return p_; }
    u32 degree() const { return k_; }
    u64 size() const { return q_; }                       // p^k
    const std::vector<u32>& modulus() const { return poly_; }  // length k+1, constant first, monic
    std::string name() const;                             // "GF(8)" style is not used; "GF(2^3)"

    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    u64 neg(u64 a) const;
    u64 mul(u64 a, u64 b) const;
    u64 inv(u64 a) const;  // throws std::domain_error on 0
    u64 pow(u64 a, u64 e) const;
    u64 frobenius(u64 a, u32 j) const;  // a^{p^j}

    // Canonical generator of the multiplicative group: the smallest encoded
    // nonzero element of order q-1.
    u64 generator() const { return generator_; }

    std::vector<u32> coeffs(u64 a) const;                // little-endian, length k
    u64 encode(const std::vector<u32>& coeffs) const;    // inverse of coeffs()

    // Multiplicative order of a nonzero element.
    u64 element_order(u64 a) const;

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

  private:
    FieldSpec(u64 p, u32 k);

    u64 mul_raw(u64 a, u64 b) const;  // polynomial multiplication mod poly_

    u64 p_;
    u32 k_;
    u64 q_;
    std::vector<u32> poly_;
    u64 generator_ = 0;
    // discrete log tables, built when q_ is small enough; mul/inv/pow go
    // through them, otherwise through raw polynomial arithmetic
    std::vector<u32> log_, exp_;
};

/// A field element bound to its field; checks against mixing fields.
struct FieldElement {
    const FieldSpec* field = nullptr;
    u64 value = 0;

    FieldElement() = default;
    FieldElement(const FieldSpec& f, u64 v) : field(&f), value(v) {}

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(u64 e) const;
    bool operator==(const FieldElement& o) const { return field == o.field && value == o.value; }

    std::vector<u32> coeffs() const { return field->coeffs(value); }
};

// "GF(p)" / "GF(p^k)" parser used by the corpus format.
// Returns {p, k}; throws std::invalid_argument on malformed names.
std::pair<u64, u32> parse_field_name(const std::string& name);
std::string field_name(u64 p, u32 k);

}  // namespace cgt
