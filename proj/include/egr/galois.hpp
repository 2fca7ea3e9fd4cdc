#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace egr {

// Element of a finite field, stored as the base-r digit encoding of its
// coefficient vector over the coefficient field (r = coefficient field order).
struct FieldElement {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace detail {
struct FieldData;
}

/// Finite field GF(p^e) with log/exp multiplication tables.
///
/// A field is either a prime field GF(p) or an extension of degree d of
/// another Field (its coefficient field).  Elements of an extension are
/// polynomials of degree < d over the coefficient field, reduced modulo the
/// lexicographically smallest monic irreducible polynomial; the coefficient
/// field embeds as the constant polynomials, i.e. as the indices [0, r).
///
/// Fields are immutable and cheap to copy (tables are shared).
class Field {
public:
    static constexpr std::uint64_t kMaxPrimeFieldOrder = std::uint64_t{1} << 20;
    static constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 24;

    /// GF(p^e) as an extension of GF(p).  Throws std::invalid_argument when p
    /// is not prime, e == 0, or p^e exceeds 2^20.
    static Field make(std::uint32_t p, std::uint32_t e);

    /// GF(|base|^d) as a degree-d extension of base.  Throws
    /// std::invalid_argument when d < 2 or the order exceeds 2^24.
    static Field extension(const Field& base, std::uint32_t d);

    std::uint32_t characteristic() const;
    std::uint32_t order() const;
    // Degree over the prime field.
    std::uint32_t absolute_degree() const;
    // Degree over the coefficient field (1 for a prime field).
    std::uint32_t relative_degree() const;

    // Coefficient field, or nullptr for a prime field.
    const Field* coefficient_field() const;

    // Monic modulus over the coefficient field, ascending degree.  A prime
    // field reports the trivial modulus x.
    std::vector<FieldElement> modulus() const;

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement element(std::uint32_t index) const;

    // Fixed multiplicative generator used to build the tables.
    FieldElement generator() const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t exponent) const;
    FieldElement frobenius(FieldElement a) const;

    // generator()^exponent.
    FieldElement exp(std::uint64_t exponent) const;
    // Discrete log to base generator(); throws on zero.
    std::uint32_t log(FieldElement a) const;

    std::uint64_t multiplicative_order(FieldElement a) const;

    // Coordinates over the coefficient field (length relative_degree()).
    std::vector<FieldElement> coordinates(FieldElement a) const;
    FieldElement from_coordinates(std::span<const FieldElement> coords) const;

    // Image of a coefficient-field element under the embedding.
    FieldElement embed(FieldElement base_element) const;

    friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

    std::shared_ptr<const detail::FieldData> data_;
};

bool is_prime(std::uint64_t n);

}  // namespace egr
