#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace chainmetric {

// Index into the canonical element order of a finite field. Index 0 is the
// additive identity and index 1 the multiplicative identity; for extension
// fields the index packs the polynomial coefficients in base p, constant
// term first.
struct FieldElement {
  std::uint16_t index = 0;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

// F_{p^k} with full add/mul tables, immutable and cheap to copy. Extension
// fields are built from the first irreducible monic polynomial of degree k
// over F_p in packed-coefficient order, so element indices are reproducible
// across runs.
class Field {
 public:
  static Field make(unsigned p, unsigned k = 1);
  // Factors q as p^k; rejects non prime powers.
  static Field of_order(unsigned q);
  // Accepts "9", "3^2", or the same with a "q=" prefix.
  static Field parse(std::string_view text);

  unsigned p() const;
  unsigned k() const;
  unsigned q() const;

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  // Bounds-checked constructor for an element index.
  FieldElement element(unsigned index) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement inv(FieldElement a) const;  // DomainError on zero

  // Coefficients of the reduction polynomial, constant term first, including
  // the leading 1. Empty for prime fields.
  const std::vector<unsigned>& reduction_polynomial() const;
  std::string reduction_polynomial_text() const;  // "x^2 + x + 1", "" if k = 1

  bool operator==(const Field& other) const;

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// A vector in F_q^n. coords[i] is coordinate i+1; the metric layer speaks in
// 1-based coordinate labels throughout.
using Vector = std::vector<FieldElement>;

// Builds a Vector from raw indices, validating each against the field.
Vector to_vector(const Field& field, const std::vector<unsigned>& indices);

// Rank of a vector in the enumeration order: coordinate 1 is the least
// significant digit, so (0,0), (1,0), (0,1), (1,1) over F_2^2.
std::uint64_t vector_rank(const Field& field, const Vector& u);
Vector vector_from_rank(const Field& field, unsigned n, std::uint64_t rank);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// q^n, throwing BudgetError (naming both sides) when it exceeds the budget.
std::uint64_t space_size_checked(const Field& field, unsigned n,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

// Calls fn with every vector of F_q^n in rank order. The budget check runs
// before the first callback.
void for_each_vector(const Field& field, unsigned n,
                     const std::function<void(const Vector&)>& fn,
                     std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace chainmetric
