#include "chainmetric/field.hpp"

#include <algorithm>
#include <charconv>

#include "chainmetric/errors.hpp"

namespace chainmetric {
namespace {

// Keeps the add/mul tables (q^2 entries each) at a few megabytes.
constexpr unsigned kMaxOrder = 1024;

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, constant term first, no
// trailing zeros.
using Poly = std::vector<unsigned>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul(const Poly& f, const Poly& g, unsigned p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  return trim(std::move(out));
}

// f mod g for monic g.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  f = trim(std::move(f));
  while (f.size() >= g.size()) {
    unsigned lead = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      unsigned sub = (lead * g[i]) % p;
      f[shift + i] = (f[shift + i] + p - sub) % p;
    }
    f = trim(std::move(f));
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, unsigned p) {
  return poly_mod(f, g, p).empty();
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, unsigned p) {
  unsigned deg = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t rest = idx;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// First irreducible monic polynomial of degree k in packed-coefficient order.
Poly find_reduction_polynomial(unsigned p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(k + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

struct Field::Data {
  unsigned p = 0;
  unsigned k = 0;
  unsigned q = 0;
  std::vector<unsigned> reduction;  // with leading 1; empty when k == 1
  std::vector<std::uint16_t> add;   // q*q, row-major
  std::vector<std::uint16_t> mul;
  std::vector<std::uint16_t> neg;
  std::vector<std::uint16_t> inv;   // inv[0] unused
};

Field Field::make(unsigned p, unsigned k) {
  if (!is_prime(p)) throw ValidationError("field characteristic must be prime, got " + std::to_string(p));
  if (k == 0) throw ValidationError("field extension degree must be at least 1");
  std::uint64_t q64 = 1;
  for (unsigned i = 0; i < k; ++i) {
    q64 *= p;
    if (q64 > kMaxOrder)
      throw ValidationError("field order above supported maximum " + std::to_string(kMaxOrder));
  }
  auto data = std::make_shared<Data>();
  data->p = p;
  data->k = k;
  data->q = static_cast<unsigned>(q64);
  unsigned q = data->q;

  // Element index <-> coefficient tuple, base p, constant term first.
  auto digits = [&](unsigned idx) {
    Poly c(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return c;
  };
  auto pack = [&](const Poly& c) {
    unsigned idx = 0;
    for (unsigned i = k; i-- > 0;) idx = idx * p + (i < c.size() ? c[i] : 0);
    return idx;
  };

  if (k > 1) data->reduction = find_reduction_polynomial(p, k);

  data->add.resize(std::size_t(q) * q);
  data->mul.resize(std::size_t(q) * q);
  data->neg.resize(q);
  data->inv.resize(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    Poly ca = digits(a);
    Poly na(k);
    for (unsigned i = 0; i < k; ++i) na[i] = (p - ca[i]) % p;
    data->neg[a] = static_cast<std::uint16_t>(pack(na));
    for (unsigned b = 0; b < q; ++b) {
      Poly cb = digits(b);
      Poly sum(k);
      for (unsigned i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
      data->add[std::size_t(a) * q + b] = static_cast<std::uint16_t>(pack(sum));
      unsigned prod;
      if (k == 1) {
        prod = (a * b) % p;
      } else {
        prod = pack(poly_mod(poly_mul(trim(ca), trim(cb), p), data->reduction, p));
      }
      data->mul[std::size_t(a) * q + b] = static_cast<std::uint16_t>(prod);
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (data->mul[std::size_t(a) * q + b] == 1) {
        data->inv[a] = static_cast<std::uint16_t>(b);
        break;
      }
  return Field(std::move(data));
}

Field Field::of_order(unsigned q) {
  if (q < 2) throw ValidationError("field order must be at least 2, got " + std::to_string(q));
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1)
    throw ValidationError(std::to_string(q) + " is not a prime power");
  return make(p, k);
}

Field Field::parse(std::string_view text) {
  if (text.starts_with("q=")) text.remove_prefix(2);
  auto parse_num = [](std::string_view s) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ValidationError("cannot parse field order from '" + std::string(s) + "'");
    return value;
  };
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    return make(parse_num(text.substr(0, caret)), parse_num(text.substr(caret + 1)));
  }
  return of_order(parse_num(text));
}

unsigned Field::p() const { return data_->p; }
unsigned Field::k() const { return data_->k; }
unsigned Field::q() const { return data_->q; }

FieldElement Field::element(unsigned index) const {
  if (index >= data_->q)
    throw ValidationError("element index " + std::to_string(index) + " out of range for field of order " +
                          std::to_string(data_->q));
  return FieldElement{static_cast<std::uint16_t>(index)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  return FieldElement{data_->add[std::size_t(a.index) * data_->q + b.index]};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  return add(a, neg(b));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  return FieldElement{data_->mul[std::size_t(a.index) * data_->q + b.index]};
}

FieldElement Field::neg(FieldElement a) const { return FieldElement{data_->neg[a.index]}; }

FieldElement Field::inv(FieldElement a) const {
  if (a.index == 0) throw DomainError("zero has no multiplicative inverse");
  return FieldElement{data_->inv[a.index]};
}

const std::vector<unsigned>& Field::reduction_polynomial() const { return data_->reduction; }

std::string Field::reduction_polynomial_text() const {
  if (data_->reduction.empty()) return "";
  std::string out;
  for (unsigned i = static_cast<unsigned>(data_->reduction.size()); i-- > 0;) {
    unsigned c = data_->reduction[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

bool Field::operator==(const Field& other) const {
  return data_->p == other.data_->p && data_->k == other.data_->k;
}

Vector to_vector(const Field& field, const std::vector<unsigned>& indices) {
  Vector u;
  u.reserve(indices.size());
  for (unsigned idx : indices) u.push_back(field.element(idx));
  return u;
}

std::uint64_t vector_rank(const Field& field, const Vector& u) {
  std::uint64_t rank = 0;
  for (std::size_t i = u.size(); i-- > 0;) rank = rank * field.q() + u[i].index;
  return rank;
}

Vector vector_from_rank(const Field& field, unsigned n, std::uint64_t rank) {
  Vector u(n);
  for (unsigned i = 0; i < n; ++i) {
    u[i] = FieldElement{static_cast<std::uint16_t>(rank % field.q())};
    rank /= field.q();
  }
  return u;
}

std::uint64_t space_size_checked(const Field& field, unsigned n, std::uint64_t budget) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (size > budget / field.q() + 1) {
      size = budget + 1;
      break;
    }
    size *= field.q();
  }
  if (size > budget)
    throw BudgetError("enumeration of " + std::to_string(field.q()) + "^" + std::to_string(n) +
                      " vectors exceeds budget " + std::to_string(budget));
  return size;
}

void for_each_vector(const Field& field, unsigned n,
                     const std::function<void(const Vector&)>& fn, std::uint64_t budget) {
  std::uint64_t size = space_size_checked(field, n, budget);
  Vector u(n, FieldElement{0});
  for (std::uint64_t rank = 0;; ++rank) {
    fn(u);
    if (rank + 1 == size) break;
    // Increment coordinate 1 first: rank order.
    for (unsigned i = 0; i < n; ++i) {
      if (u[i].index + 1u < field.q()) {
        u[i].index++;
        break;
      }
      u[i].index = 0;
    }
  }
}

}  // namespace chainmetric
