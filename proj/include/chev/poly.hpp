#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chev {

inline constexpr std::size_t max_vars = 6;

// Exponent vector over the variables of a CoefficientRing. Negative entries
// are only produced for Laurent variables.
using Mono = std::array<std::int16_t, max_vars>;

// Exact scalars: checked int64 over Z, canonical residues in [0, p) over F_p.
std::int64_t add_checked(std::int64_t a, std::int64_t b);
std::int64_t mul_checked(std::int64_t a, std::int64_t b);
std::int64_t mod_reduce(std::int64_t a, std::int64_t p);
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

// Sparse polynomial with integer or F_p coefficients. Terms are sorted by
// monomial and never carry a zero coefficient, so operator== is equality of
// ring elements.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::int64_t modulus) : mod_(modulus) {}
    static Poly constant(std::int64_t c, std::int64_t modulus);
    static Poly monomial(std::int64_t c, const Mono& m, std::int64_t modulus);
    static Poly variable(std::size_t index, std::int64_t modulus, int exponent = 1);

    std::int64_t modulus() const { return mod_; }
    const std::vector<std::pair<Mono, std::int64_t>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // True iff the polynomial is c * monomial.
    bool is_monomial() const { return terms_.size() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly scaled(std::int64_t c) const;
    Poly pow(int e) const;
    // Exact division by an integer; throws if the result is not integral
    // (over Z) or the integer is not invertible (over F_p).
    Poly div_exact(std::int64_t d) const;
    // Inverse of c * monomial where c is a unit of the base ring; throws
    // otherwise.
    Poly unit_inverse() const;
    // Laurent powers of a unit, negative allowed.
    Poly unit_pow(int e) const;

    bool operator==(const Poly& o) const { return mod_ == o.mod_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    std::string str(const std::vector<std::string>& names) const;

private:
    void normalize();
    void check_compatible(const Poly& o) const;

    std::int64_t mod_ = 0;
    std::vector<std::pair<Mono, std::int64_t>> terms_;
};

// Base ring plus named indeterminates. Laurent variables are invertible,
// plain variables are polynomial.
struct CoefficientRing {
    std::int64_t modulus = 0;
    std::vector<std::string> names;
    std::vector<bool> laurent;

    std::size_t add_var(const std::string& name, bool is_laurent);
    std::size_t index_of(const std::string& name) const;
    Poly zero() const { return Poly(modulus); }
    Poly one() const { return Poly::constant(1, modulus); }
    Poly integer(std::int64_t c) const { return Poly::constant(c, modulus); }
    Poly var(const std::string& name) const { return Poly::variable(index_of(name), modulus); }
    bool is_unit(const Poly& p) const;
    std::string str(const Poly& p) const { return p.str(names); }
};

}  // namespace chev
