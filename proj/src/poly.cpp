#include "chev/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chev {

std::int64_t add_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t p)
{
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, nt = 1, r = p, nr = mod_reduce(a, p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw std::domain_error("not invertible modulo " + std::to_string(p));
    return mod_reduce(t, p);
}

Poly Poly::constant(std::int64_t c, std::int64_t modulus)
{
    return monomial(c, Mono{}, modulus);
}

Poly Poly::monomial(std::int64_t c, const Mono& m, std::int64_t modulus)
{
    Poly p(modulus);
    if (modulus) c = mod_reduce(c, modulus);
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

Poly Poly::variable(std::size_t index, std::int64_t modulus, int exponent)
{
    if (index >= max_vars) throw std::out_of_range("too many indeterminates");
    Mono m{};
    m[index] = static_cast<std::int16_t>(exponent);
    return monomial(1, m, modulus);
}

bool Poly::is_one() const
{
    return terms_.size() == 1 && terms_[0].first == Mono{} && terms_[0].second == 1;
}

void Poly::check_compatible(const Poly& o) const
{
    if (mod_ != o.mod_) throw std::invalid_argument("mixing coefficient rings of different characteristic");
}

void Poly::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        std::int64_t c = 0;
        std::size_t j = i;
        for (; j < terms_.size() && terms_[j].first == terms_[i].first; ++j) {
            c = add_checked(c, terms_[j].second);
            if (mod_) c = mod_reduce(c, mod_);
        }
        if (c != 0) terms_[out++] = {terms_[i].first, c};
        i = j;
    }
    terms_.resize(out);
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    check_compatible(o);
    if (o.terms_.empty()) return *this;
    std::vector<std::pair<Mono, std::int64_t>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            merged.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            merged.push_back(o.terms_[j++]);
        } else {
            std::int64_t c = add_checked(terms_[i].second, o.terms_[j].second);
            if (mod_) c = mod_reduce(c, mod_);
            if (c != 0) merged.emplace_back(terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Poly Poly::operator-() const
{
    return scaled(-1);
}

Poly Poly::operator-(const Poly& o) const
{
    return *this + (-o);
}

Poly Poly::operator*(const Poly& o) const
{
    check_compatible(o);
    Poly r(mod_);
    if (terms_.empty() || o.terms_.empty()) return r;
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m;
            for (std::size_t k = 0; k < max_vars; ++k) {
                int e = ma[k] + mb[k];
                if (e > INT16_MAX || e < INT16_MIN) throw std::overflow_error("exponent overflow");
                m[k] = static_cast<std::int16_t>(e);
            }
            std::int64_t c = mod_ ? mod_reduce(static_cast<std::int64_t>(static_cast<__int128>(ca) * cb % mod_), mod_)
                                  : mul_checked(ca, cb);
            r.terms_.emplace_back(m, c);
        }
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(std::int64_t c) const
{
    Poly r(mod_);
    if (mod_) c = mod_reduce(c, mod_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, a] : terms_) {
        std::int64_t v = mod_ ? mod_reduce(static_cast<std::int64_t>(static_cast<__int128>(a) * c % mod_), mod_)
                              : mul_checked(a, c);
        r.terms_.emplace_back(m, v);
    }
    return r;
}

Poly Poly::pow(int e) const
{
    if (e < 0) throw std::domain_error("negative power of a polynomial");
    Poly r = constant(1, mod_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Poly Poly::div_exact(std::int64_t d) const
{
    if (d == 0) throw std::domain_error("division by zero");
    if (mod_) return scaled(mod_inverse(d, mod_));
    Poly r(mod_);
    for (const auto& [m, a] : terms_) {
        if (a % d != 0) throw std::domain_error("inexact integer division");
        r.terms_.emplace_back(m, a / d);
    }
    return r;
}

Poly Poly::unit_inverse() const
{
    if (terms_.size() != 1) throw std::domain_error("not a unit: " + str({}));
    const auto& [m, c] = terms_[0];
    std::int64_t ci;
    if (mod_) ci = mod_inverse(c, mod_);
    else if (c == 1 || c == -1) ci = c;
    else throw std::domain_error("not a unit over Z");
    Mono mi;
    for (std::size_t k = 0; k < max_vars; ++k) mi[k] = static_cast<std::int16_t>(-m[k]);
    return monomial(ci, mi, mod_);
}

Poly Poly::unit_pow(int e) const
{
    return e >= 0 ? pow(e) : unit_inverse().pow(-e);
}

std::string Poly::str(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c0] = *it;
        std::int64_t c = c0;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        bool unit_mono = m == Mono{};
        if (c != 1 || unit_mono) os << c;
        bool need_star = c != 1;
        for (std::size_t k = 0; k < max_vars; ++k) {
            if (m[k] == 0) continue;
            if (need_star) os << "*";
            os << (k < names.size() ? names[k] : "v" + std::to_string(k));
            if (m[k] != 1) os << "^" << m[k];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

std::size_t CoefficientRing::add_var(const std::string& name, bool is_laurent)
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    if (names.size() >= max_vars) throw std::out_of_range("too many indeterminates");
    names.push_back(name);
    laurent.push_back(is_laurent);
    return names.size() - 1;
}

std::size_t CoefficientRing::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw std::out_of_range("unknown indeterminate " + name);
}

bool CoefficientRing::is_unit(const Poly& p) const
{
    if (!p.is_monomial()) return false;
    const auto& [m, c] = p.terms()[0];
    for (std::size_t k = 0; k < max_vars; ++k)
        if (m[k] != 0 && (k >= laurent.size() || !laurent[k])) return false;
    return modulus ? true : (c == 1 || c == -1);
}

}  // namespace chev
