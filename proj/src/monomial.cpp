#include "cellres/monomial.hpp"

#include <limits>
#include <stdexcept>

namespace cellres {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("exponent/coefficient addition overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("coefficient multiplication overflow");
    return out;
}

void require_same_ambient(const Ambient& a, const Ambient& b) {
    if (!(a == b)) throw std::invalid_argument("ambient mismatch");
}

}  // namespace

Monomial::Monomial(Ambient ambient, std::vector<std::int64_t> exponents)
    : amb_(ambient), exps_(std::move(exponents)) {
    if (amb_.m < 0 || amb_.n < 0)
        throw std::invalid_argument("ambient variable counts must be non-negative");
    if (static_cast<int>(exps_.size()) != amb_.vars())
        throw std::invalid_argument("exponent vector length must equal m+n");
    for (std::int64_t e : exps_)
        if (e < 0) throw std::invalid_argument("exponents must be non-negative");
}

Monomial Monomial::one(Ambient ambient) {
    return Monomial(ambient, std::vector<std::int64_t>(ambient.vars(), 0));
}

Monomial Monomial::x(Ambient ambient, int i, std::int64_t e) {
    if (i < 1 || i > ambient.m) throw std::invalid_argument("X index out of range");
    std::vector<std::int64_t> exps(ambient.vars(), 0);
    exps[i - 1] = e;
    return Monomial(ambient, std::move(exps));
}

Monomial Monomial::y(Ambient ambient, int j, std::int64_t e) {
    if (j < 1 || j > ambient.n) throw std::invalid_argument("Y index out of range");
    std::vector<std::int64_t> exps(ambient.vars(), 0);
    exps[ambient.m + j - 1] = e;
    return Monomial(ambient, std::move(exps));
}

std::int64_t Monomial::exponent(int pos) const {
    if (pos < 0 || pos >= static_cast<int>(exps_.size()))
        throw std::out_of_range("exponent position out of range");
    return exps_[pos];
}

std::int64_t Monomial::x_exponent(int i) const {
    if (i < 1 || i > amb_.m) throw std::out_of_range("X index out of range");
    return exps_[i - 1];
}

std::int64_t Monomial::y_exponent(int j) const {
    if (j < 1 || j > amb_.n) throw std::out_of_range("Y index out of range");
    return exps_[amb_.m + j - 1];
}

std::int64_t Monomial::total_degree() const {
    std::int64_t d = 0;
    for (std::int64_t e : exps_) d = checked_add(d, e);
    return d;
}

bool Monomial::is_one() const {
    for (std::int64_t e : exps_)
        if (e != 0) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    require_same_ambient(amb_, other.amb_);
    std::vector<std::int64_t> exps(exps_.size());
    for (std::size_t k = 0; k < exps_.size(); ++k)
        exps[k] = checked_add(exps_[k], other.exps_[k]);
    return Monomial(amb_, std::move(exps));
}

Monomial Monomial::widened_by_leading_x() const {
    std::vector<std::int64_t> exps;
    exps.reserve(exps_.size() + 1);
    exps.push_back(0);
    exps.insert(exps.end(), exps_.begin(), exps_.end());
    return Monomial(Ambient{amb_.m + 1, amb_.n}, std::move(exps));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    require_same_ambient(amb_, other.amb_);
    return exps_ <=> other.exps_;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ambient(a.ambient(), b.ambient());
    std::vector<std::int64_t> exps(a.exponents().size());
    for (std::size_t k = 0; k < exps.size(); ++k)
        exps[k] = std::max(a.exponents()[k], b.exponents()[k]);
    return Monomial(a.ambient(), std::move(exps));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_ambient(a.ambient(), b.ambient());
    for (std::size_t k = 0; k < a.exponents().size(); ++k)
        if (a.exponents()[k] > b.exponents()[k]) return false;
    return true;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
    require_same_ambient(a.ambient(), b.ambient());
    std::vector<std::int64_t> exps(a.exponents().size());
    for (std::size_t k = 0; k < exps.size(); ++k) {
        exps[k] = a.exponents()[k] - b.exponents()[k];
        if (exps[k] < 0)
            throw std::domain_error("quotient: divisor does not divide dividend");
    }
    return Monomial(a.ambient(), std::move(exps));
}

bool degree_lex_less(const Monomial& a, const Monomial& b) {
    std::int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a < b;
}

MonomialSum::MonomialSum(Monomial m, std::int64_t coefficient) {
    add_term(m, coefficient);
}

void MonomialSum::add_term(const Monomial& m, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second = checked_add(it->second, coefficient);
        if (it->second == 0) terms_.erase(it);
    }
}

MonomialSum& MonomialSum::operator+=(const MonomialSum& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

MonomialSum& MonomialSum::operator-=(const MonomialSum& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

MonomialSum MonomialSum::operator-() const {
    MonomialSum out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MonomialSum MonomialSum::scaled(std::int64_t c) const {
    MonomialSum out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, checked_mul(k, c));
    return out;
}

std::pair<Monomial, std::int64_t> MonomialSum::single_term() const {
    if (terms_.size() != 1)
        throw std::logic_error("MonomialSum::single_term: not a single term");
    return *terms_.begin();
}

bool MonomialSum::is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& [m, c] = *terms_.begin();
    return m.is_one() && (c == 1 || c == -1);
}

MonomialSum operator+(MonomialSum a, const MonomialSum& b) {
    a += b;
    return a;
}

MonomialSum operator*(const MonomialSum& a, const MonomialSum& b) {
    MonomialSum out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(ma.times(mb), checked_mul(ca, cb));
    return out;
}

}  // namespace cellres
