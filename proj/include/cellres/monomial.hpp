#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cellres {

/// Variable counts (m, n) of the ambient polynomial ring
/// k[X_1..X_m, Y_1..Y_n].  Values interoperate only when ambients match.
struct Ambient {
    int m = 0;
    int n = 0;

    int vars() const { return m + n; }
    friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// A monomial in X_1..X_m, Y_1..Y_n, stored as its exponent vector
/// (positions 0..m-1 for the X's, m..m+n-1 for the Y's).  Exponents are
/// machine-word integers; every arithmetic path is overflow-checked.
/// Immutable after construction.
class Monomial {
public:
    Monomial() = default;
    Monomial(Ambient ambient, std::vector<std::int64_t> exponents);

    static Monomial one(Ambient ambient);
    /// X_i^e with 1 <= i <= m.
    static Monomial x(Ambient ambient, int i, std::int64_t e = 1);
    /// Y_j^e with 1 <= j <= n.
    static Monomial y(Ambient ambient, int j, std::int64_t e = 1);

    const Ambient& ambient() const { return amb_; }
    const std::vector<std::int64_t>& exponents() const { return exps_; }
    std::int64_t exponent(int pos) const;
    std::int64_t x_exponent(int i) const;  // 1-based
    std::int64_t y_exponent(int j) const;  // 1-based
    std::int64_t total_degree() const;
    bool is_one() const;

    /// Product (exponent sum, overflow-checked).
    Monomial times(const Monomial& other) const;

    /// Re-embeds k[X_1..X_m, Y*] into k[X_1..X_{m+1}, Y*] by inserting a new
    /// first X variable with exponent zero; every old X_i becomes X_{i+1}.
    Monomial widened_by_leading_x() const;

    /// Ordering is plain lexicographic on the exponent vector (used for
    /// canonical term order); ambients must match.
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

private:
    Ambient amb_;
    std::vector<std::int64_t> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
/// a / b; throws std::domain_error unless divides(b, a).
Monomial quotient(const Monomial& a, const Monomial& b);

/// Total degree, ties broken lexicographically on the exponent vector.
/// The deterministic order used for lattice scans and witness reporting.
bool degree_lex_less(const Monomial& a, const Monomial& b);

/// A finite integer combination of monomials, kept canonical: no zero
/// coefficients are stored, at most one term per monomial.  Supports exactly
/// the arithmetic that differential verification needs.
class MonomialSum {
public:
    MonomialSum() = default;
    explicit MonomialSum(Monomial m, std::int64_t coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

    void add_term(const Monomial& m, std::int64_t coefficient);
    MonomialSum& operator+=(const MonomialSum& other);
    MonomialSum& operator-=(const MonomialSum& other);
    MonomialSum operator-() const;
    MonomialSum scaled(std::int64_t c) const;

    bool is_single_term() const { return terms_.size() == 1; }
    /// The unique (monomial, coefficient) pair; throws unless single-term.
    std::pair<Monomial, std::int64_t> single_term() const;
    /// True for the unit entries minimality cares about: a single term with
    /// coefficient +-1 and monomial 1.
    bool is_unit() const;

    friend MonomialSum operator+(MonomialSum a, const MonomialSum& b);
    friend MonomialSum operator*(const MonomialSum& a, const MonomialSum& b);
    bool operator==(const MonomialSum& other) const = default;

private:
    std::map<Monomial, std::int64_t> terms_;
};

}  // namespace cellres
