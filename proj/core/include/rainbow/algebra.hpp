#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rainbow/colouring.hpp"

namespace rainbow {

/// Q or a prime field GF(p). Elements of either are carried as mpq_class;
/// GF(p) elements are integers reduced into [0, p).
class Field {
public:
    static Field rationals();
    /// Throws ParameterError unless p is prime.
    static Field prime(const mpz_class& p);

    bool is_prime_field() const noexcept { return sgn(modulus_) != 0; }
    const mpz_class& modulus() const noexcept { return modulus_; }

    /// Canonical representative. In GF(p) a fraction a/b maps to a*b^-1;
    /// b divisible by p is a ParameterError.
    mpq_class reduce(const mpq_class& x) const;

    ColorKey key(const mpq_class& reduced) const;
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) { return a.modulus_ == b.modulus_; }

private:
    explicit Field(mpz_class modulus) : modulus_(std::move(modulus)) {}
    mpz_class modulus_;  // 0 for Q
};

struct Monomial {
    int i = 0;  // power of x
    int j = 0;  // power of y
    mpq_class c;
};

/// Symmetric bivariate polynomial sum c[i][j] x^i y^j of total degree d.
class SymPoly {
public:
    /// Validates symmetry c[i][j] = c[j][i], i + j <= d, unique (i, j) and
    /// that some monomial of total degree d survives reduction.
    SymPoly(Field field, int degree, std::vector<Monomial> terms);

    const Field& field() const noexcept { return field_; }
    int degree() const noexcept { return degree_; }
    const mpq_class& coeff(int i, int j) const;

    mpq_class evaluate(const mpq_class& x, const mpq_class& y) const;

    /// Coefficients (index = power of y) of q_i in p = sum_i q_i(y) x^i.
    std::vector<mpq_class> q(int i) const;
    mpq_class evaluate_q(int i, const mpq_class& y) const;

    /// Non-zero monomials ordered by (i, j).
    std::vector<Monomial> terms() const;

private:
    Field field_;
    int degree_;
    std::vector<std::vector<mpq_class>> coeffs_;  // (d+1) x (d+1)
};

/// Outcome of removing the zeros of the first non-vanishing q_j from X.
struct PreparedSet {
    int j = 0;
    std::vector<mpq_class> y;             // X \ Z, reduced, in input order
    std::vector<mpq_class> z;             // zeros of q_j inside X
    std::vector<std::size_t> y_index;     // positions of y within X
};

PreparedSet poly_prepare(const SymPoly& poly, std::span<const mpq_class> x);

/// Colours a pair {a, b} of Y by p(a, b). k = 2, h = 1, lambda = d.
/// Throws PreconditionError if Y still contains a zero of q_j.
Colouring poly_colouring(const SymPoly& poly, std::span<const mpq_class> y);

/// Strictly increasing positive integers.
struct IntegerInstance {
    std::vector<mpz_class> values;
};

IntegerInstance make_integer_instance(std::vector<mpz_class> values);
IntegerInstance integers_range(std::size_t n);  // {1, ..., n}
/// n distinct values drawn uniformly from [1, max_value], sorted.
IntegerInstance integers_random(std::size_t n, std::uint64_t max_value, std::uint64_t seed);

/// Colours a pair {x, y} by |x - y|. k = 2, h = 1, lambda = 2.
Colouring sidon_colouring(const IntegerInstance& inst);

/// True iff the pairwise differences a_j - a_i (i < j) are all distinct,
/// which is equivalent to all sums a_i + a_j (i <= j) being distinct.
/// Throws ParameterError unless the sequence is strictly increasing and
/// positive.
bool is_b2_sequence(std::span<const mpz_class> seq);

}  // namespace rainbow
