#include "rainbow/algebra.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <set>
#include <unordered_set>

#include "rainbow/error.hpp"
#include "rainbow/random.hpp"

namespace rainbow {

Field Field::rationals() { return Field{mpz_class{0}}; }

Field Field::prime(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
        throw ParameterError("field modulus " + p.get_str() + " is not prime");
    }
    return Field{p};
}

mpq_class Field::reduce(const mpq_class& x) const {
    mpq_class value{x};
    value.canonicalize();
    if (!is_prime_field()) {
        return value;
    }
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), value.get_den().get_mpz_t(), modulus_.get_mpz_t()) == 0) {
        throw ParameterError("denominator of " + value.get_str() + " is not invertible mod " +
                             modulus_.get_str());
    }
    mpz_class residue = value.get_num() * den_inv;
    mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), modulus_.get_mpz_t());
    return mpq_class{residue};
}

ColorKey Field::key(const mpq_class& reduced) const {
    return is_prime_field() ? encode_residue(reduced.get_num()) : encode_rational(reduced);
}

std::string Field::name() const { return is_prime_field() ? "GF(" + modulus_.get_str() + ")" : "Q"; }

SymPoly::SymPoly(Field field, int degree, std::vector<Monomial> terms)
    : field_(std::move(field)), degree_(degree) {
    if (degree_ < 1) {
        throw ParameterError("polynomial degree must be >= 1");
    }
    const auto size = static_cast<std::size_t>(degree_) + 1;
    coeffs_.assign(size, std::vector<mpq_class>(size));
    std::set<std::pair<int, int>> seen;
    for (const auto& t : terms) {
        if (t.i < 0 || t.j < 0 || t.i + t.j > degree_) {
            throw ParameterError("monomial x^" + std::to_string(t.i) + " y^" + std::to_string(t.j) +
                                 " exceeds degree " + std::to_string(degree_));
        }
        if (!seen.emplace(t.i, t.j).second) {
            throw ParameterError("monomial x^" + std::to_string(t.i) + " y^" + std::to_string(t.j) +
                                 " listed twice");
        }
        coeffs_[t.i][t.j] = field_.reduce(t.c);
    }
    bool top = false;
    for (int i = 0; i <= degree_; ++i) {
        for (int j = 0; j <= degree_; ++j) {
            if (coeffs_[i][j] != coeffs_[j][i]) {
                throw ParameterError("polynomial is not symmetric: c[" + std::to_string(i) + "][" +
                                     std::to_string(j) + "] != c[" + std::to_string(j) + "][" +
                                     std::to_string(i) + "]");
            }
            if (i + j == degree_ && sgn(coeffs_[i][j]) != 0) top = true;
        }
    }
    if (!top) {
        throw ParameterError("polynomial has no monomial of total degree " + std::to_string(degree_) +
                             " over " + field_.name());
    }
}

const mpq_class& SymPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > degree_ || j > degree_) {
        throw ParameterError("coefficient index out of range");
    }
    return coeffs_[i][j];
}

mpq_class SymPoly::evaluate_q(int i, const mpq_class& y) const {
    const mpq_class yr = field_.reduce(y);
    mpq_class acc = 0;
    for (int j = degree_; j >= 0; --j) {
        acc = field_.reduce(acc * yr + coeffs_[i][j]);
    }
    return acc;
}

mpq_class SymPoly::evaluate(const mpq_class& x, const mpq_class& y) const {
    const mpq_class xr = field_.reduce(x);
    mpq_class acc = 0;
    for (int i = degree_; i >= 0; --i) {
        acc = field_.reduce(acc * xr + evaluate_q(i, y));
    }
    return acc;
}

std::vector<mpq_class> SymPoly::q(int i) const {
    if (i < 0 || i > degree_) {
        throw ParameterError("q index out of range");
    }
    return coeffs_[i];
}

std::vector<Monomial> SymPoly::terms() const {
    std::vector<Monomial> out;
    for (int i = 0; i <= degree_; ++i) {
        for (int j = 0; j <= degree_; ++j) {
            if (sgn(coeffs_[i][j]) != 0) out.push_back(Monomial{i, j, coeffs_[i][j]});
        }
    }
    return out;
}

namespace {

std::vector<mpq_class> reduce_distinct(const Field& field, std::span<const mpq_class> values,
                                       std::string_view what) {
    std::vector<mpq_class> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(field.reduce(v));
    std::vector<mpq_class> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParameterError(std::string{what} + ": elements are not distinct in " + field.name());
    }
    return out;
}

int first_nonvanishing_q(const SymPoly& poly) {
    for (int j = 1; j <= poly.degree(); ++j) {
        const auto coeffs = poly.q(j);
        if (std::any_of(coeffs.begin(), coeffs.end(), [](const mpq_class& c) { return sgn(c) != 0; })) {
            return j;
        }
    }
    // A symmetric p with q_1 = ... = q_d = 0 would be constant.
    throw InternalError("symmetric polynomial of degree >= 1 has q_j = 0 for every j >= 1");
}

}  // namespace

PreparedSet poly_prepare(const SymPoly& poly, std::span<const mpq_class> x) {
    const std::vector<mpq_class> reduced = reduce_distinct(poly.field(), x, "poly_prepare");
    PreparedSet out;
    out.j = first_nonvanishing_q(poly);
    for (std::size_t idx = 0; idx < reduced.size(); ++idx) {
        if (sgn(poly.evaluate_q(out.j, reduced[idx])) == 0) {
            out.z.push_back(reduced[idx]);
        } else {
            out.y.push_back(reduced[idx]);
            out.y_index.push_back(idx);
        }
    }
    if (out.z.size() > static_cast<std::size_t>(poly.degree())) {
        throw InternalError("zero set of q_" + std::to_string(out.j) + " has " +
                            std::to_string(out.z.size()) + " elements, more than the degree " +
                            std::to_string(poly.degree()));
    }
    return out;
}

Colouring poly_colouring(const SymPoly& poly, std::span<const mpq_class> y) {
    if (y.empty()) {
        throw ParameterError("poly_colouring: empty ground set");
    }
    auto values = std::make_shared<const std::vector<mpq_class>>(reduce_distinct(poly.field(), y, "poly_colouring"));
    const int j = first_nonvanishing_q(poly);
    for (const auto& v : *values) {
        if (sgn(poly.evaluate_q(j, v)) == 0) {
            throw PreconditionError("poly_colouring: " + v.get_str() + " is a zero of q_" +
                                    std::to_string(j) + "; run poly_prepare first");
        }
    }
    auto shared_poly = std::make_shared<const SymPoly>(poly);
    return Colouring{ColouringSpec{2, 1, poly.degree()}, values->size(), "poly",
                     [values, shared_poly](std::span<const Vertex> edge) {
                         const mpq_class v = shared_poly->evaluate((*values)[edge[0]], (*values)[edge[1]]);
                         return shared_poly->field().key(v);
                     }};
}

IntegerInstance make_integer_instance(std::vector<mpz_class> values) {
    if (values.empty()) {
        throw ParameterError("integer instance must be non-empty");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] <= 0) {
            throw ParameterError("integer instance values must be positive, got " + values[i].get_str());
        }
        if (i > 0 && values[i] <= values[i - 1]) {
            throw ParameterError("integer instance values must be strictly increasing at position " +
                                 std::to_string(i));
        }
    }
    return IntegerInstance{std::move(values)};
}

IntegerInstance integers_range(std::size_t n) {
    if (n == 0) {
        throw ParameterError("integers_range needs N >= 1");
    }
    std::vector<mpz_class> values;
    values.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) values.emplace_back(static_cast<unsigned long>(i));
    return IntegerInstance{std::move(values)};
}

IntegerInstance integers_random(std::size_t n, std::uint64_t max_value, std::uint64_t seed) {
    if (n == 0 || n > max_value) {
        throw ParameterError("integers_random needs 1 <= N <= max_value");
    }
    // Floyd's sampling: n distinct draws from [1, max_value].
    Rng rng{seed};
    std::unordered_set<std::uint64_t> chosen;
    for (std::uint64_t j = max_value - n + 1; j <= max_value; ++j) {
        const std::uint64_t t = 1 + uniform_below(rng, j);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> sorted(chosen.begin(), chosen.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<mpz_class> values;
    values.reserve(n);
    for (auto v : sorted) values.emplace_back(static_cast<unsigned long>(v));
    return IntegerInstance{std::move(values)};
}

namespace {

constexpr std::int64_t small_limit = std::int64_t{1} << 62;

bool fits_small(std::span<const mpz_class> values) {
    return std::all_of(values.begin(), values.end(), [](const mpz_class& v) {
        return mpz_fits_slong_p(v.get_mpz_t()) != 0 && v.get_si() < small_limit && v.get_si() > -small_limit;
    });
}

}  // namespace

Colouring sidon_colouring(const IntegerInstance& inst) {
    const ColouringSpec spec{2, 1, 2};
    if (fits_small(inst.values)) {
        auto small = std::make_shared<std::vector<std::int64_t>>();
        small->reserve(inst.values.size());
        for (const auto& v : inst.values) small->push_back(v.get_si());
        return Colouring{spec, small->size(), "sidon", [small](std::span<const Vertex> edge) {
                             const std::int64_t diff = (*small)[edge[0]] - (*small)[edge[1]];
                             return encode_integer(diff < 0 ? -diff : diff);
                         }};
    }
    auto values = std::make_shared<const std::vector<mpz_class>>(inst.values);
    return Colouring{spec, values->size(), "sidon", [values](std::span<const Vertex> edge) {
                         return encode_integer(mpz_class{abs((*values)[edge[0]] - (*values)[edge[1]])});
                     }};
}

bool is_b2_sequence(std::span<const mpz_class> seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] <= 0) {
            throw ParameterError("B2 check needs positive integers");
        }
        if (i > 0 && seq[i] <= seq[i - 1]) {
            throw ParameterError("B2 check needs a strictly increasing sequence");
        }
    }
    if (fits_small(seq)) {
        std::vector<std::int64_t> diffs;
        diffs.reserve(seq.size() * (seq.size() - 1) / 2);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            for (std::size_t j = i + 1; j < seq.size(); ++j) {
                diffs.push_back(seq[j].get_si() - seq[i].get_si());
            }
        }
        std::sort(diffs.begin(), diffs.end());
        return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
    }
    std::vector<mpz_class> diffs;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) diffs.push_back(seq[j] - seq[i]);
    }
    std::sort(diffs.begin(), diffs.end());
    return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

}  // namespace rainbow
