#pragma once

// Exact integer Laurent polynomial arithmetic in one variable t.
//
// Coefficients are arbitrary-precision integers: Sylvester determinants of
// degree-20 inputs already overflow 64-bit words. Storage is a sparse
// exponent -> coefficient map with no explicit zeros; the zero polynomial is
// the empty map.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zharm {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Division f = q*g + r with r != 0 where exact division was required.
// Carries the offending remainder so callers can diagnose convention bugs.
class InexactDivisionError : public std::runtime_error {
public:
    InexactDivisionError(std::string msg, std::map<int, BigInt> remainder)
        : std::runtime_error(std::move(msg)), remainder_(std::move(remainder)) {}
    const std::map<int, BigInt>& remainder_terms() const { return remainder_; }

private:
    std::map<int, BigInt> remainder_;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace laurent {

class LaurentPoly {
public:
    LaurentPoly() = default;  // zero

    static LaurentPoly constant(BigInt c);
    // c * t^exp
    static LaurentPoly term(BigInt c, int exp);
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly t() { return term(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    // Lowest/highest stored exponent; undefined on the zero polynomial.
    int min_exp() const;
    int max_exp() const;
    BigInt coeff(int exp) const;
    const std::map<int, BigInt>& terms() const { return coeffs_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);

    // f * t^k
    LaurentPoly shifted(int k) const;

    bool operator==(const LaurentPoly&) const = default;

    void set_coeff(int exp, BigInt c);

private:
    std::map<int, BigInt> coeffs_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);

// Exact evaluation at a nonzero integer point. The result is integral
// whenever min_exp >= 0 or x = +-1; negative exponents at other points give
// a true rational.
BigRat eval_int(const LaurentPoly& f, const BigInt& x);

// nu_k(t) = 1 + t + ... + t^{k-1}, k >= 2. Its roots are exactly the
// nontrivial k-th roots of unity, the evaluation points of the cyclic-cover
// homology formula.
LaurentPoly cyclotomic_column(int k);

// Resultant of two nonzero ordinary polynomials (min exponent >= 0):
// determinant of their Sylvester matrix, computed by fraction-free Bareiss
// elimination over the integers. Callers shift Laurent inputs to min
// exponent 0 first; against nu_k a shift only changes the result by a unit,
// absorbed by the absolute value downstream.
BigInt resultant(const LaurentPoly& f, const LaurentPoly& g);

// Exact quotient q with f = q*g in the Laurent ring. Throws
// InexactDivisionError carrying the nonzero remainder otherwise.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

// Equivalence class of Laurent polynomials modulo units +-t^k. The canonical
// representative has min exponent 0 and positive leading (highest-degree)
// coefficient, or is the zero polynomial; equality up to units becomes plain
// equality of canonical forms.
class UnitClass {
public:
    UnitClass() = default;  // zero class
    explicit UnitClass(const LaurentPoly& f);

    const LaurentPoly& canonical() const { return canonical_; }
    bool is_zero() const { return canonical_.is_zero(); }

    bool operator==(const UnitClass&) const = default;

private:
    LaurentPoly canonical_;
};

UnitClass normalize(const LaurentPoly& f);

// Text grammar shared by every module:
//   poly := ['-'] term (('+'|'-') term)*
//   term := integer | [integer ['*']] 't' ['^' ['-'] integer]
// Whitespace is ignored.
LaurentPoly parse_poly(std::string_view text);
std::string to_string(const LaurentPoly& f);

}  // namespace laurent
}  // namespace zharm
