#pragma once

// Braid words, the reduced Burau representation over Laurent-polynomial
// matrices, and Alexander polynomials of braid closures. A Seifert-matrix
// route is provided as an independent oracle.

#include <string_view>
#include <vector>

#include "zharm/laurent.hpp"

namespace zharm::braid {

using laurent::LaurentPoly;
using laurent::UnitClass;

// n >= 1 strands; letters are nonzero integers g with |g| <= n-1, where
// g = +i is the generator sigma_i and g = -i its inverse. The empty word is
// the trivial braid.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

// Accepts "n: l1,l2,..." or a bare comma/space-separated letter list with n
// inferred as max|letter| + 1.
BraidWord parse_braid(std::string_view text);

// Number of cycles of the closure permutation (sigma_i acts as the
// transposition (i, i+1)).
int closure_components(const BraidWord& b);

// Square matrix over the Laurent ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(size_t n) : n_(n), entries_(n * n) {}
    static PolyMatrix identity(size_t n);

    size_t size() const { return n_; }
    LaurentPoly& at(size_t i, size_t j) { return entries_[i * n_ + j]; }
    const LaurentPoly& at(size_t i, size_t j) const { return entries_[i * n_ + j]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    bool operator==(const PolyMatrix&) const = default;

private:
    size_t n_ = 0;
    std::vector<LaurentPoly> entries_;
};

// Exact determinant: cofactor expansion up to 4x4, fraction-free elimination
// over the polynomial ring above that.
LaurentPoly determinant(const PolyMatrix& m);

// Reduced Burau matrix of a single generator. Convention: sigma_i acts on
// the basis e_1..e_{n-1} by
//   e_{i-1} -> e_{i-1} + t e_i   (i >= 2)
//   e_i     -> -t e_i
//   e_{i+1} -> e_i + e_{i+1}     (i <= n-2)
// and inverse letters use the exact closed-form inverse (entries Laurent).
PolyMatrix burau_generator(int n, int letter);

// Ordered product of per-letter matrices, word composed left to right.
// Requires n >= 2.
PolyMatrix burau_reduced(const BraidWord& b);

// normalize( det(burau_reduced(b) - I) / nu_n(t) ), the division performed
// after clearing the unit t^min so both operands are ordinary polynomials.
// Split closures (determinant identically zero) yield the zero class.
UnitClass alexander_from_braid(const BraidWord& b);

struct SeifertMatrix {
    // Row-major square integer matrix; may be empty (0x0).
    std::vector<std::vector<long long>> entries;
};

// normalize( det(t*S - S^T) ); the empty matrix yields 1.
UnitClass alexander_from_seifert(const SeifertMatrix& s);

}  // namespace zharm::braid
