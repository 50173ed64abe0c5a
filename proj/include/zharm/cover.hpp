#pragma once

// Cyclic-branched-cover invariants of links presented by their Alexander
// polynomial class, and the existence criterion they decide: the order of
// H_1 of the k-fold cover is |prod_{r=1}^{k-1} Delta(e^{2 pi i r / k})|,
// computed exactly as |resultant(nu_k, Delta)| (0 encodes infinite order).

#include <optional>

#include "zharm/laurent.hpp"

namespace zharm::cover {

using laurent::UnitClass;

// Data inconsistency surfaced to callers (e.g. a knot with determinant 0).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Largest cover degree accepted by the public interface; Sylvester sizes
// stay desk-scale and the criterion only needs k in {2, 3, 6}.
inline constexpr int kMaxCoverDegree = 64;

struct CoverQuery {
    UnitClass delta;
    int k = 2;  // 2 <= k <= kMaxCoverDegree
};

enum class Conclusion { NO_CRITERION, EXISTS_B1_POSITIVE, EXISTS_QHS };

const char* to_string(Conclusion c);

struct CoverVerdict {
    BigInt determinant;      // |Delta(-1)|
    BigInt order2;           // |H_1(S_2)|, equals determinant
    BigInt order3;           // |H_1(S_3)|, 0 = infinite
    bool b1_s2_positive = false;  // <=> determinant == 0
    bool qhs3 = false;            // <=> order3 != 0
    Conclusion conclusion = Conclusion::NO_CRITERION;
};

// |Delta(-1)| of the canonical representative; unit-invariant.
BigInt link_determinant(const UnitClass& delta);

// |H_1(S_k(L))|; the zero class yields 0 (infinite homology).
BigInt homology_order(const CoverQuery& q);
BigInt homology_order(const UnitClass& delta, int k);

// Verdict per the criterion. When components == 1 a zero determinant is a
// data inconsistency (a knot's determinant is never zero) and throws.
CoverVerdict criterion(const UnitClass& delta, std::optional<int> components = std::nullopt);

// Alexander class of the disjoint-union family construction: plain
// multiplicativity of Delta (connected-sum semantics).
UnitClass compose(const UnitClass& d1, const UnitClass& d2);

// Delta of the trefoil, 1 - t + t^2; the family's growth factor at k = 3 is
// |Delta(zeta)Delta(zeta^2)| = 4.
UnitClass trefoil_delta();

// homology_order of compose(deltaL, trefoil^n) at degree k; for k = 3 this
// equals 4^n * homology_order(deltaL, 3).
BigInt family_order(const UnitClass& deltaL, int n, int k);

}  // namespace zharm::cover
