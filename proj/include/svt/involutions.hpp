#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "svt/tableaux.hpp"

namespace svt {

// Rightmost box of the lowest row; removing it drives the induction.
struct CornerBox {
    Cell cell;
};

struct CornerRemoval {
    CornerBox box;
    SkewShape reduced;  // theta' = theta minus the box
};

CornerRemoval corner_box(const SkewShape& shape);

// B(T): the fills of the corner box that keep the tableau semi-standard.
// Closed form: all nonempty subsets of {a..n}, empty when a > n.
struct FillSet {
    int lower_bound = 1;          // a
    std::vector<uint64_t> fills;  // ascending bitmask order
    bool contains(uint64_t fill) const;
};

FillSet admissible_fill_set(const SetValuedTableau& t, const CornerBox& box, int n);

// A(T,S): attach the fill at the corner box. Rejects fills that break the
// semi-standard conditions, so this doubles as the membership contract that
// the closed form above is tested against.
SetValuedTableau attach_cell(const SetValuedTableau& t, const CornerBox& box, uint64_t fill);

// Length of the maximal chain n in T(i-1,j), n-1 in T(i-2,j), ... read
// upward from the corner; 0..n-1.
int h_statistic(const SetValuedTableau& t, const CornerBox& box, int n);

// Toggle n-h at the chain's top cell; defined only on classes with h != 0.
SetValuedTableau f_map(const SetValuedTableau& t, const CornerBox& box, int n);

std::map<int, std::vector<SetValuedTableau>> partition_by_h(const SkewShape& reduced,
                                                            const CornerBox& box, int n);

// T0: each column filled 1,2,3,... downward; the unique entry-sum minimum.
SetValuedTableau minimal_tableau(const SkewShape& shape, int n);

// Toggle the locator letter at the column-major-first cell where t differs
// from T0; defined on SVT minus {T0}.
SetValuedTableau g_map(const SetValuedTableau& t);

// Exhaustive checks of the g pairing on one instance.
struct GReport {
    SkewShape shape;
    int n = 0;
    BigInt count;
    BigInt orbits;                  // paired non-minimal tableaux / 2
    bool pairing_ok = false;        // involution, fixed-point-free, |T| flips by 1
    bool minimal_unique_ok = false; // T0 is the strict entry-sum minimum
    bool ok() const { return pairing_ok && minimal_unique_ok; }
};

GReport verify_g(const SkewShape& shape, int n);
GReport verify_g_with(const SkewShape& shape, int n,
                      const std::function<SetValuedTableau(const SetValuedTableau&)>& g);

// Exhaustive checks of the corner-box machinery on one instance (shape is
// theta, |theta| >= 1): class parities, empty fill sets off class zero, the
// f pairing, the closed-form fill sets, and the corner-fill counting step.
struct ClaimsReport {
    SkewShape shape;
    int n = 0;
    Cell corner;
    SkewShape reduced;
    std::map<int, BigInt> class_sizes;
    bool claim1 = false;               // B(T) empty whenever h != 0
    bool claim2 = false;               // sizes odd at h=0, even elsewhere
    bool f_involution_ok = false;      // f fixed-point-free involution per class
    bool fill_closed_form_ok = false;  // closed form == attach-validity contract
    bool h0_has_singleton_n = false;   // {n} admissible for every class-0 tableau
    BigInt fill_sum;                   // total fills over class 0
    bool counting_identity_ok = false; // fill_sum == |SVT(theta,n)|
    bool ok() const;
};

ClaimsReport verify_claims(const SkewShape& shape, int n);

// Count, parity, signed sum and the g pairing for one instance; the pieces
// have to agree with each other.
struct ParityReport {
    SkewShape shape;
    int n = 0;
    BigInt count;             // profile count
    BigInt count_enumerated;  // reference path
    bool odd = false;
    BigInt signed_count;
    BigInt g_orbits;
    bool g_ok = false;
    bool consistent() const;
};

ParityReport verify_parity(const SkewShape& shape, int n);
std::string parity_report_json(const ParityReport& r);

}  // namespace svt
