#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "svt/shapes.hpp"

namespace svt {

// Entry sets are bitmasks over letters 1..n (bit k holds letter k+1), which
// caps the alphabet at the mask width.
inline constexpr int kMaxAlphabet = 64;

uint64_t full_mask(int n);
int mask_min(uint64_t mask);
int mask_max(uint64_t mask);
int mask_size(uint64_t mask);
std::vector<int> mask_letters(uint64_t mask);
uint64_t letters_mask(const std::vector<int>& letters, int n);

// A filling of a skew shape by nonempty subsets of {1..n}, stored in
// row-major cell order. Construction checks structure (coverage, nonempty
// sets within the alphabet); the semi-standard conditions are a separate
// predicate so invalid fillings can be represented and rejected.
class SetValuedTableau {
public:
    SetValuedTableau(SkewShape shape, int n, std::vector<uint64_t> entries);

    const SkewShape& shape() const { return shape_; }
    int alphabet() const { return n_; }
    const std::vector<uint64_t>& entries() const { return entries_; }
    uint64_t entry(int cell_index) const { return entries_[cell_index]; }
    uint64_t entry(Cell c) const;
    // |T|: total number of assigned letters.
    int letter_count() const;

    bool operator==(const SetValuedTableau&) const = default;

private:
    SkewShape shape_;
    int n_ = 0;
    std::vector<uint64_t> entries_;
};

struct WeightVector {
    std::vector<int> counts;  // counts[i] = occurrences of letter i+1
    bool operator==(const WeightVector&) const = default;
};

bool is_valid_svt(const SetValuedTableau& t);

// Depth-first enumeration in deterministic order: cells filled row-major,
// entry sets per cell in ascending bitmask order. The callback returns false
// to stop early.
void enumerate_svt(const SkewShape& shape, int n,
                   const std::function<bool(const SetValuedTableau&)>& yield);
void enumerate_sst(const SkewShape& shape, int n,
                   const std::function<bool(const SetValuedTableau&)>& yield);
std::vector<SetValuedTableau> collect_svt(const SkewShape& shape, int n);
std::vector<SetValuedTableau> collect_sst(const SkewShape& shape, int n);

// |SVT(theta,n)| via the memoized column-profile count (fast path).
BigInt count_svt(const SkewShape& shape, int n);
// Same quantity via the enumerator; kept as the reference path.
BigInt count_svt_enumerate(const SkewShape& shape, int n);
// |SST(theta,n)|, same profile recursion restricted to singleton entries.
BigInt count_sst(const SkewShape& shape, int n);

WeightVector weight(const SetValuedTableau& t);

// Sum of (-1)^(|T|-|theta|) over SVT(theta,n), computed by enumeration.
BigInt signed_excess_count(const SkewShape& shape, int n);

std::string render_text(const SetValuedTableau& t);
// One-line JSON: {"outer":[...],"inner":[...],"n":N,"cells":[...]}.
std::string tableau_json(const SetValuedTableau& t);

}  // namespace svt
