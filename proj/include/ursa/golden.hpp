#pragma once

#include "ursa/json_io.hpp"

namespace ursa {

// The three built-in golden artifacts: the E6 pairing matrix, the 36-word
// table, and the 7-term coproduct display for E_2453.
json golden_matrix_a();
json golden_good_words_e6();
json golden_appendix_delta();

struct GoldenDiff {
    std::vector<std::string> missing;     // expected but absent
    std::vector<std::string> extra;       // computed but unexpected
    std::vector<std::string> mismatched;  // coefficient differences
    bool empty() const { return missing.empty() && extra.empty() && mismatched.empty(); }
    json to_json() const;
};

GoldenDiff diff_pairing_matrix(const RootDatum& rd);
GoldenDiff diff_good_words(const Engine& eng);

// Computes the coproduct of E_2453 and compares it with the golden display,
// term by term after slot-wise normal forms (the display lives in the
// quotient, where orthogonal generators commute).
GoldenDiff diff_appendix_delta(const Engine& eng);

// Same comparison against an arbitrary (possibly corrupted) golden payload;
// used by the negative-control test.
GoldenDiff diff_appendix_delta_against(const Engine& eng, const json& golden);

}  // namespace ursa
