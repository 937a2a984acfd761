#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jones3 {

struct BraidParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownTokenError : BraidParseError {
    using BraidParseError::BraidParseError;
};
struct IndexOutOfRangeError : BraidParseError {
    using BraidParseError::BraidParseError;
};
struct OddExponentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One elementary crossing of the three-strand braid group: strand index
/// in {1,2}, sign +1 for an over-crossing, -1 for its inverse.
struct Generator {
    int index = 1;
    int sign = +1;

    bool operator==(const Generator&) const = default;
};

Generator sigma(int index);
Generator sigma_inv(int index);

/// A braid word: ordered letters, empty word = identity braid.
struct BraidWord {
    std::vector<Generator> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    bool operator==(const BraidWord&) const = default;
};

// Text form: whitespace-separated tokens, either signed integers ("1", "-2")
// or letter form ("s1" = sigma_1, "S2" = sigma_2 inverse).
BraidWord parse_braid(const std::string& text);

// Signed-integer form; parse_braid(to_string(w)) == w.
std::string to_string(const BraidWord& word);

int exponent_sum(const BraidWord& word);

// Writhe of the trace closure. The sign is calibrated so that the closure of
// a single positive crossing evaluates to the two-component unlink; with the
// representation conventions used here that forces w = -exponent_sum.
int writhe_of_closure(const BraidWord& word);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
BraidWord power(const BraidWord& a, int s);

// The word sigma_2 sigma_1 sigma_2^j sigma_1 sigma_2 for even j >= 0. Its
// trace closures are pairwise topologically distinct, yet the pre-measurement
// state of the sampler stays separable for every bipartition.
BraidWord separable_family_word(int j);

// Exhaustive enumeration over the letter alphabet (s1, s1^-1, s2, s2^-1),
// used by the verification sweeps. word_at treats `index` as a base-4 numeral.
BraidWord word_at(int length, std::uint64_t index);
std::vector<BraidWord> all_words_up_to(int max_len);

}  // namespace jones3
