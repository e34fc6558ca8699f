#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qh/bigint.hpp"

namespace qh {

/// One term of the sequence, +1 or -1.
using sign_t = std::int8_t;

/// The order-4 Walsh matrix rows; the sequence recurrence is
/// a(4m+c) = a(m) * kWalsh4[m mod 4][c].
inline constexpr std::array<std::array<int, 4>, 4> kWalsh4 = {{
    {{1, 1, 1, 1}},
    {{1, -1, 1, -1}},
    {{1, 1, -1, -1}},
    {{1, -1, -1, 1}},
}};

/// Adjacent digit pairs (higher, lower) whose occurrence flips the sign:
/// {11, 13, 22, 23, 31, 32}.  The set is closed under swapping the two
/// digits, so the orientation convention does not change the predicate;
/// it corresponds to a(n0 + 4 n1) = -1 exactly for
/// n0 + 4 n1 in {5, 7, 10, 11, 13, 14}.
inline constexpr bool is_link(unsigned hi, unsigned lo) {
    constexpr std::uint16_t table = (1u << (1 * 4 + 1)) | (1u << (1 * 4 + 3)) |
                                    (1u << (2 * 4 + 2)) | (1u << (2 * 4 + 3)) |
                                    (1u << (3 * 4 + 1)) | (1u << (3 * 4 + 2));
    return (table >> (hi * 4 + lo)) & 1u;
}

/// Base-4 digits of n, least-significant first; digits4(0) = {0}.
std::vector<std::uint8_t> digits4(const Int& n);
std::vector<std::uint8_t> digits4(std::int64_t n);

/// Digits rendered most-significant first, e.g. 22 -> "112".
std::string digits4_string(const Int& n);

/// Number of adjacent digit pairs of n that are links.
std::int64_t link_count(const Int& n);
std::int64_t link_count(std::int64_t n);

/// n-th term: (-1)^link_count(n).
sign_t sign_at(const Int& n);
sign_t sign_at(std::int64_t n);

/// First `len` terms, computed by the Walsh-row recurrence in linear time.
std::vector<sign_t> prefix(std::int64_t len);

/// One block-doubling step: a word of length 4^j (or 1) maps to the word of
/// length 4^(j+1) built from its quarters A,B,C,D as
/// A B C D  A -B C -D  A B -C -D  A -B -C D.
/// Throws std::invalid_argument unless |word| is 1 or a positive power of 4.
std::vector<sign_t> block_extend(const std::vector<sign_t>& word);

/// Letter over the 8-letter alphabet {+-}{a,b,c,d}; base 0..3 meaning a..d.
struct Letter {
    std::uint8_t base = 0;
    sign_t sign = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

Letter negate(Letter l);
std::string to_string(const Letter& l);

/// A sign-equivariant substitution: stores the images of the four positive
/// letters; the image of -x is the term-wise negation of the image of +x,
/// so all 8 letters are mapped by construction.
class SubstitutionRule {
public:
    explicit SubstitutionRule(std::array<std::vector<Letter>, 4> positive_images);

    const std::vector<Letter>& positive_image(std::uint8_t base) const {
        return images_[base];
    }
    std::vector<Letter> image(const Letter& l) const;

private:
    std::array<std::vector<Letter>, 4> images_;
};

/// The two rules: s0 maps each letter to a 4-letter word, s1 to a 2-letter
/// word, and s1 applied twice equals s0.
const SubstitutionRule& rule_s0();
const SubstitutionRule& rule_s1();

std::vector<Letter> substitute(const SubstitutionRule& rule, std::vector<Letter> word,
                               int steps);

/// Prefix of the infinite word fixed by `rule`, starting from +a, of length
/// at least `min_len` (trimmed to exactly min_len).
std::vector<Letter> fixed_word(const SubstitutionRule& rule, std::size_t min_len);

std::vector<sign_t> letter_signs(const std::vector<Letter>& word);

/// Incremental sign generator: amortized O(1) per term, O(log n) memory.
/// Maintains the base-4 digits of the current index and the running link
/// count across increments.
class SignStream {
public:
    SignStream();

    sign_t current() const { return links_ % 2 ? -1 : 1; }
    std::int64_t index() const { return index_; }

    /// Returns the sign at the current index, then advances.
    sign_t next();

private:
    std::vector<std::uint8_t> digits_;  // least-significant first
    std::int64_t links_ = 0;
    std::int64_t index_ = 0;
};

/// Cross-check of the five equivalent generators (digit formula, linear
/// recurrence, block doubling, s0 fixed point, s1 fixed point) on the first
/// `len` terms.
struct EquivalenceReport {
    bool ok = true;
    std::int64_t length = 0;
    std::int64_t first_mismatch = -1;          // -1 when ok
    std::array<int, 5> values_at_mismatch{};   // per generator
    static constexpr std::array<const char*, 5> kGenerators = {
        "digit_formula", "recurrence", "block_doubling", "s0_fixed_point",
        "s1_fixed_point"};
};

/// `corrupt_index`, when >= 0, flips that term of the block-doubling route
/// before comparison; test hook for the failure path.
EquivalenceReport verify_equivalence(std::int64_t len, std::int64_t corrupt_index = -1);

}  // namespace qh
