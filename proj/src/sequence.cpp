#include "qh/sequence.hpp"

#include <stdexcept>

namespace qh {

namespace {

constexpr std::int64_t kFastPathLimit = std::int64_t(1) << 30;  // 4^15

void check_fast_path(std::int64_t len) {
    if (len > kFastPathLimit)
        throw std::invalid_argument("length exceeds the 4^15 fixed-width fast path");
}

}  // namespace

std::vector<std::uint8_t> digits4(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("digits4: negative index");
    std::vector<std::uint8_t> d;
    if (n == 0) return {0};
    while (n > 0) {
        d.push_back(static_cast<std::uint8_t>(n & 3));
        n >>= 2;
    }
    return d;
}

std::vector<std::uint8_t> digits4(const Int& n) {
    if (n.is_negative()) throw std::invalid_argument("digits4: negative index");
    if (n.fits_int64()) return digits4(n.to_int64());
    std::vector<std::uint8_t> d;
    Int tmp = n;
    while (!tmp.is_zero()) d.push_back(static_cast<std::uint8_t>(tmp.divmod_small_inplace(4)));
    return d;
}

std::string digits4_string(const Int& n) {
    auto d = digits4(n);
    std::string s;
    s.reserve(d.size());
    for (auto it = d.rbegin(); it != d.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
    return s;
}

namespace {

std::int64_t link_count_digits(const std::vector<std::uint8_t>& d) {
    std::int64_t c = 0;
    for (std::size_t j = 0; j + 1 < d.size(); ++j)
        if (is_link(d[j + 1], d[j])) ++c;
    return c;
}

}  // namespace

std::int64_t link_count(std::int64_t n) { return link_count_digits(digits4(n)); }
std::int64_t link_count(const Int& n) { return link_count_digits(digits4(n)); }

sign_t sign_at(std::int64_t n) { return link_count(n) % 2 ? -1 : 1; }
sign_t sign_at(const Int& n) { return link_count(n) % 2 ? -1 : 1; }

std::vector<sign_t> prefix(std::int64_t len) {
    if (len < 0) throw std::invalid_argument("prefix: negative length");
    check_fast_path(len);
    std::vector<sign_t> a(static_cast<std::size_t>(len));
    if (len == 0) return a;
    a[0] = 1;
    for (std::int64_t m = 0; 4 * m < len; ++m) {
        sign_t am = a[static_cast<std::size_t>(m)];
        const auto& row = kWalsh4[static_cast<std::size_t>(m & 3)];
        for (int c = 0; c < 4; ++c) {
            std::int64_t idx = 4 * m + c;
            if (idx >= len) break;
            a[static_cast<std::size_t>(idx)] = static_cast<sign_t>(am * row[c]);
        }
    }
    return a;
}

std::vector<sign_t> block_extend(const std::vector<sign_t>& word) {
    std::size_t n = word.size();
    if (n == 1) return std::vector<sign_t>(4, word[0]);
    if (n == 0 || (n & (n - 1)) != 0 || (n % 3 != 1))  // powers of 4 are 1 mod 3
        throw std::invalid_argument("block_extend: length must be 1 or a positive power of 4");
    std::size_t quarter = n / 4;
    std::vector<sign_t> out;
    out.reserve(4 * n);
    // the 16 block signs are the first 16 terms of the sequence itself
    static constexpr std::array<int, 16> kBlockSigns = {1, 1, 1, 1, 1, -1, 1, -1,
                                                        1, 1, -1, -1, 1, -1, -1, 1};
    for (int b = 0; b < 16; ++b) {
        const sign_t* src = word.data() + static_cast<std::size_t>(b % 4) * quarter;
        int s = kBlockSigns[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < quarter; ++i)
            out.push_back(static_cast<sign_t>(s * src[i]));
    }
    return out;
}

Letter negate(Letter l) {
    l.sign = static_cast<sign_t>(-l.sign);
    return l;
}

std::string to_string(const Letter& l) {
    std::string s = l.sign > 0 ? "+" : "-";
    s.push_back(static_cast<char>('a' + l.base));
    return s;
}

SubstitutionRule::SubstitutionRule(std::array<std::vector<Letter>, 4> positive_images)
    : images_(std::move(positive_images)) {
    for (const auto& img : images_)
        if (img.empty()) throw std::invalid_argument("substitution image must be nonempty");
}

std::vector<Letter> SubstitutionRule::image(const Letter& l) const {
    std::vector<Letter> img = images_[l.base];
    if (l.sign < 0)
        for (auto& x : img) x = negate(x);
    return img;
}

namespace {

std::vector<Letter> parse_word(const char* s) {
    std::vector<Letter> w;
    while (*s) {
        sign_t sg = *s == '-' ? -1 : 1;
        ++s;
        w.push_back(Letter{static_cast<std::uint8_t>(*s - 'a'), sg});
        ++s;
    }
    return w;
}

}  // namespace

const SubstitutionRule& rule_s0() {
    static const SubstitutionRule rule({
        parse_word("+a+b+c+d"),
        parse_word("+a-b+c-d"),
        parse_word("+a+b-c-d"),
        parse_word("+a-b-c+d"),
    });
    return rule;
}

const SubstitutionRule& rule_s1() {
    static const SubstitutionRule rule({
        parse_word("+a+b"),
        parse_word("+c+d"),
        parse_word("+a-b"),
        parse_word("+c-d"),
    });
    return rule;
}

std::vector<Letter> substitute(const SubstitutionRule& rule, std::vector<Letter> word,
                               int steps) {
    if (steps < 0) throw std::invalid_argument("substitute: negative step count");
    for (int s = 0; s < steps; ++s) {
        std::vector<Letter> next;
        next.reserve(word.size() * 2);
        for (const Letter& l : word) {
            auto img = rule.image(l);
            next.insert(next.end(), img.begin(), img.end());
        }
        word = std::move(next);
    }
    return word;
}

std::vector<Letter> fixed_word(const SubstitutionRule& rule, std::size_t min_len) {
    std::vector<Letter> w = {Letter{0, 1}};
    while (w.size() < min_len) w = substitute(rule, std::move(w), 1);
    w.resize(std::max<std::size_t>(min_len, 1));
    if (min_len == 0) w.clear();
    return w;
}

std::vector<sign_t> letter_signs(const std::vector<Letter>& word) {
    std::vector<sign_t> s;
    s.reserve(word.size());
    for (const Letter& l : word) s.push_back(l.sign);
    return s;
}

SignStream::SignStream() : digits_{0} {}

sign_t SignStream::next() {
    sign_t out = current();
    // increment the base-4 counter, updating the link count along the carry
    // chain; each changed digit touches only the pairs with its neighbours
    std::size_t i = 0;
    while (true) {
        // remove pair contributions (digit i with digit i+1); the pair with
        // i-1 was already handled when i-1 changed (its digit became 0)
        if (i + 1 < digits_.size() && is_link(digits_[i + 1], digits_[i])) --links_;
        if (digits_[i] < 3) {
            ++digits_[i];
            if (i + 1 < digits_.size() && is_link(digits_[i + 1], digits_[i])) ++links_;
            break;
        }
        digits_[i] = 0;
        if (i + 1 == digits_.size()) {
            digits_.push_back(1);
            break;
        }
        ++i;
    }
    // pairs below the carry chain: digit i-1 pairs with 0, never a link, so
    // no further adjustment is needed
    ++index_;
    return out;
}

EquivalenceReport verify_equivalence(std::int64_t len, std::int64_t corrupt_index) {
    if (len < 1) throw std::invalid_argument("verify_equivalence: length must be positive");
    check_fast_path(len);
    EquivalenceReport rep;
    rep.length = len;

    std::vector<sign_t> rec = prefix(len);

    std::vector<sign_t> blk = {1};
    while (static_cast<std::int64_t>(blk.size()) < len) blk = block_extend(blk);
    blk.resize(static_cast<std::size_t>(len));
    if (corrupt_index >= 0 && corrupt_index < len)
        blk[static_cast<std::size_t>(corrupt_index)] =
            static_cast<sign_t>(-blk[static_cast<std::size_t>(corrupt_index)]);

    std::vector<sign_t> s0 = letter_signs(fixed_word(rule_s0(), static_cast<std::size_t>(len)));
    std::vector<sign_t> s1 = letter_signs(fixed_word(rule_s1(), static_cast<std::size_t>(len)));

    SignStream digit_route;
    for (std::int64_t i = 0; i < len; ++i) {
        auto idx = static_cast<std::size_t>(i);
        int d = digit_route.next();
        std::array<int, 5> vals = {d, rec[idx], blk[idx], s0[idx], s1[idx]};
        if (vals[1] != vals[0] || vals[2] != vals[0] || vals[3] != vals[0] ||
            vals[4] != vals[0]) {
            rep.ok = false;
            rep.first_mismatch = i;
            rep.values_at_mismatch = vals;
            return rep;
        }
    }
    return rep;
}

}  // namespace qh
