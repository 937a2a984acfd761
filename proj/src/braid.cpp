#include "jones3/braid.hpp"

#include <sstream>

namespace jones3 {

namespace {

Generator make_checked(int index, int sign, const std::string& token) {
    if (index != 1 && index != 2) {
        throw IndexOutOfRangeError("generator index must be 1 or 2: \"" + token + "\"");
    }
    return Generator{index, sign};
}

Generator parse_token(const std::string& token) {
    if (token.size() == 2 && (token[0] == 's' || token[0] == 'S') && token[1] >= '0' &&
        token[1] <= '9') {
        int index = token[1] - '0';
        int sign = token[0] == 's' ? +1 : -1;
        return make_checked(index, sign, token);
    }
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw UnknownTokenError("unrecognized braid token: \"" + token + "\"");
    }
    if (pos != token.size()) {
        throw UnknownTokenError("unrecognized braid token: \"" + token + "\"");
    }
    return make_checked(value < 0 ? -value : value, value < 0 ? -1 : +1, token);
}

}  // namespace

Generator sigma(int index) { return make_checked(index, +1, std::to_string(index)); }

Generator sigma_inv(int index) { return make_checked(index, -1, std::to_string(-index)); }

BraidWord parse_braid(const std::string& text) {
    BraidWord word;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        word.letters.push_back(parse_token(token));
    }
    return word;
}

std::string to_string(const BraidWord& word) {
    std::string out;
    for (const Generator& g : word.letters) {
        if (!out.empty()) out += ' ';
        out += std::to_string(g.sign * g.index);
    }
    return out;
}

int exponent_sum(const BraidWord& word) {
    int sum = 0;
    for (const Generator& g : word.letters) sum += g.sign;
    return sum;
}

int writhe_of_closure(const BraidWord& word) { return -exponent_sum(word); }

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

BraidWord inverse(const BraidWord& a) {
    BraidWord out;
    out.letters.reserve(a.letters.size());
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) {
        out.letters.push_back(Generator{it->index, -it->sign});
    }
    return out;
}

BraidWord power(const BraidWord& a, int s) {
    const BraidWord base = s < 0 ? inverse(a) : a;
    const int reps = s < 0 ? -s : s;
    BraidWord out;
    out.letters.reserve(static_cast<std::size_t>(reps) * base.letters.size());
    for (int i = 0; i < reps; ++i) {
        out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
    }
    return out;
}

BraidWord separable_family_word(int j) {
    if (j < 0) throw std::invalid_argument("family exponent must be non-negative");
    if (j % 2 != 0) throw OddExponentError("family exponent must be even: " + std::to_string(j));
    BraidWord out;
    out.letters.reserve(static_cast<std::size_t>(j) + 4);
    out.letters.push_back(sigma(2));
    out.letters.push_back(sigma(1));
    for (int i = 0; i < j; ++i) out.letters.push_back(sigma(2));
    out.letters.push_back(sigma(1));
    out.letters.push_back(sigma(2));
    return out;
}

BraidWord word_at(int length, std::uint64_t index) {
    static const Generator alphabet[4] = {sigma(1), sigma_inv(1), sigma(2), sigma_inv(2)};
    BraidWord out;
    out.letters.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        out.letters.push_back(alphabet[index % 4]);
        index /= 4;
    }
    return out;
}

std::vector<BraidWord> all_words_up_to(int max_len) {
    std::vector<BraidWord> out;
    for (int len = 0; len <= max_len; ++len) {
        std::uint64_t count = 1;
        for (int i = 0; i < len; ++i) count *= 4;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            out.push_back(word_at(len, idx));
        }
    }
    return out;
}

}  // namespace jones3
