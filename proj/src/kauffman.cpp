#include "jones3/kauffman.hpp"

#include <cmath>
#include <cstdint>

namespace jones3 {

TLDiagram TLDiagram::identity() {
    TLDiagram d;
    d.match = {3, 4, 5, 0, 1, 2};
    return d;
}

TLDiagram TLDiagram::cap_cup(int index) {
    TLDiagram d;
    if (index == 1) {
        d.match = {1, 0, 5, 4, 3, 2};  // top cap 0-1, bottom cup 3-4, strand 2-5
    } else if (index == 2) {
        d.match = {3, 2, 1, 0, 5, 4};  // top cap 1-2, bottom cup 4-5, strand 0-3
    } else {
        throw IndexOutOfRangeError("cap-cup diagram index must be 1 or 2");
    }
    return d;
}

namespace {

// Composite point layout: 0..5 = upper diagram, 6..11 = lower diagram.
// Gluing joins upper bottom 3+i to lower top 6+i.
int partner(const TLDiagram& upper, const TLDiagram& lower, int v) {
    return v < 6 ? upper.match[static_cast<std::size_t>(v)]
                 : 6 + lower.match[static_cast<std::size_t>(v - 6)];
}

bool is_internal(int v) { return v >= 3 && v <= 8; }

int glue(int v) { return v < 6 ? v + 3 : v - 3; }

}  // namespace

TLDiagram compose(const TLDiagram& upper, const TLDiagram& lower) {
    TLDiagram out;
    out.closed_loops = upper.closed_loops + lower.closed_loops;

    bool seen[12] = {};
    // External points of the composite: upper top 0..2, lower bottom 9..11.
    auto external_slot = [](int v) { return v < 3 ? v : v - 6; };

    for (int start : {0, 1, 2, 9, 10, 11}) {
        if (seen[start]) continue;
        seen[start] = true;
        int v = partner(upper, lower, start);
        while (is_internal(v)) {
            seen[v] = true;
            v = glue(v);
            seen[v] = true;
            v = partner(upper, lower, v);
        }
        seen[v] = true;
        out.match[static_cast<std::size_t>(external_slot(start))] = external_slot(v);
        out.match[static_cast<std::size_t>(external_slot(v))] = external_slot(start);
    }

    // Anything left is a cycle trapped in the middle layer; each one closes a
    // loop worth a factor of d.
    for (int v0 = 3; v0 <= 8; ++v0) {
        if (seen[v0]) continue;
        ++out.closed_loops;
        int v = v0;
        do {
            seen[v] = true;
            const int w = partner(upper, lower, v);
            seen[w] = true;
            v = glue(w);
        } while (v != v0);
    }
    return out;
}

int closure_loop_count(const TLDiagram& d) {
    int parent[6];
    for (int i = 0; i < 6; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (int i = 0; i < 6; ++i) unite(i, d.match[static_cast<std::size_t>(i)]);
    for (int i = 0; i < 3; ++i) unite(i, i + 3);

    int loops = 0;
    for (int i = 0; i < 6; ++i) {
        if (find(i) == i) ++loops;
    }
    return loops + d.closed_loops;
}

namespace {

cd ipow(cd base, int e) {
    cd out = 1.0;
    cd b = e < 0 ? 1.0 / base : base;
    for (int n = e < 0 ? -e : e; n > 0; --n) out *= b;
    return out;
}

// Contribution of one smoothing state: bit i of `state` decides whether
// crossing i is resolved into the cap-cup diagram or the identity.
cd state_term(const BraidWord& word, const ModelParams& params, std::uint64_t state) {
    TLDiagram diagram = TLDiagram::identity();
    cd weight = 1.0;
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
        const Generator& g = word.letters[i];
        const bool cap = (state >> i) & 1;
        if (cap) {
            weight *= g.sign > 0 ? params.A : 1.0 / params.A;
            diagram = compose(diagram, TLDiagram::cap_cup(g.index));
        } else {
            weight *= g.sign > 0 ? 1.0 / params.A : params.A;
        }
    }
    return weight * ipow(cd(params.d, 0.0), closure_loop_count(diagram) - 1);
}

void check_length(const BraidWord& word) {
    if (word.length() > kMaxBracketLength) {
        throw WordTooLongError("state sum limited to words of length " +
                               std::to_string(kMaxBracketLength));
    }
}

}  // namespace

cd bracket_scaled_serial(const BraidWord& word, const ModelParams& params) {
    check_length(word);
    const std::uint64_t nstates = std::uint64_t{1} << word.length();
    cd total = 0.0;
    for (std::uint64_t s = 0; s < nstates; ++s) {
        total += state_term(word, params, s);
    }
    return total;
}

cd bracket_scaled(const BraidWord& word, const ModelParams& params) {
    check_length(word);
    const std::uint64_t nstates = std::uint64_t{1} << word.length();
    constexpr std::uint64_t kChunk = 4096;  // fixed, independent of thread count
    const std::int64_t nchunks = static_cast<std::int64_t>((nstates + kChunk - 1) / kChunk);

    std::vector<cd> partial(static_cast<std::size_t>(nchunks), cd(0.0, 0.0));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t chunk = 0; chunk < nchunks; ++chunk) {
        const std::uint64_t begin = static_cast<std::uint64_t>(chunk) * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, nstates);
        cd sum = 0.0;
        for (std::uint64_t s = begin; s < end; ++s) {
            sum += state_term(word, params, s);
        }
        partial[static_cast<std::size_t>(chunk)] = sum;
    }

    cd total = 0.0;
    for (const cd& p : partial) total += p;
    return total;
}

cd jones_oracle(const BraidWord& word, const ModelParams& params) {
    const int w = writhe_of_closure(word);
    return ipow(-params.A, -3 * w) * bracket_scaled(word, params);
}

}  // namespace jones3
