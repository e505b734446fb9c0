#include "gridsep/oned.hpp"

#include "gridsep/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace gridsep {

namespace {

void require_permutation(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const int v : seq) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw InvalidArgument("sequence is not a permutation of 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

// Lower half is 1..low; entries alternate sides and the ends are {a, b}.
bool oscillates(std::span<const int> seq, int low, int a, int b) {
    for (std::size_t k = 1; k < seq.size(); ++k) {
        if ((seq[k - 1] <= low) == (seq[k] <= low)) {
            return false;
        }
    }
    const int front = seq.front();
    const int back = seq.back();
    return (front == a && back == b) || (front == b && back == a);
}

} // namespace

OnedMax oned_max(int n) {
    if (n < 2) {
        throw InvalidArgument("oned_max needs n >= 2, got " + std::to_string(n));
    }
    const std::int64_t t = n / 2;
    OnedMax m;
    m.denominator = n - 1;
    m.total = n % 2 == 0 ? 2 * t * t - 1 : 2 * t * t + 2 * t - 1;
    m.numerator = m.total;
    return m;
}

std::int64_t oned_score(std::span<const int> seq) {
    std::int64_t s = 0;
    for (std::size_t k = 1; k < seq.size(); ++k) {
        s += std::abs(seq[k] - seq[k - 1]);
    }
    return s;
}

bool oned_is_optimal(std::span<const int> seq) {
    require_permutation(seq);
    const int n = static_cast<int>(seq.size());
    if (n < 2) {
        throw InvalidArgument("oned_is_optimal needs n >= 2");
    }
    const int t = n / 2;
    if (n % 2 == 0) {
        return oscillates(seq, t, t, t + 1);
    }
    return oscillates(seq, t, t + 1, t + 2) || oscillates(seq, t + 1, t, t + 1);
}

} // namespace gridsep
