#include "quadfact/pairing.hpp"

#include <functional>
#include <map>
#include <numeric>

namespace quadfact {

namespace {

void require_nonnegative(std::span<const int> multiplicities) {
    for (int m : multiplicities) {
        if (m < 0) throw domain_error("negative multiplicity in pairing");
    }
}

bool odd_total(std::span<const int> multiplicities) {
    long total = std::accumulate(multiplicities.begin(), multiplicities.end(), 0L);
    return total % 2 != 0;
}

// Calls `next(remaining)` once for every way to place the `left` leftover
// copies of atom i against partners j >= from, recording the choices in
// `chosen`.
void spread(std::vector<int>& remaining, std::size_t i, std::size_t from, int left, Pairing& chosen,
            const std::function<void()>& next) {
    if (left == 0) {
        next();
        return;
    }
    for (std::size_t j = from; j < remaining.size(); ++j) {
        const int cap = std::min(left, remaining[j]);
        for (int e = cap; e >= 1; --e) {
            remaining[j] -= e;
            chosen.push_back({i, j, e});
            spread(remaining, i, j + 1, left - e, chosen, next);
            chosen.pop_back();
            remaining[j] += e;
        }
    }
}

}  // namespace

std::vector<Pairing> enumerate_pairings(std::span<const int> multiplicities) {
    require_nonnegative(multiplicities);
    std::vector<Pairing> out;
    if (odd_total(multiplicities)) return out;

    std::vector<int> remaining(multiplicities.begin(), multiplicities.end());
    Pairing chosen;
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        while (i < remaining.size() && remaining[i] == 0) ++i;
        if (i == remaining.size()) {
            out.push_back(chosen);
            return;
        }
        const int m = remaining[i];
        remaining[i] = 0;
        for (int self = m / 2; self >= 0; --self) {
            if (self > 0) chosen.push_back({i, i, self});
            spread(remaining, i, i + 1, m - 2 * self, chosen, [&] { place(i + 1); });
            if (self > 0) chosen.pop_back();
        }
        remaining[i] = m;
    };
    place(0);
    return out;
}

Int count_pairings(std::span<const int> multiplicities) {
    require_nonnegative(multiplicities);
    if (odd_total(multiplicities)) return 0;

    std::map<std::vector<int>, Int> memo;
    std::function<Int(const std::vector<int>&)> count = [&](const std::vector<int>& state) -> Int {
        std::size_t i = 0;
        while (i < state.size() && state[i] == 0) ++i;
        if (i == state.size()) return 1;
        if (auto it = memo.find(state); it != memo.end()) return it->second;

        // Atom i is settled now: choose its self pairs, then how many of the
        // remaining copies go to each later atom.
        Int total = 0;
        std::vector<int> next = state;
        next[i] = 0;
        std::function<void(std::size_t, int)> distribute = [&](std::size_t j, int left) {
            if (left == 0) {
                total = checked::add(total, count(next));
                return;
            }
            if (j == next.size()) return;
            const int cap = std::min(left, next[j]);
            for (int e = 0; e <= cap; ++e) {
                next[j] -= e;
                distribute(j + 1, left - e);
                next[j] += e;
            }
        };
        for (int self = 0; 2 * self <= state[i]; ++self) distribute(i + 1, state[i] - 2 * self);
        memo.emplace(state, total);
        return total;
    };
    return count(std::vector<int>(multiplicities.begin(), multiplicities.end()));
}

}  // namespace quadfact
