#include "symcube/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "symcube/blocks.hpp"

namespace symcube {

namespace {

// Triple types (a,b,c) with a + 2b + 3c = n, in lexicographic order.
std::vector<std::array<int, 3>> triple_types(int n) {
    std::vector<std::array<int, 3>> types;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; 2 * b <= n - a; ++b)
            if ((n - a - 2 * b) % 3 == 0) types.push_back({a, b, (n - a - 2 * b) / 3});
    return types;
}

}  // namespace

std::vector<SystemSolution> brute_system(int n, std::size_t cap) {
    if (n < 1) throw std::domain_error("brute_system: order must be >= 1");
    if (n > 6) throw std::domain_error("brute_system: guard allows n <= 6 only");

    const auto types = triple_types(n);
    const long long want_count = static_cast<long long>(n) * n;
    const long long want_a = n;
    const long long want_b = 3 * binom(n, 2);
    const long long want_c = 2 * binom(n, 3);

    std::vector<SystemSolution> found;
    std::vector<long long> picks(types.size(), 0);

    // Choose how many indices take each triple type; a solution up to index
    // symmetry is exactly such a count vector.
    auto search = [&](auto&& self, std::size_t t, long long left, long long a, long long b,
                      long long c) -> void {
        if (found.size() >= cap) return;
        if (a > want_a || b > want_b || c > want_c) return;
        if (t == types.size()) {
            if (left == 0 && a == want_a && b == want_b && c == want_c) {
                SystemSolution sol;
                sol.order = n;
                for (std::size_t k = 0; k < types.size(); ++k)
                    for (long long copies = 0; copies < picks[k]; ++copies)
                        sol.triples.push_back(types[k]);
                found.push_back(std::move(sol));
            }
            return;
        }
        // Remaining types cannot lower per-index contributions below zero, so
        // the only pruning beyond the sums is the count budget itself.
        for (long long take = 0; take <= left; ++take) {
            picks[t] = take;
            self(self, t + 1, left - take, a + take * types[t][0], b + take * types[t][1],
                 c + take * types[t][2]);
            if (found.size() >= cap) break;
        }
        picks[t] = 0;
    };
    search(search, 0, want_count, 0, 0, 0);
    return found;
}

namespace {

// All partitions of {1..n} into parts of size 1..3, each encoded as a sorted
// list of sorted blocks. Computed once per call; n is tiny here.
std::vector<std::vector<PointSet>> small_partitions(int n) {
    std::vector<std::vector<PointSet>> out;
    std::vector<PointSet> current;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

    auto rec = [&](auto&& self) -> void {
        int first = 0;
        for (int p = 1; p <= n; ++p)
            if (!used[static_cast<std::size_t>(p)]) {
                first = p;
                break;
            }
        if (first == 0) {
            out.push_back(current);
            return;
        }
        used[static_cast<std::size_t>(first)] = true;
        // Block containing `first`: alone, with one partner, or with two.
        current.push_back({first});
        self(self);
        current.pop_back();
        for (int q = first + 1; q <= n; ++q) {
            if (used[static_cast<std::size_t>(q)]) continue;
            used[static_cast<std::size_t>(q)] = true;
            current.push_back({first, q});
            self(self);
            current.pop_back();
            for (int r = q + 1; r <= n; ++r) {
                if (used[static_cast<std::size_t>(r)]) continue;
                used[static_cast<std::size_t>(r)] = true;
                current.push_back({first, q, r});
                self(self);
                current.pop_back();
                used[static_cast<std::size_t>(r)] = false;
            }
            used[static_cast<std::size_t>(q)] = false;
        }
        used[static_cast<std::size_t>(first)] = false;
    };
    rec(rec);
    return out;
}

}  // namespace

bool brute_partition_exists(int n) {
    if (n < 1) throw std::domain_error("brute_partition_exists: order must be >= 1");
    if (n > 4) throw std::domain_error("brute_partition_exists: guard allows n <= 4 only");

    const auto classes = small_partitions(n);
    const auto target = target_system(n);

    // Block type ids and per-class block-id lists.
    std::vector<PointSet> block_of_id;
    std::map<PointSet, int> id_of_block;
    for (const auto& [set, mult] : target) {
        id_of_block.emplace(set, static_cast<int>(block_of_id.size()));
        block_of_id.push_back(set);
    }
    std::vector<std::vector<int>> class_blocks(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& set : classes[c]) class_blocks[c].push_back(id_of_block.at(set));

    std::vector<int> inventory(block_of_id.size());
    for (const auto& [set, mult] : target) inventory[static_cast<std::size_t>(id_of_block.at(set))] = mult;

    // Classes still to place equals the number of blocks containing point 1,
    // so the inventory alone is the search state; failed states are memoized.
    std::set<std::vector<int>> dead;

    auto rec = [&](auto&& self, long long remaining) -> bool {
        if (remaining == 0) return true;
        if (dead.contains(inventory)) return false;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            bool fits = true;
            for (int id : class_blocks[c])
                if (inventory[static_cast<std::size_t>(id)] == 0) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (int id : class_blocks[c]) --inventory[static_cast<std::size_t>(id)];
            if (self(self, remaining - 1)) return true;
            for (int id : class_blocks[c]) ++inventory[static_cast<std::size_t>(id)];
        }
        dead.insert(inventory);
        return false;
    };
    return rec(rec, static_cast<long long>(n) * n);
}

std::vector<IntegralCirculation> enumerate_roundings(const FlowNetwork& net, std::size_t cap) {
    const Report conserved = check_conservation(net);
    if (!conserved.ok())
        throw std::invalid_argument("enumerate_roundings: input is not a circulation: " +
                                    conserved.joined());

    std::vector<std::size_t> fractional;
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        if (!net.integral(e)) fractional.push_back(e);
    if (fractional.size() > 24)
        throw std::domain_error("enumerate_roundings: guard allows at most 24 fractional edges");

    // Baseline: floors everywhere. Each fractional edge may add one unit.
    std::vector<long long> base(net.vertices.size(), 0);  // in minus out
    IntegralCirculation g;
    g.values.resize(net.edges.size());
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const long long lo = net.value_floor(e);
        g.values[e] = lo;
        base[static_cast<std::size_t>(net.edges[e].head)] += lo;
        base[static_cast<std::size_t>(net.edges[e].tail)] -= lo;
    }

    // Remaining fractional edges touching each vertex; once a vertex has no
    // undecided edge left its imbalance must already be zero.
    std::vector<int> pending(net.vertices.size(), 0);
    for (std::size_t e : fractional) {
        pending[static_cast<std::size_t>(net.edges[e].head)] += 1;
        if (net.edges[e].head != net.edges[e].tail)
            pending[static_cast<std::size_t>(net.edges[e].tail)] += 1;
    }

    std::vector<IntegralCirculation> found;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (found.size() >= cap) return;
        if (k == fractional.size()) {
            for (long long d : base)
                if (d != 0) return;
            found.push_back(g);
            return;
        }
        const std::size_t e = fractional[k];
        const auto head = static_cast<std::size_t>(net.edges[e].head);
        const auto tail = static_cast<std::size_t>(net.edges[e].tail);
        pending[head] -= 1;
        if (head != tail) pending[tail] -= 1;
        for (int up = 0; up <= 1; ++up) {
            if (up) {
                g.values[e] += 1;
                if (head != tail) {
                    base[head] += 1;
                    base[tail] -= 1;
                }
            }
            if ((pending[head] > 0 || base[head] == 0) &&
                (pending[tail] > 0 || base[tail] == 0))
                self(self, k + 1);
        }
        g.values[e] -= 1;
        if (head != tail) {
            base[head] -= 1;
            base[tail] += 1;
        }
        pending[head] += 1;
        if (head != tail) pending[tail] += 1;
    };
    rec(rec, 0);
    return found;
}

}  // namespace symcube
