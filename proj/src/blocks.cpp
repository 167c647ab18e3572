#include "symcube/blocks.hpp"

#include <algorithm>
#include <stdexcept>

namespace symcube {

long long binom(long long n, int k) {
    if (n < 0 || k < 0) throw std::domain_error("binom: negative argument");
    if (k > 3) throw std::domain_error("binom: only k <= 3 supported");
    if (n > (1LL << 20)) throw std::domain_error("binom: n too large for exact result");
    if (n < k) return 0;
    switch (k) {
        case 0: return 1;
        case 1: return n;
        case 2: return n * (n - 1) / 2;
        default: return n * (n - 1) / 2 * (n - 2) / 3;
    }
}

int a_coeff(int r, int s_size) {
    if (r < 0 || s_size < 0 || r + s_size > 3)
        throw std::domain_error("a_coeff: r + |S| must lie in 0..3");
    static constexpr int table[4] = {0, 1, 3, 2};
    return table[r + s_size];
}

int Block::mu(int point) const {
    if (point == 1) return ones;
    for (int k = 0; k < others_count; ++k)
        if (others[k] == point) return 1;
    return 0;
}

Block Block::make(int ones, std::span<const int> others) {
    if (ones < 0 || ones > 3)
        throw std::invalid_argument("Block: multiplicity of point 1 must be 0..3");
    if (ones + static_cast<int>(others.size()) > 3)
        throw std::invalid_argument("Block: total size exceeds 3");
    Block b;
    b.ones = ones;
    b.others_count = static_cast<int>(others.size());
    std::copy(others.begin(), others.end(), b.others.begin());
    std::sort(b.others.begin(), b.others.begin() + b.others_count);
    for (int k = 0; k < b.others_count; ++k) {
        if (b.others[k] < 2)
            throw std::invalid_argument("Block: points other than 1 must be >= 2");
        if (k > 0 && b.others[k] == b.others[k - 1])
            throw std::invalid_argument("Block: repeated point");
    }
    return b;
}

Block Block::make(int ones, std::initializer_list<int> others) {
    return make(ones, std::span<const int>(others.begin(), others.size()));
}

Block Block::promoted(int point) const {
    if (ones < 1) throw std::invalid_argument("Block::promoted: no 1 to replace");
    if (others_count > 0 && point <= others[others_count - 1])
        throw std::invalid_argument("Block::promoted: new point must exceed existing ones");
    Block b = *this;
    b.ones -= 1;
    b.others[b.others_count++] = point;
    return b;
}

std::vector<int> Block::as_set() const {
    if (ones > 1) throw std::invalid_argument("Block::as_set: repeated point 1");
    std::vector<int> out;
    if (ones == 1) out.push_back(1);
    out.insert(out.end(), others.begin(), others.begin() + others_count);
    return out;
}

std::string Block::str() const {
    std::string inner;
    if (ones == 1) inner += "1";
    if (ones > 1) inner += "1^" + std::to_string(ones);
    for (int k = 0; k < others_count; ++k) {
        if (!inner.empty()) inner += ",";
        inner += std::to_string(others[k]);
    }
    return "{" + inner + "}";
}

void Split::add(const Block& block, int mult) {
    if (block.size() == 0) throw std::invalid_argument("Split: empty block");
    if (mult <= 0) throw std::invalid_argument("Split: multiplicity must be positive");
    counts[block] += mult;
}

void Split::remove_one(const Block& block) {
    auto it = counts.find(block);
    if (it == counts.end())
        throw std::invalid_argument("Split: removing absent block " + block.str());
    if (--it->second == 0) counts.erase(it);
}

int Split::multiplicity(const Block& block) const {
    auto it = counts.find(block);
    return it == counts.end() ? 0 : it->second;
}

long long Split::mu_point(int point) const {
    long long total = 0;
    for (const auto& [block, mult] : counts)
        total += static_cast<long long>(block.mu(point)) * mult;
    return total;
}

long long Split::point_mass() const {
    long long total = 0;
    for (const auto& [block, mult] : counts)
        total += static_cast<long long>(block.size()) * mult;
    return total;
}

long long SplitFamily::mu_point(int i, int point) const {
    return splits.at(static_cast<std::size_t>(i) - 1).mu_point(point);
}

long long SplitFamily::mu_block(const Block& block) const {
    long long total = 0;
    for (const auto& split : splits) total += split.multiplicity(block);
    return total;
}

namespace {

// Dense family-wide tally over block shapes (r, s1<s2<s3 zero-padded),
// sized by the ground: O(1) updates and an elementwise merge, with memory
// proportional to the family itself.
class ShapeTally {
  public:
    explicit ShapeTally(int ground)
        : stride_(static_cast<std::size_t>(ground) + 1),
          counts_(4 * stride_ * stride_ * stride_, 0) {}

    std::size_t key(const Block& b) const {
        std::size_t k = static_cast<std::size_t>(b.ones);
        for (int slot = 2; slot >= 0; --slot)
            k = k * stride_ + static_cast<std::size_t>(slot < b.others_count ? b.others[slot] : 0);
        return k;
    }

    void add(const Block& b, long long mult) { counts_[key(b)] += mult; }

    // Safe to call from several threads at once; one shared tally beats
    // per-thread copies here because the array is much larger than the
    // number of updates.
    void add_shared(const Block& b, long long mult) {
        auto& slot = counts_[key(b)];
#ifdef _OPENMP
        #pragma omp atomic
#endif
        slot += mult;
    }

    long long at(const Block& b) const { return counts_[key(b)]; }

  private:
    std::size_t stride_;
    std::vector<long long> counts_;
};

// Per-split leg of the profile check: point counts inside one split, plus a
// contribution to the family-wide tally. Blocks reaching beyond the ground
// are reported here and kept out of the tally.
Report scan_split(const SplitFamily& family, int idx, ShapeTally& tally, bool shared,
                  std::vector<long long>& seen) {
    const Split& split = family.splits[static_cast<std::size_t>(idx)];
    const int ell = family.ground;
    const long long want_ones = family.order - ell + 1;
    ReportBuilder rb;
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& [block, mult] : split.counts) {
        bool in_ground = true;
        seen[1] += static_cast<long long>(block.ones) * mult;
        for (int k = 0; k < block.others_count; ++k) {
            const int p = block.others[k];
            if (p > ell) {
                in_ground = false;
                rb.add("split " + std::to_string(idx + 1) + ": block " + block.str() +
                       " uses point " + std::to_string(p) + " beyond ground " +
                       std::to_string(ell));
            } else {
                seen[static_cast<std::size_t>(p)] += mult;
            }
        }
        if (in_ground) {
            if (shared)
                tally.add_shared(block, mult);
            else
                tally.add(block, mult);
        }
    }
    if (seen[1] != want_ones)
        rb.add("split " + std::to_string(idx + 1) + ": point 1 appears " +
               std::to_string(seen[1]) + " times, expected " + std::to_string(want_ones));
    for (int p = 2; p <= ell; ++p)
        if (seen[static_cast<std::size_t>(p)] != 1)
            rb.add("split " + std::to_string(idx + 1) + ": point " + std::to_string(p) +
                   " appears " + std::to_string(seen[static_cast<std::size_t>(p)]) +
                   " times, expected 1");
    return rb.take();
}

Report profile_check(const SplitFamily& family, bool parallel) {
    ReportBuilder out;
    const int n = family.order;
    const int ell = family.ground;
    if (n < 1 || ell < 1 || ell > n) {
        out.add("family has invalid order/ground (" + std::to_string(n) + ", " +
                std::to_string(ell) + ")");
        return out.take();
    }
    const auto count = static_cast<long long>(family.splits.size());
    if (count != static_cast<long long>(n) * n) {
        out.add("family has " + std::to_string(count) + " splits, expected " +
                std::to_string(static_cast<long long>(n) * n));
        return out.take();
    }

    const int total = static_cast<int>(count);
    ShapeTally tally(ell);
    std::vector<Report> per_split(static_cast<std::size_t>(total));

    if (parallel) {
#ifdef _OPENMP
        #pragma omp parallel
        {
            std::vector<long long> seen(static_cast<std::size_t>(ell) + 1);
            #pragma omp for schedule(static) nowait
            for (int idx = 0; idx < total; ++idx)
                per_split[static_cast<std::size_t>(idx)] =
                    scan_split(family, idx, tally, true, seen);
        }
#else
        parallel = false;
#endif
    }
    if (!parallel) {
        std::vector<long long> seen(static_cast<std::size_t>(ell) + 1);
        for (int idx = 0; idx < total; ++idx)
            per_split[static_cast<std::size_t>(idx)] = scan_split(family, idx, tally, false, seen);
    }

    for (const auto& r : per_split) out.merge(r);

    // Family-wide block counts, swept over every admissible (r,S) shape in
    // lexicographic order. The sweep fans out by (r, smallest member of S);
    // merging task reports in task order keeps the output deterministic.
    const long long want_ones = n - ell + 1;
    auto check_shape = [&](int r, std::span<const int> subset, ReportBuilder& rb) {
        const Block b = Block::make(r, subset);
        const long long want = a_coeff(r, b.others_count) * binom(want_ones, r);
        const long long have = tally.at(b);
        if (have != want)
            rb.add("block " + b.str() + " appears " + std::to_string(have) +
                   " times family-wide, expected " + std::to_string(want));
    };
    struct SweepTask {
        int r;
        int first;  // 0 means S = {}
    };
    std::vector<SweepTask> tasks;
    for (int r = 0; r <= 3; ++r) {
        tasks.push_back({r, 0});
        if (r < 3)
            for (int p = 2; p <= ell; ++p) tasks.push_back({r, p});
    }
    std::vector<Report> sweep(tasks.size());
    auto run_task = [&](std::size_t t) {
        const int r = tasks[t].r;
        const int first = tasks[t].first;
        ReportBuilder rb;
        if (first == 0) {
            if (r > 0) check_shape(r, {}, rb);
        } else {
            std::vector<int> subset{first};
            auto extend = [&](auto&& self, int next) -> void {
                check_shape(r, subset, rb);
                if (r + static_cast<int>(subset.size()) == 3) return;
                for (int p = next; p <= ell; ++p) {
                    subset.push_back(p);
                    self(self, p + 1);
                    subset.pop_back();
                }
            };
            extend(extend, first + 1);
        }
        sweep[t] = rb.take();
    };
    if (parallel) {
#ifdef _OPENMP
        #pragma omp parallel for schedule(dynamic)
        for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
#else
        parallel = false;
#endif
    }
    if (!parallel)
        for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
    for (const auto& r : sweep) out.merge(r);

    return out.take();
}

}  // namespace

Report check_family_profile(const SplitFamily& family) { return profile_check(family, true); }

Report check_family_profile_serial(const SplitFamily& family) {
    return profile_check(family, false);
}

std::map<PointSet, int> target_system(int n) {
    if (n < 1) throw std::domain_error("target_system: order must be >= 1");
    std::map<PointSet, int> out;
    for (int i = 1; i <= n; ++i) {
        out[{i}] = 1;
        for (int j = i + 1; j <= n; ++j) {
            out[{i, j}] = 3;
            for (int l = j + 1; l <= n; ++l) out[{i, j, l}] = 2;
        }
    }
    return out;
}

void ParallelClass::normalize() { std::sort(blocks.begin(), blocks.end()); }

Report validate_partition(const Partition& partition) {
    ReportBuilder out;
    const int n = partition.order;
    if (n < 1) {
        out.add("partition order must be >= 1");
        return out.take();
    }
    const auto want_classes = static_cast<long long>(n) * n;
    if (static_cast<long long>(partition.classes.size()) != want_classes)
        out.add("partition has " + std::to_string(partition.classes.size()) +
                " classes, expected " + std::to_string(want_classes));

    std::map<PointSet, long long> tally;
    for (std::size_t c = 0; c < partition.classes.size(); ++c) {
        const auto& cls = partition.classes[c];
        std::vector<int> cover(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& block : cls.blocks) {
            if (block.empty() || block.size() > 3) {
                out.add("class " + std::to_string(c + 1) + ": block of size " +
                        std::to_string(block.size()));
                continue;
            }
            PointSet sorted = block;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                out.add("class " + std::to_string(c + 1) + ": repeated point in block " +
                        pointset_str(block));
                continue;
            }
            tally[sorted] += 1;
            for (int p : sorted) {
                if (p < 1 || p > n)
                    out.add("class " + std::to_string(c + 1) + ": point " + std::to_string(p) +
                            " out of range");
                else
                    cover[static_cast<std::size_t>(p)] += 1;
            }
        }
        for (int p = 1; p <= n; ++p)
            if (cover[static_cast<std::size_t>(p)] != 1)
                out.add("class " + std::to_string(c + 1) + ": point " + std::to_string(p) +
                        " covered " + std::to_string(cover[static_cast<std::size_t>(p)]) +
                        " times");
    }

    for (const auto& [set, want] : target_system(n)) {
        auto it = tally.find(set);
        const long long have = it == tally.end() ? 0 : it->second;
        if (have != want)
            out.add("block " + pointset_str(set) + " appears " + std::to_string(have) +
                    " times across classes, expected " + std::to_string(want));
        if (it != tally.end()) tally.erase(it);
    }
    for (const auto& [set, have] : tally)
        out.add("unexpected block " + pointset_str(set) + " (x" + std::to_string(have) + ")");

    return out.take();
}

std::string pointset_str(const PointSet& set) {
    std::string inner;
    for (std::size_t k = 0; k < set.size(); ++k) {
        if (k) inner += ",";
        inner += std::to_string(set[k]);
    }
    return "{" + inner + "}";
}

}  // namespace symcube
