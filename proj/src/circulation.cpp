#include "symcube/circulation.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace symcube {

std::string NetVertex::label() const {
    switch (role) {
        case VertexRole::SourceHub: return "sigma";
        case VertexRole::SinkHub: return "tau";
        case VertexRole::SplitNode: return "v" + std::to_string(split_index);
        case VertexRole::BlockNode:
            return "v" + std::to_string(split_index) + block.str();
        case VertexRole::ClassNode: return "class" + block.str();
        default: return "u";
    }
}

int FlowNetwork::add_vertex(NetVertex v) {
    vertices.push_back(std::move(v));
    return static_cast<int>(vertices.size()) - 1;
}

std::size_t FlowNetwork::add_edge(int tail, int head, long long numerator) {
    if (tail < 0 || head < 0 || tail >= static_cast<int>(vertices.size()) ||
        head >= static_cast<int>(vertices.size()))
        throw std::invalid_argument("FlowNetwork: edge endpoint out of range");
    if (numerator < 0) throw std::invalid_argument("FlowNetwork: negative edge value");
    edges.push_back({tail, head, numerator});
    return edges.size() - 1;
}

long long FlowNetwork::value_floor(std::size_t edge) const {
    return edges[edge].numerator / denominator;
}

long long FlowNetwork::value_ceil(std::size_t edge) const {
    return (edges[edge].numerator + denominator - 1) / denominator;
}

bool FlowNetwork::integral(std::size_t edge) const {
    return edges[edge].numerator % denominator == 0;
}

std::vector<long long> FlowNetwork::in_numerators() const {
    std::vector<long long> in(vertices.size(), 0);
    for (const auto& e : edges) in[static_cast<std::size_t>(e.head)] += e.numerator;
    return in;
}

std::vector<long long> FlowNetwork::out_numerators() const {
    std::vector<long long> out(vertices.size(), 0);
    for (const auto& e : edges) out[static_cast<std::size_t>(e.tail)] += e.numerator;
    return out;
}

Report check_conservation(const FlowNetwork& net) {
    ReportBuilder rb;
    if (net.denominator < 1) {
        rb.add("denominator must be >= 1");
        return rb.take();
    }
    const auto in = net.in_numerators();
    const auto out = net.out_numerators();
    for (std::size_t v = 0; v < net.vertices.size(); ++v) {
        if (in[v] != out[v])
            rb.add("vertex " + net.vertices[v].label() + ": in " + std::to_string(in[v]) +
                   "/" + std::to_string(net.denominator) + " vs out " + std::to_string(out[v]) +
                   "/" + std::to_string(net.denominator));
    }
    return rb.take();
}

Report validate_rounding(const FlowNetwork& net, const IntegralCirculation& g) {
    ReportBuilder rb;
    if (g.values.size() != net.edges.size()) {
        rb.add("rounding has " + std::to_string(g.values.size()) + " values for " +
               std::to_string(net.edges.size()) + " edges");
        return rb.take();
    }
    std::vector<long long> in(net.vertices.size(), 0), out(net.vertices.size(), 0);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const long long v = g.values[e];
        if (v != net.value_floor(e) && v != net.value_ceil(e))
            rb.add("edge " + std::to_string(e) + ": value " + std::to_string(v) +
                   " outside {" + std::to_string(net.value_floor(e)) + "," +
                   std::to_string(net.value_ceil(e)) + "}");
        in[static_cast<std::size_t>(net.edges[e].head)] += v;
        out[static_cast<std::size_t>(net.edges[e].tail)] += v;
    }
    for (std::size_t v = 0; v < net.vertices.size(); ++v)
        if (in[v] != out[v])
            rb.add("vertex " + net.vertices[v].label() + ": integral in " +
                   std::to_string(in[v]) + " vs out " + std::to_string(out[v]));
    return rb.take();
}

namespace {

// Plain Dinic max-flow; adjacency order follows edge insertion order so the
// result is deterministic.
class MaxFlow {
  public:
    explicit MaxFlow(int vertex_count) : head_(static_cast<std::size_t>(vertex_count), -1) {}

    int add_arc(int from, int to, long long capacity) {
        const int id = static_cast<int>(to_.size());
        to_.push_back(to);
        cap_.push_back(capacity);
        next_.push_back(head_[static_cast<std::size_t>(from)]);
        head_[static_cast<std::size_t>(from)] = id;
        to_.push_back(from);
        cap_.push_back(0);
        next_.push_back(head_[static_cast<std::size_t>(to)]);
        head_[static_cast<std::size_t>(to)] = id + 1;
        return id;
    }

    long long flow_on(int arc) const { return cap_[static_cast<std::size_t>(arc) + 1]; }

    long long run(int source, int sink) {
        long long total = 0;
        while (bfs(source, sink)) {
            iter_ = head_;
            while (long long pushed = dfs(source, sink, kInf)) total += pushed;
        }
        return total;
    }

  private:
    static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

    bool bfs(int source, int sink) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        q.push(source);
        level_[static_cast<std::size_t>(source)] = 0;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int a = head_[static_cast<std::size_t>(u)]; a != -1;
                 a = next_[static_cast<std::size_t>(a)]) {
                const int v = to_[static_cast<std::size_t>(a)];
                if (cap_[static_cast<std::size_t>(a)] > 0 &&
                    level_[static_cast<std::size_t>(v)] < 0) {
                    level_[static_cast<std::size_t>(v)] =
                        level_[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                }
            }
        }
        return level_[static_cast<std::size_t>(sink)] >= 0;
    }

    long long dfs(int u, int sink, long long limit) {
        if (u == sink) return limit;
        for (int& a = iter_[static_cast<std::size_t>(u)]; a != -1;
             a = next_[static_cast<std::size_t>(a)]) {
            const int v = to_[static_cast<std::size_t>(a)];
            if (cap_[static_cast<std::size_t>(a)] <= 0 ||
                level_[static_cast<std::size_t>(v)] != level_[static_cast<std::size_t>(u)] + 1)
                continue;
            const long long pushed =
                dfs(v, sink, std::min(limit, cap_[static_cast<std::size_t>(a)]));
            if (pushed > 0) {
                cap_[static_cast<std::size_t>(a)] -= pushed;
                cap_[static_cast<std::size_t>(a ^ 1)] += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> next_;
    std::vector<int> to_;
    std::vector<long long> cap_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace

IntegralCirculation round_integral(const FlowNetwork& net) {
    const Report conserved = check_conservation(net);
    if (!conserved.ok())
        throw std::invalid_argument("round_integral: input is not a circulation: " +
                                    conserved.joined());

    const int n = static_cast<int>(net.vertices.size());
    const int source = n, sink = n + 1;
    MaxFlow mf(n + 2);

    // Floors become fixed lower bounds; each fractional edge contributes one
    // unit of slack. Vertices out of balance under the floors are fed from
    // the super source / drained to the super sink.
    std::vector<long long> imbalance(static_cast<std::size_t>(n), 0);
    std::vector<int> band_arc(net.edges.size(), -1);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const long long lo = net.value_floor(e);
        imbalance[static_cast<std::size_t>(net.edges[e].head)] += lo;
        imbalance[static_cast<std::size_t>(net.edges[e].tail)] -= lo;
        if (!net.integral(e))
            band_arc[e] = mf.add_arc(net.edges[e].tail, net.edges[e].head, 1);
    }
    long long need = 0;
    for (int v = 0; v < n; ++v) {
        if (imbalance[static_cast<std::size_t>(v)] > 0) {
            mf.add_arc(source, v, imbalance[static_cast<std::size_t>(v)]);
            need += imbalance[static_cast<std::size_t>(v)];
        } else if (imbalance[static_cast<std::size_t>(v)] < 0) {
            mf.add_arc(v, sink, -imbalance[static_cast<std::size_t>(v)]);
        }
    }

    const long long sent = mf.run(source, sink);
    if (sent != need)
        throw std::logic_error("round_integral: rounding flow saturated " +
                               std::to_string(sent) + " of " + std::to_string(need) +
                               " units; conserving input should never reach this");

    IntegralCirculation g;
    g.values.resize(net.edges.size());
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        g.values[e] = net.value_floor(e);
        if (band_arc[e] >= 0) g.values[e] += mf.flow_on(band_arc[e]);
    }
    return g;
}

}  // namespace symcube
