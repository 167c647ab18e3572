#include "symcube/equations.hpp"

#include <stdexcept>

#include "symcube/blocks.hpp"

namespace symcube {

InfeasibleOrder::InfeasibleOrder(int order_, Feasibility info_)
    : std::runtime_error("order " + std::to_string(order_) + " is infeasible: " + info_.detail),
      order(order_),
      info(std::move(info_)) {}

Feasibility feasible(int n) {
    if (n < 1) throw std::domain_error("feasible: order must be >= 1");
    if (n == 1) return {true, "", ""};
    if (n == 3)
        return {false, "exceptional order 3",
                "every triple with a+2b+3c=3 and the b-row sum 9 forces b_i=1 for all nine "
                "indices, leaving the a-row sum at 0 instead of 3"};
    if (n % 3 == 1)
        return {false, "order ≡ 1 (mod 3)",
                "a+2b+3c=n with n ≡ 1 (mod 3) forces a_i>=1 or b_i>=2 at every index, but at "
                "most n + (3/2)C(n,2) < n^2 indices can satisfy that"};
    return {true, "", ""};
}

namespace {

void append(SystemSolution& sol, int a, int b, int c, long long copies) {
    if (a < 0 || b < 0 || c < 0)
        throw std::logic_error("solve_system: negative matrix entry");
    for (long long k = 0; k < copies; ++k) sol.triples.push_back({a, b, c});
}

}  // namespace

SystemSolution solve_system(int n) {
    const Feasibility f = feasible(n);
    if (!f.feasible) throw InfeasibleOrder(n, f);

    SystemSolution sol;
    sol.order = n;
    sol.triples.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));

    if (n == 1) {
        append(sol, 1, 0, 0, 1);
        return sol;
    }

    const long long nn = n;
    switch (n % 6) {
        case 0:
            append(sol, n, 0, 0, 1);
            append(sol, 0, n / 2, 0, 3 * (nn - 1));
            append(sol, 0, 0, n / 3, (nn - 1) * (nn - 2));
            break;
        case 2:
            append(sol, n, 0, 0, 1);
            append(sol, 0, n / 2, 0, nn - 1);
            append(sol, 0, 1, (n - 2) / 3, nn * (nn - 1));
            break;
        case 3:
            if (n == 9) {
                append(sol, 9, 0, 0, 1);
                append(sol, 0, 3, 1, 36);
                append(sol, 0, 0, 3, 44);
            } else if (n == 15) {
                append(sol, 15, 0, 0, 1);
                append(sol, 0, 6, 1, 52);
                append(sol, 0, 3, 3, 1);
                append(sol, 0, 0, 5, 171);
            } else if (n == 21) {
                append(sol, 21, 0, 0, 1);
                append(sol, 0, 9, 1, 70);
                append(sol, 0, 0, 7, 370);
            } else {  // n >= 27
                append(sol, n, 0, 0, 1);
                append(sol, 0, (n - 3) / 2, 1, 3 * (nn + 2));
                append(sol, 0, 9, (n - 18) / 3, 1);
                append(sol, 0, 0, n / 3, nn * nn - 3 * nn - 8);
            }
            break;
        case 5:
            if (n == 5) {
                append(sol, 0, 1, 1, 20);
                append(sol, 1, 2, 0, 5);
            } else if (n == 11) {
                append(sol, 11, 0, 0, 1);
                append(sol, 0, 1, 3, 105);
                append(sol, 0, 4, 1, 15);
            } else {  // n >= 17
                append(sol, n, 0, 0, 1);
                append(sol, 0, 7, (n - 14) / 3, 1);
                append(sol, 0, (n - 3) / 2, 1, nn + 2);
                append(sol, 0, 1, (n - 2) / 3, nn * nn - nn - 4);
            }
            break;
        default:
            throw std::logic_error("solve_system: unreachable residue");
    }
    return sol;
}

Report validate_solution(const SystemSolution& sol) {
    ReportBuilder out;
    const int n = sol.order;
    if (n < 1) {
        out.add("solution order must be >= 1");
        return out.take();
    }
    const long long want_count = static_cast<long long>(n) * n;
    if (static_cast<long long>(sol.triples.size()) != want_count)
        out.add("solution has " + std::to_string(sol.triples.size()) + " triples, expected " +
                std::to_string(want_count));

    long long sum_a = 0, sum_b = 0, sum_c = 0;
    for (std::size_t i = 0; i < sol.triples.size(); ++i) {
        const auto [a, b, c] = sol.triples[i];
        if (a < 0 || b < 0 || c < 0)
            out.add("triple " + std::to_string(i + 1) + " has a negative entry");
        if (a + 2LL * b + 3LL * c != n)
            out.add("triple " + std::to_string(i + 1) + ": a+2b+3c = " +
                    std::to_string(a + 2LL * b + 3LL * c) + ", expected " + std::to_string(n));
        sum_a += a;
        sum_b += b;
        sum_c += c;
    }
    if (sum_a != n)
        out.add("sum of a = " + std::to_string(sum_a) + ", expected " + std::to_string(n));
    if (sum_b != 3 * binom(n, 2))
        out.add("sum of b = " + std::to_string(sum_b) + ", expected " +
                std::to_string(3 * binom(n, 2)));
    if (sum_c != 2 * binom(n, 3))
        out.add("sum of c = " + std::to_string(sum_c) + ", expected " +
                std::to_string(2 * binom(n, 3)));
    return out.take();
}

}  // namespace symcube
