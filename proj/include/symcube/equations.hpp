#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcube/report.hpp"

namespace symcube {

// Feasibility of the order-n triple system: n^2 nonnegative triples
// (a_i, b_i, c_i) with a_i + 2 b_i + 3 c_i = n, sum a = n,
// sum b = 3 C(n,2), sum c = 2 C(n,3).
struct Feasibility {
    bool feasible = false;
    std::string summary;  // short tag, e.g. "exceptional order 3"
    std::string detail;   // why the system has no solution
};

// Feasible orders are exactly n = 1 and n = 0,2 (mod 3) with n != 3.
// Throws std::domain_error for n < 1.
Feasibility feasible(int n);

struct SystemSolution {
    int order = 0;
    std::vector<std::array<int, 3>> triples;  // (a_i, b_i, c_i), n^2 entries
};

// Explicit solution of the triple system, one closed-form column multiset per
// residue class of n mod 6 (with small orders 5, 9, 11, 15, 21 spelled out).
// Throws InfeasibleOrder for infeasible n.
SystemSolution solve_system(int n);

// Exact recheck of all four equation groups.
Report validate_solution(const SystemSolution& sol);

struct InfeasibleOrder : std::runtime_error {
    explicit InfeasibleOrder(int order, Feasibility info);
    int order;
    Feasibility info;
};

}  // namespace symcube
