#pragma once

// Diophantine equations T(x1,x2) = T(a,b) solved by mutation-orbit
// enumeration from the initial solution, with a brute-force scan as the
// completeness oracle and the Vieta descent checks for the (1,4) equation.

#include <string>
#include <utility>
#include <vector>

#include "rank2/rational.hpp"
#include "rank2/ratfunc.hpp"

namespace rank2 {

using IntPair = std::pair<Integer, Integer>;

struct DioEquation {
    std::string name;  // preset name or "custom"
    RationalFunction T;
    long m = 0;
    long n = 0;
    Rational level;
    IntPair initial;
};

// validates that T is a mutation invariant for (m,n) and evaluates the level
// at the initial solution
DioEquation make_dio_equation(std::string name, RationalFunction T, long m, long n,
                              IntPair initial);

// a1a1, a2, b2, g2, 22, 14 — all with initial solution (1,1)
const std::vector<DioEquation>& dio_presets();
const DioEquation& dio_preset(const std::string& name);

// direction 1: ((b^n + 1)/a, b); direction 2: (a, (a^m + 1)/b);
// throws NonIntegral when the division is not exact,
// PreconditionViolated unless a, b >= 1
IntPair dio_step(const IntPair& p, int direction, long m, long n);

struct OrbitNode {
    IntPair pair;
    std::string word;  // shortest mutation word from the initial solution
};

struct Orbit {
    std::vector<OrbitNode> nodes;  // breadth-first discovery order
    bool closed = false;           // no frontier pair was pruned at the bound
};

// breadth-first closure of {initial} under dio_step in both directions,
// pruning pairs with a component > bound; every node is asserted to stay on
// the level set
Orbit enumerate_orbit(const DioEquation& eq, const Integer& bound);

// the same solutions in alternating-walk order (positive ray, then the
// negative ray's new pairs); matches the sequence layout of the orbit
std::vector<IntPair> orbit_walk_order(const DioEquation& eq, const Integer& bound);

// all (a,b) in [1,bound]^2 with T(a,b) = level, row-major order
std::vector<IntPair> brute_force_solutions(const DioEquation& eq,
                                           const Integer& bound, int threads = 1);

// orbit pairs == brute-force pairs within the bound
bool certify_completeness(const DioEquation& eq, const Integer& bound,
                          int threads = 1);

struct DescentReport {
    bool ok = false;
    std::string detail;
};

// Vieta descent for the (1,4) equation at a solution with a != 1, b != 1:
//   a > b^2  =>  a' < b^2 < a   and  b'^2 > a > b^2
//   a < b^2  =>  a' > b^2 > a   and  b'^2 < a < b^2
// throws PreconditionViolated when a=1, b=1, or the pair is not a solution
DescentReport check_descent(const IntPair& pair);

}  // namespace rank2
