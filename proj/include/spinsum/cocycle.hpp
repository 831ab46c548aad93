#pragma once

// Super 3-cocycles (alpha, omega) of a finite group: omega a Z_2-valued
// 2-cocycle and alpha a 3-cochain obeying the sign-twisted cocycle equation
//
//   alpha(g,h,k) alpha(g,hk,l) alpha(h,k,l)
//     = (-1)^{omega(g,h) omega(k,l)} alpha(gh,k,l) alpha(g,h,kl).

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spinsum/cyclotomic.hpp"
#include "spinsum/finite_group.hpp"

namespace spinsum {

struct CocycleViolation {
    std::vector<int> tuple;   // (g,h,k) for the 2-cocycle, (g,h,k,l) for eq. (3)
    std::string detail;
};

struct CocycleReport {
    bool ok = true;
    std::vector<CocycleViolation> violations;
};

class SuperCocycle {
public:
    SuperCocycle(FiniteGroup group, std::vector<std::vector<int>> omega,
                 std::vector<Scalar> alpha_flat, std::string name = "")
        : group_(std::move(group)),
          omega_(std::move(omega)),
          alpha_(std::move(alpha_flat)),
          name_(std::move(name)) {
        const int n = group_.order();
        if (static_cast<int>(omega_.size()) != n)
            throw Error(ErrorKind::Validation, "omega table has wrong size");
        for (const auto& row : omega_) {
            if (static_cast<int>(row.size()) != n)
                throw Error(ErrorKind::Validation, "omega table has wrong size");
            for (int v : row)
                if (v != 0 && v != 1)
                    throw Error(ErrorKind::Validation, "omega values must be 0 or 1");
        }
        if (static_cast<int>(alpha_.size()) != n * n * n)
            throw Error(ErrorKind::Validation, "alpha table has wrong size");
        for (const auto& a : alpha_)
            if (a.is_zero())
                throw Error(ErrorKind::Validation, "alpha value is not invertible (zero)");
    }

    const FiniteGroup& group() const { return group_; }
    const std::string& name() const { return name_; }

    int omega(int g, int h) const { return omega_[g][h]; }
    const Scalar& alpha(int g, int h, int k) const {
        const int n = group_.order();
        return alpha_[(g * n + h) * n + k];
    }

    bool exact() const {
        for (const auto& a : alpha_)
            if (!a.is_exact()) return false;
        return true;
    }

private:
    FiniteGroup group_;
    std::vector<std::vector<int>> omega_;
    std::vector<Scalar> alpha_;
    std::string name_;
};

// omega(g,h) + omega(gh,k) == omega(h,k) + omega(g,hk)  (mod 2)
inline CocycleReport check_2cocycle(const std::vector<std::vector<int>>& omega,
                                    const FiniteGroup& G) {
    CocycleReport rep;
    const int n = G.order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                int lhs = (omega[g][h] + omega[G.mul(g, h)][k]) % 2;
                int rhs = (omega[h][k] + omega[g][G.mul(h, k)]) % 2;
                if (lhs != rhs) {
                    rep.ok = false;
                    rep.violations.push_back({{g, h, k}, "2-cocycle condition"});
                }
            }
    return rep;
}

// Full super 3-cocycle check: the 2-cocycle condition for omega plus the
// sign-twisted 3-cocycle condition for alpha over all 4-tuples.
inline CocycleReport check_super3cocycle(const SuperCocycle& c) {
    const FiniteGroup& G = c.group();
    const int n = G.order();
    std::vector<std::vector<int>> om(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) om[g][h] = c.omega(g, h);
    CocycleReport rep = check_2cocycle(om, G);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Scalar lhs = c.alpha(g, h, k) * c.alpha(g, G.mul(h, k), l) * c.alpha(h, k, l);
                    Scalar rhs = c.alpha(G.mul(g, h), k, l) * c.alpha(g, h, G.mul(k, l));
                    if (c.omega(g, h) * c.omega(k, l) % 2 == 1)
                        rhs = rhs * Scalar::exact(CycNumber::integer(1, -1));
                    if (lhs != rhs) {
                        rep.ok = false;
                        rep.violations.push_back({{g, h, k, l}, "super 3-cocycle condition"});
                    }
                }
    return rep;
}

// Trivial cocycle: alpha == 1, omega == 0.
inline SuperCocycle trivial_cocycle(FiniteGroup G, std::string name = "trivial") {
    const int n = G.order();
    std::vector<std::vector<int>> om(n, std::vector<int>(n, 0));
    std::vector<Scalar> al(static_cast<std::size_t>(n) * n * n, Scalar::one());
    return SuperCocycle(std::move(G), std::move(om), std::move(al), std::move(name));
}

// The cyclic-group example: on Z_n, omega(a,b) = [a+b >= n] and
// alpha(a,b,c) = zeta_{2n}^{omega(a,b) * c} with zeta_{2n} = exp(pi i / n),
// exact with root order N = 2n.
inline SuperCocycle zn_example_cocycle(int n) {
    if (n < 1) throw Error(ErrorKind::Usage, "zn cocycle needs n >= 1");
    FiniteGroup G = make_cyclic_group(n);
    std::vector<std::vector<int>> om(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) om[a][b] = (a + b >= n) ? 1 : 0;
    std::vector<Scalar> al;
    al.reserve(static_cast<std::size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cidx = 0; cidx < n; ++cidx)
                al.push_back(Scalar::exact(CycNumber::root_power(2 * n, om[a][b] * cidx)));
    return SuperCocycle(std::move(G), std::move(om), std::move(al), "zn:" + std::to_string(n));
}

}  // namespace spinsum
