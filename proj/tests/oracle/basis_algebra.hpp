#pragma once

// Test-only oracle: the cohomology of X as an explicit algebra on a basis,
// with structure constants obtained by reducing monomials Theta^k p^*(x)
// through Theta^k = Theta p^*(K_S^{k-1}). Shares no code path with
// IntersectionRing::mul beyond the Rational type.

#include <vector>

#include "ellfm/intersection_ring.hpp"

namespace oracle {

using ellfm::Rational;

/// Basis: [1, e_1..e_rho, pt] for S; X-basis is p^*(S-basis) followed by Theta p^*(S-basis).
class BasisAlgebra {
public:
    explicit BasisAlgebra(const ellfm::SurfaceModel& m) : m_(m), rho_(static_cast<std::size_t>(m.picard_rank))
    {
        const std::size_t ns = rho_ + 2;
        surf_.assign(ns, std::vector<std::vector<Rational>>(ns, std::vector<Rational>(ns)));
        for (std::size_t i = 0; i < ns; ++i) {
            surf_[0][i][i] = 1;
            surf_[i][0][i] = 1;
        }
        for (std::size_t i = 0; i < rho_; ++i)
            for (std::size_t j = 0; j < rho_; ++j)
                surf_[1 + i][1 + j][ns - 1] = Rational(static_cast<long>(m.gram[i][j]));
        // K^0 = 1, K^1 = canonical, K^2 = K.K pt, K^k = 0 beyond
        std::vector<Rational> k0(ns), k1(ns);
        k0[0] = 1;
        for (std::size_t i = 0; i < rho_; ++i) k1[1 + i] = m.canonical[i];
        kpow_ = {k0, k1, smul(k1, k1)};
    }

    std::size_t dim() const { return 2 * (rho_ + 2); }

    std::vector<Rational> smul(const std::vector<Rational>& x, const std::vector<Rational>& y) const
    {
        const std::size_t ns = rho_ + 2;
        std::vector<Rational> out(ns);
        for (std::size_t i = 0; i < ns; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < ns; ++j) {
                if (y[j].is_zero()) continue;
                for (std::size_t k = 0; k < ns; ++k)
                    if (!surf_[i][j][k].is_zero()) out[k] += x[i] * y[j] * surf_[i][j][k];
            }
        }
        return out;
    }

    std::vector<Rational> mul(const std::vector<Rational>& u, const std::vector<Rational>& v) const
    {
        const std::size_t ns = rho_ + 2;
        std::vector<Rational> out(dim());
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                std::vector<Rational> x(u.begin() + a * ns, u.begin() + (a + 1) * ns);
                std::vector<Rational> y(v.begin() + b * ns, v.begin() + (b + 1) * ns);
                auto xy = smul(x, y);
                const std::size_t k = a + b; // power of Theta
                if (k == 0) {
                    for (std::size_t i = 0; i < ns; ++i) out[i] += xy[i];
                } else {
                    const auto reduced = k - 1 < kpow_.size() ? smul(kpow_[k - 1], xy) : std::vector<Rational>(ns);
                    for (std::size_t i = 0; i < ns; ++i) out[ns + i] += reduced[i];
                }
            }
        }
        return out;
    }

    Rational integrate(const std::vector<Rational>& v) const { return v.back(); }

    std::vector<Rational> from(const ellfm::ThreefoldClass& c) const
    {
        std::vector<Rational> out;
        auto push = [&](const ellfm::SurfaceClass& x) {
            out.push_back(x.r);
            out.insert(out.end(), x.d.begin(), x.d.end());
            out.push_back(x.s);
        };
        push(c.beta);
        push(c.alpha);
        return out;
    }

    std::vector<Rational> exp(const std::vector<Rational>& D) const
    {
        std::vector<Rational> out(dim()), term(dim());
        term[0] = 1;
        for (long k = 0; k < 8; ++k) {
            for (std::size_t i = 0; i < dim(); ++i) out[i] += term[i];
            term = mul(term, D);
            for (auto& x : term) x /= Rational(k + 1);
        }
        return out;
    }

private:
    ellfm::SurfaceModel m_;
    std::size_t rho_;
    std::vector<std::vector<std::vector<Rational>>> surf_;
    std::vector<std::vector<Rational>> kpow_;
};

} // namespace oracle
