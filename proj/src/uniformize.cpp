#include "dhj/engine.hpp"

#include <stdexcept>

namespace dhj {

namespace {

Subspace block_subspace(int k, int prefix_length, Index prefix, int m)
{
    if (prefix_length == 0)
        return identity_subspace(k, m);
    return concat(Word::from_index(k, prefix_length, prefix), identity_subspace(k, m));
}

} // namespace

UniformizeResult uniformize(const PointSet& a, int m, const Rational& eps)
{
    if (m < 1)
        throw std::invalid_argument("uniformize: m must be >= 1");
    if (eps <= 0 || eps >= 1)
        throw std::invalid_argument("uniformize: eps must satisfy 0 < eps < 1");
    const int k = a.k(), n = a.n();
    const Index block = checked_power(k, m);
    Rational rho = eps / Rational(to_big(block - 1));
    rho.canonicalize();
    const Rational d = density(a);
    const BigInt round_cap = floor(1 / rho) + 1;

    UniformizeResult out;
    out.trace.param("eps", eps);
    out.trace.param("rho", rho);
    out.trace.param("density", d);

    Index prefix = 0;
    for (int r = 1;; ++r) {
        require(BigInt(r) <= round_cap, "uniformize exceeded floor(1/rho) + 1 rounds");
        const int l = r * m;
        if (l >= n) {
            out.trace.outcome = "exhausted: block of length " + std::to_string(l) + " needs n > " + std::to_string(l);
            return out;
        }
        const Index tail = cube_size(k, n - l);
        const Rational tail_size(to_big(tail));
        auto& round = out.trace.add_round(to_string(block_subspace(k, (r - 1) * m, prefix, m)));

        std::optional<Index> low, chosen;
        Rational low_density = 1;
        for (Index j = 0; j < block; ++j) {
            Index x = prefix * block + j;
            Rational dx = Rational(to_big(a.count_range(x * tail, (x + 1) * tail))) / tail_size;
            if (dx < low_density) {
                low_density = dx;
                low = x;
            }
            if (!chosen && dx >= d + r * rho)
                chosen = x;
        }
        round.set("min slice density", low_density);
        if (low_density >= d - eps) {
            out.success = true;
            out.l = l;
            out.V = block_subspace(k, (r - 1) * m, prefix, m);
            break;
        }
        require(chosen.has_value(), "averaging must leave a slice of density >= dens(A) + r rho");
        round.note("next prefix", to_string(Word::from_index(k, l, *chosen)));
        prefix = *chosen;
    }

    for (Index x : out.V->point_indices())
        require(density(slice(a, out.l, x)) >= d - eps, "every slice over V has density >= dens(A) - eps");
    out.trace.verified("dens(A_x) >= dens(A) - eps for every x in V");
    out.trace.outcome = "success";
    return out;
}

} // namespace dhj
