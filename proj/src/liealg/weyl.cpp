#include "spslice/liealg/weyl.hpp"

#include "spslice/linalg/elimination.hpp"

#include <algorithm>

namespace spslice::lie {

QMatrix CartanData::cartan_element(const GaussRat& h1, const GaussRat& h2, const GaussRat& h3)
{
    QMatrix h(6, 6);
    h(0, 0) = h1;
    h(1, 1) = h2;
    h(2, 2) = h3;
    h(3, 3) = -h1;
    h(4, 4) = -h2;
    h(5, 5) = -h3;
    return h;
}

CartanData weyl_data()
{
    CartanData d;
    QMatrix swap23 = {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    d.wl_generators.push_back(swap23);
    d.fixed_space = kernel(swap23 - QMatrix::identity(3));
    d.wp_generators.push_back(QMatrix{{-1, 0}, {0, 1}});
    d.wp_generators.push_back(QMatrix{{1, 0}, {0, -1}});
    return d;
}

std::vector<QMatrix> group_closure(const std::vector<QMatrix>& generators, std::size_t limit)
{
    if (generators.empty()) return {};
    std::vector<QMatrix> elements{QMatrix::identity(generators.front().rows())};
    for (std::size_t frontier = 0; frontier < elements.size(); ++frontier) {
        for (const auto& g : generators) {
            QMatrix next = elements[frontier] * g;
            if (std::find(elements.begin(), elements.end(), next) == elements.end()) {
                elements.push_back(std::move(next));
                if (elements.size() > limit) throw DomainError("group_closure: group exceeds size limit");
            }
        }
    }
    return elements;
}

std::size_t element_order(const QMatrix& g, std::size_t limit)
{
    const QMatrix id = QMatrix::identity(g.rows());
    QMatrix power = g;
    for (std::size_t k = 1; k <= limit; ++k) {
        if (power == id) return k;
        power = power * g;
    }
    throw DomainError("element_order: order exceeds limit");
}

std::pair<GaussRat, GaussRat> eta(const std::array<GaussRat, 3>& z)
{
    if (!(z[1] == z[2])) throw UsageError("eta: point is not in the fixed plane (h2 != h3)");
    auto value = [](const GaussRat& s, const GaussRat& t) { return std::pair{s * s, t * t}; };
    const auto result = value(z[0], z[1]);
    for (const auto& gen : weyl_data().wp_generators) {
        const GaussRat s = gen(0, 0) * z[0] + gen(0, 1) * z[1];
        const GaussRat t = gen(1, 0) * z[0] + gen(1, 1) * z[1];
        if (!(value(s, t) == result)) throw DomainError("eta: value is not W^P-invariant");
    }
    return result;
}

} // namespace spslice::lie
