#include <cmath>

#include "cayley/oracle.hpp"

namespace cayley {

namespace {

constexpr double kTol = 1e-9;
constexpr double kPi = 3.14159265358979323846;

std::complex<double> character_value(const AbelianGroup& g, const std::vector<long long>& a,
                                     const std::vector<long long>& x) {
    double phase = 0.0;
    for (std::size_t j = 0; j < g.orders.size(); ++j)
        phase += 2.0 * kPi * static_cast<double>(a[j] * x[j]) / static_cast<double>(g.orders[j]);
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace

std::vector<double> char_sum_eigenvalues(const AbelianGroup& g, const std::vector<long long>& s_set) {
    std::vector<std::vector<long long>> s_tuples;
    s_tuples.reserve(s_set.size());
    for (long long s : s_set) s_tuples.push_back(g.tuple(s));

    std::vector<double> out(static_cast<std::size_t>(g.n));
    for (long long chi = 0; chi < g.n; ++chi) {
        auto a = g.tuple(chi);
        std::complex<double> e{0.0, 0.0};
        for (const auto& x : s_tuples) e += character_value(g, a, x);
        if (std::abs(e.imag()) >= kTol)
            throw std::logic_error("character sum has nonzero imaginary part (non-symmetric S?)");
        out[static_cast<std::size_t>(chi)] = e.real();
    }
    return out;
}

CharacterClasses character_classes(const AbelianGroup& g, const std::vector<long long>& s_set) {
    CharacterClasses cc;
    cc.e = char_sum_eigenvalues(g, s_set);
    cc.is_real.resize(static_cast<std::size_t>(g.n));
    for (long long chi = 0; chi < g.n; ++chi) {
        auto a = g.tuple(chi);
        bool real = true;
        for (std::size_t j = 0; j < g.orders.size(); ++j)
            if ((2 * a[j]) % g.orders[j] != 0) real = false;
        cc.is_real[static_cast<std::size_t>(chi)] = real;
    }

    std::vector<long long> order(static_cast<std::size_t>(g.n));
    for (long long i = 0; i < g.n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](long long x, long long y) {
        return cc.e[static_cast<std::size_t>(x)] > cc.e[static_cast<std::size_t>(y)];
    });
    for (long long idx : order) {
        double v = cc.e[static_cast<std::size_t>(idx)];
        if (cc.clusters.empty() || cc.clusters.back().value - v > kTol)
            cc.clusters.push_back({v, 0, 0, 0});
        auto& cl = cc.clusters.back();
        ++cl.count;
        if (cc.is_real[static_cast<std::size_t>(idx)])
            ++cl.real_count;
        else
            ++cl.nonreal_count;
    }
    return cc;
}

long long CharacterClasses::cluster_of(double v) const {
    for (std::size_t i = 0; i < clusters.size(); ++i)
        if (std::abs(clusters[i].value - v) <= kTol) return static_cast<long long>(i);
    return -1;
}

std::vector<std::pair<double, long long>> sum_multiplicities(const AbelianGroup& g,
                                                             const std::vector<long long>& s_set) {
    CharacterClasses cc = character_classes(g, s_set);
    std::vector<std::pair<double, long long>> out;
    for (const auto& cl : cc.clusters) {
        if (std::abs(cl.value) <= kTol) {
            if (cl.count > 0) out.emplace_back(0.0, cl.count);  // m^+(0) = m(0)
            continue;
        }
        long long mirror = cc.cluster_of(-cl.value);
        long long nonreal_mirror = mirror < 0 ? 0 : cc.clusters[static_cast<std::size_t>(mirror)].nonreal_count;
        long long twice = 2 * cl.real_count + cl.nonreal_count + nonreal_mirror;
        if (twice % 2 != 0) throw std::logic_error("non-integral sum-graph multiplicity");
        if (twice > 0) out.emplace_back(cl.value, twice / 2);
    }
    // values whose negative occurs but which are absent from X(G,S) still gain multiplicity
    for (const auto& cl : cc.clusters) {
        if (cl.value <= kTol) continue;
        if (cc.cluster_of(-cl.value) >= 0) continue;
        long long twice = cl.nonreal_count;  // tilde-class of -value
        if (twice % 2 != 0) throw std::logic_error("non-integral sum-graph multiplicity");
        if (twice > 0) out.emplace_back(-cl.value, twice / 2);
    }
    for (const auto& cl : cc.clusters) {
        if (cl.value >= -kTol) continue;
        if (cc.cluster_of(-cl.value) >= 0) continue;
        long long twice = cl.nonreal_count;
        if (twice % 2 != 0) throw std::logic_error("non-integral sum-graph multiplicity");
        if (twice > 0) out.emplace_back(-cl.value, twice / 2);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    return out;
}

}  // namespace cayley
