#include "cvejoin/topo_indices.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "cvejoin/spectral.hpp"

namespace cvejoin {

std::string rational_to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

IndexReport indices_definitional(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw Error(errc::too_small, "indices need at least 2 vertices");
    auto dist = all_pairs_distances(g);

    std::vector<long long> ecc(n), deg(n);
    for (int v = 0; v < n; ++v) {
        ecc[v] = eccentricity(dist, v);
        deg[v] = g.degree(v);
    }

    IndexReport r;
    long long tr_total = 0;
    for (int v = 0; v < n; ++v) {
        r.xi_c += Rational(deg[v] * ecc[v]);
        r.xi_ce += Rational(deg[v], ecc[v]);
        r.tau += Rational(ecc[v]);
        r.zagreb_m1 += Rational(ecc[v] * ecc[v]);
        tr_total += transmission(dist, v);
    }
    r.aveg = r.tau / Rational(n);
    r.wiener = Rational(tr_total, 2);
    for (const auto& [u, v] : g.edges()) {
        r.zagreb_m2 += Rational(ecc[u] * ecc[v]);
        double eu = static_cast<double>(ecc[u]), ev = static_cast<double>(ecc[v]);
        r.ga4 += 2.0 * std::sqrt(eu * ev) / (eu + ev);
        r.abc5 += std::sqrt((eu + ev - 2.0) / (eu * ev));
    }
    return r;
}

namespace {

// Theorems stated for the join silently rely on the eccentricity pattern,
// which needs both join sides nonempty and I(G1) nonempty.
void require_gated(const CveParameters& p) {
    if (p.m1 < 1) throw Error(errc::closed_form_unavailable, "g1 has no edges");
    if (p.n2 < 1 || p.n3 < 1)
        throw Error(errc::closed_form_unavailable, "closed forms need n2 >= 1 and n3 >= 1");
}

} // namespace

long long wiener_closed_form(const CveParameters& p, bool triangle_free) {
    require_gated(p);
    if (!triangle_free)
        throw Error(errc::closed_form_unavailable, "Wiener closed form needs a triangle-free g1");
    if (!p.k2 || !p.k3) throw Error(errc::missing_regularity, "Wiener closed form needs k2 and k3");
    const long long n1 = p.n1, m1 = p.m1, n2 = p.n2, n3 = p.n3, k2 = *p.k2, k3 = *p.k3;
    long long total = n1 * n1 - n1 +
                      2 * (n2 * n2 + n3 * n3 + n1 * n2 - n2 - n3 + m1 * n3 + m1 * m1) +
                      4 * (n1 * n3 + m1 * n1 + m1 * n2 - m1) - (n2 * k2 + n3 * k3) +
                      6 * n2 * n3;
    return total / 2;
}

long long xi_c_closed_form(const CveParameters& p, bool triangle_free) {
    require_gated(p);
    const long long n1 = p.n1, m1 = p.m1, n2 = p.n2, m2 = p.m2, n3 = p.n3, m3 = p.m3;
    if (triangle_free)
        return 2 * n1 * n1 + 5 * n1 * n2 + 5 * m1 * n3 - 2 * n1 + 4 * m1 + 6 * m2 + 6 * m3;
    return 3 * n1 * n1 + 6 * n1 * n2 + 6 * m1 * n3 - 3 * n1 + 6 * (m1 + m2 + m3);
}

Rational xi_ce_closed_form(const CveParameters& p, bool triangle_free) {
    require_gated(p);
    const long long n1 = p.n1, m1 = p.m1, n2 = p.n2, m2 = p.m2, n3 = p.n3, m3 = p.m3;
    if (triangle_free)
        return Rational(3 * n1 * n1 + 5 * (n1 * n2 + m1 * n3) + 6 * m1 + 4 * (m2 + m3) - 3 * n1, 6);
    return Rational(n1 * n1 + 2 * (n1 * n2 + m1 * n3) - n1 + 2 * (m1 + m2 + m3), 3);
}

long long tau_closed_form(const CveParameters& p, bool triangle_free) {
    require_gated(p);
    const long long n1 = p.n1, m1 = p.m1, n2 = p.n2, n3 = p.n3;
    if (triangle_free) return 2 * n1 + 2 * m1 + 3 * n2 + 3 * n3;
    return 3 * (n1 + n2 + n3 + m1);
}

Rational aveg_closed_form(const CveParameters& p, bool triangle_free) {
    return Rational(tau_closed_form(p, triangle_free), cve_order(p));
}

std::pair<long long, long long> zagreb_closed_form(const CveParameters& p, bool triangle_free) {
    require_gated(p);
    const long long n1 = p.n1, m1 = p.m1, n2 = p.n2, m2 = p.m2, n3 = p.n3, m3 = p.m3;
    if (triangle_free) {
        long long m1v = 4 * n1 + 4 * m1 + 9 * n2 + 9 * n3;
        long long m2v = 4 * m1 + 9 * (m2 + m3) + 2 * (n1 * n1 - n1) + 6 * (n1 * n2 + m1 * n3);
        return {m1v, m2v};
    }
    long long m1v = 9 * (n1 + n2 + n3 + m1);
    long long m2v = 9 * (m1 + m2 + m3 + n1 * n2 + m1 * n3 + (n1 * n1 - n1) / 2);
    return {m1v, m2v};
}

double ga4_closed_form(const CveParameters& p, bool triangle_free) {
    require_gated(p);
    const double n1 = p.n1, m1 = p.m1, n2 = p.n2, m2 = p.m2, n3 = p.n3, m3 = p.m3;
    if (triangle_free)
        return m1 + m2 + m3 + (2.0 * std::sqrt(6.0) / 5.0) * (n1 * n2 + m1 * n3) +
               (n1 * n1 - n1) / 2.0;
    return m1 + m2 + m3 + n1 * n2 + m1 * n3 + (n1 * n1 - n1) / 2.0;
}

double abc5_closed_form(const CveParameters& p, bool triangle_free) {
    require_gated(p);
    const double n1 = p.n1, m1 = p.m1, n2 = p.n2, m2 = p.m2, n3 = p.n3, m3 = p.m3;
    if (triangle_free)
        return (2.0 / 3.0) * (m2 + m3) +
               (n1 * n2 + m1 * n3 + m1 + n1 * (n1 - 1) / 2.0) / std::sqrt(2.0);
    return (2.0 / 3.0) * (m1 + m2 + m3 + n1 * n2 + m1 * n3) + n1 * (n1 - 1) / 3.0;
}

namespace {

IndexCheck rational_check(const std::string& name, const Rational& definitional,
                          const std::function<Rational()>& closed) {
    IndexCheck c;
    c.name = name;
    c.exact = true;
    c.definitional = rational_to_string(definitional);
    c.definitional_value = boost::rational_cast<double>(definitional);
    try {
        Rational cf = closed();
        c.closed_form_available = true;
        c.closed_form = rational_to_string(cf);
        c.closed_form_value = boost::rational_cast<double>(cf);
        c.difference = std::abs(boost::rational_cast<double>(cf - definitional));
        c.pass = cf == definitional;
    } catch (const Error& e) {
        if (e.code() != errc::closed_form_unavailable && e.code() != errc::missing_regularity)
            throw;
        c.closed_form = "n/a";
        c.pass = true;
    }
    return c;
}

IndexCheck real_check(const std::string& name, double definitional,
                      const std::function<double()>& closed, double tol) {
    IndexCheck c;
    c.name = name;
    c.definitional_value = definitional;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.15g", definitional);
    c.definitional = buf;
    try {
        double cf = closed();
        c.closed_form_available = true;
        c.closed_form_value = cf;
        std::snprintf(buf, sizeof buf, "%.15g", cf);
        c.closed_form = buf;
        c.difference = std::abs(cf - definitional);
        c.pass = c.difference <= tol;
    } catch (const Error& e) {
        if (e.code() != errc::closed_form_unavailable && e.code() != errc::missing_regularity)
            throw;
        c.closed_form = "n/a";
        c.pass = true;
    }
    return c;
}

} // namespace

IndexVerification verify_indices(const Graph& g1, const Graph& g2, const Graph& g3) {
    auto join = cve_join(g1, g2, g3);
    const auto& p = join.params;
    const bool tf = join.g1_triangle_free;
    auto def = indices_definitional(join.graph);

    IndexVerification v;
    v.triangle_free_branch = tf;
    v.checks.push_back(
        rational_check("xi_c", def.xi_c, [&] { return Rational(xi_c_closed_form(p, tf)); }));
    v.checks.push_back(rational_check("xi_ce", def.xi_ce, [&] { return xi_ce_closed_form(p, tf); }));
    v.checks.push_back(
        rational_check("tau", def.tau, [&] { return Rational(tau_closed_form(p, tf)); }));
    v.checks.push_back(rational_check("aveg", def.aveg, [&] { return aveg_closed_form(p, tf); }));
    v.checks.push_back(rational_check("M1", def.zagreb_m1,
                                      [&] { return Rational(zagreb_closed_form(p, tf).first); }));
    v.checks.push_back(rational_check("M2", def.zagreb_m2,
                                      [&] { return Rational(zagreb_closed_form(p, tf).second); }));
    v.checks.push_back(
        rational_check("wiener", def.wiener, [&] { return Rational(wiener_closed_form(p, tf)); }));
    v.checks.push_back(real_check("GA4", def.ga4, [&] { return ga4_closed_form(p, tf); }, 1e-9));
    v.checks.push_back(real_check("ABC5", def.abc5, [&] { return abc5_closed_form(p, tf); }, 1e-9));

    v.pass = true;
    for (const auto& c : v.checks) v.pass = v.pass && c.pass;
    return v;
}

} // namespace cvejoin
