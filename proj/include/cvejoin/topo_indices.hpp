#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "cvejoin/cve_join.hpp"

namespace cvejoin {

using Rational = boost::rational<long long>;

std::string rational_to_string(const Rational& r); // "108" or "74/3"

/// The nine eccentricity/distance indices of one connected graph. The seven
/// rational-valued ones are exact; ga4 and abc5 are floating point.
struct IndexReport {
    Rational xi_c;      // sum of degree * eccentricity
    Rational xi_ce;     // sum of degree / eccentricity
    Rational tau;       // sum of eccentricities
    Rational aveg;      // tau / order
    Rational zagreb_m1; // sum of squared eccentricities
    Rational zagreb_m2; // edge sum of eccentricity products
    Rational wiener;    // half the sum of all distances
    double ga4 = 0.0;   // edge sum of 2*sqrt(e_u e_v) / (e_u + e_v)
    double abc5 = 0.0;  // edge sum of sqrt((e_u + e_v - 2) / (e_u e_v))
};

// All nine straight from degrees, BFS eccentricities, and the distance matrix.
IndexReport indices_definitional(const Graph& g);

// Closed forms for the join, split on whether the first operand is
// triangle-free. Rational forms are exact integer arithmetic. The Wiener form
// additionally needs k2, k3 and exists only on the triangle-free branch.
long long wiener_closed_form(const CveParameters& p, bool triangle_free);
long long xi_c_closed_form(const CveParameters& p, bool triangle_free);
Rational xi_ce_closed_form(const CveParameters& p, bool triangle_free);
long long tau_closed_form(const CveParameters& p, bool triangle_free);
Rational aveg_closed_form(const CveParameters& p, bool triangle_free);
std::pair<long long, long long> zagreb_closed_form(const CveParameters& p, bool triangle_free);
double ga4_closed_form(const CveParameters& p, bool triangle_free);
double abc5_closed_form(const CveParameters& p, bool triangle_free);

struct IndexCheck {
    std::string name;
    bool exact = false;              // rational comparison vs 1e-9 absolute
    std::string definitional;        // rendered value
    std::string closed_form;         // rendered value, or "n/a"
    double definitional_value = 0.0; // numeric rendering for reports
    double closed_form_value = 0.0;
    bool closed_form_available = false;
    double difference = 0.0;
    bool pass = false; // unavailable closed forms pass vacuously
};

struct IndexVerification {
    bool triangle_free_branch = false;
    std::vector<IndexCheck> checks; // nine rows in IndexReport order
    bool pass = false;
};

// Builds the join, computes every index definitionally, evaluates every
// applicable closed form, and compares: exact for rationals, 1e-9 absolute
// for ga4/abc5. Unavailable closed forms are reported, not failed.
IndexVerification verify_indices(const Graph& g1, const Graph& g2, const Graph& g3);

} // namespace cvejoin
