// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "mmwlink/fspl.hpp"

#include <cmath>

using namespace mmwlink;

// ================================================================================================
// SECTION 1: Reference constant and decade slopes
// ================================================================================================

TEST_CASE("FSPL - 1 GHz over 1 km is exactly the 92.45 dB constant")
{
    CHECK(fspl::fspl_db(frequency(1.0), distance(1.0)) == Catch::Approx(92.45).margin(1e-12));
}

TEST_CASE("FSPL - every decade in frequency or distance adds exactly 20 dB")
{
    const double base = fspl::fspl_db(frequency(1.0), distance(1.0));
    CHECK(fspl::fspl_db(frequency(10.0), distance(1.0)) - base ==
          Catch::Approx(20.0).margin(1e-9));
    CHECK(fspl::fspl_db(frequency(100.0), distance(1.0)) - base ==
          Catch::Approx(40.0).margin(1e-9));
    CHECK(fspl::fspl_db(frequency(1.0), distance(10.0)) - base ==
          Catch::Approx(20.0).margin(1e-9));
    CHECK(fspl::fspl_db(frequency(1.0), distance(0.1)) - base ==
          Catch::Approx(-20.0).margin(1e-9));
}

TEST_CASE("FSPL - doubling the distance adds 6.0206 dB")
{
    const double delta =
        fspl::fspl_db(frequency(28.0), distance(2.0)) - fspl::fspl_db(frequency(28.0), distance(1.0));
    CHECK(delta == Catch::Approx(20.0 * std::log10(2.0)).margin(1e-9));
}

// ================================================================================================
// SECTION 2: Consistency between the dB form and the linear power ratio
// ================================================================================================

TEST_CASE("FSPL - dB form matches 10 log10 of the (4 pi d f / c)^2 ratio within 0.01 dB")
{
    // The 92.45 constant is the recommendation's rounding of
    // 20 log10(4 pi 1e3 1e9 / c) = 92.4478 dB, so the two forms agree to
    // a couple of millidecibels, never exactly.
    const double freqs[] = {1.0, 2.4, 28.0, 60.0, 100.0, 300.0};
    const double dists[] = {0.1, 1.0, 10.0};
    for (const double f : freqs)
        for (const double d : dists)
        {
            const double db = fspl::fspl_db(frequency(f), distance(d));
            const double from_linear =
                10.0 * std::log10(fspl::fspl_linear_ratio(frequency(f), distance(d)));
            CHECK(db == Catch::Approx(from_linear).margin(0.01));
        }
}

TEST_CASE("FSPL - linear ratio grows with the square of distance")
{
    const double r1 = fspl::fspl_linear_ratio(frequency(28.0), distance(1.0));
    const double r2 = fspl::fspl_linear_ratio(frequency(28.0), distance(2.0));
    CHECK(r2 / r1 == Catch::Approx(4.0).epsilon(1e-12));
}

// ================================================================================================
// SECTION 3: Separability
// ================================================================================================

TEST_CASE("FSPL - frequency and distance terms separate additively in dB")
{
    const frequency f_a(7.3), f_b(151.0);
    const distance d_a(0.42), d_b(6.1);
    const double cross = fspl::fspl_db(f_a, d_b) + fspl::fspl_db(f_b, d_a);
    const double direct = fspl::fspl_db(f_a, d_a) + fspl::fspl_db(f_b, d_b);
    CHECK(cross == Catch::Approx(direct).margin(1e-9));
}
