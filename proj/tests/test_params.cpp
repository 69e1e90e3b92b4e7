#include "insdel/params.hpp"

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "insdel/errors.hpp"

using namespace insdel;

namespace {

ParamOptions desk_defaults() {
    ParamOptions o;
    o.alpha = 0.75;  // 3-bit buffers at tau = 4
    o.k = 4;
    o.beta_in = 3;
    return o;
}

}  // namespace

TEST_CASE("default gamma/theta pair is accepted") {
    const CodeParams p = derive_params(desk_defaults());
    CHECK(p.gamma == doctest::Approx(1.0 / 12.0));
    CHECK(p.theta == doctest::Approx(1.0 / 51.0));
    CHECK(p.delta_b == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("alpha formula value") {
    // direct evaluation: 2 * (1/12) * 0.05 / (1/12 + 6) = 0.1/73
    ParamOptions o;
    o.k = 4;
    const CodeParams p = derive_params(o);
    CHECK(p.alpha == doctest::Approx(0.1 / 73.0).epsilon(1e-12));
    CHECK(p.alpha == doctest::Approx(1.3698630137e-3).epsilon(1e-9));
    CHECK(p.waived_constraints.empty());  // formula default satisfies everything
    CHECK(p.buffer_len == 1);             // ceil floors at one bit
}

TEST_CASE("shrink factor at beta = 4, gamma = 1/12") {
    // rho = min{0.25*(47/12)/(49/12), 1 - 0.75*(49/12)/(47/12)}
    const double beta = 4.0, gamma = 1.0 / 12.0;
    const double left = 0.25 * (beta - gamma) / (beta + gamma);
    const double right = 1.0 - 0.75 * (beta + gamma) / (beta - gamma);
    CHECK(left == doctest::Approx(0.2397959184).epsilon(1e-9));
    CHECK(right == doctest::Approx(0.2180851064).epsilon(1e-9));
    CHECK(std::min(left, right) == doctest::Approx(0.2180851064).epsilon(1e-9));
}

TEST_CASE("derived geometry at the desk-scale default") {
    const CodeParams p = derive_params(desk_defaults(), 3);
    CHECK(p.m == 16);
    CHECK(p.tau == 4);
    CHECK(p.d == 4);
    CHECK(p.index_bits == 4);
    CHECK(p.msg_bits == 8);
    CHECK(p.n_in == 24);
    CHECK(p.buffer_len == 3);
    CHECK(p.block_len == 30);
    CHECK(p.n == 120);
    CHECK(p.beta == doctest::Approx(7.5));
    CHECK(p.rho > 0.0);
    CHECK(p.delta == doctest::Approx(p.delta_out * p.alpha * p.gamma /
                                     (2.0 * p.beta * (1.0 + 1.0 / p.theta))));
    // the derived budget fraction is below one edit at this size
    CHECK(p.channel_budget() == 0);
    CHECK(p.eta == 9);  // ceil(beta) + 1
}

TEST_CASE("alpha-driven constraints: hard without an override, waived with one") {
    ParamOptions o;
    o.k = 4;
    SUBCASE("no override, formula alpha, all constraints hold") {
        const CodeParams p = derive_params(o);
        CHECK(p.waived_constraints.empty());
    }
    SUBCASE("explicit desk-scale alpha records the violated inequalities") {
        o.alpha = 0.75;
        const CodeParams p = derive_params(o);
        REQUIRE(!p.waived_constraints.empty());
        CHECK(p.waived_constraints[0] == "alpha <= 2*gamma/(gamma+6)");
    }
}

TEST_CASE("constraint violations name the inequality") {
    ParamOptions o;
    o.k = 4;
    SUBCASE("gamma cap") {
        o.gamma = 0.1;
        CHECK_THROWS_WITH_AS(derive_params(o), "constraint violated: 0 < gamma <= 1/12",
                             ParamError);
    }
    SUBCASE("theta cap") {
        o.theta = 0.02;
        CHECK_THROWS_WITH_AS(derive_params(o), "constraint violated: 0 < theta < 1/50",
                             ParamError);
    }
    SUBCASE("delta_b range") {
        o.delta_b = 0.05;
        CHECK_THROWS_WITH_AS(derive_params(o),
                             "constraint violated: gamma < delta_b < 1/2", ParamError);
    }
    SUBCASE("alpha range") {
        o.alpha = 1.0;
        CHECK_THROWS_WITH_AS(derive_params(o), "constraint violated: 0 < alpha < 1",
                             ParamError);
    }
    SUBCASE("tau must divide m") {
        o.tau = 3;
        CHECK_THROWS_AS(derive_params(o), GeometryError);
    }
    SUBCASE("m must be a power of two") {
        o.m = 24;
        CHECK_THROWS_AS(derive_params(o), GeometryError);
    }
}

TEST_CASE("capped-tau geometries") {
    ParamOptions o = desk_defaults();
    SUBCASE("m = 64 at tau 4: block count fills the index field") {
        o.k = 6;
        o.tau = 4;
        const CodeParams p = derive_params(o, 3);
        CHECK(p.m == 64);
        CHECK(p.d == 16);
        CHECK(p.index_bits == 4);
        CHECK(p.msg_bits == 8);
    }
    SUBCASE("m = 256 at tau 4: index field widens past tau") {
        o.k = 8;
        o.tau = 4;
        const CodeParams p = derive_params(o, 3);
        CHECK(p.m == 256);
        CHECK(p.d == 64);
        CHECK(p.index_bits == 6);
        CHECK(p.msg_bits == 10);
        CHECK(p.n_in == 30);
    }
}

TEST_CASE("sample count: floor and polylog terms") {
    ParamOptions o = desk_defaults();
    const CodeParams p = derive_params(o);
    // eps_fail = 1e-6: 36 * ceil(ln 1e6) = 36 * 14
    CHECK(p.sample_count(120) == 504);
    o.eps_fail = std::exp(-1.0);
    const CodeParams q = derive_params(o);
    // floor term collapses to 36; ceil(log2(2304)^2) = ceil(11.17^2) = 125
    CHECK(q.sample_count(2304) == 125);
    CHECK(q.sample_count(4) == 36);
}

TEST_CASE("parameter file round trip") {
    std::istringstream is(
        "delta_in = 0.05\n"
        "delta_out = 0.125\n"
        "# comment line\n"
        "alpha = 0.75\n"
        "k = 4\n"
        "beta_in = 3\n"
        "seed = 9\n"
        "outer = hadamard\n");
    const ParamOptions o = read_param_file(is);
    CHECK(o.alpha == 0.75);
    CHECK(o.k == 4);
    CHECK(o.seed == 9);
    CHECK(o.outer == "hadamard");

    std::istringstream bad("frobnicate = 3\n");
    CHECK_THROWS_AS(read_param_file(bad), ConfigError);
}

TEST_CASE("buffer weight threshold") {
    const CodeParams p = derive_params(desk_defaults());
    // floor(delta_b * buffer_len / 2) = floor(3/12) = 0
    CHECK(p.buffer_weight_threshold() == 0);
}
