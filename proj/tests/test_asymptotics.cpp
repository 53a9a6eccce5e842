#include "divtop/asymptotics.hpp"

#include <cstdlib>

#include <doctest.h>

#include <json.hpp>

#include "divtop/format.hpp"

using namespace divtop;

TEST_CASE("total Betti report rows") {
    const SieveTable t = build_sieve(10000);
    const WeightCounters c(t, 10000);
    const std::vector<uint64_t> ns{1, 10, 1000};
    const auto rows = report_total_betti_delta(ns, c);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].degenerate);  // n = 1: no positive-degree homology
    CHECK(rows[1].measured == 1);
    CHECK(rows[1].predicted == doctest::Approx(2.0264236));
    CHECK(rows[1].ratio == doctest::Approx(0.4934796).epsilon(1e-6));
    CHECK(rows[2].measured == 200);  // sum of Betti numbers of Delta_1000
}

TEST_CASE("parity and fixed-k reports") {
    const SieveTable t = build_sieve(10000);
    const WeightCounters c(t, 10000);
    const std::vector<uint64_t> ns{10};
    const auto parity = report_parity_betti(ns, ComplexKind::Delta, t, c);
    REQUIRE(parity.size() == 2);
    CHECK(parity[0].quantity == "betti_delta_even");
    CHECK(parity[0].measured == 1);
    CHECK(parity[1].measured == 0);

    const auto fixed0 = report_fixed_k_betti(0, ns, c);
    CHECK(fixed0[0].measured == 1);
    const auto fixed9 = report_fixed_k_betti(9, ns, c);
    CHECK(fixed9[0].measured == 0);
    CHECK(fixed9[0].degenerate);  // above the dimension of Delta_10
}

TEST_CASE("growth traces") {
    const SieveTable t = build_sieve(1000);
    const SummatoryTables s = build_summatory(t, 1000);
    const std::vector<uint64_t> ns{1, 1000};
    const auto rows = report_growth_traces(ns, s);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].quantity == "mertens_over_sqrt_n");
    CHECK(rows[0].ratio == doctest::Approx(1.0));  // M(1)/sqrt(1)
    CHECK(rows[4].n == 1000);
}

TEST_CASE("squarefree density and modal dimension") {
    const SieveTable t = build_sieve(100000);
    const std::vector<uint64_t> ns{10, 100000};
    const auto rows = report_sqfree_density(ns, t);
    CHECK(rows[0].quantity == "sqfree_density");
    CHECK(rows[0].measured == 7);  // sigma(10)
    bool found_modal = false;
    for (const auto& r : rows)
        if (r.quantity == "modal_face_dimension" && r.n == 100000) {
            found_modal = true;
            CHECK(r.measured == 1);  // weight-2 squarefree integers dominate here
        }
    CHECK(found_modal);
    CHECK(modal_face_dimension(100000, t) == 1);
    CHECK(modal_face_dimension(10, t) == 0);
}

TEST_CASE("rendering is deterministic and formats encode identical values") {
    const SieveTable t = build_sieve(1000);
    const WeightCounters c(t, 1000);
    const std::vector<uint64_t> ns{1, 10, 1000};
    const auto rows = report_total_betti_delta(ns, c);

    const std::string csv1 = rows_to_csv(rows);
    const std::string csv2 = rows_to_csv(rows);
    CHECK(csv1 == csv2);

    const auto parsed = nlohmann::json::parse(rows_to_json(rows));
    REQUIRE(parsed.size() == rows.size());
    for (size_t i = 0; i < rows.size(); i++) {
        CHECK(parsed[i]["measured"].get<int64_t>() == rows[i].measured);
        CHECK(parsed[i]["n"].get<uint64_t>() == rows[i].n);
        if (rows[i].degenerate)
            CHECK(parsed[i]["ratio"].is_null());
        else
            CHECK(parsed[i]["ratio"].get<double>() == rows[i].ratio);
    }

    // CSV doubles round-trip exactly
    CHECK(std::strtod(format_double(rows[1].ratio).c_str(), nullptr) == rows[1].ratio);
}

TEST_CASE("Betti vector rendering") {
    const SieveTable t = build_sieve(100);
    const WeightCounters c(t, 100);
    const BettiVector b = betti_delta(10, c);
    const std::string table = render_betti(b, OutputFormat::Table);
    CHECK(table.find("beta[0] = 1") != std::string::npos);
    const std::string csv = render_betti(b, OutputFormat::Csv);
    CHECK(csv == "k,beta\n0,1\n");
    const auto j = nlohmann::json::parse(render_betti(b, OutputFormat::Json));
    CHECK(j["betti"]["0"] == 1);
    CHECK(j["euler_characteristic"] == 1);  // chi = beta_0 here
}
