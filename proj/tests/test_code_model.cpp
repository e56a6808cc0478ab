#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace wirecode;

namespace {

// 3x3 Bacon-Shor gauge group: XX on horizontal pairs, ZZ on vertical pairs
SubsystemCode bacon_shor_3x3() {
    SubsystemCode code;
    code.n = 9;
    code.register_of.assign(9, Register::data);
    auto at = [](int r, int c) { return 3 * r + c; };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c) {
            PauliOperator g(9);
            g.set_type(at(r, c), 'X');
            g.set_type(at(r, c + 1), 'X');
            code.gauge.push_back(g);
        }
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) {
            PauliOperator g(9);
            g.set_type(at(r, c), 'Z');
            g.set_type(at(r + 1, c), 'Z');
            code.gauge.push_back(g);
        }
    return code;
}

} // namespace

TEST_CASE("degree profile counts per-type incidences") {
    auto rep = fixtures::repetition();
    DegreeProfile p = degree_profile(rep);
    CHECK(p.dz[1] == 2);
    CHECK(p.dx[1] == 0);
    CHECK(p.dy[1] == 0);
    CHECK(p.dz[0] == 1);
    // sum over qubits equals sum of check weights
    int weights = 0;
    for (const auto& c : rep.checks) weights += c.weight();
    CHECK(p.sum_total() == weights);

    auto five = fixtures::five_qubit();
    DegreeProfile pf = degree_profile(five);
    CHECK(pf.total(3) == 4); // X, Z, Z, X across the four checks
    CHECK(pf.dx[3] == 2);
    CHECK(pf.dz[3] == 2);

    auto shor = fixtures::shor();
    DegreeProfile ps = degree_profile(shor);
    CHECK(ps.dx[1] == 1);
    CHECK(ps.dz[1] == 2);
}

TEST_CASE("code text parsing round-trips and rejects malformed input") {
    std::string text = "# repetition\nZZI\n\nIZZ  # tail comment\n";
    StabilizerCode code = parse_code_text(text);
    CHECK(code.n == 3);
    CHECK(code.num_checks() == 2);
    CHECK(parse_code_text(code_to_text(code)).checks[1].str() == "IZZ");

    CHECK_THROWS_WITH_AS(parse_code_text("ZZI\nIZ\n"), doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_text("ZQI\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_text("# nothing\n"), std::invalid_argument);
}

TEST_CASE("validation names an anticommuting pair") {
    CHECK_THROWS_WITH_AS(make_code(2, {"XI", "ZI"}), doctest::Contains("0 and 1"), std::invalid_argument);
}

TEST_CASE("compute_k on abelian gauge groups reduces to n minus rank") {
    CHECK(compute_k(as_subsystem(fixtures::repetition())) == 1);
    CHECK(compute_k(as_subsystem(fixtures::five_qubit())) == 1);
    CHECK(compute_k(as_subsystem(fixtures::shor())) == 1);
    CHECK(compute_k(as_subsystem(fixtures::four_two_two())) == 2);
    CHECK(compute_k(as_subsystem(fixtures::toric_2x2())) == 2);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        auto code = fixtures::random_commuting(seed);
        CHECK(compute_k(as_subsystem(code)) == code.n - gf2_rank(code.checks));
    }
}

TEST_CASE("compute_k on the 3x3 Bacon-Shor gauge group matches brute-force enumeration") {
    SubsystemCode bs = bacon_shor_3x3();
    int k = compute_k(bs);
    CHECK(k == 1);
    CHECK(oracles::brute_force_k(bs.gauge, bs.n) == k);
}

TEST_CASE("bare logicals of the repetition code") {
    auto logs = bare_logicals(as_subsystem(fixtures::repetition()));
    REQUIRE(logs.size() == 2);
    // one anticommuting pair, both commuting with the checks
    CHECK_FALSE(commutes(logs[0], logs[1]));
    for (const auto& l : logs)
        for (const auto& c : fixtures::repetition().checks) CHECK(commutes(l, c));
    // XXX and ZII generate the logical algebra up to stabilizers
    auto group = fixtures::repetition().checks;
    group.push_back(logs[0]);
    group.push_back(logs[1]);
    CHECK(in_group(parse_pauli("XXX"), group));
    CHECK(in_group(parse_pauli("ZII"), group));
}

TEST_CASE("bare logicals count 2k and commute with every gauge generator") {
    for (uint64_t seed = 20; seed < 26; ++seed) {
        auto code = fixtures::random_commuting(seed);
        auto sub = as_subsystem(code);
        auto logs = bare_logicals(sub);
        CHECK(int(logs.size()) == 2 * compute_k(sub));
        for (const auto& l : logs)
            for (const auto& g : sub.gauge) CHECK(commutes(l, g));
    }
    SubsystemCode bs = bacon_shor_3x3();
    auto logs = bare_logicals(bs);
    CHECK(int(logs.size()) == 2);
    for (const auto& l : logs)
        for (const auto& g : bs.gauge) CHECK(commutes(l, g));
}

TEST_CASE("dressed distance of small stabilizer codes") {
    DistanceResult rep = dressed_distance(as_subsystem(fixtures::repetition()), 3);
    CHECK(rep.found);
    CHECK(rep.d == 1); // Z1 is a weight-1 logical
    CHECK(commutes(rep.witness, fixtures::repetition().checks[0]));

    DistanceResult five = dressed_distance(as_subsystem(fixtures::five_qubit()), 5);
    CHECK(five.found);
    CHECK(five.d == 3);

    DistanceResult ft = dressed_distance(as_subsystem(fixtures::four_two_two()), 4);
    CHECK(ft.found);
    CHECK(ft.d == 2);
}

TEST_CASE("dressed distance witness commutes with the center and sits outside the gauge group") {
    SubsystemCode bs = bacon_shor_3x3();
    DistanceResult r = dressed_distance(bs, 3);
    REQUIRE(r.found);
    CHECK(r.d == 3);
    for (const auto& s : center(bs.gauge)) CHECK(commutes(r.witness, s));
    CHECK_FALSE(in_group(r.witness, bs.gauge));
}

TEST_CASE("dressed distance is monotone in the search budget") {
    SubsystemCode five = as_subsystem(fixtures::five_qubit());
    DistanceResult a = dressed_distance(five, 3);
    DistanceResult b = dressed_distance(five, 5);
    REQUIRE(a.found);
    REQUIRE(b.found);
    CHECK(a.d == b.d);
    DistanceResult below = dressed_distance(five, 2);
    CHECK_FALSE(below.found);
}

TEST_CASE("dressed distance agrees with the independent reference search") {
    std::vector<SubsystemCode> cases = {as_subsystem(fixtures::repetition()),
                                        as_subsystem(fixtures::four_two_two()), bacon_shor_3x3()};
    for (const auto& code : cases) {
        auto expected = oracles::simple_dressed_distance(code, 3);
        DistanceResult got = dressed_distance(code, 3);
        CHECK(got.found == expected.first);
        if (expected.first) CHECK(got.d == expected.second);
    }
}

TEST_CASE("relations are the left kernel of the check list") {
    CHECK(relations(fixtures::repetition()).empty());

    auto rels = relations(fixtures::overcomplete_repetition());
    REQUIRE(rels.size() == 1);
    CHECK(rels[0] == std::vector<int>{0, 1, 2});

    auto toric = relations(fixtures::toric_2x2());
    REQUIRE(toric.size() == 2);
    for (const auto& rel : toric) {
        PauliOperator prod(8);
        for (int i : rel) prod = multiply(prod, fixtures::toric_2x2().checks[i]);
        CHECK(prod.is_identity());
    }

    CHECK(relations(fixtures::shor()).empty());
}

TEST_CASE("rotated surface codes have d^2-1 independent commuting checks and k=1") {
    for (int d = 2; d <= 7; ++d) {
        auto code = fixtures::rotated_surface(d);
        CHECK(code.num_checks() == d * d - 1);
        CHECK(gf2_rank(code.checks) == d * d - 1);
        CHECK(compute_k(as_subsystem(code)) == 1);
    }
}
