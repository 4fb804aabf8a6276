#include <catch2/catch.hpp>

#include <algorithm>

#include "helpers.hpp"

using namespace akp;
using akp::testing::dekking;

namespace {

bool has_reason(const Verdict& v, std::string_view reason) {
    return std::find(v.reasons.begin(), v.reasons.end(), std::string(reason)) != v.reasons.end();
}

}  // namespace

TEST_CASE("scan length bounds", "[decider]") {
    CHECK(length_bound(4, 3, 3, 2) == 46);
    CHECK(paper_length_bound(4, 3, 3, 2) == 25);
    // Zero delta collapses both bounds to the border/image terms.
    CHECK(length_bound(2, 2, 2, 0) == 3);
    CHECK(paper_length_bound(2, 2, 2, 0) == 2);
}

TEST_CASE("decide finds the abelian square in the negative control", "[decider]") {
    const Verdict v = decide(akp::testing::binary_square(), 2);
    CHECK(v.status == Status::Contains);
    CHECK(v.reasons.empty());
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->position == 0);
    CHECK(v.witness->block_length == 1);  // the prefix begins 11
    REQUIRE(v.scan_hit.has_value());
    CHECK(verify_instance(v.scan_hit->factor,
                          ancestors(akp::testing::binary_square(), 2).all[v.scan_hit->template_index],
                          v.scan_hit->occurrence));
    CHECK(v.stats.det == "5");
    CHECK(v.stats.ancestor_count == 113);
    CHECK(v.stats.delta.has_value());
    CHECK(v.stats.factors_scanned.has_value());
}

TEST_CASE("decide agrees across bound modes on the negative control", "[decider]") {
    DeciderConfig paper;
    paper.bound = BoundMode::Paper;
    const Verdict a = decide(akp::testing::binary_square(), 2);
    const Verdict b = decide(akp::testing::binary_square(), 2, paper);
    CHECK(a.status == Status::Contains);
    CHECK(b.status == Status::Contains);
    CHECK(a.witness == b.witness);
    CHECK(*a.stats.scan_bound > *b.stats.scan_bound);
    CHECK(a.stats.paper_bound == b.stats.paper_bound);
}

TEST_CASE("decide k=2 on the Dekking morphism", "[decider]") {
    const Verdict v = decide(dekking(), 2);
    CHECK(v.status == Status::Contains);
    REQUIRE(v.witness.has_value());
    // mu^omega(1) = 1123... starts with the square 11.
    CHECK(v.witness->position == 0);
    CHECK(v.witness->block_length == 1);
    CHECK(v.stats.ancestor_count == 790);
}

TEST_CASE("decide k=3 on the Dekking morphism is Free", "[decider]") {
    DeciderConfig cfg;
    cfg.bound = BoundMode::Paper;  // the derived bound is exercised by the acceptance gate
    const Verdict v = decide(dekking(), 3, cfg);
    CHECK(v.status == Status::Free);
    CHECK(v.reasons.empty());
    CHECK_FALSE(v.witness.has_value());
    CHECK_FALSE(v.scan_hit.has_value());
    CHECK(v.stats.det == "-7");
    CHECK(v.stats.max_image_len == 4);
    CHECK(v.stats.norm_estimate.has_value());
    CHECK(*v.stats.norm_estimate == Approx(0.8589).epsilon(0).margin(1e-3));
    CHECK(v.stats.ancestor_count == 1294);
    CHECK(v.stats.generation_sizes == std::vector<std::uint64_t>{1, 1293, 0});
    CHECK(v.stats.delta == 2);
    CHECK(v.stats.scan_bound == 25);
    CHECK(v.stats.paper_bound == 25);
    CHECK(v.stats.factors_scanned == 1370);
}

TEST_CASE("decide reports every violated precondition", "[decider]") {
    SECTION("singular matrix") {
        const Verdict v = decide(akp::testing::thue_morse(), 2);
        CHECK(v.status == Status::PreconditionFailed);
        CHECK(has_reason(v, kReasonSingular));
        CHECK(v.stats.det == "0");
        CHECK_FALSE(v.stats.norm_estimate.has_value());
        CHECK_FALSE(v.stats.ancestor_count.has_value());
    }
    SECTION("norm not below one") {
        const Verdict v = decide(akp::testing::norm_fail(), 2);
        CHECK(v.status == Status::PreconditionFailed);
        CHECK(has_reason(v, kReasonNorm));
        CHECK(v.stats.det == "3");
        REQUIRE(v.stats.norm_estimate.has_value());
        CHECK(*v.stats.norm_estimate == Approx(1.0).epsilon(0).margin(1e-6));
    }
    SECTION("short image") {
        const Verdict v = decide(akp::testing::short_image(), 2);
        CHECK(v.status == Status::PreconditionFailed);
        CHECK(has_reason(v, kReasonShortImage));
    }
    SECTION("not prolongable") {
        const Verdict v = decide(Morphism{2, {{2, 1}, {1, 2}}}, 2);
        CHECK(v.status == Status::PreconditionFailed);
        CHECK(has_reason(v, kReasonNotProlongable));
    }
    SECTION("letters out of range stop matrix work") {
        const Verdict v = decide(Morphism{2, {{1, 3}, {2, 1}}}, 2);
        CHECK(v.status == Status::PreconditionFailed);
        CHECK(has_reason(v, kReasonLetterRange));
        CHECK(v.stats.det.empty());
    }
    CHECK_THROWS_AS(decide(dekking(), 1), std::invalid_argument);
}

TEST_CASE("witness extraction against the oracle", "[decider]") {
    CHECK(extract_witness(akp::testing::binary_square(), 2) == PowerOccurrence{0, 1, 2});
    // Independent ground truth at a higher exponent: abelian cubes are
    // unavoidable over two letters, so one must show up early.
    const Morphism mu = akp::testing::binary_square();
    const Word prefix = fixed_point_prefix(mu, 4096);
    const auto direct = find_abelian_power(prefix, 3, mu.m);
    REQUIRE(direct.has_value());
    CHECK(direct->position == 0);
    CHECK(direct->block_length == 9);
    CHECK(extract_witness(mu, 3) == *direct);
}

TEST_CASE("morphism files parse and round-trip", "[io]") {
    const std::string text =
        "# fixture\n"
        "alphabet: 3\n"
        "\n"
        "1 -> 1 1 2 3\n"
        "2 -> 1 3 3   # trailing comment\n"
        "3 -> 2 2 3\n";
    const Morphism mu = parse_morphism_file(text);
    CHECK(mu == dekking());
    CHECK(parse_morphism_file(morphism_to_text(mu)) == mu);

    // Spacing inside the header is tolerated.
    CHECK(parse_morphism_file("alphabet : 2\n1 -> 1 2\n2 -> 2 1\n") ==
          akp::testing::thue_morse());
}

TEST_CASE("multi-digit alphabets need no escaping", "[io]") {
    Morphism mu;
    mu.m = 12;
    mu.images.assign(12, Word{});
    for (int a = 1; a <= 12; ++a) mu.images[static_cast<std::size_t>(a - 1)] = {a % 12 + 1, 1};
    CHECK(parse_morphism_file(morphism_to_text(mu)) == mu);
}

TEST_CASE("parse errors carry line numbers", "[io]") {
    auto line_of = [](const std::string& text) {
        try {
            parse_morphism_file(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("") == 0);                                  // no header at all
    CHECK(line_of("1 -> 1\n") == 1);                          // rule before header
    CHECK(line_of("alphabet: 0\n") == 1);                     // bad size
    CHECK(line_of("alphabet: x\n") == 1);                     // bad size token
    CHECK(line_of("alphabet: 2\n1 2 -> 1\n") == 2);           // two letters on the left
    CHECK(line_of("alphabet: 2\n3 -> 1 1\n") == 2);           // lhs out of range
    CHECK(line_of("alphabet: 2\n1 -> 1 4\n") == 2);           // rhs out of range
    CHECK(line_of("alphabet: 2\n1 -> 1 1\n1 -> 2 2\n") == 3); // duplicate
    CHECK(line_of("alphabet: 2\n1 ->\n") == 2);               // empty image
    CHECK(line_of("alphabet: 2\n1 -> 1 z\n") == 2);           // bad letter token
    CHECK(line_of("alphabet: 2\n1 -> 1 1\n") == 2);           // missing rule for 2
    CHECK(line_of("alphabet: 2\n1, 2\n") == 2);               // no arrow

    CHECK_THROWS_WITH(parse_morphism_file("alphabet: 2\n1 -> 1 4\n"),
                      "line 2: letter 4 out of range 1..2");
}

TEST_CASE("morphism files load from disk", "[io]") {
    const std::string dir = AKP_MORPHISM_DIR;
    CHECK(load_morphism(dir + "/dekking.morph") == dekking());
    CHECK(load_morphism(dir + "/binary_square.morph") == akp::testing::binary_square());
    CHECK(load_morphism(dir + "/thue_morse.morph") == akp::testing::thue_morse());
    CHECK(load_morphism(dir + "/norm_fail.morph") == akp::testing::norm_fail());
    CHECK(load_morphism(dir + "/short_image.morph") == akp::testing::short_image());
    CHECK_THROWS_WITH(load_morphism(dir + "/absent.morph"),
                      Catch::Contains("cannot open morphism file"));
}

TEST_CASE("run reports round-trip through JSON", "[io]") {
    SECTION("contains verdict") {
        const RunReport r = make_report(decide(akp::testing::binary_square(), 2), 0.125);
        CHECK(r.status == "Contains");
        CHECK(r.witness_position == 0);
        CHECK(r.witness_block_length == 1);
        CHECK(report_from_json(to_json(r)) == r);
    }
    SECTION("precondition verdict keeps nulls null") {
        const RunReport r = make_report(decide(akp::testing::thue_morse(), 2), 0.5);
        CHECK(r.status == "PreconditionFailed");
        CHECK_FALSE(r.norm_estimate.has_value());
        CHECK_FALSE(r.witness_position.has_value());
        const RunReport back = report_from_json(to_json(r));
        CHECK(back == r);
        CHECK_FALSE(back.norm_estimate.has_value());
    }
    SECTION("fully populated report") {
        RunReport r;
        r.status = "Free";
        r.reasons = {};
        r.k = 3;
        r.m = 3;
        r.max_image_len = 4;
        r.det = "-7";
        r.norm_estimate = 0.858923;
        r.ancestor_count = 1294;
        r.generation_sizes = {1, 1293, 0};
        r.delta = 2;
        r.scan_bound = 46;
        r.paper_bound = 25;
        r.bound_mode = "derived";
        r.factors_scanned = 4530;
        r.elapsed_seconds = 79.5;
        CHECK(report_from_json(to_json(r)) == r);
    }
}

TEST_CASE("text and JSON outputs carry the same fields and values", "[io]") {
    const RunReport r = make_report(decide(akp::testing::binary_square(), 2), 0.25);
    const auto j = to_json(r);
    const std::string text = to_text(r);

    std::size_t lines = 0;
    for (char c : text) lines += c == '\n' ? 1 : 0;
    CHECK(lines == j.size());

    for (const auto& [key, value] : j.items()) {
        const std::string rendered =
            key + ": " + (value.is_string() ? value.get<std::string>() : value.dump());
        INFO("field " << key);
        CHECK(text.find(rendered + "\n") != std::string::npos);
    }
    CHECK(text.find("status: Contains\n") != std::string::npos);
    CHECK(text.find("witness_position: 0\n") != std::string::npos);
    CHECK(text.find("det: 5\n") != std::string::npos);
}
