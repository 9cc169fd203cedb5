#include <catch2/catch_amalgamated.hpp>

#include <braidtk/braidtk.hpp>

using namespace braidtk;

TEST_CASE("polynomial json round trip") {
    LaurentPoly p;
    p.add_term(2, 3);
    p.add_term(-1, -2);
    auto j = poly_to_json(p, "t");
    CHECK(poly_from_json(j, "t") == p);
    CHECK(poly_from_json(poly_to_json(LaurentPoly(), "t"), "t") == LaurentPoly());

    auto j2 = poly2_to_json(homfly(BraidWord::from_signed(2, {1, 1, 1})));
    CHECK(j2.contains("vz"));
    CHECK(j2["vz"].is_array());
}

TEST_CASE("rational and word json") {
    auto j = rational_to_json(Rational(5) / Rational(3));
    CHECK(j["num"] == "5");
    CHECK(j["den"] == "3");

    auto w = BraidWord::from_signed(3, {1, -2});
    CHECK(braid_word_to_json(w) == nlohmann::json("B3: 1 -2"));
    CHECK(parse_braid_word(braid_word_to_json(w).get<std::string>()).letters() == w.letters());

    auto d = diagram_to_json(closure(w));
    CHECK(d["strands"] == 3);
    CHECK(d["components"] == 1);
}

TEST_CASE("fingerprint json round trip") {
    auto fp = fingerprint(BraidWord::from_signed(2, {1, 1, 1}));
    auto back = fingerprint_from_json(fingerprint_to_json(fp));
    CHECK(back.to_key() == fp.to_key());

    // links serialize a null alexander slot
    auto hopf = fingerprint(BraidWord::from_signed(2, {1, 1}));
    auto j = fingerprint_to_json(hopf);
    CHECK(j["alexander"].is_null());
    CHECK(fingerprint_from_json(j).to_key() == hopf.to_key());
}

TEST_CASE("certificate json round trip") {
    auto c = bennequin_certificate(BraidWord::from_signed(3, {1, 2, 2, 1}));
    auto j = certificate_to_json(c);
    CHECK(j["b"] == 3);
    CHECK(j["r"][0] == 4);
    auto back = certificate_from_json(j);
    CHECK(back == c);

    // check reports list both sides
    auto rep = check_report_to_json(check_euler_equality(c));
    REQUIRE(rep["checks"].size() == 1);
    CHECK(rep["checks"][0].contains("lhs"));
    CHECK(rep["checks"][0].contains("rhs"));
    CHECK(rep["checks"][0].contains("pass"));
}

TEST_CASE("bound and decision json") {
    auto j = bound_report_to_json(theorem_bounds(-1, 3));
    CHECK(j["lower"] == 4);
    CHECK(j["upper"]["num"] == "20");
    CHECK(j["upper"]["den"] == "3");

    auto dec = decide_braid_index_leq(fingerprint(BraidWord::from_signed(2, {1, 1, 1})), -1, 2);
    auto dj = decision_to_json(dec);
    CHECK(dj["result"] == "candidate_found");
    CHECK(dj["witness"].is_string());
    REQUIRE(dj["levels"].is_array());
    CHECK(dj["levels"][0]["budget"] == 3);

    auto cen = census(1, 2);
    auto ej = census_entry_to_json(cen.certified[0]);
    CHECK(ej["certified_genus"] == 1);
    CHECK(ej["certified_braid_index"] == 2);
    CHECK(ej["mfw_lower_bound"] == 2);

    auto rows = load_table_file(BRAIDTK_DATA_DIR "/knot_table.csv");
    auto rj = table_row_to_json(rows[0]);
    CHECK(rj["name"] == "3_1");
    CHECK(rj["crossing_number"] == 3);
}
