#include "shuffle_lab/lifting.hpp"

#include <doctest.h>

using namespace shuffle_lab;

namespace {

WordVector plain(std::initializer_list<std::pair<const char*, Rational>> terms) {
    WordVector v;
    for (const auto& [w, c] : terms) v.add_term(Word::parse(w), c);
    return v;
}

WordVector signed_vector(std::initializer_list<std::pair<const char*, Rational>> terms) {
    WordVector v(WordMode::signed_letters);
    for (const auto& [w, c] : terms) v.add_term(Word::parse(w), c);
    return v;
}

void check_reports(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        INFO(r.name << ": " << r.witness);
        CHECK(r.passed);
        CHECK(r.cases > 0);
    }
}

}  // namespace

TEST_CASE("words and encodings") {
    const Word w = Word::parse("1+24-3+3");
    CHECK(w.size() == 5);
    CHECK(w.at(1) == Letter{1, Sign::plus});
    CHECK(w.at(3) == Letter{4, Sign::minus});
    CHECK(w.to_string() == "1+24-3+3");
    CHECK(Word::parse("10 2+ 3").to_string() == "10 2+ 3");
    CHECK(Word::parse("1, 2").to_string() == "12");
    CHECK(decode_letter(encode_letter({7, Sign::minus})) == Letter{7, Sign::minus});
    CHECK(Word::parse("12") < Word::parse("21"));
    CHECK_THROWS_AS(Word::parse("1x"), std::invalid_argument);
    const auto e = evaluation(w);
    CHECK(e.unsigned_counts[2] == 1);
    CHECK(e.unsigned_counts[3] == 1);
    CHECK(e.signed_counts[3] == 1);
    CHECK_THROWS_AS(plain({{"1+", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(plain({{"12", 1}, {"11", 1}}), std::invalid_argument);
    CHECK(plain({{"12", Rational(1, 2)}, {"21", Rational(-1, 2)}}).to_string() == "1/2*12 - 1/2*21");
    CHECK(WordVector().to_string() == "0");
    CHECK(WordVector::empty_word().length() == 0);
}

TEST_CASE("place-permutation action") {
    const auto cycle = Permutation::from_cycles(3, {{1, 2, 3}});
    CHECK(act(cycle, plain({{"232", 1}})) == plain({{"223", 1}}));
    const SignedPermutation sigma({2, 3, -1, -4, -5});
    CHECK(act(sigma, signed_vector({{"1+24-3+3", 1}})) == signed_vector({{"4+1+23-3", 1}}));
    CHECK_THROWS_AS(act(Permutation::identity(2), plain({{"123", 1}})), std::invalid_argument);
    CHECK_THROWS_AS(act(SignedPermutation::identity(3), plain({{"123", 1}})), std::invalid_argument);
}

TEST_CASE("adding, switching and shuffling operators") {
    CHECK(adding(WordVector::empty_word(), 1) == plain({{"1", 1}}));
    CHECK(adding(plain({{"1", 1}}), 1) == plain({{"11", 1}}));
    CHECK(adding(WordVector::empty_word(WordMode::signed_letters), 1, Flavor::signed_part) ==
          signed_vector({{"1+", 1}, {"1-", -1}}));
    CHECK(switching(plain({{"1231", 1}}), 3, 1) == plain({{"1211", 1}}));
    CHECK(switching(plain({{"1231", 1}}), 1, 3) == plain({{"3231", 1}, {"1233", 1}}));
    CHECK(switching(plain({{"1221", 1}}), 2, 2) == plain({{"1221", 2}}));
    CHECK(switching(signed_vector({{"1+2", 1}}), 1, 3, Flavor::signed_part) == signed_vector({{"3+2", 1}, {"3-2", -1}}));
    CHECK(switching_signed_to_unsigned(signed_vector({{"1+1-", 1}}), 1, 2) == signed_vector({{"21-", 1}, {"1+2", 1}}));
    CHECK(shuffling(plain({{"12", 1}, {"21", -1}}), 1) == plain({{"112", 2}, {"211", -2}}));
}

TEST_CASE("lifting operators on small shapes") {
    const auto k2 = kappa(plain({{"1", 1}}), Partition{1}, 2);
    CHECK(k2 == plain({{"12", Rational(1, 2)}, {"21", Rational(-1, 2)}}));
    const auto k1 = kappa(plain({{"12", 1}, {"21", -1}}), Partition{1, 1}, 1);
    CHECK(k1 == plain({{"121", 1}, {"211", -1}}));
    CHECK(verify_eigenvector(k1, ShuffleSpec(ShuffleKind::OST, 3), Rational(5, 9)));
    CHECK_FALSE(verify_eigenvector(k1, ShuffleSpec(ShuffleKind::OST, 3), Rational(9, 10)));
    const auto lifted = shuffling(plain({{"12", 1}, {"21", -1}}), 1);
    const ShuffleSpec rtr(ShuffleKind::RTR, 3);
    CHECK(verify_eigenvector(lifted, rtr, Rational(4, 9)));
    CHECK(algebra_scale(rtr) * Rational(4, 9) == 4);
    CHECK_THROWS_AS(kappa(plain({{"1", 1}}), Partition{1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(kappa(plain({{"12", 1}}), Partition{2}, 1), std::invalid_argument);
    CHECK_FALSE(verify_eigenvector(WordVector(), rtr, 1));
}

TEST_CASE("hyperoctahedral lifting operators") {
    const auto w = signed_vector({{"11+", 1}, {"11-", -1}});
    const BiPartition shape(Partition{1}, Partition{1});
    const Rational h(1, 2);
    CHECK(kappa(w, shape, 2, 1) == signed_vector({{"11+2", h}, {"21+1", -h}, {"11-2", -h}, {"21-1", h}}));
    CHECK(kappa(w, shape, 2, 2) == signed_vector({{"11+2+", h}, {"12+1+", -h}, {"11-2-", h}, {"12-1-", -h},
                                                  {"11+2-", -h}, {"12-1+", h}, {"11-2+", -h}, {"12+1-", h}}));
    CHECK_THROWS_AS(kappa(plain({{"1", 1}}), shape, 1, 1), std::invalid_argument);
}

TEST_CASE("group-algebra action at small n") {
    CHECK(apply_shuffle_algebra(plain({{"1", 1}}), ShuffleSpec(ShuffleKind::OST, 1)) == plain({{"1", 1}}));
    const auto v = plain({{"12", 1}, {"21", -1}});
    CHECK(apply_shuffle_algebra(v, ShuffleSpec(ShuffleKind::OST, 2)) == v);
    CHECK(apply_shuffle_algebra(plain({{"12", 1}}), ShuffleSpec(ShuffleKind::OST, 2)) ==
          plain({{"12", Rational(3, 2)}, {"21", Rational(1, 2)}}));
    CHECK(algebra_scale(ShuffleSpec(ShuffleKind::B_RT, 3)) == 18);
    CHECK(algebra_scale(ShuffleSpec(ShuffleKind::OST_biased, 3, Weight::power(1))) == 6);
    CHECK_THROWS_AS(apply_shuffle_algebra(v, ShuffleSpec(ShuffleKind::cyclic_simple, 2)), std::invalid_argument);
}

TEST_CASE("eigenbasis of the two-component shape") {
    const BiPartition shape(Partition{1}, Partition{1});
    const auto basis = build_eigenbasis(shape, ShuffleSpec(ShuffleKind::B_RT, 2));
    REQUIRE(basis.size() == 2);
    std::vector<WordVector> vectors;
    for (const auto& lifted : basis) {
        CHECK(lifted.eigenvalue == Rational(1, 4));
        vectors.push_back(lifted.vector);
    }
    CHECK(std::count(vectors.begin(), vectors.end(), signed_vector({{"11+", 1}, {"11-", -1}})) == 1);
    CHECK(std::count(vectors.begin(), vectors.end(), signed_vector({{"1+1", 1}, {"1-1", -1}})) == 1);
    CHECK(rank(vectors) == 2);
    CHECK_THROWS_AS(build_eigenbasis(Partition{2, 1}, ShuffleSpec(ShuffleKind::OST, 4)), std::invalid_argument);
    CHECK_THROWS_AS(build_eigenbasis(Partition{4, 3, 2}, ShuffleSpec(ShuffleKind::OST, 9)), CapExceeded);
}

TEST_CASE("lifted bases for the symmetric group") {
    for (int n = 1; n <= 6; ++n) {
        check_reports(lifting_checks(ShuffleSpec(ShuffleKind::OST, n), 0));
        check_reports(lifting_checks(ShuffleSpec(ShuffleKind::RT, n), 0));
        for (int a : {-1, 0, 1, 2}) check_reports(lifting_checks(ShuffleSpec(ShuffleKind::OST_biased, n, Weight::power(a)), 0));
    }
}

TEST_CASE("lifted bases for the hyperoctahedral group") {
    for (int n = 1; n <= 4; ++n) {
        check_reports(lifting_checks(ShuffleSpec(ShuffleKind::B_RT, n), 0));
        check_reports(lifting_checks(ShuffleSpec(ShuffleKind::B_OST, n), 0));
        check_reports(lifting_checks(ShuffleSpec(ShuffleKind::B_OST_biased, n, Weight::power(2)), 0));
    }
}

TEST_CASE("operator identities on random vectors") {
    for (int n = 1; n <= 4; ++n) check_reports(operator_identity_checks(n, 40, 7));
}

TEST_CASE("reference lifts") { check_reports(reference_lift_checks()); }
