#include <doctest.h>

#include "kodag/errors.hpp"
#include "kodag/sequence.hpp"
#include "oracles.hpp"

using namespace kodag;

TEST_CASE("term values") {
    CHECK(Sequence::fibonacci().term(6) == 8);
    CHECK(Sequence::naturals().term(7) == 7);
    CHECK(Sequence::gaussian(2).term(4) == oracles::gaussian_term(2, 4));
    CHECK(Sequence::gaussian(2).term(4) == 15);
    CHECK(Sequence::constant(3).term(11) == 3);

    SUBCASE("fibonacci with root reads 1,1,1,2,3,5,8") {
        Sequence f = Sequence::fibonacci().with_root();
        std::vector<int> want = {1, 1, 1, 2, 3, 5, 8};
        for (int k = 1; k <= 7; ++k) {
            CHECK(f.term(k) == want[static_cast<size_t>(k) - 1]);
        }
    }
    SUBCASE("explicit list exhaustion") {
        Sequence e = Sequence::explicit_list({1, 3, 2});
        CHECK(e.term(3) == 2);
        CHECK_THROWS_AS((void)e.term(4), DomainError);
    }
    SUBCASE("gaussian terms match the geometric sum at larger k") {
        for (int k = 1; k <= 12; ++k) {
            CHECK(Sequence::gaussian(3).term(k) == oracles::gaussian_term(3, k));
        }
    }
}

TEST_CASE("cumulative sums") {
    CHECK(Sequence::naturals().cumulative(0) == 0);
    CHECK(Sequence::fibonacci().cumulative(4) == 1 + 1 + 2 + 3);
    CHECK(Sequence::naturals().cumulative(5) == 15);
}

TEST_CASE("factorials and falling products") {
    CHECK(Sequence::naturals().ffactorial(0) == 1);
    CHECK(Sequence::fibonacci().ffactorial(5) == 1 * 1 * 2 * 3 * 5);
    CHECK(Sequence::naturals().ffactorial(4) == 24);
    CHECK(Sequence::naturals().falling(4, 3) == 4 * 3 * 2);
    CHECK(Sequence::fibonacci().falling(6, 2) == 8 * 5);
    CHECK(Sequence::gaussian(2).falling(9, 0) == 1);
    CHECK_THROWS_AS((void)Sequence::naturals().falling(3, 4), DomainError);
}

TEST_CASE("fnomial coefficients") {
    FNomial f = Sequence::fibonacci().fnomial(4, 2);
    CHECK(f.integral());
    CHECK(f.numerator == 6);

    FNomial g = Sequence::gaussian(2).fnomial(4, 2);
    CHECK(g.integral());
    CHECK(g.numerator == 35);

    FNomial topk0 = Sequence::constant(7).fnomial(9, 0);
    CHECK(topk0.integral());
    CHECK(topk0.numerator == 1);

    CHECK_THROWS_AS((void)Sequence::naturals().fnomial(3, 5), DomainError);
    CHECK_THROWS_AS((void)Sequence::naturals().fnomial(3, -1), DomainError);

    SUBCASE("non-integral values keep the reduced fraction") {
        Sequence e = Sequence::explicit_list({2, 3, 4});
        FNomial h = e.fnomial(2, 1); // 3 / 2
        CHECK_FALSE(h.integral());
        CHECK(h.numerator == 3);
        CHECK(h.denominator == 2);
    }
}

TEST_CASE("naturals fnomial equals the Pascal binomial") {
    Sequence nat = Sequence::naturals();
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            FNomial f = nat.fnomial(n, k);
            REQUIRE(f.integral());
            CHECK(f.numerator == oracles::pascal_binomial(n, k));
        }
    }
}

TEST_CASE("admissibility") {
    CHECK(Sequence::naturals().is_admissible(10).admissible);
    CHECK(Sequence::fibonacci().is_admissible(10).admissible);
    CHECK(Sequence::gaussian(2).is_admissible(8).admissible);

    SUBCASE("verdict equals the brute-force fraction scan") {
        std::mt19937_64 rng(7);
        std::vector<std::pair<Sequence, int>> cases = {
            {Sequence::explicit_list({1, 3, 2}), 3}};
        for (int i = 0; i < 30; ++i) {
            cases.emplace_back(oracles::random_explicit(rng, 6, 6), 6);
        }
        for (const auto& [seq, bound] : cases) {
            AdmissibilityReport rep = seq.is_admissible(bound);
            auto [vn, vk] = oracles::brute_admissibility(seq, bound);
            CHECK(rep.admissible == (vn == -1));
            if (!rep.admissible) {
                CHECK(rep.violation_n == vn);
                CHECK(rep.violation_k == vk);
            }
        }
    }
}

TEST_CASE("scalar identities across sequences") {
    std::vector<Sequence> seqs = {
        Sequence::naturals(), Sequence::fibonacci(), Sequence::gaussian(2),
        Sequence::constant(3)};
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        seqs.push_back(oracles::random_explicit(rng, 9, 6));
    }
    for (const Sequence& seq : seqs) {
        for (int n = 0; n <= 8; ++n) {
            CHECK(seq.cumulative(n + 1) - seq.cumulative(n) == seq.term(n + 1));
            for (int k = 0; k <= n; ++k) {
                CHECK(seq.fnomial(n, k) == seq.fnomial(n, n - k));
                CHECK(seq.falling(n, k) * seq.ffactorial(n - k) ==
                      seq.ffactorial(n));
            }
        }
    }
}

TEST_CASE("spec string parsing") {
    CHECK(Sequence::parse("nat").term(9) == 9);
    CHECK(Sequence::parse("fib").term(6) == 8);
    CHECK(Sequence::parse("fib+root").term(2) == 1);
    CHECK(Sequence::parse("gauss:3").term(3) == 13);
    CHECK(Sequence::parse("const:5").term(2) == 5);
    CHECK(Sequence::parse("list:1,3,2").term(2) == 3);

    CHECK(Sequence::parse("list:4,1").spec_string() == "list:4,1");
    CHECK(Sequence::parse("fib+root").spec_string() == "fib+root");
    CHECK(Sequence::parse("gauss:2").spec_string() == "gauss:2");

    CHECK_THROWS_AS((void)Sequence::parse("Nat"), ConfigError);
    CHECK_THROWS_AS((void)Sequence::parse("fib+Root"), ConfigError);
    CHECK_THROWS_AS((void)Sequence::parse("gauss:1"), ConfigError);
    CHECK_THROWS_AS((void)Sequence::parse("gauss:x"), ConfigError);
    CHECK_THROWS_AS((void)Sequence::parse("const:0"), ConfigError);
    CHECK_THROWS_AS((void)Sequence::parse("list:"), ConfigError);
    CHECK_THROWS_AS((void)Sequence::parse("list:1,0,2"), ConfigError);
    CHECK_THROWS_AS((void)Sequence::parse("list:1,2,"), ConfigError);
    CHECK_THROWS_AS((void)Sequence::parse("list:1, 2"), ConfigError);

    SUBCASE("errors name the offending token") {
        try {
            (void)Sequence::parse("gauss:zz");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("zz") != std::string::npos);
        }
    }
}
