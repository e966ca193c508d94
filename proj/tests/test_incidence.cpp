#include <doctest.h>

#include <random>

#include "kodag/errors.hpp"
#include "kodag/incidence.hpp"
#include "kodag/reference.hpp"
#include "kodag/verify.hpp"
#include "oracles.hpp"

using namespace kodag;

namespace {

bool is_identity(const IncidenceMatrix& m) {
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (m.at(i, j) != ((i == j) ? 1 : 0)) return false;
        }
    }
    return true;
}

IncidenceMatrix mul(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    return IncidenceMatrix(a.sizes(), a.entries() * b.entries());
}

std::vector<Sequence> cobweb_fixture_seqs() {
    return {Sequence::naturals(), Sequence::fibonacci(),
            Sequence::fibonacci().with_root(), Sequence::gaussian(2),
            Sequence::constant(3)};
}

} // namespace

TEST_CASE("zeta closure fixtures") {
    CHECK(reference::region_matches(
        zeta_closure(GradedPoset::cobweb(Sequence::naturals(), 6)),
        reference::zeta_naturals));
    CHECK(reference::region_matches(
        zeta_closure(GradedPoset::cobweb(Sequence::fibonacci().with_root(), 7)),
        reference::zeta_fib_root));
    CHECK(is_identity(zeta_closure(GradedPoset({5}, {}))));

    SUBCASE("restriction to fewer levels is the leading region") {
        IncidenceMatrix z5 =
            zeta_closure(GradedPoset::cobweb(Sequence::naturals(), 5));
        for (int i = 0; i < z5.dim(); ++i) {
            for (int j = 0; j < z5.dim(); ++j) {
                CHECK(z5.at(i, j) == reference::zeta_naturals[i][j]);
            }
        }
    }
}

TEST_CASE("four zeta routes agree") {
    for (const Sequence& seq : cobweb_fixture_seqs()) {
        for (int n = 1; n <= 6; ++n) {
            IncidenceMatrix closure = zeta_closure(GradedPoset::cobweb(seq, n));
            CHECK(closure == zeta_stair_formula(seq, n));
            CHECK(closure == zeta_grid_formula(seq, n));
            CHECK(closure == zeta_cumsum_formula(seq, n));
        }
    }

    SUBCASE("grid formula basics") {
        IncidenceMatrix z = zeta_grid_formula(Sequence::naturals(), 5);
        GradedPoset p = GradedPoset::cobweb(Sequence::naturals(), 5);
        // distinct nodes of one level are incomparable
        CHECK(z.at(p.linear_label({3, 1}) - 1, p.linear_label({3, 2}) - 1) == 0);
        // any node sees any strictly higher level
        CHECK(z.at(p.linear_label({2, 2}) - 1, p.linear_label({5, 4}) - 1) == 1);
        for (int i = 0; i < z.dim(); ++i) CHECK(z.at(i, i) == 1);
    }
}

TEST_CASE("mobius by inversion") {
    CHECK(mobius_inverse(IncidenceMatrix::identity({2, 3})) ==
          IncidenceMatrix::identity({2, 3}));
    CHECK(reference::region_matches(
        mobius_inverse(zeta_closure(GradedPoset::cobweb(Sequence::naturals(), 6))),
        reference::mobius_naturals));

    SUBCASE("non-unit diagonal rejected") {
        IncidenceMatrix bad = IncidenceMatrix::identity({3});
        bad.at(1, 1) = 2;
        CHECK_THROWS_AS((void)mobius_inverse(bad), DomainError);
    }
    SUBCASE("nonzero below the diagonal rejected") {
        IncidenceMatrix bad = IncidenceMatrix::identity({3});
        bad.at(2, 0) = 1;
        CHECK_THROWS_AS((void)mobius_inverse(bad), DomainError);
    }

    SUBCASE("mu is the two-sided inverse on random posets") {
        std::vector<GradedPoset> batch = verify::random_poset_batch(100, 17, 6, 5);
        for (const GradedPoset& p : batch) {
            IncidenceMatrix zeta = zeta_closure(p);
            IncidenceMatrix mu = mobius_inverse(zeta);
            CHECK(is_identity(mul(mu, zeta)));
            CHECK(is_identity(mul(zeta, mu)));
        }
    }
}

TEST_CASE("mobius by interval recurrence") {
    std::vector<GradedPoset> posets;
    for (const Sequence& seq : cobweb_fixture_seqs()) {
        posets.push_back(GradedPoset::cobweb(seq, 6));
    }
    std::vector<GradedPoset> batch = verify::random_poset_batch(100, 23, 5, 4);
    posets.insert(posets.end(), batch.begin(), batch.end());
    for (const GradedPoset& p : posets) {
        IncidenceMatrix rec = mobius_recurrence(p);
        CHECK(rec == mobius_inverse(zeta_closure(p)));
        for (int i = 0; i < rec.dim(); ++i) CHECK(rec.at(i, i) == 1);
    }

    SUBCASE("covers take value -1") {
        GradedPoset p = GradedPoset::cobweb(Sequence::gaussian(2), 4);
        IncidenceMatrix mu = mobius_recurrence(p);
        IncidenceMatrix kappa = cover_matrix(p);
        for (int i = 0; i < mu.dim(); ++i) {
            for (int j = 0; j < mu.dim(); ++j) {
                if (kappa.at(i, j) == 1) CHECK(mu.at(i, j) == -1);
            }
        }
    }
}

TEST_CASE("coding matrix fixtures") {
    CHECK(reference::coding_matches(coding_matrix(Sequence::naturals(), 6),
                                    reference::coding_naturals));
    CHECK(reference::coding_matches(
        coding_matrix(Sequence::explicit_list({1, 1, 3, 3, 3, 3}), 6),
        reference::coding_one_one_threes));
    CHECK(reference::coding_matches(
        coding_matrix(Sequence::explicit_list({1, 3, 3, 3, 3, 3}), 6),
        reference::coding_one_threes));

    SUBCASE("row shape invariants") {
        for (const Sequence& seq : cobweb_fixture_seqs()) {
            CodingMatrix cm = coding_matrix(seq, 10);
            for (int r = 1; r <= 10; ++r) {
                CHECK(cm.c(r, r) == 1);
                if (r < 10) CHECK(cm.c(r, r + 1) == -1);
                for (int s = 1; s < r; ++s) CHECK(cm.c(r, s).is_zero());
                for (int s = r + 1; s <= 10; ++s) {
                    const BigInt& v = cm.c(r, s);
                    if (!v.is_zero()) {
                        CHECK((v > 0) == ((s - r) % 2 == 0));
                    }
                }
            }
        }
    }
}

TEST_CASE("kroton routes") {
    CHECK(kroton(Sequence::gaussian(2), 4, 5).value == 1);
    CHECK(kroton(Sequence::naturals(), 1, 5).value == 6);
    CHECK(kroton(Sequence::fibonacci().with_root(), 3, 7).value == 8);
    CHECK_THROWS_AS((void)kroton(Sequence::naturals(), 3, 3), DomainError);
    CHECK_THROWS_AS((void)kroton(Sequence::naturals(), 4, 2), DomainError);

    for (const Sequence& seq : cobweb_fixture_seqs()) {
        CodingMatrix cm = coding_matrix(seq, 12);
        for (int r = 1; r < 12; ++r) {
            for (int s = r + 1; s <= 12; ++s) {
                BigInt closed = kroton(seq, r, s).value;
                CHECK(closed == kroton_recurrence(seq, r, s));
                CHECK(closed == kroton_alternating(seq, r, s));
                CHECK(closed == abs(cm.c(r, s)));
            }
        }
    }
}

TEST_CASE("closed-form mobius") {
    SUBCASE("strict mode equals inversion on cobwebs") {
        for (const Sequence& seq : cobweb_fixture_seqs()) {
            GradedPoset p = GradedPoset::cobweb(seq, 6);
            ClosedFormResult r = mobius_closed_form(p, ClosedFormMode::Strict);
            CHECK(r.agrees_with_inversion);
            CHECK(r.matrix == mobius_inverse(zeta_closure(p)));
        }
    }

    SUBCASE("printed fixture regions") {
        GradedPoset fib = GradedPoset::cobweb(Sequence::fibonacci().with_root(), 7);
        CHECK(reference::region_matches(
            mobius_closed_form(fib, ClosedFormMode::Strict).matrix,
            reference::mobius_fib_root));
        GradedPoset e11 =
            GradedPoset::cobweb(Sequence::explicit_list({1, 1, 3, 3, 3, 3, 3}), 7);
        CHECK(reference::region_matches(
            mobius_closed_form(e11, ClosedFormMode::Strict).matrix,
            reference::mobius_one_one_threes));
        GradedPoset e12 =
            GradedPoset::cobweb(Sequence::explicit_list({1, 3, 3, 3, 3, 3}), 6);
        CHECK(reference::region_matches(
            mobius_closed_form(e12, ClosedFormMode::Strict).matrix,
            reference::mobius_one_threes));
    }

    SUBCASE("strict mode rejects non-cobwebs") {
        CHECK_THROWS_AS((void)mobius_closed_form(
                            verify::closed_form_counterexample(),
                            ClosedFormMode::Strict),
                        DomainError);
    }

    SUBCASE("conjecture mode reports the documented counterexample") {
        GradedPoset cex = verify::closed_form_counterexample();
        // Exact mu at (top, first level-3 node) is 0: the interval holds
        // the top, one middle node and the target.
        IncidenceMatrix mu = mobius_inverse(zeta_closure(cex));
        CHECK(mu.at(0, 3) == 0);
        ClosedFormResult r = mobius_closed_form(cex, ClosedFormMode::Conjecture);
        CHECK_FALSE(r.agrees_with_inversion);
        REQUIRE(r.first_mismatch.has_value());
        CHECK(*r.first_mismatch == MatrixCoord{0, 3});
        CHECK(cex.index().level_of(r.first_mismatch->row) == 1);
        CHECK(cex.index().level_of(r.first_mismatch->col) == 3);
        CHECK(r.exact_value == 0);
        CHECK(r.candidate_value == 1);
    }
}

TEST_CASE("grid-coordinate mobius formula") {
    CHECK(mobius_grid_formula(Sequence::naturals(), {2, 1}, {2, 1}) == 1);
    CHECK(mobius_grid_formula(Sequence::naturals(), {2, 2}, {3, 1}) == -1);
    CHECK_THROWS_AS(
        (void)mobius_grid_formula(Sequence::fibonacci(), {1, 2}, {2, 1}),
        DomainError);

    for (const Sequence& seq : {Sequence::naturals(), Sequence::fibonacci(),
                                Sequence::gaussian(2), Sequence::constant(3)}) {
        GradedPoset p = GradedPoset::cobweb(seq, 7);
        IncidenceMatrix mu = mobius_inverse(zeta_closure(p));
        for (int x = 1; x <= p.node_count(); ++x) {
            for (int y = x; y <= p.node_count(); ++y) {
                CHECK(mobius_grid_formula(seq, p.grid_of(x), p.grid_of(y)) ==
                      mu.at(x - 1, y - 1));
            }
        }
    }
}

TEST_CASE("eta and its inverse") {
    std::mt19937_64 rng(31);
    std::vector<GradedPoset> posets;
    for (const Sequence& seq : cobweb_fixture_seqs()) {
        posets.push_back(GradedPoset::cobweb(seq, 5));
    }
    std::vector<GradedPoset> batch = verify::random_poset_batch(100, 37, 5, 4);
    posets.insert(posets.end(), batch.begin(), batch.end());

    for (const GradedPoset& p : posets) {
        IncidenceMatrix eta = eta_matrix(p);
        IncidenceMatrix inv = eta_inverse(p);
        CHECK(is_identity(mul(eta, inv)));
        CHECK(is_identity(mul(inv, eta)));
        for (int t = 1; t < p.levels(); ++t) {
            CHECK(inv.block(t, t + 1) == block_product(p, t, t + 1) * BigInt(-1));
            if (t + 2 <= p.levels()) {
                CHECK(inv.block(t, t + 2) == block_product(p, t, t + 2));
            }
        }
    }
}

TEST_CASE("max matrix") {
    GradedPoset p = GradedPoset::cobweb(Sequence::naturals(), 4);
    IncidenceMatrix m = max_matrix(p);
    for (int j = 1; j <= 4; ++j) {
        CHECK(m.at(0, p.linear_label({4, j}) - 1) == 6);
    }
    for (int i = 0; i < m.dim(); ++i) CHECK(m.at(i, i) == 1);

    IncidenceMatrix zeta = zeta_closure(p);
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (zeta.at(i, j).is_zero()) CHECK(m.at(i, j).is_zero());
        }
    }

    SUBCASE("inverse is delta minus kappa, and L recovers zeta") {
        std::vector<GradedPoset> batch = verify::random_poset_batch(60, 41, 6, 4);
        batch.push_back(p);
        for (const GradedPoset& q : batch) {
            IncidenceMatrix mq = max_matrix(q);
            IncidenceMatrix dk(q.sizes(), IntMatrix::identity(mq.dim()) -
                                              cover_matrix(q).entries());
            CHECK(is_identity(mul(dk, mq)));
            CHECK(is_identity(mul(mq, dk)));
            CHECK(l_logic(mq) == zeta_closure(q));
        }
    }
}

TEST_CASE("l_logic") {
    CHECK(l_logic(IncidenceMatrix::identity({3, 2})) ==
          IncidenceMatrix::identity({3, 2}));
    IncidenceMatrix neg = IncidenceMatrix::identity({2});
    neg.at(0, 1) = -1;
    CHECK_THROWS_AS((void)l_logic(neg), DomainError);
}

TEST_CASE("block structure validation") {
    for (const Sequence& seq : cobweb_fixture_seqs()) {
        GradedPoset p = GradedPoset::cobweb(seq, 5);
        CHECK(validate_block_structure(zeta_closure(p)).ok);
        CHECK(validate_block_structure(mobius_inverse(zeta_closure(p))).ok);
        CHECK(validate_block_structure(eta_matrix(p)).ok);
        CHECK(validate_block_structure(max_matrix(p)).ok);
    }

    SUBCASE("nonzero below the block diagonal is flagged") {
        IncidenceMatrix m = IncidenceMatrix::identity({1, 2});
        m.at(2, 0) = 5;
        StructureReport rep = validate_block_structure(m);
        CHECK_FALSE(rep.ok);
        CHECK(*rep.offender == MatrixCoord{2, 0});
    }
    SUBCASE("off-diagonal entry inside a diagonal block is flagged") {
        IncidenceMatrix m = IncidenceMatrix::identity({1, 2});
        m.at(1, 2) = 1;
        StructureReport rep = validate_block_structure(m);
        CHECK_FALSE(rep.ok);
        CHECK(*rep.offender == MatrixCoord{1, 2});
    }
}

TEST_CASE("mobius sign pattern on cobwebs") {
    for (const Sequence& seq : cobweb_fixture_seqs()) {
        GradedPoset p = GradedPoset::cobweb(seq, 6);
        IncidenceMatrix mu = mobius_inverse(zeta_closure(p));
        const LevelIndex& idx = mu.levels();
        for (int i = 0; i < mu.dim(); ++i) {
            for (int j = 0; j < mu.dim(); ++j) {
                if (mu.at(i, j).is_zero()) continue;
                const int gap = idx.level_of(j) - idx.level_of(i);
                CHECK(((gap % 2 == 0) == (mu.at(i, j) > 0)));
            }
        }
    }
}
