#include <doctest.h>

#include <memory>
#include <random>

#include "gell/ktheory.hpp"
#include "oracles.hpp"

using namespace gell;

namespace {

SpecPtr make_spec(int rank, std::vector<IntMatrix> steps, std::vector<IntMatrix> tail = {}) {
    return std::make_shared<const OdometerSpec>(rank, std::move(steps), std::move(tail));
}

SpecPtr dyadic(int steps) {
    return make_spec(1, std::vector<IntMatrix>(steps, IntMatrix::diagonal({2})));
}

ExteriorClass basis_class(SpecPtr spec, int stage, SubsetMask s, long coeff = 1) {
    std::map<SubsetMask, Int, SubsetOrder> c;
    c[s] = coeff;
    return ExteriorClass(std::move(spec), stage, std::move(c));
}

}  // namespace

TEST_CASE("connecting maps") {
    SpecPtr d1 = dyadic(3);
    CHECK(connecting_map(*d1, 1, Parity::even) == IntMatrix::identity(1));
    IntMatrix odd = connecting_map(*d1, 1, Parity::odd);
    REQUIRE(odd.rows == 1);
    CHECK(odd.at(0, 0) == 2);

    SpecPtr d2 = make_spec(2, {IntMatrix::diagonal({2, 3})});
    IntMatrix even = connecting_map(*d2, 1, Parity::even);
    CHECK(even == IntMatrix::diagonal({1, 6}));
    CHECK(even.at(0, 0) == exterior_power(transpose(d2->step_at(1)), 0).at(0, 0));
    IntMatrix odd2 = connecting_map(*d2, 1, Parity::odd);
    CHECK(odd2 == transpose(IntMatrix::diagonal({2, 3})));

    SUBCASE("two-step composition matches the transposed product") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 20; ++trial) {
            IntMatrix m1 = oracles::random_step(rng, 3, 8);
            IntMatrix m2 = oracles::random_step(rng, 3, 8);
            SpecPtr spec = make_spec(3, {m1, m2});
            for (int k = 0; k <= 3; ++k) {
                IntMatrix composite =
                    connecting_block(*spec, 2, k) * connecting_block(*spec, 1, k);
                CHECK(composite == exterior_power(transpose(m1 * m2), k));
            }
        }
    }
}

TEST_CASE("push_to_stage") {
    SpecPtr d1 = dyadic(3);
    ExteriorClass x = basis_class(d1, 0, mask_of({1}));
    CHECK(push_to_stage(x, 0) == x);
    ExteriorClass pushed = push_to_stage(x, 1);
    CHECK(pushed.stage() == 1);
    CHECK(pushed.coefficient(mask_of({1})) == 2);
    CHECK_THROWS_AS(push_to_stage(pushed, 0), std::invalid_argument);

    SpecPtr d2 = make_spec(2, {IntMatrix::diagonal({2, 3})});
    ExteriorClass top = basis_class(d2, 0, mask_of({1, 2}));
    CHECK(push_to_stage(top, 1).coefficient(mask_of({1, 2})) == 6);
}

TEST_CASE("classes_equal") {
    SpecPtr d1 = dyadic(2);
    ExteriorClass x = basis_class(d1, 0, mask_of({1}));
    CHECK(classes_equal(x, x));
    CHECK(classes_equal(x, basis_class(d1, 1, mask_of({1}), 2)));
    CHECK(!classes_equal(x, basis_class(d1, 1, mask_of({1}), 1)));

    SUBCASE("different specs are rejected") {
        SpecPtr other = make_spec(1, {IntMatrix::diagonal({3})});
        CHECK_THROWS_AS(classes_equal(x, basis_class(other, 0, mask_of({1}))),
                        std::invalid_argument);
    }
    SUBCASE("equivalence relation on random classes") {
        std::mt19937_64 rng(42);
        SpecPtr spec = make_spec(2, {oracles::random_step(rng, 2, 6), oracles::random_step(rng, 2, 6)});
        for (int trial = 0; trial < 10; ++trial) {
            std::map<SubsetMask, Int, SubsetOrder> c;
            for (SubsetMask s : subsets_by_degree(2))
                c[s] = static_cast<long>(rng() % 7) - 3;
            ExteriorClass a(spec, 0, c);
            ExteriorClass b = push_to_stage(a, 1);
            ExteriorClass d = push_to_stage(a, 2);
            CHECK(classes_equal(a, b));
            CHECK(classes_equal(b, d));
            CHECK(classes_equal(a, d));
        }
    }
}

TEST_CASE("order unit and transfer classes") {
    for (int d = 1; d <= 3; ++d) {
        SpecPtr spec = make_spec(d, {});
        ExteriorClass unit = order_unit(spec);
        CHECK(unit.stage() == 0);
        std::vector<int> all;
        for (int i = 1; i <= d; ++i) all.push_back(i);
        CHECK(unit.coefficient(mask_of(all)) == 1);
        CHECK(unit.coefficients().size() == 1);
    }

    SpecPtr d1 = dyadic(3);
    SUBCASE("stage-0 full cylinder transfers to the order unit") {
        CylinderSet c = make_cylinder(*d1, 0, {Int(0)});
        CHECK(transfer_class(d1, c) == order_unit(d1));
    }
    SUBCASE("representative independence") {
        CHECK(transfer_class(d1, make_cylinder(*d1, 3, {Int(1)})) ==
              transfer_class(d1, make_cylinder(*d1, 3, {Int(5)})));
    }
    SUBCASE("stage refinement multiplies by the covering degree") {
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 15; ++trial) {
            SpecPtr spec =
                make_spec(2, {oracles::random_step(rng, 2, 6), oracles::random_step(rng, 2, 6)});
            for (int j = 0; j < 2; ++j) {
                CylinderSet cj{j, {Int(0), Int(0)}};
                CylinderSet cj1{j + 1, {Int(0), Int(0)}};
                ExteriorClass pushed = push_to_stage(transfer_class(spec, cj), j + 1);
                ExteriorClass scaled = transfer_class(spec, cj1);
                Int deg = abs(determinant(spec->step_at(j + 1)));
                // pushed == deg * scaled
                CHECK(pushed.coefficient(mask_of({1, 2})) ==
                      deg * scaled.coefficient(mask_of({1, 2})));
            }
        }
    }
}

TEST_CASE("kgroup_report") {
    SUBCASE("dyadic odd tower") {
        KGroupPresentation p = kgroup_report(*dyadic(3), Parity::odd, 3);
        CHECK(p.rank == 1);
        REQUIRE(p.connecting.size() == 3);
        for (const IntMatrix& m : p.connecting) CHECK(m.at(0, 0) == 2);
        CHECK(p.degree_steinitz.at(1) == steinitz({Int(8)}));
        CHECK(p.colimit_embedding.back().at(0, 0) == make_rat(1, 8));
    }
    SUBCASE("dyadic with tail goes 2^inf") {
        SpecPtr spec = make_spec(1, {}, {IntMatrix::diagonal({2})});
        KGroupPresentation p = kgroup_report(*spec, Parity::odd, 3);
        CHECK(p.degree_steinitz.at(1).str() == "2^inf");
    }
    SUBCASE("trivial spec has constant rank and no maps") {
        KGroupPresentation p = kgroup_report(OdometerSpec(3, {}), Parity::even, 0);
        CHECK(p.rank == 4);  // 2^(3-1)
        CHECK(p.connecting.empty());
        CHECK(p.degree_steinitz.at(0).is_one());
    }
    SUBCASE("diag(2,3) even blocks") {
        SpecPtr spec = make_spec(2, {IntMatrix::diagonal({2, 3}), IntMatrix::diagonal({2, 3})});
        KGroupPresentation p = kgroup_report(*spec, Parity::even, 2);
        CHECK(p.rank == 2);
        CHECK(p.degree_steinitz.at(0).is_one());
        CHECK(p.degree_steinitz.at(2) == steinitz({Int(36)}));
    }
}

TEST_CASE("basic-map certificates") {
    SUBCASE("identity certificate always verifies") {
        std::mt19937_64 rng(44);
        for (int trial = 0; trial < 10; ++trial) {
            SpecPtr spec =
                make_spec(2, {oracles::random_step(rng, 2, 6), oracles::random_step(rng, 2, 6)});
            IntertwinerCertificate cert;
            for (int j = 0; j <= 2; ++j)
                cert.entries.push_back({j, j, IntMatrix::identity(4)});
            CertificateCheck check = check_basic_certificate(spec, spec, cert);
            CHECK(check.ok);
        }
    }
    SUBCASE("scaling the top degree breaks order-unit preservation") {
        SpecPtr spec = dyadic(2);
        IntMatrix phi = IntMatrix::identity(2);
        phi.at(1, 1) = 2;  // degree-1 block scaled
        IntertwinerCertificate cert;
        cert.entries.push_back({0, 0, phi});
        CertificateCheck check = check_basic_certificate(spec, spec, cert);
        CHECK(!check.ok);
        CHECK(!check.unit_ok);
    }
    SUBCASE("telescoping [2,2,2,2] against [4,4]") {
        SpecPtr a = make_spec(1, std::vector<IntMatrix>(4, IntMatrix::diagonal({2})));
        SpecPtr b = make_spec(1, std::vector<IntMatrix>(2, IntMatrix::diagonal({4})));
        IntertwinerCertificate cert;
        cert.entries.push_back({0, 0, IntMatrix::identity(2)});
        cert.entries.push_back({2, 1, IntMatrix::identity(2)});
        cert.entries.push_back({4, 2, IntMatrix::identity(2)});
        CertificateCheck check = check_basic_certificate(a, b, cert);
        CHECK(check.ok);
    }
    SUBCASE("mismatched telescoping fails the squares") {
        SpecPtr a = make_spec(1, std::vector<IntMatrix>(4, IntMatrix::diagonal({2})));
        SpecPtr b = make_spec(1, std::vector<IntMatrix>(2, IntMatrix::diagonal({4})));
        IntertwinerCertificate cert;
        cert.entries.push_back({0, 0, IntMatrix::identity(2)});
        cert.entries.push_back({1, 1, IntMatrix::identity(2)});  // 2 vs 4
        CertificateCheck check = check_basic_certificate(a, b, cert);
        CHECK(!check.ok);
        CHECK(!check.squares_ok);
        REQUIRE(!check.failures.empty());
        CHECK(check.failures.front().find("degree 1") != std::string::npos);
    }
    SUBCASE("lower-degree defects are reported separately from the top degree") {
        SpecPtr spec = dyadic(1);
        IntMatrix phi1 = IntMatrix::identity(2);
        phi1.at(0, 0) = 2;  // break the degree-0 square only
        IntertwinerCertificate cert;
        cert.entries.push_back({0, 0, IntMatrix::identity(2)});
        cert.entries.push_back({1, 1, phi1});
        CertificateCheck check = check_basic_certificate(spec, spec, cert);
        CHECK(!check.ok);
        CHECK(!check.squares_ok);
        CHECK(check.top_degree_ok);
        REQUIRE(!check.failures.empty());
        CHECK(check.failures.front().find("degree 0") != std::string::npos);
    }
    SUBCASE("rank mismatch is an error") {
        IntertwinerCertificate cert;
        cert.entries.push_back({0, 0, IntMatrix::identity(2)});
        CHECK_THROWS_AS(
            check_basic_certificate(dyadic(1), make_spec(2, {IntMatrix::diagonal({2, 2})}), cert),
            std::invalid_argument);
    }
}
