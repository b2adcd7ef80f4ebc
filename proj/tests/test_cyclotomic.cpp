#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylow/cyclotomic.hpp"

using sylow::BigInt;
using sylow::Cyclotomic;

TEST_CASE("minimal polynomial relation: 1 + w + ... + w^{p-1} = 0") {
    for (int p : {2, 3, 5, 7}) {
        Cyclotomic sum(p);
        for (int e = 0; e < p; ++e) sum += Cyclotomic::omega_pow(p, e);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("exponent arithmetic mod p") {
    CHECK(Cyclotomic::omega_pow(5, 2) * Cyclotomic::omega_pow(5, 4) == Cyclotomic::omega_pow(5, 1));
    CHECK(Cyclotomic::omega_pow(5, 3) * Cyclotomic::omega_pow(5, 2) == Cyclotomic::one(5));
    // p = 2: w = -1 in a length-1 basis
    CHECK(Cyclotomic::omega_pow(2, 1) == Cyclotomic::integer(2, -1));
    CHECK(Cyclotomic::omega_pow(2, 1) * Cyclotomic::omega_pow(2, 1) == Cyclotomic::one(2));
}

TEST_CASE("galois maps w to w^b and fixes rational integers") {
    CHECK(Cyclotomic::omega_pow(5, 1).galois(3) == Cyclotomic::omega_pow(5, 3));
    CHECK(Cyclotomic::integer(5, 42).galois(2) == Cyclotomic::integer(5, 42));

    // applying galois(b) p-1 times via powers of b returns to the start
    const Cyclotomic x = Cyclotomic::omega_pow(7, 1) + Cyclotomic::omega_pow(7, 3) * Cyclotomic::integer(7, 5);
    Cyclotomic y = x;
    for (int i = 0; i < 6; ++i) y = y.galois(3);
    CHECK(y == x);
}

TEST_CASE("galois is a ring homomorphism") {
    const Cyclotomic x = Cyclotomic::omega_pow(5, 1) + Cyclotomic::integer(5, 2);
    const Cyclotomic y = Cyclotomic::omega_pow(5, 4) - Cyclotomic::omega_pow(5, 2);
    for (int b = 1; b < 5; ++b) {
        CHECK((x * y).galois(b) == x.galois(b) * y.galois(b));
        CHECK((x + y).galois(b) == x.galois(b) + y.galois(b));
    }
}

TEST_CASE("as_integer and conj") {
    CHECK(Cyclotomic::integer(5, -7).as_integer() == BigInt(-7));
    CHECK(!Cyclotomic::omega_pow(5, 1).as_integer().has_value());
    // w * conj(w) = 1
    const Cyclotomic w = Cyclotomic::omega_pow(5, 1);
    CHECK(w * w.conj() == Cyclotomic::one(5));
    // norm-like sums are rational: (w + w^4) is fixed by conj
    const Cyclotomic r = Cyclotomic::omega_pow(5, 1) + Cyclotomic::omega_pow(5, 4);
    CHECK(r.conj() == r);
}

TEST_CASE("printing") {
    const Cyclotomic x = Cyclotomic::integer(5, 2) + Cyclotomic::omega_pow(5, 1) + Cyclotomic::omega_pow(5, 3);
    CHECK(x.to_string() == "2 + 1*w + 0*w^2 + 1*w^3 (p=5)");
}

TEST_CASE("mismatched p is rejected") {
    CHECK_THROWS(Cyclotomic::one(3) + Cyclotomic::one(5));
    CHECK_THROWS(Cyclotomic::one(5).galois(5));
}
