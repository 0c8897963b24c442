// Shared generators for randomized tests.  All draws go through an explicit
// seeded engine so failures reproduce.
#ifndef NABLAKIT_TEST_HELPERS_HPP
#define NABLAKIT_TEST_HELPERS_HPP

#include <random>
#include <set>
#include <vector>

#include "nablakit/multipoly.hpp"
#include "nablakit/scalar.hpp"
#include "nablakit/unipoly.hpp"

namespace nktest {

using nablakit::FieldPtr;
using nablakit::MultiPoly;
using nablakit::Scalar;
using nablakit::UniPoly;

using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Scalar rand_scalar(Rng& rng, const FieldPtr& f, long long span = 9) {
    switch (f->kind()) {
        case nablakit::Field::Kind::Rationals: {
            long long num = rand_int(rng, -span, span);
            long long den = rand_int(rng, 1, span);
            return Scalar::rational(nablakit::BigInt(num), nablakit::BigInt(den));
        }
        case nablakit::Field::Kind::Prime:
            return Scalar::residue(f, nablakit::BigInt(rand_int(rng, 0, static_cast<long long>(
                                                                          f->characteristic_p() - 1))));
        case nablakit::Field::Kind::Function: {
            // Low-degree rational function in one generator.
            MultiPoly t = MultiPoly::variable(f->base(), "X");
            MultiPoly num(f->base());
            for (int i = 0; i <= 2; ++i)
                num = num + t.pow(i).scaled(rand_scalar(rng, f->base(), span));
            MultiPoly den = t + MultiPoly::constant(Scalar::from_int(f->base(), rand_int(rng, 1, span)));
            return nablakit::make_ratfunc(num, den);
        }
    }
    throw std::logic_error("unreachable");
}

inline Scalar rand_nonzero(Rng& rng, const FieldPtr& f, long long span = 9) {
    for (;;) {
        Scalar s = rand_scalar(rng, f, span);
        if (!s.is_zero()) return s;
    }
}

inline std::vector<Scalar> rand_distinct(Rng& rng, const FieldPtr& f, size_t n,
                                         long long span = 50) {
    std::set<std::string> seen;
    std::vector<Scalar> out;
    while (out.size() < n) {
        Scalar s = Scalar::from_int(f, rand_int(rng, -span, span));
        if (seen.insert(s.str()).second) out.push_back(s);
    }
    return out;
}

inline UniPoly rand_unipoly(Rng& rng, const FieldPtr& f, long degree, long long span = 9) {
    std::vector<Scalar> c;
    for (long i = 0; i <= degree; ++i) c.push_back(rand_scalar(rng, f, span));
    if (degree >= 0 && c.back().is_zero()) c.back() = Scalar::one(f);
    return UniPoly(f, std::move(c));
}

inline MultiPoly rand_multipoly(Rng& rng, const FieldPtr& f,
                                const std::vector<std::string>& vars, unsigned maxdeg,
                                size_t nterms, long long span = 9) {
    MultiPoly acc(f);
    for (size_t t = 0; t < nterms; ++t) {
        MultiPoly term = MultiPoly::constant(rand_scalar(rng, f, span));
        for (auto& v : vars) {
            unsigned e = static_cast<unsigned>(rand_int(rng, 0, maxdeg));
            term = term * MultiPoly::variable(f, v).pow(e);
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace nktest

#endif
